#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homog/oracle.hpp"
#include "homog/patterns.hpp"
#include "test_util.hpp"

using namespace homog;
using namespace homog::oracle;

namespace {

ZeroOneMatrix identity(std::size_t n) {
    return ZeroOneMatrix::from_fn(n, n, [](std::size_t i, std::size_t j) { return i == j; });
}

} // namespace

TEST_CASE("maximum homogeneous square on small named inputs") {
    auto z = max_homogeneous_square(identity(4), 0);
    CHECK(z.size == 2);
    CHECK(z.where.rows.v == std::vector<std::size_t>{0, 1});
    CHECK(z.where.cols.v == std::vector<std::size_t>{2, 3});
    CHECK(max_homogeneous_square(identity(4), 1).size == 1);
    CHECK(max_homogeneous_square(ZeroOneMatrix(5, 7, 1), 1).size == 5);
    CHECK(max_homogeneous_square(ZeroOneMatrix(5, 7, 1), 0).size == 0);
}

TEST_CASE("search agrees with the all-subsets enumerator") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto a = testutil::random_matrix(8 + seed % 3, 8, seed);
        for (int v : {0, 1}) {
            auto got = max_homogeneous_square(a, v);
            CHECK(got.exact);
            CHECK(got.size == testutil::naive_max_square(a, v));
            if (got.size > 0) {
                auto s = slice(a, got.where);
                CHECK(s.homogeneous_value() == v);
            }
        }
    }
}

TEST_CASE("square size is complement symmetric") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto a = testutil::random_matrix(9, 9, seed);
        CHECK(max_homogeneous_square(a, 0).size ==
              max_homogeneous_square(a.complement(), 1).size);
    }
}

TEST_CASE("an extra all-0 row never hurts") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto a = testutil::random_matrix(7, 7, seed);
        auto padded = ZeroOneMatrix::from_fn(8, 7, [&](std::size_t i, std::size_t j) {
            return i < 7 && a(i, j) != 0;
        });
        CHECK(max_homogeneous_square(padded, 0).size >= max_homogeneous_square(a, 0).size);
    }
}

TEST_CASE("size limit guards the exact search") {
    auto big = testutil::random_matrix(30, 30, 1);
    CHECK_THROWS_AS(max_homogeneous_square(big, 0), error);
    auto h = max_homogeneous_square(big, 0, {}, true);
    CHECK(!h.exact);
    if (h.size > 0) CHECK(slice(big, h.where).homogeneous_value() == 0);
}

TEST_CASE("balanced biclique on named graphs") {
    auto k6 = ZeroOneMatrix::from_fn(6, 6, [](std::size_t i, std::size_t j) { return i != j; });
    auto r = max_balanced_biclique(k6);
    CHECK(r.exact);
    CHECK(r.s.size() == 3);
    CHECK(r.t.size() == 3);

    CHECK(max_balanced_biclique(ZeroOneMatrix(5, 5, 0)).s.empty());

    // comparability graph of a 10-chain is complete
    auto chain = ZeroOneMatrix::from_fn(10, 10, [](std::size_t i, std::size_t j) { return i != j; });
    CHECK(max_balanced_biclique(chain).s.size() == 5);
}

TEST_CASE("biclique sides really are completely joined") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = testutil::random_matrix(12, 12, seed, 0.5);
        auto sym = ZeroOneMatrix::from_fn(12, 12, [&](std::size_t i, std::size_t j) {
            return i != j && (g(i, j) || g(j, i));
        });
        auto r = max_balanced_biclique(sym);
        CHECK(r.exact);
        CHECK(r.s.size() == r.t.size());
        for (auto u : r.s)
            for (auto v : r.t) {
                CHECK(u != v);
                CHECK(sym(u, v) == 1);
            }
    }
}

TEST_CASE("oracle containment on tiny fixed cases") {
    CHECK(oracle_contains(identity(3), checkerboard(2).matrix(), false).found);
    CHECK(oracle_contains(ZeroOneMatrix::from_rows({{0, 1}, {1, 0}}), checkerboard(2).matrix(),
                          true)
              .found);
    CHECK(!oracle_contains(ZeroOneMatrix::from_rows({{0, 1}, {1, 0}}), checkerboard(2).matrix(),
                           false)
               .found);
}

TEST_CASE("simple enumeration matches the classification") {
    auto list22 = enumerate_simple(2, 2);
    auto has = [&](const ZeroOneMatrix& m) {
        return std::find(list22.begin(), list22.end(), m) != list22.end();
    };
    CHECK(has(corner(1).matrix()));
    CHECK(has(checkerboard(2).matrix()));
    CHECK(has(gamma().matrix()));
    CHECK(!has(ZeroOneMatrix(2, 2, 0)));
    CHECK(!has(ZeroOneMatrix(2, 2, 1)));
    CHECK(list22.size() == 14);

    CHECK(enumerate_simple(4, 4).empty());
    CHECK(!enumerate_simple(3, 3).empty());
}

TEST_CASE("goodness report basics") {
    auto rep = goodness_estimate(checkerboard(2).matrix(), "P2", 0.25, 4,
                                 GoodnessMode::exhaustive, 0, 0);
    CHECK(rep.min_max_all0 >= 1);
    CHECK(rep.realized_delta >= 0.25 - 1e-12);
    CHECK(rep.samples > 0);

    // goodness is defined for any pattern, cyclic ones included
    auto rep2 = goodness_estimate(ZeroOneMatrix(2, 2, 1), "allones", 0.1, 4,
                                  GoodnessMode::exhaustive, 0, 0);
    CHECK(rep2.samples > 0);

    CHECK_THROWS_AS(goodness_estimate(checkerboard(2).matrix(), "P2", 0.25, 6,
                                      GoodnessMode::exhaustive, 0, 0),
                    error);
}

TEST_CASE("sampled goodness is deterministic under a seed") {
    auto a = goodness_estimate(checkerboard(2).matrix(), "P2", 0.5, 6, GoodnessMode::sampled, 10,
                               99);
    auto b = goodness_estimate(checkerboard(2).matrix(), "P2", 0.5, 6, GoodnessMode::sampled, 10,
                               99);
    CHECK(a.min_max_all0 == b.min_max_all0);
    CHECK(a.samples == b.samples);
}
