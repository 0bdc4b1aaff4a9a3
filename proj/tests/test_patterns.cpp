#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homog/containment.hpp"
#include "homog/patterns.hpp"
#include "test_util.hpp"

#include <fstream>

using namespace homog;

TEST_CASE("checkerboard family") {
    CHECK(checkerboard(2).matrix() == ZeroOneMatrix::from_rows({{1, 0}, {0, 1}}));
    CHECK(checkerboard(4).matrix() == ZeroOneMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}}));
    CHECK(checkerboard(1).matrix() == ZeroOneMatrix::from_rows({{1}, {0}}));
    CHECK_THROWS_AS(checkerboard(0), error);
}

TEST_CASE("wide checkerboards concatenate the 2x2 one") {
    for (std::size_t k = 1; k <= 5; ++k) {
        auto direct = checkerboard(2 * k).matrix();
        auto built = checkerboard(2).matrix();
        for (std::size_t i = 1; i < k; ++i) built = testutil::hconcat(built, checkerboard(2).matrix());
        CHECK(direct == built);
    }
}

TEST_CASE("corner family") {
    CHECK(corner(1).matrix() == ZeroOneMatrix::from_rows({{1, 0}, {0, 0}}));
    CHECK(corner(3).matrix() == ZeroOneMatrix::from_rows({{1, 1, 1, 0}, {0, 0, 0, 0}}));
    for (std::size_t k = 2; k <= 4; ++k)
        CHECK(contains_ordered(corner(k).matrix(), corner(1).matrix()).found);
}

TEST_CASE("gamma") {
    CHECK(gamma().matrix() == ZeroOneMatrix::from_rows({{1, 1}, {1, 0}}));
    CHECK(gamma().simple());
    CHECK(!(gamma().matrix() == corner(1).matrix()));
    CHECK(gamma().matrix().complement() == ZeroOneMatrix::from_rows({{0, 0}, {0, 1}}));
}

TEST_CASE("identity concatenation") {
    CHECK(identity_concat(2, 2).matrix() ==
          ZeroOneMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}}));
    auto r = identity_concat(3, 2).matrix();
    for (std::size_t j = 0; j < r.cols(); ++j) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < r.rows(); ++i) ones += r(i, j);
        CHECK(ones == 1);
    }
}

TEST_CASE("identity concatenation swallows every sparse-column pattern") {
    // all (k-1) x l matrices with at most one 1 per column, k,l <= 3
    for (std::size_t k = 2; k <= 3; ++k) {
        for (std::size_t l = 1; l <= 3; ++l) {
            auto host = identity_concat(k, l).matrix();
            std::size_t pr = k - 1, pc = l;
            std::size_t combos = 1;
            for (std::size_t j = 0; j < pc; ++j) combos *= pr + 1; // 1-position or none per column
            for (std::size_t code = 0; code < combos; ++code) {
                std::size_t c = code;
                auto pat = ZeroOneMatrix::from_fn(pr, pc, [&](std::size_t, std::size_t) { return false; });
                std::vector<std::vector<int>> data(pr, std::vector<int>(pc, 0));
                for (std::size_t j = 0; j < pc; ++j) {
                    std::size_t pos = c % (pr + 1);
                    c /= pr + 1;
                    if (pos > 0) data[pos - 1][j] = 1;
                }
                pat = ZeroOneMatrix::from_rows(data);
                CHECK(contains_ordered(host, pat).found);
            }
        }
    }
}

TEST_CASE("unordered star") {
    CHECK(unordered_star(1).matrix() == ZeroOneMatrix::from_rows({{1, 0, 1, 0}, {0, 1, 1, 0}}));
    for (std::size_t k = 1; k <= 3; ++k) {
        auto s = unordered_star(k).matrix();
        std::size_t c10 = 0, c01 = 0, c11 = 0, c00 = 0;
        for (std::size_t j = 0; j < s.cols(); ++j) {
            if (s(0, j) && s(1, j)) ++c11;
            else if (s(0, j)) ++c10;
            else if (s(1, j)) ++c01;
            else ++c00;
        }
        CHECK(c10 == k);
        CHECK(c01 == k);
        CHECK(c11 == 1);
        CHECK(c00 == 1);
    }
}

TEST_CASE("unordered star swallows column orderings of simple wide patterns") {
    for (std::size_t k = 1; k <= 3; ++k) {
        auto host = unordered_star(k).matrix();
        // every simple 2xk pattern, every ordering of its columns
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (2 * k)); ++mask) {
            auto p = testutil::from_mask(mask, 2, k);
            if (!is_simple(p)) continue;
            std::vector<std::size_t> perm(k);
            for (std::size_t i = 0; i < k; ++i) perm[i] = i;
            do {
                auto shuffled = ZeroOneMatrix::from_fn(
                    2, k, [&](std::size_t i, std::size_t j) { return p(i, perm[j]) != 0; });
                CHECK(contains_unordered(host, shuffled).found);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST_CASE("acyclicity on named examples") {
    CHECK(is_acyclic(gamma().matrix()));
    CHECK(!is_acyclic(ZeroOneMatrix(2, 2, 1)));
    CHECK(!is_simple(ZeroOneMatrix(3, 3, 1)));
    CHECK(is_simple(corner(1).matrix()));
    CHECK(is_simple(checkerboard(2).matrix()));
    auto one_per_col = ZeroOneMatrix::from_rows({{1, 0, 0}, {0, 0, 1}});
    CHECK(is_acyclic(one_per_col));
}

TEST_CASE("union-find and peeling acyclicity agree") {
    for (std::size_t r = 1; r <= 4; ++r)
        for (std::size_t c = 1; c <= 4; ++c)
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (r * c)); ++mask) {
                auto m = testutil::from_mask(mask, r, c);
                CHECK(is_acyclic(m) == is_acyclic_peeling(m));
            }
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        auto m = testutil::random_matrix(8, 8, seed, 0.25);
        CHECK(is_acyclic(m) == is_acyclic_peeling(m));
    }
}

TEST_CASE("simplicity is complement symmetric") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto m = testutil::random_matrix(3, 4, seed, 0.4);
        CHECK(is_simple(m) == is_simple(m.complement()));
    }
}

TEST_CASE("dimension bound") {
    CHECK(simple_dimension_bound_holds(2, 100));
    CHECK(simple_dimension_bound_holds(3, 4));
    CHECK(!simple_dimension_bound_holds(4, 4));
    CHECK(!simple_dimension_bound_holds(5, 3));
}

TEST_CASE("simple implies the bound, exhaustively to 4x4") {
    for (std::size_t r = 1; r <= 4; ++r)
        for (std::size_t c = 1; c <= 4; ++c)
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (r * c)); ++mask) {
                auto m = testutil::from_mask(mask, r, c);
                if (is_simple(m)) CHECK(simple_dimension_bound_holds(r, c));
            }
}

TEST_CASE("cyclic core peels sparse frames") {
    CHECK(cyclic_core(corner(1).matrix()).empty());
    CHECK(cyclic_core(ZeroOneMatrix(2, 2, 1)) == ZeroOneMatrix(2, 2, 1));
    auto framed = ZeroOneMatrix::from_rows({{1, 0, 0}, {0, 1, 1}, {0, 1, 1}});
    CHECK(cyclic_core(framed) == ZeroOneMatrix(2, 2, 1));
}

TEST_CASE("pattern flags are cached consistently") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto m = testutil::random_matrix(2, 5, seed, 0.5);
        Pattern p(m);
        CHECK(p.acyclic() == is_acyclic(m));
        CHECK(p.complement_acyclic() == is_acyclic(m.complement()));
        CHECK(p.simple() == (p.acyclic() && p.complement_acyclic()));
    }
}

TEST_CASE("pattern spec syntax") {
    CHECK(parse_pattern_spec("P2k:4").matrix() == checkerboard(4).matrix());
    CHECK(parse_pattern_spec("Qk:3").matrix() == corner(3).matrix());
    CHECK(parse_pattern_spec("gamma").matrix() == gamma().matrix());
    CHECK(parse_pattern_spec("R:2x3").matrix() == identity_concat(2, 3).matrix());
    CHECK(parse_pattern_spec("S:2").matrix() == unordered_star(2).matrix());
    CHECK_THROWS_AS(parse_pattern_spec("nope"), error);
    CHECK_THROWS_AS(parse_pattern_spec("P2k:0"), error);

    std::ofstream out("pattern_tmp.txt");
    out << emit_matrix(gamma().matrix());
    out.close();
    CHECK(parse_pattern_spec("@pattern_tmp.txt").matrix() == gamma().matrix());
}
