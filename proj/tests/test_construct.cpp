#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homog/construct.hpp"
#include "homog/containment.hpp"
#include "homog/oracle.hpp"
#include "test_util.hpp"

using namespace homog;

TEST_CASE("random pattern-free draws verify clean") {
    Pattern allones(ZeroOneMatrix(2, 2, 1));
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto a = random_pfree(allones, 64, seed);
        REQUIRE(a.rows() == 64);
        REQUIRE(a.cols() == 64);
        CHECK(!contains_ordered(a, allones.matrix()).found);
        oracle::Limits lim;
        lim.max_square_n = 64;
        CHECK(oracle::max_homogeneous_square(a, 1, lim).size <= 1);
    }
}

TEST_CASE("random pattern-free density stays near its target") {
    Pattern allones(ZeroOneMatrix(2, 2, 1));
    double p = 0.25 * std::pow(64.0, -1.0 + 0.25);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto a = random_pfree(allones, 64, seed);
        double got = double(a.count(1)) / (64.0 * 64.0);
        CHECK(got >= p / 2 - 1e-12);
        CHECK(got <= 2 * p + 1e-12);
    }
}

TEST_CASE("acyclic patterns are rejected") {
    CHECK_THROWS_AS(random_pfree(corner(1), 16, 0), error);
}

TEST_CASE("generation is bit reproducible") {
    Pattern allones(ZeroOneMatrix(2, 2, 1));
    CHECK(random_pfree(allones, 32, 5) == random_pfree(allones, 32, 5));
    CHECK(bernoulli(16, 16, 0.3, 7) == bernoulli(16, 16, 0.3, 7));
    CHECK(!(bernoulli(16, 16, 0.3, 7) == bernoulli(16, 16, 0.3, 8)));
    auto p2 = checkerboard(2).matrix();
    CHECK(planted(20, p2, 3) == planted(20, p2, 3));
    CHECK(interval_matrix(24, 11) == interval_matrix(24, 11));
}

TEST_CASE("blowup expands entries into homogeneous cells") {
    CHECK(blowup(ZeroOneMatrix::from_rows({{1}}), 4) == ZeroOneMatrix(4, 4, 1));
    auto i2 = ZeroOneMatrix::from_rows({{1, 0}, {0, 1}});
    CHECK(blowup(i2, 4) ==
          ZeroOneMatrix::from_rows({{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}}));
    CHECK_THROWS_AS(blowup(i2, 5), error);
}

TEST_CASE("blowup zero count scales by the cell area") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto b = testutil::random_matrix(4, 4, seed);
        auto big = blowup(b, 16);
        CHECK(big.count(0) == 16 * b.count(0));
    }
}

TEST_CASE("blowup preserves freeness on a crafted wide-checkerboard-free base") {
    auto p4 = checkerboard(4).matrix();
    // base chosen free of the 2x4 checkerboard
    auto b = ZeroOneMatrix::from_rows({{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 1}});
    REQUIRE(!contains_ordered(b, p4).found);
    CHECK(!contains_ordered(blowup(b, 16), p4).found);
}

TEST_CASE("blowup squares relate to the base's squares") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto b = testutil::random_matrix(4, 4, seed);
        auto big = blowup(b, 16);
        oracle::Limits lim;
        auto base_sq = oracle::max_homogeneous_square(b, 0, lim).size;
        auto big_sq = oracle::max_homogeneous_square(big, 0, lim).size;
        CHECK(big_sq >= 4 * base_sq);
    }
}

TEST_CASE("staircase is corner-free upper triangle") {
    auto a = staircase(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) CHECK(a(i, j) == (j >= i ? 1 : 0));
    CHECK(!contains_ordered(a, corner(1).matrix()).found);
}

TEST_CASE("laminar rows have nested zero prefixes") {
    auto a = laminar(12);
    std::size_t prev = 0;
    for (std::size_t i = 0; i < 12; ++i) {
        std::size_t z = 0;
        while (z < 12 && a(i, z) == 0) ++z;
        for (std::size_t j = z; j < 12; ++j) CHECK(a(i, j) == 1);
        CHECK(z >= 6);
        CHECK(z >= prev);
        prev = z;
    }
}

TEST_CASE("planted patterns are found afterwards") {
    auto p2 = checkerboard(2).matrix();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto a = planted(16, p2, seed, PlantBackground::zeros);
        CHECK(contains_ordered(a, p2).found);
    }
    auto q = corner(1).matrix();
    auto dense = planted(24, q, 5, PlantBackground::ones);
    CHECK(contains_ordered(dense, q).found);
}

TEST_CASE("interval matrices are rows of consecutive ones") {
    auto a = interval_matrix(20, 3);
    for (std::size_t i = 0; i < 20; ++i) {
        std::size_t first = 20, last = 0;
        for (std::size_t j = 0; j < 20; ++j)
            if (a(i, j)) {
                first = std::min(first, j);
                last = j;
            }
        if (first < 20)
            for (std::size_t j = first; j <= last; ++j) CHECK(a(i, j) == 1);
    }
}

TEST_CASE("generator spec dispatch") {
    GeneratorSpec spec;
    spec.kind = "staircase";
    spec.n = 6;
    CHECK(generate(spec) == staircase(6));
    spec.kind = "nonsense";
    CHECK_THROWS_AS(generate(spec), error);
}
