#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homog/matrix.hpp"
#include "test_util.hpp"

using namespace homog;

TEST_CASE("complement flips every bit") {
    auto a = ZeroOneMatrix::from_rows({{1, 0}, {0, 0}});
    CHECK(a.complement() == ZeroOneMatrix::from_rows({{0, 1}, {1, 1}}));
    CHECK(ZeroOneMatrix(3, 3, 0).complement() == ZeroOneMatrix(3, 3, 1));
}

TEST_CASE("complement and transpose are involutions") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto a = testutil::random_matrix(16, 16, seed);
        CHECK(a.complement().complement() == a);
        CHECK(a.transpose().transpose() == a);
    }
}

TEST_CASE("transpose of a row vector") {
    auto a = ZeroOneMatrix::from_rows({{1, 0, 1}});
    auto t = a.transpose();
    REQUIRE(t.rows() == 3);
    REQUIRE(t.cols() == 1);
    CHECK(t(0, 0) == 1);
    CHECK(t(1, 0) == 0);
    CHECK(t(2, 0) == 1);
    auto q1 = ZeroOneMatrix::from_rows({{1, 0}, {0, 0}});
    CHECK(q1.transpose() == q1);
}

TEST_CASE("slice basics") {
    auto i3 = ZeroOneMatrix::from_fn(3, 3, [](std::size_t i, std::size_t j) { return i == j; });
    CHECK(slice(i3, IndexSet({0, 1}), IndexSet({0, 1})) ==
          ZeroOneMatrix::from_rows({{1, 0}, {0, 1}}));
    CHECK(slice(i3, IndexSet::full(3), IndexSet::full(3)) == i3);

    auto i4 = ZeroOneMatrix::from_fn(4, 4, [](std::size_t i, std::size_t j) { return i == j; });
    CHECK(slice(i4, IndexSet({0, 1}), IndexSet({2, 3})) == ZeroOneMatrix(2, 2, 0));

    CHECK(slice(i4, IndexSet(), IndexSet()).empty());
    CHECK_THROWS_AS(slice(i4, IndexSet({5}), IndexSet({0})), error);
}

TEST_CASE("slice composes through index sets") {
    auto a = testutil::random_matrix(10, 12, 7);
    SubmatrixWitness w1{IndexSet({1, 3, 5, 8}), IndexSet({0, 2, 4, 9, 11})};
    SubmatrixWitness w2{IndexSet({0, 2}), IndexSet({1, 4})};
    auto twice = slice(slice(a, w1), w2);
    std::vector<std::size_t> rows, cols;
    for (auto i : w2.rows.v) rows.push_back(w1.rows[i]);
    for (auto j : w2.cols.v) cols.push_back(w1.cols[j]);
    CHECK(twice == slice(a, IndexSet(rows), IndexSet(cols)));
}

TEST_CASE("count matches a naive recount and complement duality") {
    auto i4 = ZeroOneMatrix::from_fn(4, 4, [](std::size_t i, std::size_t j) { return i == j; });
    CHECK(i4.count(1) == 4);
    CHECK(i4.count(0) == 12);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto a = testutil::random_matrix(8, 8, seed);
        std::size_t zeros = 0;
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) zeros += a(i, j) == 0;
        CHECK(a.count(0) == zeros);
        CHECK(a.count(0) + a.count(1) == 64);
        CHECK(a.count(0) == a.complement().count(1));
    }
}

TEST_CASE("homogeneous_value") {
    CHECK(ZeroOneMatrix(3, 5, 0).homogeneous_value() == 0);
    CHECK(ZeroOneMatrix::from_rows({{1, 0}}).homogeneous_value() == std::nullopt);
    CHECK(ZeroOneMatrix::from_rows({{1}}).homogeneous_value() == 1);
    CHECK_THROWS_AS(ZeroOneMatrix().homogeneous_value(), error);
}

TEST_CASE("parse handles the corner pattern text") {
    auto m = parse_matrix("2 2\n10\n00\n");
    CHECK(m == ZeroOneMatrix::from_rows({{1, 0}, {0, 0}}));
}

TEST_CASE("parse/emit round trip is bit exact") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto a = testutil::random_matrix(5 + seed % 7, 3 + seed % 9, seed);
        CHECK(parse_matrix(emit_matrix(a)) == a);
    }
    CHECK(emit_matrix(parse_matrix("  2 2 \n 10 \n 00 ")) == "2 2\n10\n00\n");
}

TEST_CASE("parse rejects malformed input with a position") {
    CHECK_THROWS_WITH_AS(parse_matrix("2 3\n10\n00\n"), doctest::Contains("row 1"), error);
    CHECK_THROWS_AS(parse_matrix("2 2\n10\n0x\n"), error);
    CHECK_THROWS_AS(parse_matrix("0 2\n"), error);
    CHECK_THROWS_AS(parse_matrix("2 2\n101\n00\n"), error);
    CHECK_THROWS_AS(parse_matrix(""), error);
    try {
        parse_matrix("2 2\n10\n0x\n");
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.kind() == errc::format_error);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("word access keeps padding clear") {
    auto a = ZeroOneMatrix(3, 70, 1);
    CHECK(a.count(1) == 210);
    CHECK(a.words_per_row() == 2);
    CHECK(a.row_words(0)[1] == ((std::uint64_t(1) << 6) - 1));
}
