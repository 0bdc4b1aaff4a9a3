#pragma once

// Seeded generators of structured and random inputs. Identical spec and seed
// always produce a bit-identical matrix (mt19937_64 with one fixed stream per
// use-site).

#include "homog/matrix.hpp"
#include "homog/patterns.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace homog {

// Random n x n matrix verified free of the given (cyclic) pattern: draw an
// n x 2n Bernoulli matrix with p = (1/4) n^(-1 + 1/(k+l)) for the cyclic core
// of p, enumerate the core's copies up to cap 2n, and delete the last column
// of each copy plus rightmost extras down to n columns. Redraws with seed+1
// when there are more than n copies (up to max_retries).
ZeroOneMatrix random_pfree(const Pattern& p, std::size_t n, std::uint64_t seed,
                           int max_retries = 16);

// Replace every entry of the square matrix b with an (n/m) x (n/m)
// homogeneous block of the same value.
ZeroOneMatrix blowup(const ZeroOneMatrix& b, std::size_t n);

// Upper-triangular ones including the diagonal; free of [[1,0],[0,0]].
ZeroOneMatrix staircase(std::size_t n);

// Rows whose zero supports are prefixes [0, z_i) with n/2 <= z_i <= n,
// nondecreasing in i; the supports form a chain.
ZeroOneMatrix laminar(std::size_t n);

// iid entries, P(1) = p.
ZeroOneMatrix bernoulli(std::size_t rows, std::size_t cols, double p, std::uint64_t seed);

enum class PlantBackground { zeros, ones, random };

// Background matrix with one copy of the pattern stamped at seeded sorted
// random positions.
ZeroOneMatrix planted(std::size_t n, const ZeroOneMatrix& pattern, std::uint64_t seed,
                      PlantBackground bg = PlantBackground::zeros, double bg_density = 0.5);

// Rows are random intervals over n points, columns are the points; such
// incidence matrices are totally balanced.
ZeroOneMatrix interval_matrix(std::size_t n, std::uint64_t seed);

struct GeneratorSpec {
    std::string kind; // random-pfree | blowup | staircase | laminar | bernoulli | planted | interval
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double p = 0.5;
    std::optional<ZeroOneMatrix> pattern; // random-pfree, planted
    std::optional<ZeroOneMatrix> base;    // blowup
    std::string background = "zeros";     // planted
};

ZeroOneMatrix generate(const GeneratorSpec& spec);

} // namespace homog
