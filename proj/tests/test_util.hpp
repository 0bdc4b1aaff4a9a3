#pragma once

// Shared helpers for the test suites: seeded random matrices, horizontal
// concatenation, and a third, set-enumeration implementation of the maximum
// homogeneous square used to cross-check the search oracle.

#include "homog/matrix.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testutil {

inline homog::ZeroOneMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                                          double density = 0.5) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0, 1);
    return homog::ZeroOneMatrix::from_fn(
        rows, cols, [&](std::size_t, std::size_t) { return dist(rng) < density; });
}

inline homog::ZeroOneMatrix hconcat(const homog::ZeroOneMatrix& a,
                                    const homog::ZeroOneMatrix& b) {
    return homog::ZeroOneMatrix::from_fn(a.rows(), a.cols() + b.cols(),
                                         [&](std::size_t i, std::size_t j) {
                                             return j < a.cols() ? a(i, j) != 0
                                                                 : b(i, j - a.cols()) != 0;
                                         });
}

// all-subsets maximum homogeneous square, usable up to ~10 rows
inline std::size_t naive_max_square(const homog::ZeroOneMatrix& a, int value) {
    std::size_t best = 0;
    for (std::uint64_t rmask = 1; rmask < (std::uint64_t(1) << a.rows()); ++rmask) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if ((rmask >> i) & 1) rows.push_back(i);
        std::size_t good_cols = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            bool ok = true;
            for (std::size_t i : rows)
                if (a(i, j) != value) {
                    ok = false;
                    break;
                }
            good_cols += ok;
        }
        best = std::max(best, std::min(rows.size(), good_cols));
    }
    return best;
}

inline homog::ZeroOneMatrix from_mask(std::uint64_t mask, std::size_t rows, std::size_t cols) {
    return homog::ZeroOneMatrix::from_fn(rows, cols, [&](std::size_t i, std::size_t j) {
        return (mask >> (i * cols + j)) & 1;
    });
}

} // namespace testutil
