#pragma once

// Independent brute-force references: exact maximum homogeneous square,
// exact maximum balanced biclique, a nested-loop containment checker that
// shares no code with the containment module, exhaustive enumeration of
// simple patterns, and empirical goodness estimation.

#include "homog/containment.hpp"
#include "homog/matrix.hpp"

#include <cstdint>
#include <vector>

namespace homog {
namespace oracle {

struct Limits {
    std::size_t max_square_n = 24;  // exact homogeneous-square search limit
    std::size_t biclique_n = 30;    // exact balanced-biclique search limit
    std::uint64_t node_budget = 40'000'000;
};

struct SquareResult {
    std::size_t size = 0; // side length of the maximum homogeneous square
    SubmatrixWitness where; // empty when size == 0
    int value = 0;
    bool exact = true;
};

// Maximum s with s rows and s columns slicing to an all-`value` submatrix.
// Branch and bound over rows with a running AND of column masks; witness is
// the lexicographically smallest optimum. Beyond limits.max_square_n a greedy
// search runs instead when force is set, flagged non-exact.
SquareResult max_homogeneous_square(const ZeroOneMatrix& a, int value, const Limits& lim = {},
                                    bool force = false);

struct BicliqueResult {
    std::vector<std::size_t> s, t; // disjoint, all s-t pairs adjacent, |s| == |t|
    bool exact = true;
};

// Maximum balanced complete bipartite subgraph of a symmetric adjacency
// matrix. Exact up to limits.biclique_n vertices, greedy with local growth
// above (flagged non-exact).
BicliqueResult max_balanced_biclique(const ZeroOneMatrix& adj, const Limits& lim = {});

// Ground-truth containment by plain nested loops over index subsets.
ContainmentResult oracle_contains(const ZeroOneMatrix& a, const ZeroOneMatrix& p, bool unordered,
                                  std::uint64_t budget = 200'000'000);

enum class GoodnessMode { exhaustive, sampled };

struct GoodnessReport {
    std::string pattern_id;
    double eps = 0;
    std::size_t n = 0;
    GoodnessMode mode = GoodnessMode::exhaustive;
    std::size_t samples = 0;       // qualifying matrices seen
    std::size_t min_max_all0 = 0;  // min over qualifying of max all-0 square
    double realized_delta = 0;     // min_max_all0 / n, an upper bound on f at this n
};

// Minimum over P-free n x n matrices with at least eps*n^2 zeros of the
// maximum all-0 square. Exhaustive for n <= 4 (n == 5 with allow_large);
// sampled mode draws seeded qualifying matrices and locally minimizes.
GoodnessReport goodness_estimate(const ZeroOneMatrix& p, const std::string& pattern_id,
                                 double eps, std::size_t n, GoodnessMode mode,
                                 std::size_t samples, std::uint64_t seed,
                                 bool allow_large = false);

// All simple k x l matrices, enumerated exhaustively (k, l <= 5).
std::vector<ZeroOneMatrix> enumerate_simple(std::size_t k, std::size_t l);

} // namespace oracle
} // namespace homog
