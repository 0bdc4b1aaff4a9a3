#pragma once

// Ordered and unordered submatrix containment with explicit witnesses.
// Witnesses are always the lexicographically smallest (rows first, then
// columns), so downstream behavior is deterministic.

#include "homog/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace homog {

struct ContainmentResult {
    bool found = false;
    std::optional<SubmatrixWitness> witness;
};

// Ordered containment: some strictly increasing row and column index sets
// slice to exactly p. Row subsets are enumerated in lexicographic order; for
// fixed rows the pattern columns are matched greedily left to right, which is
// exact for subsequence matching.
ContainmentResult contains_ordered(const ZeroOneMatrix& a, const ZeroOneMatrix& p);

// Unordered containment: some submatrix of a becomes p after permuting its
// rows and columns. For each row permutation of p the column requirement is a
// multiset-cover over host column types.
ContainmentResult contains_unordered(const ZeroOneMatrix& a, const ZeroOneMatrix& p);

// Number of (row set, column set) pairs slicing to p, saturated at cap.
std::size_t count_ordered_copies(const ZeroOneMatrix& a, const ZeroOneMatrix& p, std::size_t cap);

// Every ordered copy of p, at most cap of them, in lexicographic order.
std::vector<SubmatrixWitness> enumerate_ordered_copies(const ZeroOneMatrix& a,
                                                       const ZeroOneMatrix& p, std::size_t cap);

// All unordered row pairs {r,q} whose two-row submatrix contains [[1,0],[0,1]]
// in one of the two row orders. Linear scan per pair.
std::vector<std::pair<std::size_t, std::size_t>> find_p2_row_pairs(const ZeroOneMatrix& a);

// No ordered copy of [[1,1],[1,0]]; specialized row-pair scan.
bool is_gamma_free(const ZeroOneMatrix& a);

} // namespace homog
