#pragma once

// Named forbidden patterns and their classification (acyclicity, simplicity,
// homogeneous rows/columns). Flags are computed once at construction.

#include "homog/matrix.hpp"

namespace homog {

class Pattern {
public:
    explicit Pattern(ZeroOneMatrix m);

    const ZeroOneMatrix& matrix() const { return m_; }
    std::size_t rows() const { return m_.rows(); }
    std::size_t cols() const { return m_.cols(); }

    bool acyclic() const { return acyclic_; }
    bool complement_acyclic() const { return comp_acyclic_; }
    bool simple() const { return acyclic_ && comp_acyclic_; }
    bool has_homogeneous_column() const { return hom_col_; }
    bool has_homogeneous_row() const { return hom_row_; }

private:
    ZeroOneMatrix m_;
    bool acyclic_ = false;
    bool comp_acyclic_ = false;
    bool hom_col_ = false;
    bool hom_row_ = false;
};

// 2 x k with a 1 exactly where row+column is even (1-based).
Pattern checkerboard(std::size_t k);
// 2 x (k+1): k ones then a zero in the first row, all-0 second row.
Pattern corner(std::size_t k);
// [[1,1],[1,0]].
Pattern gamma();
// k x (k*l): l horizontal copies of the k x k identity.
Pattern identity_concat(std::size_t k, std::size_t l);
// 2 x (2k+2): k columns (1,0), k columns (0,1), one (1,1), one (0,0).
Pattern unordered_star(std::size_t k);

// True iff the bipartite graph of 1-entries is a forest (union-find route).
bool is_acyclic(const ZeroOneMatrix& p);
// Same predicate by repeatedly deleting rows/columns with at most one 1.
bool is_acyclic_peeling(const ZeroOneMatrix& p);
bool is_simple(const ZeroOneMatrix& p);
bool simple_dimension_bound_holds(std::size_t k, std::size_t l);

// Minimal cyclic core: delete rows/columns with <= 1 one until every row and
// column has at least two 1-entries. Empty result means p was acyclic.
ZeroOneMatrix cyclic_core(const ZeroOneMatrix& p);

// Compact CLI syntax: "P2k:4", "Qk:3", "gamma", "R:2x3", "S:2", "@file.txt".
Pattern parse_pattern_spec(const std::string& spec);

} // namespace homog
