#pragma once

// Totally balanced matrix recognition through doubly lexical ordering and
// corner-pattern freeness, the chordal-bipartite corollaries, and halfplane
// incidence matrices.

#include "homog/extract.hpp"
#include "homog/matrix.hpp"

#include <optional>
#include <vector>

namespace homog {

struct Reordering {
    // permuted matrix position p holds original index row_perm[p] / col_perm[p]
    std::vector<std::size_t> row_perm;
    std::vector<std::size_t> col_perm;
};

ZeroOneMatrix apply_reordering(const ZeroOneMatrix& a, const Reordering& r);

// Simultaneous ordering making rows (most significant bit = last column) and
// columns (most significant bit = last row) nondecreasing, computed by
// alternately sorting rows and columns until a fixed point.
Reordering doubly_lexical_order(const ZeroOneMatrix& a);
bool is_doubly_lexical(const ZeroOneMatrix& a);

struct BalanceResult {
    bool balanced = false;
    std::optional<Reordering> order;        // positive certificate
    std::optional<SubmatrixWitness> cycle;  // negative: 2-regular distinct-column submatrix
    bool certificate_complete = true;       // false when the cycle search hit its budget
};

// Totally balanced <=> the doubly lexical reordering avoids [[1,1],[1,0]].
BalanceResult is_totally_balanced(const ZeroOneMatrix& a, bool want_certificate = false,
                                  std::uint64_t certificate_budget = 4'000'000);

// Reduction chain: reorder, flip to the corner pattern's orientation, run the
// corner extraction, and map the block back to the original coordinates.
ExtractionOutcome totally_balanced_homogeneous(const ZeroOneMatrix& a);

struct BipartiteHomogeneous {
    IndexSet left;  // rows of the biadjacency matrix
    IndexSet right; // columns
    bool complete = false;
    bool fallback = false;
};

BipartiteHomogeneous chordal_bipartite_homogeneous(const ZeroOneMatrix& biadjacency);

struct PointXY {
    double x = 0, y = 0;
};

struct Halfplane {
    double slope = 0, intercept = 0;
    bool above = false; // points with y >= slope*x + intercept; else y <=
};

// M(p, H) = 1 iff point p lies in halfplane H; boundary points count as
// inside (epsilon 1e-9 on doubles).
ZeroOneMatrix halfplane_incidence(const std::vector<PointXY>& points,
                                  const std::vector<Halfplane>& planes);

struct HalfplaneOrdering {
    std::vector<std::size_t> point_order;       // row order (original indices)
    std::vector<std::size_t> upper_plane_order; // columns of the above-class
    std::vector<std::size_t> lower_plane_order; // columns of the below-class
};

// Try point orders by x and plane orders by slope (plus reversals); the first
// combination under which both side-classes avoid [[1,0],[0,1]] wins.
std::optional<HalfplaneOrdering> try_p2free_ordering(const std::vector<PointXY>& points,
                                                     const std::vector<Halfplane>& planes);

} // namespace homog
