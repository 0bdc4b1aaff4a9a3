#pragma once

// Constructive homogeneous-submatrix extraction. Each routine follows one
// density argument step by step and returns either a verified homogeneous
// block or a witness of the forbidden pattern showing the input broke the
// freeness precondition. Every pick (row, column, cell, component) takes the
// smallest index, so outputs are deterministic.

#include "homog/matrix.hpp"
#include "homog/patterns.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace homog {

struct HomogeneousBlock {
    int value = 0;
    SubmatrixWitness where;

    std::size_t size() const { return std::min(where.rows.size(), where.cols.size()); }
};

struct PatternViolation {
    SubmatrixWitness where;
    ZeroOneMatrix pattern; // slice(A, where) equals this matrix
    bool unordered = false; // when set, equality holds up to row/column permutation
};

class ExtractionOutcome {
public:
    static ExtractionOutcome block(HomogeneousBlock b, bool fallback = false) {
        ExtractionOutcome o;
        o.payload_ = std::move(b);
        o.fallback_ = fallback;
        return o;
    }
    static ExtractionOutcome violation(PatternViolation v) {
        ExtractionOutcome o;
        o.payload_ = std::move(v);
        return o;
    }

    bool is_block() const { return std::holds_alternative<HomogeneousBlock>(payload_); }
    bool is_violation() const { return !is_block(); }
    bool fallback() const { return fallback_; }

    const HomogeneousBlock& block_ref() const { return std::get<HomogeneousBlock>(payload_); }
    const PatternViolation& violation_ref() const { return std::get<PatternViolation>(payload_); }

private:
    std::variant<HomogeneousBlock, PatternViolation> payload_ = HomogeneousBlock{};
    bool fallback_ = false;
};

// One oriented copy of [[1,0],[0,1]]: reading rows (row_top, row_bot) and
// columns (col_left, col_right) gives exactly that matrix.
struct P2PairHit {
    std::size_t row_top = 0, row_bot = 0;
    std::size_t col_left = 0, col_right = 0;
};

struct DensityDichotomy {
    std::optional<HomogeneousBlock> block; // all-0, side floor(eps*n/8)
    std::vector<P2PairHit> pairs;          // otherwise >= floor(eps*n/8)^2 distinct row pairs
};

using InnerExtractor = std::function<ExtractionOutcome(const ZeroOneMatrix&)>;

// Row-degree argument: with no 1 x k all-1 row, the first floor(rows/k) rows
// leave at least cols - (k-1)*floor(rows/k) all-0 columns.
ExtractionOutcome extract_all1row_free(const ZeroOneMatrix& a, std::size_t k);

// Goodness lift for a pattern extended by an all-0 last column: mask the
// first eps*n zeros per row, find a zero-rich column j, recurse on the dense
// submatrix left of j, and append j to any inner violation.
ExtractionOutcome lift_homcolumn(const ZeroOneMatrix& a, const InnerExtractor& inner, double eps);

// Either a floor(eps*n/8)-sided all-0 block or at least its square many row
// pairs containing [[1,0],[0,1]].
DensityDichotomy density_dichotomy(const ZeroOneMatrix& a, double eps);

struct CheckerboardConfig {
    std::optional<std::size_t> s_override; // grid side; default 400k/eps^3
    std::size_t threads = 1;               // per-cell dichotomies may run concurrently
};

// Grid argument for the 2x2k checkerboard pattern: split into an s x s grid,
// walk the heavy cells of the heaviest row strip, and either return a cell's
// all-0 block or assemble a checkerboard copy from an oriented row pair
// shared by k cells. Falls back to the exact/greedy square search when the
// grid constants degenerate at small n (flagged).
ExtractionOutcome extract_checkerboard(const ZeroOneMatrix& a, std::size_t k, double eps,
                                       const CheckerboardConfig& cfg = {});

// Majority dispatch for 2xk patterns without homogeneous columns.
ExtractionOutcome extract_theorem1(const ZeroOneMatrix& a, const Pattern& p);

// Corner-pattern zeros: mask-and-locate a surviving zero, recurse the
// all-1-row argument on the region above-left of it.
ExtractionOutcome extract_qk_zero(const ZeroOneMatrix& a, std::size_t k, double eps);

// Corner-pattern ones: column split, zero-component graph on the right part,
// row-monotone propagation of 1s on the left part, block-diagonal corner
// argument when all components are short.
ExtractionOutcome extract_q_one(const ZeroOneMatrix& a, double eps);

// Zero- or one-majority dispatch for the single-corner 2x2 pattern; target
// side floor(n/20). Falls back to the exact square search for n < 20.
ExtractionOutcome extract_theorem2(const ZeroOneMatrix& a);

struct OrderedSearchConfig {
    std::size_t probes = 200;              // randomized nice-tuple probes
    std::size_t exhaustive_threshold = 24; // exhaustive tuple search up to this n
    std::uint64_t seed = 0;
    std::size_t biclique_exact_limit = 30;
};

// Acyclic 2xk patterns via per-column row graphs: find a nice column tuple,
// build the comparability/common-one graphs, and convert a large balanced
// biclique into an all-0 block (or assemble a pattern copy from a pair
// missing from every graph).
ExtractionOutcome extract_ordered_general(const ZeroOneMatrix& a, const Pattern& p, double eps,
                                          const OrderedSearchConfig& cfg = {});

// Patterns with at most one 1 per column, reduced to identity concatenation:
// either an all-0 block of side floor(eps*n) (eps = 1/(8 s^2 k^2)) or an
// assembled identity-concat copy across column strips.
ExtractionOutcome perm_dichotomy(const ZeroOneMatrix& a, const Pattern& p,
                                 std::optional<std::size_t> s_override = {});

// Unordered simple 2xk patterns: zero-support DAG over the rows of a
// zero-rich column, minimal-vertex assignment, and a chain whose support
// intersection stays large.
ExtractionOutcome extract_unordered(const ZeroOneMatrix& a, const Pattern& p, double eps);

// Majority dispatch of extract_unordered; target side floor(n/12k).
ExtractionOutcome extract_theorem_graph(const ZeroOneMatrix& a, const Pattern& p);

// Dispatcher for inhomogeneous 2x2 patterns: no homogeneous column (possibly
// after transposing) routes to extract_theorem1, the corner-like rest map to
// the corner pattern by a fixed flip/complement table.
ExtractionOutcome extract_theorem_2by2(const ZeroOneMatrix& a, const Pattern& p);

// Verification used on every return path (and available to tests).
bool verify_block(const ZeroOneMatrix& a, const HomogeneousBlock& b);
bool verify_violation(const ZeroOneMatrix& a, const PatternViolation& v);

} // namespace homog
