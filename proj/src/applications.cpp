#include "homog/applications.hpp"

#include "homog/containment.hpp"
#include "homog/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace homog {

ZeroOneMatrix apply_reordering(const ZeroOneMatrix& a, const Reordering& r) {
    if (r.row_perm.size() != a.rows() || r.col_perm.size() != a.cols())
        raise(errc::invalid_params, "reordering does not match the matrix shape");
    return ZeroOneMatrix::from_fn(a.rows(), a.cols(), [&](std::size_t i, std::size_t j) {
        return a(r.row_perm[i], r.col_perm[j]) != 0;
    });
}

namespace {

// compare two rows as binary vectors, most significant = last column
int cmp_rows(const ZeroOneMatrix& a, const std::vector<std::size_t>& col_order, std::size_t x,
             std::size_t y) {
    for (std::size_t p = col_order.size(); p-- > 0;) {
        int dx = a(x, col_order[p]), dy = a(y, col_order[p]);
        if (dx != dy) return dx < dy ? -1 : 1;
    }
    return 0;
}

int cmp_cols(const ZeroOneMatrix& a, const std::vector<std::size_t>& row_order, std::size_t x,
             std::size_t y) {
    for (std::size_t p = row_order.size(); p-- > 0;) {
        int dx = a(row_order[p], x), dy = a(row_order[p], y);
        if (dx != dy) return dx < dy ? -1 : 1;
    }
    return 0;
}

} // namespace

Reordering doubly_lexical_order(const ZeroOneMatrix& a) {
    Reordering r;
    r.row_perm.resize(a.rows());
    r.col_perm.resize(a.cols());
    std::iota(r.row_perm.begin(), r.row_perm.end(), 0);
    std::iota(r.col_perm.begin(), r.col_perm.end(), 0);
    if (a.empty()) return r;

    // each effective sort strictly increases sum_{i,j} A(pi(i),pj(j)) 2^(i+j),
    // so alternation reaches a fixed point
    std::size_t budget = 4 * (a.rows() + a.cols()) + 16;
    for (std::size_t round = 0; round < budget; ++round) {
        auto rows = r.row_perm;
        std::stable_sort(rows.begin(), rows.end(), [&](std::size_t x, std::size_t y) {
            return cmp_rows(a, r.col_perm, x, y) < 0;
        });
        bool row_change = rows != r.row_perm;
        r.row_perm = std::move(rows);

        auto cols = r.col_perm;
        std::stable_sort(cols.begin(), cols.end(), [&](std::size_t x, std::size_t y) {
            return cmp_cols(a, r.row_perm, x, y) < 0;
        });
        bool col_change = cols != r.col_perm;
        r.col_perm = std::move(cols);

        if (!row_change && !col_change) break;
    }
    return r;
}

bool is_doubly_lexical(const ZeroOneMatrix& a) {
    std::vector<std::size_t> rid(a.rows()), cid(a.cols());
    std::iota(rid.begin(), rid.end(), 0);
    std::iota(cid.begin(), cid.end(), 0);
    for (std::size_t i = 0; i + 1 < a.rows(); ++i)
        if (cmp_rows(a, cid, i, i + 1) > 0) return false;
    for (std::size_t j = 0; j + 1 < a.cols(); ++j)
        if (cmp_cols(a, rid, j, j + 1) > 0) return false;
    return true;
}

namespace {

bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

double choose_count(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    double r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
    return r;
}

// q x q submatrix with exactly two 1s per row and column and distinct columns
bool is_cycle_incidence(const ZeroOneMatrix& a, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
    for (std::size_t r : rows) {
        std::size_t cnt = 0;
        for (std::size_t c : cols) cnt += a(r, c);
        if (cnt != 2) return false;
    }
    for (std::size_t c : cols) {
        std::size_t cnt = 0;
        for (std::size_t r : rows) cnt += a(r, c);
        if (cnt != 2) return false;
    }
    for (std::size_t x = 0; x < cols.size(); ++x)
        for (std::size_t y = x + 1; y < cols.size(); ++y) {
            bool same = true;
            for (std::size_t r : rows)
                if (a(r, cols[x]) != a(r, cols[y])) {
                    same = false;
                    break;
                }
            if (same) return false;
        }
    return true;
}

} // namespace

BalanceResult is_totally_balanced(const ZeroOneMatrix& a, bool want_certificate,
                                  std::uint64_t certificate_budget) {
    BalanceResult res;
    if (a.empty()) {
        res.balanced = true;
        return res;
    }
    Reordering order = doubly_lexical_order(a);
    ZeroOneMatrix b = apply_reordering(a, order);
    if (is_gamma_free(b)) {
        res.balanced = true;
        res.order = std::move(order);
        return res;
    }
    res.balanced = false;
    if (!want_certificate) return res;

    double spent = 0;
    for (std::size_t q = 3; q <= std::min(a.rows(), a.cols()); ++q) {
        double work = choose_count(a.rows(), q) * choose_count(a.cols(), q) * double(q * q);
        spent += work;
        if (spent > double(certificate_budget)) {
            res.certificate_complete = false;
            return res;
        }
        std::vector<std::size_t> rows(q), cols(q);
        for (std::size_t i = 0; i < q; ++i) rows[i] = i;
        do {
            for (std::size_t j = 0; j < q; ++j) cols[j] = j;
            do {
                if (is_cycle_incidence(a, rows, cols)) {
                    res.cycle = SubmatrixWitness{IndexSet(rows), IndexSet(cols)};
                    return res;
                }
            } while (next_subset(cols, a.cols()));
        } while (next_subset(rows, a.rows()));
    }
    res.certificate_complete = false; // no certificate found within the dimension range
    return res;
}

ExtractionOutcome totally_balanced_homogeneous(const ZeroOneMatrix& a) {
    if (a.rows() != a.cols() || a.empty())
        raise(errc::invalid_params, "expects a nonempty square matrix");
    BalanceResult rec = is_totally_balanced(a);
    if (!rec.balanced) raise(errc::not_totally_balanced, "matrix is not totally balanced");
    const Reordering& order = *rec.order;
    ZeroOneMatrix a1 = apply_reordering(a, order);
    std::size_t n = a.rows();
    // gamma-freeness of a1 is corner-freeness of the reversed complement
    ZeroOneMatrix a2 = ZeroOneMatrix::from_fn(n, n, [&](std::size_t i, std::size_t j) {
        return a1(n - 1 - i, n - 1 - j) == 0;
    });
    ExtractionOutcome out = extract_theorem2(a2);
    if (out.is_violation())
        raise(errc::invalid_params, "internal: reduction produced a corner copy");
    const HomogeneousBlock& b = out.block_ref();
    std::vector<std::size_t> rows, cols;
    for (std::size_t x : b.where.rows.v) rows.push_back(order.row_perm[n - 1 - x]);
    for (std::size_t y : b.where.cols.v) cols.push_back(order.col_perm[n - 1 - y]);
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    HomogeneousBlock mapped{1 - b.value, SubmatrixWitness{IndexSet(rows), IndexSet(cols)}};
    if (!verify_block(a, mapped))
        raise(errc::invalid_params, "internal: mapped block not homogeneous in the original");
    return ExtractionOutcome::block(std::move(mapped), out.fallback());
}

BipartiteHomogeneous chordal_bipartite_homogeneous(const ZeroOneMatrix& biadjacency) {
    BalanceResult rec = is_totally_balanced(biadjacency);
    if (!rec.balanced)
        raise(errc::not_chordal_bipartite, "biadjacency matrix is not totally balanced");
    ExtractionOutcome out = totally_balanced_homogeneous(biadjacency);
    const HomogeneousBlock& b = out.block_ref();
    return {b.where.rows, b.where.cols, b.value == 1, out.fallback()};
}

ZeroOneMatrix halfplane_incidence(const std::vector<PointXY>& points,
                                  const std::vector<Halfplane>& planes) {
    if (points.empty() || planes.empty())
        raise(errc::invalid_size, "need at least one point and one halfplane");
    return ZeroOneMatrix::from_fn(points.size(), planes.size(), [&](std::size_t i, std::size_t j) {
        double lhs = points[i].y - (planes[j].slope * points[i].x + planes[j].intercept);
        return planes[j].above ? lhs >= -1e-9 : lhs <= 1e-9;
    });
}

std::optional<HalfplaneOrdering> try_p2free_ordering(const std::vector<PointXY>& points,
                                                     const std::vector<Halfplane>& planes) {
    ZeroOneMatrix m = halfplane_incidence(points, planes);
    std::vector<std::size_t> uppers, lowers;
    for (std::size_t j = 0; j < planes.size(); ++j)
        (planes[j].above ? uppers : lowers).push_back(j);

    auto by_x = [&](bool rev) {
        std::vector<std::size_t> order(points.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (points[a].x != points[b].x) return points[a].x < points[b].x;
            return points[a].y < points[b].y;
        });
        if (rev) std::reverse(order.begin(), order.end());
        return order;
    };
    auto by_slope = [&](std::vector<std::size_t> side, bool rev) {
        std::stable_sort(side.begin(), side.end(), [&](std::size_t a, std::size_t b) {
            if (planes[a].slope != planes[b].slope) return planes[a].slope < planes[b].slope;
            return planes[a].intercept < planes[b].intercept;
        });
        if (rev) std::reverse(side.begin(), side.end());
        return side;
    };
    ZeroOneMatrix p2 = checkerboard(2).matrix();
    auto p2_free_under = [&](const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& side) {
        if (side.empty()) return true;
        ZeroOneMatrix sub = ZeroOneMatrix::from_fn(
            rows.size(), side.size(),
            [&](std::size_t i, std::size_t j) { return m(rows[i], side[j]) != 0; });
        return !contains_ordered(sub, p2).found;
    };

    for (int pr = 0; pr < 2; ++pr) {
        auto rows = by_x(pr != 0);
        for (int ur = 0; ur < 2; ++ur) {
            auto up = by_slope(uppers, ur != 0);
            if (!p2_free_under(rows, up)) continue;
            for (int lr = 0; lr < 2; ++lr) {
                auto low = by_slope(lowers, lr != 0);
                if (!p2_free_under(rows, low)) continue;
                return HalfplaneOrdering{rows, up, low};
            }
        }
    }
    return std::nullopt;
}

} // namespace homog
