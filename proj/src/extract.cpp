#include "homog/extract.hpp"

#include "homog/containment.hpp"
#include "homog/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <future>
#include <map>
#include <random>
#include <set>

namespace homog {

namespace {

std::size_t fl(double x) { return static_cast<std::size_t>(std::floor(x + 1e-9)); }
std::size_t ce(double x) {
    double c = std::ceil(x - 1e-9);
    return c <= 0 ? 0 : static_cast<std::size_t>(c);
}

void require_square(const ZeroOneMatrix& a) {
    if (a.rows() != a.cols()) raise(errc::invalid_params, "this extractor expects a square matrix");
    if (a.empty()) raise(errc::invalid_size, "matrix must be nonempty");
}

void require_zeros(const ZeroOneMatrix& a, double eps, const char* who) {
    if (a.count(0) < ce(eps * double(a.rows()) * double(a.cols())))
        raise(errc::precondition_failed,
              std::string(who) + " needs at least eps*n^2 zeros (have " +
                  std::to_string(a.count(0)) + ")");
}

std::vector<std::size_t> zero_cols_of_row(const ZeroOneMatrix& a, std::size_t r) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!a(r, j)) out.push_back(j);
    return out;
}

std::vector<std::size_t> one_cols_of_row(const ZeroOneMatrix& a, std::size_t r,
                                         std::size_t limit_col) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < limit_col; ++j)
        if (a(r, j)) out.push_back(j);
    return out;
}

HomogeneousBlock checked_block(const ZeroOneMatrix& a, int value, std::vector<std::size_t> rows,
                               std::vector<std::size_t> cols) {
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    HomogeneousBlock b{value, SubmatrixWitness{IndexSet(std::move(rows)), IndexSet(std::move(cols))}};
    if (!verify_block(a, b)) raise(errc::invalid_params, "internal: block failed verification");
    return b;
}

PatternViolation checked_violation(const ZeroOneMatrix& a, ZeroOneMatrix pattern,
                                   std::vector<std::size_t> rows, std::vector<std::size_t> cols,
                                   bool unordered = false) {
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    PatternViolation v{SubmatrixWitness{IndexSet(std::move(rows)), IndexSet(std::move(cols))},
                       std::move(pattern), unordered};
    if (!verify_violation(a, v)) raise(errc::invalid_params, "internal: violation failed verification");
    return v;
}

} // namespace

bool verify_block(const ZeroOneMatrix& a, const HomogeneousBlock& b) {
    if (b.where.rows.empty() || b.where.cols.empty()) return false;
    for (std::size_t r : b.where.rows.v)
        if (r >= a.rows()) return false;
    for (std::size_t c : b.where.cols.v)
        if (c >= a.cols()) return false;
    for (std::size_t r : b.where.rows.v)
        for (std::size_t c : b.where.cols.v)
            if (a(r, c) != b.value) return false;
    return true;
}

bool verify_violation(const ZeroOneMatrix& a, const PatternViolation& v) {
    if (v.where.rows.size() != v.pattern.rows() || v.where.cols.size() != v.pattern.cols())
        return false;
    for (std::size_t r : v.where.rows.v)
        if (r >= a.rows()) return false;
    for (std::size_t c : v.where.cols.v)
        if (c >= a.cols()) return false;
    ZeroOneMatrix s = slice(a, v.where);
    if (!v.unordered) return s == v.pattern;
    // permuted equality: some row order making the column multisets agree
    std::size_t k = s.rows();
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    auto col_multiset = [](const ZeroOneMatrix& m, const std::vector<std::size_t>& rp) {
        std::vector<std::uint64_t> cols(m.cols(), 0);
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t i = 0; i < m.rows(); ++i)
                if (m(rp[i], j)) cols[j] |= std::uint64_t(1) << i;
        std::sort(cols.begin(), cols.end());
        return cols;
    };
    std::vector<std::size_t> ident(k);
    for (std::size_t i = 0; i < k; ++i) ident[i] = i;
    auto want = col_multiset(v.pattern, ident);
    do {
        if (col_multiset(s, perm) == want) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

ExtractionOutcome extract_all1row_free(const ZeroOneMatrix& a, std::size_t k) {
    if (k == 0) raise(errc::invalid_size, "k must be at least 1");
    if (a.empty()) raise(errc::invalid_size, "matrix must be nonempty");
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto ones = one_cols_of_row(a, r, a.cols());
        if (ones.size() >= k) {
            ones.resize(k);
            return ExtractionOutcome::violation(
                checked_violation(a, ZeroOneMatrix(1, k, 1), {r}, std::move(ones)));
        }
    }
    std::size_t m = a.rows() / k;
    if (m == 0) raise(errc::degenerate_size, "fewer than k rows");
    std::vector<std::size_t> rows(m);
    for (std::size_t i = 0; i < m; ++i) rows[i] = i;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        bool clean = true;
        for (std::size_t i = 0; i < m && clean; ++i)
            if (a(i, j)) clean = false;
        if (clean) cols.push_back(j);
    }
    if (cols.empty()) raise(errc::degenerate_size, "selected rows cover every column");
    return ExtractionOutcome::block(checked_block(a, 0, std::move(rows), std::move(cols)));
}

ExtractionOutcome lift_homcolumn(const ZeroOneMatrix& a, const InnerExtractor& inner,
                                 double eps) {
    require_square(a);
    std::size_t n = a.rows();
    if (a.count(0) < ce(2 * eps * double(n) * double(n)))
        raise(errc::precondition_failed, "needs at least 2*eps*n^2 zeros");
    std::size_t w = fl(eps * double(n));
    if (w == 0) raise(errc::degenerate_size, "eps*n rounds to zero");

    // alive = zeros surviving the per-row mask of the first w zeros
    std::vector<std::vector<bool>> alive(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t seen = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (!a(i, j) && ++seen > w) alive[i][j] = true;
    }
    std::size_t jstar = n;
    for (std::size_t j = 0; j < n && jstar == n; ++j) {
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < n; ++i) cnt += alive[i][j];
        if (cnt >= w) jstar = j;
    }
    if (jstar == n) raise(errc::degenerate_size, "no column kept eps*n masked zeros");

    std::vector<std::size_t> I;
    for (std::size_t i = 0; i < n && I.size() < w; ++i)
        if (alive[i][jstar]) I.push_back(i);

    // the w columns left of jstar carrying the most zeros over I
    std::vector<std::pair<std::size_t, std::size_t>> weight; // (zeros, col)
    for (std::size_t j = 0; j < jstar; ++j) {
        std::size_t z = 0;
        for (std::size_t i : I) z += !a(i, j);
        weight.emplace_back(z, j);
    }
    std::stable_sort(weight.begin(), weight.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    if (weight.size() < w) raise(errc::degenerate_size, "not enough columns left of the pivot");
    std::vector<std::size_t> J;
    for (std::size_t t = 0; t < w; ++t) J.push_back(weight[t].second);
    std::sort(J.begin(), J.end());

    ExtractionOutcome res = inner(slice(a, IndexSet(I), IndexSet(J)));
    if (res.is_block()) {
        const auto& b = res.block_ref();
        std::vector<std::size_t> rows, cols;
        for (std::size_t r : b.where.rows.v) rows.push_back(I[r]);
        for (std::size_t c : b.where.cols.v) cols.push_back(J[c]);
        return ExtractionOutcome::block(
            checked_block(a, b.value, std::move(rows), std::move(cols)), res.fallback());
    }
    const auto& v = res.violation_ref();
    if (v.unordered) raise(errc::invalid_params, "inner extractor must report ordered violations");
    std::vector<std::size_t> rows, cols;
    for (std::size_t r : v.where.rows.v) rows.push_back(I[r]);
    for (std::size_t c : v.where.cols.v) cols.push_back(J[c]);
    cols.push_back(jstar); // the appended all-0 column
    ZeroOneMatrix lifted = ZeroOneMatrix::from_fn(
        v.pattern.rows(), v.pattern.cols() + 1, [&](std::size_t i, std::size_t j) {
            return j < v.pattern.cols() && v.pattern(i, j) != 0;
        });
    return ExtractionOutcome::violation(
        checked_violation(a, std::move(lifted), std::move(rows), std::move(cols)));
}

DensityDichotomy density_dichotomy(const ZeroOneMatrix& a, double eps) {
    if (a.empty()) raise(errc::invalid_size, "matrix must be nonempty");
    std::size_t r = a.rows(), c = a.cols();
    require_zeros(a, eps, "density dichotomy");
    std::size_t t = fl(eps * double(std::min(r, c)) / 8.0);
    if (t == 0) raise(errc::degenerate_size, "eps*n/8 rounds to zero");

    // alive1: zeros outside the first 2t of their row and of their column
    std::vector<std::vector<bool>> alive1(r, std::vector<bool>(c, false));
    {
        std::vector<std::size_t> rowseen(r, 0), colseen(c, 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (!a(i, j)) alive1[i][j] = ++rowseen[i] > 2 * t;
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < r; ++i)
                if (!a(i, j) && ++colseen[j] <= 2 * t) alive1[i][j] = false;
    }
    // alive2: additionally outside the last 2t-1 alive1 zeros of row and column
    std::vector<std::vector<bool>> alive2 = alive1;
    {
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t seen = 0;
            for (std::size_t j = c; j-- > 0;)
                if (alive1[i][j] && ++seen <= 2 * t - 1) alive2[i][j] = false;
        }
        for (std::size_t j = 0; j < c; ++j) {
            std::size_t seen = 0;
            for (std::size_t i = r; i-- > 0;)
                if (alive1[i][j] && ++seen <= 2 * t - 1) alive2[i][j] = false;
        }
    }
    std::size_t i1 = r, j1 = c;
    for (std::size_t i = 0; i < r && i1 == r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (alive2[i][j]) {
                i1 = i;
                j1 = j;
                break;
            }
    if (i1 == r) raise(errc::degenerate_size, "masking consumed every zero");

    std::vector<std::size_t> J, I;
    for (std::size_t j = j1 + 1; j < c && J.size() < 2 * t - 1; ++j)
        if (alive1[i1][j]) J.push_back(j);
    for (std::size_t i = i1 + 1; i < r && I.size() < 2 * t - 1; ++i)
        if (alive1[i][j1]) I.push_back(i);
    if (J.size() < 2 * t - 1 || I.size() < 2 * t - 1)
        raise(errc::degenerate_size, "pivot zero lost its guard sets");

    auto block_from = [&](const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) -> std::optional<HomogeneousBlock> {
        // rows of rows x cols without any 1 entry
        std::vector<std::size_t> clean;
        for (std::size_t i : rows) {
            bool ok = true;
            for (std::size_t j : cols)
                if (a(i, j)) {
                    ok = false;
                    break;
                }
            if (ok) clean.push_back(i);
            if (clean.size() == t) break;
        }
        if (clean.size() < t) return std::nullopt;
        std::vector<std::size_t> cc(cols.begin(), cols.begin() + t);
        return checked_block(a, 0, std::move(clean), std::move(cc));
    };

    if (auto b = block_from(I, J)) return {std::move(b), {}};

    // first 2t zeros of row i (columns) and of column j (rows), from the raw matrix
    auto first_zero_cols = [&](std::size_t i) {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < c && out.size() < 2 * t; ++j)
            if (!a(i, j)) out.push_back(j);
        return out;
    };
    auto first_zero_rows = [&](std::size_t j) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < r && out.size() < 2 * t; ++i)
            if (!a(i, j)) out.push_back(i);
        return out;
    };

    std::vector<P2PairHit> hits;
    std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
    for (std::size_t i : I) {
        std::size_t jhit = c;
        for (std::size_t j : J)
            if (a(i, j)) {
                jhit = j;
                break;
            }
        if (jhit == c) continue; // all-0 row of I x J, already counted above
        auto Xj = first_zero_rows(jhit);
        auto Yi = first_zero_cols(i);
        if (auto b = block_from(Xj, Yi)) return {std::move(b), {}};
        for (std::size_t x : Xj) {
            std::size_t y = c;
            for (std::size_t yy : Yi)
                if (a(x, yy)) {
                    y = yy;
                    break;
                }
            if (y == c) continue;
            // A[{x,i} x {y,jhit}] = [[1,0],[0,1]]
            if (seen_pairs.insert({x, i}).second) hits.push_back({x, i, y, jhit});
        }
    }
    ZeroOneMatrix p2 = checkerboard(2).matrix();
    for (const auto& h : hits) {
        ZeroOneMatrix s = slice(a, IndexSet({h.row_top, h.row_bot}), IndexSet({h.col_left, h.col_right}));
        if (!(s == p2)) raise(errc::invalid_params, "internal: pair failed verification");
    }
    return {std::nullopt, std::move(hits)};
}

namespace {

ExtractionOutcome fallback_square(const ZeroOneMatrix& a, int value) {
    oracle::Limits lim;
    bool force = std::max(a.rows(), a.cols()) > lim.max_square_n;
    auto sq = oracle::max_homogeneous_square(a, value, lim, force);
    if (sq.size == 0) raise(errc::degenerate_size, "no homogeneous cell of the requested value");
    HomogeneousBlock b{value, sq.where};
    if (!verify_block(a, b)) raise(errc::invalid_params, "internal: fallback block invalid");
    return ExtractionOutcome::block(std::move(b), true);
}

} // namespace

ExtractionOutcome extract_checkerboard(const ZeroOneMatrix& a, std::size_t k, double eps,
                                       const CheckerboardConfig& cfg) {
    require_square(a);
    if (k == 0) raise(errc::invalid_size, "k must be at least 1");
    std::size_t n = a.rows();
    require_zeros(a, eps, "checkerboard extraction");

    std::size_t s = cfg.s_override ? *cfg.s_override
                                   : fl(400.0 * double(k) / (eps * eps * eps));
    if (s == 0) s = 1;
    std::size_t cell_min = s <= n ? n / s : 0;
    bool degenerate = s > n || fl((eps / 2) * double(cell_min) / 8.0) < 1;
    if (degenerate) return fallback_square(a, 0);

    auto bound = [&](std::size_t idx) { return (idx * n) / s; };
    // zeros per grid cell
    std::vector<std::vector<std::size_t>> zeros(s, std::vector<std::size_t>(s, 0));
    std::vector<std::size_t> strip_of(n);
    for (std::size_t idx = 0; idx < s; ++idx)
        for (std::size_t x = bound(idx); x < bound(idx + 1); ++x) strip_of[x] = idx;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!a(i, j)) ++zeros[strip_of[i]][strip_of[j]];

    std::size_t heavy_need = ce(eps * double(n) * double(n) / (2.0 * double(s) * double(s)));
    std::size_t best_strip = 0, best_count = 0;
    for (std::size_t i = 0; i < s; ++i) {
        std::size_t cnt = 0;
        for (std::size_t j = 0; j < s; ++j) cnt += zeros[i][j] >= heavy_need;
        if (cnt > best_count) {
            best_count = cnt;
            best_strip = i;
        }
    }
    if (best_count == 0) return fallback_square(a, 0);

    std::size_t r0 = bound(best_strip), r1 = bound(best_strip + 1);
    std::vector<std::size_t> heavy;
    for (std::size_t j = 0; j < s; ++j)
        if (zeros[best_strip][j] >= heavy_need) heavy.push_back(j);

    struct CellOut {
        DensityDichotomy d;
        std::size_t c0 = 0;
        bool failed = false;
    };
    auto run_cell = [&](std::size_t j) {
        CellOut out;
        out.c0 = bound(j);
        std::size_t c1 = bound(j + 1);
        std::vector<std::size_t> rr, cc;
        for (std::size_t x = r0; x < r1; ++x) rr.push_back(x);
        for (std::size_t y = out.c0; y < c1; ++y) cc.push_back(y);
        ZeroOneMatrix cell = slice(a, IndexSet(rr), IndexSet(cc));
        double dens = double(cell.count(0)) / (double(cell.rows()) * double(cell.cols()));
        try {
            out.d = density_dichotomy(cell, dens);
        } catch (const error&) {
            out.failed = true;
        }
        return out;
    };

    std::vector<CellOut> outs(heavy.size());
    if (cfg.threads > 1 && heavy.size() > 1) {
        std::vector<std::future<CellOut>> futs;
        std::size_t next = 0;
        while (next < heavy.size()) {
            std::size_t batch = std::min(cfg.threads, heavy.size() - next);
            futs.clear();
            for (std::size_t b = 0; b < batch; ++b)
                futs.push_back(std::async(std::launch::async, run_cell, heavy[next + b]));
            for (std::size_t b = 0; b < batch; ++b) outs[next + b] = futs[b].get();
            next += batch;
        }
    } else {
        for (std::size_t idx = 0; idx < heavy.size(); ++idx) outs[idx] = run_cell(heavy[idx]);
    }

    // any cell block wins, first cell in column order
    for (const auto& out : outs) {
        if (out.failed || !out.d.block) continue;
        const auto& b = *out.d.block;
        std::vector<std::size_t> rows, cols;
        for (std::size_t x : b.where.rows.v) rows.push_back(r0 + x);
        for (std::size_t y : b.where.cols.v) cols.push_back(out.c0 + y);
        return ExtractionOutcome::block(checked_block(a, 0, std::move(rows), std::move(cols)));
    }

    // oriented pair -> per cell the first column witness
    std::map<std::pair<std::size_t, std::size_t>,
             std::vector<std::pair<std::size_t, std::size_t>>>
        by_pair; // (top,bot) -> [(col_left,col_right)] across cells, cell order
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> last_cell;
    for (std::size_t idx = 0; idx < outs.size(); ++idx) {
        if (outs[idx].failed) continue;
        std::set<std::pair<std::size_t, std::size_t>> in_this_cell;
        for (const auto& h : outs[idx].d.pairs) {
            auto key = std::make_pair(h.row_top, h.row_bot);
            if (!in_this_cell.insert(key).second) continue;
            by_pair[key].emplace_back(outs[idx].c0 + h.col_left, outs[idx].c0 + h.col_right);
        }
    }
    for (const auto& [key, cells] : by_pair) {
        if (cells.size() < k) continue;
        std::vector<std::size_t> rows{r0 + key.first, r0 + key.second};
        std::vector<std::size_t> cols;
        for (std::size_t idx = 0; idx < k; ++idx) {
            cols.push_back(cells[idx].first);
            cols.push_back(cells[idx].second);
        }
        return ExtractionOutcome::violation(
            checked_violation(a, checkerboard(2 * k).matrix(), std::move(rows), std::move(cols)));
    }
    return fallback_square(a, 0);
}

ExtractionOutcome extract_theorem1(const ZeroOneMatrix& a, const Pattern& p) {
    require_square(a);
    if (p.rows() != 2 || p.has_homogeneous_column())
        raise(errc::pattern_not_covered, "needs a 2xk pattern without homogeneous columns");
    std::size_t n = a.rows();
    bool zero_side = 2 * a.count(0) >= n * n;
    ZeroOneMatrix side = zero_side ? a : a.complement();
    ExtractionOutcome out = extract_checkerboard(side, p.cols(), 0.5);
    if (zero_side) return out;
    if (out.is_block()) {
        HomogeneousBlock b = out.block_ref();
        b.value ^= 1;
        if (!verify_block(a, b)) raise(errc::invalid_params, "internal: complement block invalid");
        return ExtractionOutcome::block(std::move(b), out.fallback());
    }
    PatternViolation v = out.violation_ref();
    v.pattern = v.pattern.complement();
    if (!verify_violation(a, v)) raise(errc::invalid_params, "internal: complement violation invalid");
    return ExtractionOutcome::violation(std::move(v));
}

ExtractionOutcome extract_qk_zero(const ZeroOneMatrix& a, std::size_t k, double eps) {
    require_square(a);
    if (k == 0) raise(errc::invalid_size, "k must be at least 1");
    std::size_t n = a.rows();
    require_zeros(a, eps, "corner-zero extraction");
    std::size_t h = ce(eps * double(n) / 2.0);
    if (h == 0) raise(errc::degenerate_size, "eps*n/2 rounds to zero");

    // zeros surviving the first-h masks of their row and their column
    std::vector<std::vector<bool>> alive(n, std::vector<bool>(n, false));
    {
        std::vector<std::size_t> rowseen(n, 0), colseen(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!a(i, j)) alive[i][j] = ++rowseen[i] > h;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                if (!a(i, j) && ++colseen[j] <= h) alive[i][j] = false;
    }
    std::size_t i0 = n, j0 = n;
    for (std::size_t i = 0; i < n && i0 == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (alive[i][j]) {
                i0 = i;
                j0 = j;
                break;
            }
    if (i0 == n) raise(errc::degenerate_size, "masking consumed every zero");

    std::vector<std::size_t> I, J;
    for (std::size_t i = 0; i < i0 && I.size() < h; ++i)
        if (!a(i, j0)) I.push_back(i);
    for (std::size_t j = 0; j < j0 && J.size() < h; ++j)
        if (!a(i0, j)) J.push_back(j);
    if (I.size() < h || J.size() < h)
        raise(errc::degenerate_size, "survivor lost its guard sets");

    ExtractionOutcome inner = extract_all1row_free(slice(a, IndexSet(I), IndexSet(J)), k);
    if (inner.is_block()) {
        const auto& b = inner.block_ref();
        std::vector<std::size_t> rows, cols;
        for (std::size_t x : b.where.rows.v) rows.push_back(I[x]);
        for (std::size_t y : b.where.cols.v) cols.push_back(J[y]);
        return ExtractionOutcome::block(checked_block(a, 0, std::move(rows), std::move(cols)));
    }
    // an all-1 1xk row inside I x J plus the survivor's cross forms the corner copy
    const auto& v = inner.violation_ref();
    std::size_t bad_row = I[v.where.rows.v[0]];
    std::vector<std::size_t> cols;
    for (std::size_t y : v.where.cols.v) cols.push_back(J[y]);
    cols.push_back(j0);
    return ExtractionOutcome::violation(
        checked_violation(a, corner(k).matrix(), {bad_row, i0}, std::move(cols)));
}

namespace {

struct YVertex {
    std::size_t row, col; // local coordinates within Y
};

// Straighten a walk over zero-entries into a row-monotone path, or surface a
// corner whose fourth entry is 1 (a corner-pattern copy). Coordinates local.
struct WalkResult {
    bool found_q = false;
    std::size_t qr1 = 0, qr2 = 0, qc1 = 0, qc2 = 0; // local rows/cols of the copy
    std::vector<YVertex> path;
};

WalkResult straighten_walk(const ZeroOneMatrix& y, std::vector<YVertex> walk) {
    auto collinear = [&](std::size_t i) {
        return (walk[i - 1].row == walk[i].row && walk[i].row == walk[i + 1].row) ||
               (walk[i - 1].col == walk[i].col && walk[i].col == walk[i + 1].col);
    };
    for (;;) {
        bool changed = false;
        for (std::size_t i = 1; i + 1 < walk.size() && !changed; ++i) {
            if (collinear(i)) {
                walk.erase(walk.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            const auto& p = walk[i - 1];
            const auto& u = walk[i];
            const auto& q = walk[i + 1];
            if (p.col == u.col && p.row < u.row && u.row == q.row && u.col > q.col) {
                // down then left; the corner closes at (p.row, q.col)
                if (y(p.row, q.col)) {
                    return {true, p.row, u.row, q.col, u.col, {}};
                }
                walk[i] = {p.row, q.col};
                changed = true;
            } else if (p.row == u.row && p.col < u.col && u.col == q.col && u.row > q.row) {
                // right then up; the corner closes at (q.row, p.col)
                if (y(q.row, p.col)) {
                    return {true, q.row, u.row, p.col, u.col, {}};
                }
                walk[i] = {q.row, p.col};
                changed = true;
            }
        }
        if (!changed) break;
    }
    return {false, 0, 0, 0, 0, std::move(walk)};
}

} // namespace

ExtractionOutcome extract_q_one(const ZeroOneMatrix& a, double eps) {
    require_square(a);
    std::size_t n = a.rows();
    if (a.count(1) < ce(eps * double(n) * double(n)))
        raise(errc::precondition_failed, "needs at least eps*n^2 ones");

    std::size_t third = ce(eps * double(n) * double(n) / 3.0);
    std::vector<std::size_t> col_ones(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) col_ones[j] += a(i, j);
    std::size_t total = a.count(1);
    std::size_t split = 0, left = 0;
    for (std::size_t x = 1; x < n; ++x) {
        left += col_ones[x - 1];
        if (left >= third && total - left >= third) {
            split = x;
            break;
        }
    }
    if (split == 0) raise(errc::precondition_failed, "no column split balances the ones");

    std::size_t m = fl(eps * double(n) / 6.0);
    if (m == 0) raise(errc::degenerate_size, "eps*n/6 rounds to zero");
    std::vector<std::size_t> R;
    for (std::size_t i = 0; i < n && R.size() < m; ++i) {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < split; ++j) ones += a(i, j);
        if (ones >= m) R.push_back(i);
    }
    if (R.size() < m) raise(errc::precondition_failed, "too few one-rich rows left of the split");
    if (n - split < m) raise(errc::degenerate_size, "right part narrower than eps*n/6");
    std::vector<std::size_t> ycols(m);
    for (std::size_t j = 0; j < m; ++j) ycols[j] = split + j;
    ZeroOneMatrix Y = slice(a, IndexSet(R), IndexSet(ycols));

    // graph on the zeros of Y, edges between zeros sharing a row or a column
    std::vector<YVertex> verts;
    std::vector<std::vector<std::size_t>> vid(m, std::vector<std::size_t>(m, SIZE_MAX));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (!Y(i, j)) {
                vid[i][j] = verts.size();
                verts.push_back({i, j});
            }
    std::vector<std::vector<std::size_t>> adj(verts.size());
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t prev = SIZE_MAX;
        for (std::size_t j = 0; j < m; ++j)
            if (vid[i][j] != SIZE_MAX) {
                if (prev != SIZE_MAX) {
                    adj[prev].push_back(vid[i][j]);
                    adj[vid[i][j]].push_back(prev);
                }
                prev = vid[i][j];
            }
    }
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t prev = SIZE_MAX;
        for (std::size_t i = 0; i < m; ++i)
            if (vid[i][j] != SIZE_MAX) {
                if (prev != SIZE_MAX) {
                    adj[prev].push_back(vid[i][j]);
                    adj[vid[i][j]].push_back(prev);
                }
                prev = vid[i][j];
            }
    }
    std::vector<std::size_t> comp(verts.size(), SIZE_MAX);
    std::vector<std::vector<std::size_t>> comps;
    for (std::size_t v = 0; v < verts.size(); ++v) {
        if (comp[v] != SIZE_MAX) continue;
        std::size_t id = comps.size();
        comps.emplace_back();
        std::deque<std::size_t> bfs{v};
        comp[v] = id;
        while (!bfs.empty()) {
            std::size_t u = bfs.front();
            bfs.pop_front();
            comps[id].push_back(u);
            for (std::size_t w : adj[u])
                if (comp[w] == SIZE_MAX) {
                    comp[w] = id;
                    bfs.push_back(w);
                }
        }
    }

    std::size_t s_target = fl(eps * double(n) / 18.0);
    if (s_target == 0) raise(errc::degenerate_size, "eps*n/18 rounds to zero");

    auto rows_of_comp = [&](const std::vector<std::size_t>& cvs) {
        std::set<std::size_t> rows;
        for (std::size_t v : cvs) rows.insert(verts[v].row);
        return rows;
    };

    for (std::size_t cidx = 0; cidx < comps.size(); ++cidx) {
        auto rows_local = rows_of_comp(comps[cidx]);
        if (rows_local.size() < s_target) continue;

        // the component's lowest vertex propagates its 1-columns to every row
        std::size_t v = comps[cidx][0];
        for (std::size_t u : comps[cidx])
            if (verts[u].row < verts[v].row ||
                (verts[u].row == verts[v].row && verts[u].col < verts[v].col))
                v = u;
        auto cands = one_cols_of_row(a, R[verts[v].row], split);
        std::vector<std::size_t> grows;
        for (std::size_t lr : rows_local) grows.push_back(R[lr]);
        std::sort(grows.begin(), grows.end());

        // verify; a 0 inside pinpoints a corner copy along a monotone path
        std::size_t bad_r = SIZE_MAX, bad_c = SIZE_MAX;
        for (std::size_t gr : grows) {
            for (std::size_t gc : cands)
                if (!a(gr, gc)) {
                    bad_r = gr;
                    bad_c = gc;
                    break;
                }
            if (bad_r != SIZE_MAX) break;
        }
        if (bad_r == SIZE_MAX)
            return ExtractionOutcome::block(checked_block(a, 1, std::move(grows), std::move(cands)));

        // BFS path v -> u inside the component, u on the offending row
        std::size_t target = SIZE_MAX;
        for (std::size_t u : comps[cidx])
            if (R[verts[u].row] == bad_r && (target == SIZE_MAX || verts[u].col < verts[target].col))
                target = u;
        std::vector<std::size_t> parent(verts.size(), SIZE_MAX);
        std::deque<std::size_t> bfs{v};
        parent[v] = v;
        while (!bfs.empty()) {
            std::size_t u = bfs.front();
            bfs.pop_front();
            if (u == target) break;
            for (std::size_t w : adj[u])
                if (parent[w] == SIZE_MAX) {
                    parent[w] = u;
                    bfs.push_back(w);
                }
        }
        std::vector<YVertex> walk;
        for (std::size_t u = target; u != v; u = parent[u]) walk.push_back(verts[u]);
        walk.push_back(verts[v]);
        std::reverse(walk.begin(), walk.end());

        WalkResult wr = straighten_walk(Y, std::move(walk));
        if (wr.found_q) {
            return ExtractionOutcome::violation(checked_violation(
                a, corner(1).matrix(), {R[wr.qr1], R[wr.qr2]}, {split + wr.qc1, split + wr.qc2}));
        }
        // walk bad_c's value down the monotone path to the first 1 -> 0 flip
        std::size_t prev_idx = 0;
        for (std::size_t idx = 1; idx < wr.path.size(); ++idx) {
            if (a(R[wr.path[idx].row], bad_c)) {
                prev_idx = idx;
                continue;
            }
            if (wr.path[idx].row == wr.path[prev_idx].row) continue;
            return ExtractionOutcome::violation(checked_violation(
                a, corner(1).matrix(), {R[wr.path[prev_idx].row], R[wr.path[idx].row]},
                {bad_c, split + wr.path[idx].col}));
        }
        raise(errc::invalid_params, "internal: monotone path lost the flip");
    }

    // every component is short: block-diagonal reordering of Y leaves a clean corner
    std::vector<std::size_t> comp_order(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) comp_order[i] = i;
    auto comp_min = [&](std::size_t cid) {
        std::size_t best = SIZE_MAX;
        for (std::size_t u : comps[cid]) best = std::min(best, verts[u].row * m + verts[u].col);
        return best;
    };
    std::sort(comp_order.begin(), comp_order.end(),
              [&](std::size_t x, std::size_t y) { return comp_min(x) < comp_min(y); });

    std::vector<std::size_t> row_order, col_order; // reordered position -> local index
    std::vector<bool> row_used(m, false), col_used(m, false);
    std::vector<std::pair<std::size_t, std::size_t>> row_span(comps.size()), col_span(comps.size());
    for (std::size_t oi = 0; oi < comp_order.size(); ++oi) {
        std::size_t cid = comp_order[oi];
        std::set<std::size_t> rs, cs;
        for (std::size_t u : comps[cid]) {
            rs.insert(verts[u].row);
            cs.insert(verts[u].col);
        }
        row_span[oi] = {row_order.size(), row_order.size() + rs.size()};
        col_span[oi] = {col_order.size(), col_order.size() + cs.size()};
        for (std::size_t x : rs) {
            row_order.push_back(x);
            row_used[x] = true;
        }
        for (std::size_t x : cs) {
            col_order.push_back(x);
            col_used[x] = true;
        }
    }
    std::size_t block_cols = col_order.size();
    for (std::size_t x = 0; x < m; ++x)
        if (!row_used[x]) row_order.push_back(x);
    for (std::size_t x = 0; x < m; ++x)
        if (!col_used[x]) col_order.push_back(x);

    std::size_t mid = m / 2;
    std::size_t lo = 0, hi = 0; // reordered row range of the all-1 corner
    std::size_t cl = 0, ch = 0; // reordered col range
    if (mid >= block_cols) {
        // the packed blocks end before the middle; the right half is clean
        lo = 0;
        hi = m;
        cl = mid;
        ch = m;
    } else {
        std::size_t hit = 0;
        while (!(col_span[hit].first <= mid && mid < col_span[hit].second)) ++hit;
        if (row_span[hit].second <= 2 * s_target) {
            // the middle block sits high; the bottom-left corner is clean
            lo = 2 * s_target;
            hi = m;
            cl = 0;
            ch = mid + 1;
        } else {
            // it sits low (its rows start after s_target); top-right is clean
            lo = 0;
            hi = row_span[hit].first;
            cl = col_span[hit].first;
            ch = m;
        }
    }
    std::vector<std::size_t> grows, gcols;
    for (std::size_t p = lo; p < hi; ++p) grows.push_back(R[row_order[p]]);
    for (std::size_t p = cl; p < ch; ++p) gcols.push_back(split + col_order[p]);
    return ExtractionOutcome::block(checked_block(a, 1, std::move(grows), std::move(gcols)));
}

ExtractionOutcome extract_theorem2(const ZeroOneMatrix& a) {
    require_square(a);
    std::size_t n = a.rows();
    if (n < 20) {
        oracle::Limits lim;
        auto z = oracle::max_homogeneous_square(a, 0, lim);
        auto o = oracle::max_homogeneous_square(a, 1, lim);
        const auto& pick = o.size > z.size ? o : z;
        if (pick.size == 0) raise(errc::degenerate_size, "empty matrix");
        HomogeneousBlock b{pick.value, pick.where};
        return ExtractionOutcome::block(std::move(b), true);
    }
    if (10 * a.count(0) >= n * n) return extract_qk_zero(a, 1, 0.1);
    return extract_q_one(a, 0.9);
}

namespace {

struct IntervalBits {
    // per row of V, ones and zeros of an interval packed into words
    std::vector<std::vector<std::uint64_t>> ones, zeros;
    std::vector<std::size_t> cols; // global column of each bit
};

bool bits_intersect(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
    for (std::size_t w = 0; w < x.size(); ++w)
        if (x[w] & y[w]) return true;
    return false;
}

std::size_t first_common(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y,
                         const std::vector<std::size_t>& cols) {
    for (std::size_t w = 0; w < x.size(); ++w) {
        std::uint64_t both = x[w] & y[w];
        if (both) return cols[w * 64 + static_cast<std::size_t>(std::countr_zero(both))];
    }
    return SIZE_MAX;
}

} // namespace

ExtractionOutcome extract_ordered_general(const ZeroOneMatrix& a, const Pattern& p, double eps,
                                          const OrderedSearchConfig& cfg) {
    require_square(a);
    if (p.rows() != 2 || !p.acyclic())
        raise(errc::pattern_not_covered, "needs an acyclic 2xk pattern");
    std::size_t n = a.rows(), k = p.cols();
    require_zeros(a, eps, "ordered extraction");
    std::size_t q = std::max<std::size_t>(1, fl(eps * double(n) / (8.0 * double(k))));

    // prefix zero counts per row: zpre[i][j] = zeros of row i among columns [0, j)
    std::vector<std::vector<std::size_t>> zpre(n, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) zpre[i][j + 1] = zpre[i][j] + (a(i, j) ? 0 : 1);

    auto nice_rows = [&](const std::vector<std::size_t>& tup) {
        std::vector<std::size_t> rows;
        for (std::size_t r = 0; r < n; ++r) {
            bool ok = true;
            for (std::size_t i = 0; i < tup.size() && ok; ++i)
                if (a(r, tup[i])) ok = false;
            for (std::size_t i = 0; i + 1 < tup.size() && ok; ++i)
                if (zpre[r][tup[i + 1] + 1] - zpre[r][tup[i] + 1] < q) ok = false;
            if (ok) rows.push_back(r);
        }
        return rows;
    };

    auto next_tuple = [&](std::vector<std::size_t>& tup) {
        std::size_t len = tup.size();
        for (std::size_t i = len; i-- > 0;) {
            if (tup[i] + (len - i) < n) {
                ++tup[i];
                for (std::size_t j2 = i + 1; j2 < len; ++j2) tup[j2] = tup[j2 - 1] + 1;
                return true;
            }
        }
        return false;
    };

    std::vector<std::size_t> best_tuple;
    std::size_t best_nice = 0;
    if (n <= cfg.exhaustive_threshold) {
        if (k + 1 <= n) {
            std::vector<std::size_t> tup(k + 1);
            for (std::size_t i = 0; i <= k; ++i) tup[i] = i;
            do {
                std::size_t cnt = nice_rows(tup).size();
                if (cnt > best_nice) {
                    best_nice = cnt;
                    best_tuple = tup;
                }
            } while (next_tuple(tup));
        }
    } else {
        std::mt19937_64 rng(cfg.seed ^ 0x0e1c709eull);
        std::vector<std::size_t> qualifying;
        std::size_t row_need = ce(eps * double(n) / 2.0);
        for (std::size_t r = 0; r < n; ++r)
            if (zpre[r][n] >= row_need) qualifying.push_back(r);
        for (std::size_t probe = 0; probe < cfg.probes && !qualifying.empty(); ++probe) {
            std::size_t r = qualifying[rng() % qualifying.size()];
            auto zc = zero_cols_of_row(a, r);
            std::size_t L = zc.size();
            if (L < (k + 1) * std::max<std::size_t>(q, 1)) continue;
            std::size_t win = std::max<std::size_t>(1, L / (8 * (k + 1)));
            std::vector<std::size_t> tup;
            bool ok = true;
            std::size_t prev = SIZE_MAX;
            for (std::size_t i = 1; i <= k + 1 && ok; ++i) {
                std::size_t center = (i * (L - 1)) / (k + 1);
                std::size_t low = center > win ? center - win : 0;
                std::size_t pos = low + rng() % (2 * win + 1);
                pos = std::min(pos, L - 1);
                if (prev != SIZE_MAX && (pos <= prev || pos - prev < q)) ok = false;
                else {
                    tup.push_back(zc[pos]);
                    prev = pos;
                }
            }
            if (!ok) continue;
            std::size_t cnt = nice_rows(tup).size();
            if (cnt > best_nice || (cnt == best_nice && cnt > 0 && tup < best_tuple)) {
                best_nice = cnt;
                best_tuple = tup;
            }
        }
    }
    if (best_nice < 2)
        raise(errc::nice_tuple_not_found, "no column tuple is nice for at least two rows");

    std::vector<std::size_t> V = nice_rows(best_tuple);
    std::size_t nv = V.size();

    // packed interval supports
    std::vector<IntervalBits> iv(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t c0 = best_tuple[i] + 1, c1 = best_tuple[i + 1] + 1; // (c_i, c_{i+1}]
        std::size_t width = c1 - c0, words = (width + 63) / 64;
        iv[i].cols.resize(words * 64, SIZE_MAX);
        for (std::size_t d = 0; d < width; ++d) iv[i].cols[d] = c0 + d;
        iv[i].ones.assign(nv, std::vector<std::uint64_t>(words, 0));
        iv[i].zeros.assign(nv, std::vector<std::uint64_t>(words, 0));
        for (std::size_t x = 0; x < nv; ++x)
            for (std::size_t d = 0; d < width; ++d) {
                if (a(V[x], c0 + d)) iv[i].ones[x][d >> 6] |= std::uint64_t(1) << (d & 63);
                else iv[i].zeros[x][d >> 6] |= std::uint64_t(1) << (d & 63);
            }
    }
    auto side_bits = [&](std::size_t i, std::size_t x, int bit) -> const std::vector<std::uint64_t>& {
        return bit ? iv[i].ones[x] : iv[i].zeros[x];
    };

    // edge in graph i <=> the pair (x earlier, y later) misses pattern column i
    auto has_edge = [&](std::size_t i, std::size_t x, std::size_t y) {
        return !bits_intersect(side_bits(i, x, p.matrix()(0, i)), side_bits(i, y, p.matrix()(1, i)));
    };

    std::vector<std::size_t> K; // inhomogeneous pattern columns
    std::optional<std::size_t> all1_col;
    for (std::size_t i = 0; i < k; ++i) {
        int top = p.matrix()(0, i), bot = p.matrix()(1, i);
        if (top != bot) K.push_back(i);
        else if (top == 1) all1_col = i;
    }

    auto assemble_violation = [&](std::size_t x, std::size_t y) -> ExtractionOutcome {
        // the pair realizes every pattern column inside its interval
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t col = first_common(side_bits(i, x, p.matrix()(0, i)),
                                           side_bits(i, y, p.matrix()(1, i)), iv[i].cols);
            if (col == SIZE_MAX)
                raise(errc::invalid_params, "internal: violating pair lost a column");
            cols.push_back(col);
        }
        return ExtractionOutcome::violation(
            checked_violation(a, p.matrix(), {V[x], V[y]}, std::move(cols)));
    };

    // adjacency of the union over K, and per-column graphs
    std::vector<ZeroOneMatrix> graphs;
    std::vector<std::vector<int>> union_adj(nv, std::vector<int>(nv, 0));
    for (std::size_t i : K) {
        auto g = ZeroOneMatrix::from_fn(nv, nv, [&](std::size_t x, std::size_t y) {
            if (x == y) return false;
            std::size_t lo = std::min(x, y), hi = std::max(x, y);
            return has_edge(i, lo, hi);
        });
        for (std::size_t x = 0; x < nv; ++x)
            for (std::size_t y = 0; y < nv; ++y)
                if (g(x, y)) union_adj[x][y] = 1;
        graphs.push_back(std::move(g));
    }
    // all-0 pattern columns always match via an interval's all-0 last column,
    // so a pair covered by no graph instantiates the whole pattern
    for (std::size_t x = 0; x < nv; ++x)
        for (std::size_t y = x + 1; y < nv; ++y) {
            bool covered = union_adj[x][y] != 0 || (all1_col && has_edge(*all1_col, x, y));
            if (!covered) return assemble_violation(x, y);
        }

    oracle::Limits blim;
    blim.biclique_n = cfg.biclique_exact_limit;

    std::optional<HomogeneousBlock> best_block;
    auto consider = [&](HomogeneousBlock b) {
        if (!best_block || b.size() > best_block->size()) best_block = std::move(b);
    };

    for (std::size_t gi = 0; gi < K.size(); ++gi) {
        auto bic = oracle::max_balanced_biclique(graphs[gi], blim);
        if (bic.s.empty()) continue;
        std::size_t i = K[gi];
        bool zero_top = p.matrix()(0, i) == 0; // column (0,1): nested zero supports upward
        std::vector<std::size_t> all;
        all.insert(all.end(), bic.s.begin(), bic.s.end());
        all.insert(all.end(), bic.t.begin(), bic.t.end());
        std::size_t v = zero_top ? *std::min_element(all.begin(), all.end())
                                 : *std::max_element(all.begin(), all.end());
        bool v_in_s = std::find(bic.s.begin(), bic.s.end(), v) != bic.s.end();
        const auto& other = v_in_s ? bic.t : bic.s;
        std::vector<std::size_t> rows{V[v]};
        for (std::size_t w : other) rows.push_back(V[w]);
        std::vector<std::size_t> cols;
        for (std::size_t d = 0; d < iv[i].cols.size(); ++d)
            if (iv[i].cols[d] != SIZE_MAX &&
                (iv[i].zeros[v][d >> 6] >> (d & 63)) & 1)
                cols.push_back(iv[i].cols[d]);
        consider(checked_block(a, 0, std::move(rows), std::move(cols)));
    }

    // complement of the union: pairs covered only by the all-1 column's graph
    {
        auto comp_g = ZeroOneMatrix::from_fn(nv, nv, [&](std::size_t x, std::size_t y) {
            return x != y && union_adj[x][y] == 0;
        });
        auto bic = oracle::max_balanced_biclique(comp_g, blim);
        if (!bic.s.empty()) {
            if (!all1_col) {
                return assemble_violation(std::min(bic.s[0], bic.t[0]),
                                          std::max(bic.s[0], bic.t[0]));
            }
            std::size_t i = *all1_col;
            std::vector<std::size_t> s_clean, t_clean; // interval columns all-0 on S / on T
            std::size_t words = iv[i].ones[0].size();
            std::vector<std::uint64_t> s_ones(words, 0), t_ones(words, 0);
            for (std::size_t x : bic.s)
                for (std::size_t w = 0; w < words; ++w) s_ones[w] |= iv[i].ones[x][w];
            for (std::size_t x : bic.t)
                for (std::size_t w = 0; w < words; ++w) t_ones[w] |= iv[i].ones[x][w];
            for (std::size_t d = 0; d < iv[i].cols.size(); ++d) {
                if (iv[i].cols[d] == SIZE_MAX) continue;
                bool s0 = !((s_ones[d >> 6] >> (d & 63)) & 1);
                bool t0 = !((t_ones[d >> 6] >> (d & 63)) & 1);
                if (s0) s_clean.push_back(iv[i].cols[d]);
                if (t0) t_clean.push_back(iv[i].cols[d]);
                if (!s0 && !t0) {
                    // a column with 1s on both sides: that cross pair misses every graph
                    std::size_t xs = SIZE_MAX, xt = SIZE_MAX;
                    for (std::size_t x : bic.s)
                        if ((iv[i].ones[x][d >> 6] >> (d & 63)) & 1) xs = x;
                    for (std::size_t x : bic.t)
                        if ((iv[i].ones[x][d >> 6] >> (d & 63)) & 1) xt = x;
                    return assemble_violation(std::min(xs, xt), std::max(xs, xt));
                }
            }
            const auto& side = s_clean.size() >= t_clean.size() ? bic.s : bic.t;
            auto& cols = s_clean.size() >= t_clean.size() ? s_clean : t_clean;
            if (!cols.empty()) {
                std::vector<std::size_t> rows;
                for (std::size_t x : side) rows.push_back(V[x]);
                consider(checked_block(a, 0, std::move(rows), std::move(cols)));
            }
        }
    }

    if (!best_block) raise(errc::degenerate_size, "no graph produced a usable biclique");
    return ExtractionOutcome::block(std::move(*best_block));
}

ExtractionOutcome perm_dichotomy(const ZeroOneMatrix& a, const Pattern& p,
                                 std::optional<std::size_t> s_override) {
    require_square(a);
    for (std::size_t j = 0; j < p.cols(); ++j) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < p.rows(); ++i) ones += p.matrix()(i, j);
        if (ones > 1) raise(errc::pattern_not_covered, "every pattern column must have at most one 1");
    }
    std::size_t n = a.rows();
    std::size_t k = p.rows() + 1, l = p.cols();
    double s_formula = 2.0 * double(l > 0 ? l - 1 : 0) * std::pow(2.0 * double(k), double(k));
    std::size_t s = s_override ? *s_override : std::max<std::size_t>(1, fl(s_formula));
    if (s == 0 || s > n) raise(errc::degenerate_size, "strip count exceeds the matrix");
    double eps = 1.0 / (8.0 * double(s) * double(s) * double(k) * double(k));
    if (a.count(0) < ce((1.0 - eps) * double(n) * double(n)))
        raise(errc::precondition_failed, "needs at least (1-eps)*n^2 zeros");

    std::size_t m = n / s;
    if (m / (2 * k) == 0) raise(errc::degenerate_size, "m/2k rounds to zero");
    std::size_t bs = m / k;
    std::size_t quota = ce(double(m) / (2.0 * double(k)));
    std::size_t sigma = std::max<std::size_t>(1, fl(eps * double(n)));

    std::optional<HomogeneousBlock> stall_block;
    // rowset -> per strip the identity's columns
    std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::vector<std::size_t>>>>
        families;

    for (std::size_t st = 0; st < s; ++st) {
        std::size_t coff = st * m;
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> picks(k);
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t rlo = j * bs, rhi = (j + 1) * bs;
            std::vector<bool> col_used(bs, false);
            for (std::size_t x = rlo; x < rhi && picks[j].size() < quota; ++x) {
                for (std::size_t y = rlo; y < rhi; ++y) {
                    if (col_used[y - rlo] || !a(x, coff + y)) continue;
                    picks[j].emplace_back(x, y);
                    col_used[y - rlo] = true;
                    break;
                }
            }
            if (picks[j].size() < quota && !stall_block) {
                // maximal matching stalled: uncovered rows x uncovered cols are all-0
                std::vector<bool> row_used(bs, false);
                for (auto& [x, y] : picks[j]) row_used[x - rlo] = true;
                std::vector<std::size_t> rows, cols;
                for (std::size_t d = 0; d < bs; ++d) {
                    if (!row_used[d]) rows.push_back(rlo + d);
                    if (!col_used[d]) cols.push_back(coff + rlo + d);
                }
                std::size_t side = std::min(rows.size(), cols.size());
                if (side >= sigma) {
                    rows.resize(side);
                    cols.resize(side);
                    stall_block = checked_block(a, 0, std::move(rows), std::move(cols));
                }
            }
        }
        // all diagonal combos that happen to be exact identity copies
        bool any_empty = false;
        for (std::size_t j = 0; j < k; ++j) any_empty |= picks[j].empty();
        if (any_empty) continue;
        std::vector<std::size_t> digit(k, 0);
        std::size_t combos = 1;
        for (std::size_t j = 0; j < k; ++j)
            combos = std::min<std::size_t>(combos * picks[j].size(), 300000);
        for (std::size_t it = 0; it < combos; ++it) {
            std::vector<std::size_t> rows(k), cols(k);
            for (std::size_t j = 0; j < k; ++j) {
                rows[j] = picks[j][digit[j]].first;
                cols[j] = picks[j][digit[j]].second;
            }
            bool iden = true;
            for (std::size_t x = 0; x < k && iden; ++x)
                for (std::size_t y = 0; y < k && iden; ++y)
                    if (x != y && a(rows[x], coff + cols[y])) iden = false;
            if (iden) {
                auto& entry = families[rows];
                if (entry.empty() || entry.back().first != st) {
                    std::vector<std::size_t> gcols;
                    for (std::size_t y : cols) gcols.push_back(coff + y);
                    entry.emplace_back(st, std::move(gcols));
                }
            }
            // next mixed-radix digit
            std::size_t j = 0;
            while (j < k) {
                if (++digit[j] < picks[j].size()) break;
                digit[j] = 0;
                ++j;
            }
            if (j == k) break;
        }
    }

    for (const auto& [rows, strips] : families) {
        if (strips.size() < l) continue;
        std::vector<std::size_t> cols;
        for (std::size_t idx = 0; idx < l; ++idx)
            cols.insert(cols.end(), strips[idx].second.begin(), strips[idx].second.end());
        return ExtractionOutcome::violation(checked_violation(
            a, identity_concat(k, l).matrix(), std::vector<std::size_t>(rows), std::move(cols)));
    }

    if (stall_block) return ExtractionOutcome::block(std::move(*stall_block));

    // small all-0 square inside some strip
    if (sigma <= 3) {
        for (std::size_t st = 0; st < s; ++st) {
            std::size_t coff = st * m;
            std::vector<std::size_t> rr(m), cc(m);
            for (std::size_t i = 0; i < m; ++i) rr[i] = i, cc[i] = coff + i;
            auto strip = slice(a, IndexSet(rr), IndexSet(cc));
            oracle::Limits lim;
            lim.max_square_n = std::max<std::size_t>(lim.max_square_n, m);
            lim.node_budget = 5'000'000;
            auto sq = oracle::max_homogeneous_square(strip, 0, lim, true);
            if (sq.size >= sigma) {
                std::vector<std::size_t> rows, cols;
                for (std::size_t x : sq.where.rows.v) rows.push_back(x);
                for (std::size_t y : sq.where.cols.v) cols.push_back(coff + y);
                rows.resize(sigma);
                cols.resize(sigma);
                return ExtractionOutcome::block(checked_block(a, 0, std::move(rows), std::move(cols)));
            }
        }
    }
    raise(errc::degenerate_size, "dichotomy inconclusive at this scale");
}

ExtractionOutcome extract_unordered(const ZeroOneMatrix& a, const Pattern& p, double eps) {
    require_square(a);
    if (p.rows() != 2 || !p.simple())
        raise(errc::pattern_not_covered, "needs a simple 2xk pattern");
    std::size_t n = a.rows(), k = p.cols();
    require_zeros(a, eps, "unordered extraction");

    std::vector<std::size_t> kept;
    for (std::size_t r = 0; r < n; ++r)
        if (2.0 * double(zero_cols_of_row(a, r).size()) + 1e-9 >= eps * double(n))
            kept.push_back(r);
    std::size_t t = ce(eps * double(n) / 2.0);
    if (t < 2) raise(errc::degenerate_size, "eps*n/2 rounds below two rows");

    std::size_t jstar = n;
    for (std::size_t j = 0; j < n && jstar == n; ++j) {
        std::size_t cnt = 0;
        for (std::size_t r : kept) cnt += !a(r, j);
        if (cnt >= t) jstar = j;
    }
    if (jstar == n) raise(errc::precondition_failed, "no column carries eps*n/2 zeros");

    std::vector<std::size_t> brow; // global rows, later sorted by zero count
    for (std::size_t r : kept) {
        if (brow.size() == t) break;
        if (!a(r, jstar)) brow.push_back(r);
    }
    std::stable_sort(brow.begin(), brow.end(), [&](std::size_t x, std::size_t y) {
        return zero_cols_of_row(a, x).size() < zero_cols_of_row(a, y).size();
    });

    // zero supports as bitsets over all n columns
    std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> H(t, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!a(brow[i], j)) H[i][j >> 6] |= std::uint64_t(1) << (j & 63);
    auto diff_count = [&](std::size_t i, std::size_t j) {
        std::size_t cnt = 0;
        for (std::size_t w = 0; w < words; ++w)
            cnt += static_cast<std::size_t>(std::popcount(H[i][w] & ~H[j][w]));
        return cnt;
    };
    auto union_full = [&](std::size_t i, std::size_t j) {
        std::size_t cnt = 0;
        for (std::size_t w = 0; w < words; ++w)
            cnt += static_cast<std::size_t>(std::popcount(H[i][w] | H[j][w]));
        return cnt == n;
    };

    std::vector<std::vector<bool>> edge(t, std::vector<bool>(t, false));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j) {
            if (diff_count(i, j) <= k - 1) {
                edge[i][j] = true;
                continue;
            }
            if (!union_full(i, j)) {
                // rows i and j carry the star pattern: k columns each way, a
                // shared 1-column, and the shared 0-column jstar
                std::vector<std::size_t> cols;
                std::size_t got = 0;
                for (std::size_t c = 0; c < n && got < k; ++c)
                    if (!a(brow[i], c) && a(brow[j], c)) {
                        cols.push_back(c);
                        ++got;
                    }
                got = 0;
                for (std::size_t c = 0; c < n && got < k; ++c)
                    if (a(brow[i], c) && !a(brow[j], c)) {
                        cols.push_back(c);
                        ++got;
                    }
                std::size_t shared1 = n;
                for (std::size_t c = 0; c < n && shared1 == n; ++c)
                    if (a(brow[i], c) && a(brow[j], c)) shared1 = c;
                cols.push_back(shared1);
                cols.push_back(jstar);
                return ExtractionOutcome::violation(
                    checked_violation(a, unordered_star(k).matrix(), {brow[i], brow[j]},
                                      std::move(cols), true));
            }
        }

    // minimal vertices, assignment along smallest in-neighbors
    std::vector<bool> minimal(t, true);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j)
            if (edge[i][j]) minimal[j] = false;
    std::vector<std::size_t> assigned(t, SIZE_MAX);
    for (std::size_t v = 0; v < t; ++v) {
        if (minimal[v]) {
            assigned[v] = v;
            continue;
        }
        for (std::size_t u = 0; u < v; ++u)
            if (edge[u][v]) {
                assigned[v] = assigned[u];
                break;
            }
    }
    std::vector<std::size_t> load(t, 0);
    for (std::size_t v = 0; v < t; ++v) ++load[assigned[v]];

    std::vector<bool> inN(t, false);
    std::size_t heavy = SIZE_MAX;
    for (std::size_t v = 0; v < t; ++v)
        if (minimal[v] && 3 * load[v] > t) {
            heavy = v;
            break;
        }
    if (heavy != SIZE_MAX) {
        inN[heavy] = true;
    } else {
        std::size_t got = 0;
        std::vector<bool> n0(t, false);
        for (std::size_t v = 0; v < t && 3 * got < t; ++v)
            if (minimal[v]) {
                n0[v] = true;
                got += load[v];
            }
        // keep whichever side of the split leaves enough untouched columns
        std::vector<std::uint64_t> un(words, 0);
        for (std::size_t v = 0; v < t; ++v)
            if (n0[v])
                for (std::size_t w = 0; w < words; ++w) un[w] |= ~H[v][w];
        if ((n & 63) != 0) un[words - 1] &= (std::uint64_t(1) << (n & 63)) - 1;
        std::size_t covered = 0;
        for (std::size_t w = 0; w < words; ++w)
            covered += static_cast<std::size_t>(std::popcount(un[w]));
        bool keep_n0 = covered <= n - t;
        for (std::size_t v = 0; v < t; ++v)
            if (minimal[v]) inN[v] = keep_n0 ? n0[v] : !n0[v];
    }

    std::vector<std::size_t> chain;
    for (std::size_t v = 0; v < t; ++v)
        if (inN[assigned[v]]) chain.push_back(v);

    std::size_t lstar = k == 1 ? t / 3 : std::min(t / (2 * (k - 1)), t / 3);
    lstar = std::min(lstar, chain.size());
    if (lstar == 0) raise(errc::degenerate_size, "chain length rounds to zero");

    std::vector<std::uint64_t> inter(words, ~std::uint64_t(0));
    if ((n & 63) != 0) inter[words - 1] = (std::uint64_t(1) << (n & 63)) - 1;
    std::vector<std::size_t> rows;
    for (std::size_t idx = 0; idx < lstar; ++idx) {
        rows.push_back(brow[chain[idx]]);
        for (std::size_t w = 0; w < words; ++w) inter[w] &= H[chain[idx]][w];
    }
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
        if ((inter[j >> 6] >> (j & 63)) & 1) cols.push_back(j);
    return ExtractionOutcome::block(checked_block(a, 0, std::move(rows), std::move(cols)));
}

ExtractionOutcome extract_theorem_graph(const ZeroOneMatrix& a, const Pattern& p) {
    require_square(a);
    std::size_t n = a.rows();
    bool zero_side = 2 * a.count(0) >= n * n;
    if (zero_side) return extract_unordered(a, p, 0.5);
    ExtractionOutcome out = extract_unordered(a.complement(), Pattern(p.matrix().complement()), 0.5);
    if (out.is_block()) {
        HomogeneousBlock b = out.block_ref();
        b.value ^= 1;
        if (!verify_block(a, b)) raise(errc::invalid_params, "internal: complement block invalid");
        return ExtractionOutcome::block(std::move(b), out.fallback());
    }
    PatternViolation v = out.violation_ref();
    v.pattern = v.pattern.complement();
    if (!verify_violation(a, v)) raise(errc::invalid_params, "internal: complement violation invalid");
    return ExtractionOutcome::violation(std::move(v));
}

namespace {

struct Sym {
    bool transp = false, flip_r = false, flip_c = false, comp = false;
};

ZeroOneMatrix apply_sym(const ZeroOneMatrix& m, const Sym& s) {
    ZeroOneMatrix x = s.transp ? m.transpose() : m;
    std::size_t r = x.rows(), c = x.cols();
    return ZeroOneMatrix::from_fn(r, c, [&](std::size_t i, std::size_t j) {
        std::size_t ii = s.flip_r ? r - 1 - i : i;
        std::size_t jj = s.flip_c ? c - 1 - j : j;
        int v = x(ii, jj);
        return (s.comp ? 1 - v : v) != 0;
    });
}

// Map a witness found in apply_sym(a, s) back into a's coordinates.
SubmatrixWitness unmap_witness(const SubmatrixWitness& w, const Sym& s, std::size_t tr,
                               std::size_t tc) {
    std::vector<std::size_t> rows = w.rows.v, cols = w.cols.v;
    if (s.flip_r)
        for (auto& x : rows) x = tr - 1 - x;
    if (s.flip_c)
        for (auto& x : cols) x = tc - 1 - x;
    if (s.transp) std::swap(rows, cols);
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    return {IndexSet(rows), IndexSet(cols)};
}

ZeroOneMatrix unmap_pattern(const ZeroOneMatrix& m, const Sym& s) {
    // inverse pipeline: complement, then flips, then transpose
    ZeroOneMatrix x = s.comp ? m.complement() : m;
    std::size_t r = x.rows(), c = x.cols();
    x = ZeroOneMatrix::from_fn(r, c, [&](std::size_t i, std::size_t j) {
        std::size_t ii = s.flip_r ? r - 1 - i : i;
        std::size_t jj = s.flip_c ? c - 1 - j : j;
        return x(ii, jj) != 0;
    });
    return s.transp ? x.transpose() : x;
}

} // namespace

ExtractionOutcome extract_theorem_2by2(const ZeroOneMatrix& a, const Pattern& p) {
    require_square(a);
    if (p.rows() != 2 || p.cols() != 2)
        raise(errc::pattern_not_covered, "needs a 2x2 pattern");
    if (p.matrix().homogeneous_value())
        raise(errc::pattern_not_covered, "homogeneous patterns force nothing");

    if (!p.has_homogeneous_column()) return extract_theorem1(a, p);
    Pattern pt(p.matrix().transpose());
    if (!pt.has_homogeneous_column()) {
        ExtractionOutcome out = extract_theorem1(a.transpose(), pt);
        std::size_t tr = a.cols(), tc = a.rows();
        Sym s;
        s.transp = true;
        if (out.is_block()) {
            HomogeneousBlock b = out.block_ref();
            b.where = unmap_witness(b.where, s, tr, tc);
            if (!verify_block(a, b)) raise(errc::invalid_params, "internal: transposed block invalid");
            return ExtractionOutcome::block(std::move(b), out.fallback());
        }
        PatternViolation v = out.violation_ref();
        v.where = unmap_witness(v.where, s, tr, tc);
        v.pattern = unmap_pattern(v.pattern, s);
        if (!verify_violation(a, v))
            raise(errc::invalid_params, "internal: transposed violation invalid");
        return ExtractionOutcome::violation(std::move(v));
    }

    // the rest are flip/complement images of the single-corner pattern;
    // complement varies fastest so that p and its complement share the
    // geometric prefix of their transform (exact complement equivariance)
    ZeroOneMatrix q1 = corner(1).matrix();
    Sym chosen;
    bool found = false;
    for (int fr = 0; fr < 2 && !found; ++fr)
        for (int fc = 0; fc < 2 && !found; ++fc)
            for (int cp = 0; cp < 2 && !found; ++cp) {
                Sym s{false, fr != 0, fc != 0, cp != 0};
                if (apply_sym(p.matrix(), s) == q1) {
                    chosen = s;
                    found = true;
                }
            }
    if (!found) raise(errc::pattern_not_covered, "2x2 pattern outside the corner family");

    ZeroOneMatrix ta = apply_sym(a, chosen);
    ExtractionOutcome out = extract_theorem2(ta);
    if (out.is_block()) {
        HomogeneousBlock b = out.block_ref();
        b.where = unmap_witness(b.where, chosen, ta.rows(), ta.cols());
        if (chosen.comp) b.value ^= 1;
        if (!verify_block(a, b)) raise(errc::invalid_params, "internal: unmapped block invalid");
        return ExtractionOutcome::block(std::move(b), out.fallback());
    }
    PatternViolation v = out.violation_ref();
    v.where = unmap_witness(v.where, chosen, ta.rows(), ta.cols());
    v.pattern = unmap_pattern(v.pattern, chosen);
    if (!verify_violation(a, v)) raise(errc::invalid_params, "internal: unmapped violation invalid");
    return ExtractionOutcome::violation(std::move(v));
}

} // namespace homog
