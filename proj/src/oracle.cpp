#include "homog/oracle.hpp"

#include "homog/patterns.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace homog {
namespace oracle {

namespace {

std::size_t popcount_words(const std::vector<std::uint64_t>& w) {
    std::size_t n = 0;
    for (std::uint64_t x : w) n += static_cast<std::size_t>(std::popcount(x));
    return n;
}

// Row masks of the entries equal to `value`, padded bits cleared.
std::vector<std::vector<std::uint64_t>> value_masks(const ZeroOneMatrix& a, int value) {
    std::size_t wpr = a.words_per_row();
    std::vector<std::vector<std::uint64_t>> rows(a.rows(), std::vector<std::uint64_t>(wpr, 0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const std::uint64_t* w = a.row_words(i);
        for (std::size_t k = 0; k < wpr; ++k) rows[i][k] = w[k];
        if (value == 0) {
            for (std::size_t k = 0; k < wpr; ++k) rows[i][k] = ~rows[i][k];
            if ((a.cols() & 63) != 0)
                rows[i][wpr - 1] &= (std::uint64_t(1) << (a.cols() & 63)) - 1;
        }
    }
    return rows;
}

std::vector<std::size_t> first_set_bits(const std::vector<std::uint64_t>& mask, std::size_t k) {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < mask.size() && out.size() < k; ++w) {
        std::uint64_t x = mask[w];
        while (x && out.size() < k) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

struct SquareSearch {
    const std::vector<std::vector<std::uint64_t>>& rows;
    std::size_t n_rows, wpr;
    std::uint64_t nodes = 0, budget;
    bool exhausted = false;

    std::size_t best = 0;
    std::vector<std::size_t> best_rows;
    std::vector<std::uint64_t> best_mask;

    std::vector<std::size_t> chosen;

    SquareSearch(const std::vector<std::vector<std::uint64_t>>& r, std::size_t wpr_,
                 std::uint64_t budget_)
        : rows(r), n_rows(r.size()), wpr(wpr_), budget(budget_) {}

    void dfs(std::size_t next, std::vector<std::uint64_t> mask) {
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        std::size_t pop = popcount_words(mask);
        std::size_t cand = std::min(chosen.size(), pop);
        if (cand > best) {
            best = cand;
            best_rows.assign(chosen.begin(), chosen.begin() + cand);
            best_mask = mask;
        }
        if (next >= n_rows || exhausted) return;
        // upper bound: rows we can still reach vs columns still shared
        if (std::min(chosen.size() + (n_rows - next), pop) <= best) return;
        for (std::size_t r = next; r < n_rows; ++r) {
            // the row-count term only shrinks with r, so this cut is final
            if (std::min(chosen.size() + 1 + (n_rows - r - 1), pop) <= best) break;
            std::vector<std::uint64_t> m2(wpr);
            std::size_t p2 = 0;
            for (std::size_t w = 0; w < wpr; ++w) {
                m2[w] = mask[w] & rows[r][w];
                p2 += static_cast<std::size_t>(std::popcount(m2[w]));
            }
            if (std::min(chosen.size() + 1 + (n_rows - r - 1), p2) <= best) continue;
            chosen.push_back(r);
            dfs(r + 1, std::move(m2));
            chosen.pop_back();
            if (exhausted) return;
        }
    }

    // lexicographically first row set of size `target` whose mask keeps >= target columns
    bool lex_first(std::size_t next, std::vector<std::uint64_t> mask, std::size_t target) {
        if (popcount_words(mask) < target) return false;
        if (chosen.size() == target) {
            best_rows = chosen;
            best_mask = std::move(mask);
            return true;
        }
        for (std::size_t r = next; r + (target - chosen.size()) <= n_rows; ++r) {
            std::vector<std::uint64_t> m2(wpr);
            for (std::size_t w = 0; w < wpr; ++w) m2[w] = mask[w] & rows[r][w];
            chosen.push_back(r);
            if (lex_first(r + 1, std::move(m2), target)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

SquareResult max_homogeneous_square(const ZeroOneMatrix& a, int value, const Limits& lim,
                                    bool force) {
    if (a.empty()) return {0, {}, value, true};
    std::size_t n = std::max(a.rows(), a.cols());
    bool heuristic = n > lim.max_square_n;
    if (heuristic && !force)
        raise(errc::size_limit_exceeded,
              "exact homogeneous-square search limited to n <= " +
                  std::to_string(lim.max_square_n) + " (pass force for heuristic)");

    auto rows = value_masks(a, value);
    std::size_t wpr = a.words_per_row();

    if (heuristic) {
        // greedy: seed from each row in zero/one-count order, grow while the
        // shared column mask stays at least as large as the row set
        std::vector<std::size_t> order(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return popcount_words(rows[x]) > popcount_words(rows[y]);
        });
        std::size_t best = 0;
        std::vector<std::size_t> best_rows;
        std::vector<std::uint64_t> best_mask;
        for (std::size_t s = 0; s < order.size(); ++s) {
            std::vector<std::uint64_t> mask = rows[order[s]];
            std::vector<std::size_t> sel{order[s]};
            std::size_t score = std::min<std::size_t>(1, popcount_words(mask));
            for (std::size_t t = 0; t < order.size(); ++t) {
                if (t == s) continue;
                std::vector<std::uint64_t> m2(wpr);
                for (std::size_t w = 0; w < wpr; ++w) m2[w] = mask[w] & rows[order[t]][w];
                std::size_t p2 = popcount_words(m2);
                if (std::min(sel.size() + 1, p2) >= std::min(sel.size(), popcount_words(mask)) &&
                    p2 >= sel.size() + 1) {
                    mask = std::move(m2);
                    sel.push_back(order[t]);
                    score = std::min(sel.size(), p2);
                }
            }
            if (score > best) {
                best = score;
                best_rows = sel;
                best_mask = mask;
            }
        }
        if (best == 0) return {0, {}, value, false};
        std::sort(best_rows.begin(), best_rows.end());
        best_rows.resize(best);
        auto cols = first_set_bits(best_mask, best);
        return {best, SubmatrixWitness{IndexSet(best_rows), IndexSet(cols)}, value, false};
    }

    SquareSearch search(rows, wpr, lim.node_budget);
    ZeroOneMatrix full_mask(1, a.cols(), 1);
    std::vector<std::uint64_t> all(full_mask.row_words(0), full_mask.row_words(0) + wpr);
    search.dfs(0, all);
    std::size_t s = std::min(search.best, std::min(a.rows(), a.cols()));
    if (s == 0) return {0, {}, value, !search.exhausted};
    // second pass for the lexicographically smallest witness
    search.chosen.clear();
    search.lex_first(0, all, s);
    auto cols = first_set_bits(search.best_mask, s);
    return {s, SubmatrixWitness{IndexSet(search.best_rows), IndexSet(cols)}, value,
            !search.exhausted};
}

namespace {

struct BicliqueSearch {
    const std::vector<std::vector<std::uint64_t>>& adj;
    std::size_t n, wpr;
    std::uint64_t nodes = 0, budget;
    bool exhausted = false;
    std::vector<std::size_t> s_out, t_out;
    std::vector<std::size_t> chosen;

    bool decide(std::size_t next, std::vector<std::uint64_t> common, std::size_t m) {
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        if (chosen.size() == m) {
            // common \ chosen supplies T; any m of them work
            std::vector<std::uint64_t> avail = common;
            for (std::size_t v : chosen) avail[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
            if (popcount_words(avail) >= m) {
                s_out = chosen;
                t_out = first_set_bits(avail, m);
                return true;
            }
            return false;
        }
        std::size_t need = m - chosen.size();
        for (std::size_t v = next; v + need <= n; ++v) {
            std::vector<std::uint64_t> c2(wpr);
            std::size_t pop = 0;
            for (std::size_t w = 0; w < wpr; ++w) {
                c2[w] = common[w] & adj[v][w];
                pop += static_cast<std::size_t>(std::popcount(c2[w]));
            }
            if (pop < m) continue; // T must still fit (chosen never counts: see below)
            chosen.push_back(v);
            bool ok = decide(v + 1, std::move(c2), m);
            chosen.pop_back();
            if (ok || exhausted) return ok;
        }
        return false;
    }
};

} // namespace

BicliqueResult max_balanced_biclique(const ZeroOneMatrix& adj, const Limits& lim) {
    if (adj.rows() != adj.cols()) raise(errc::invalid_params, "adjacency matrix must be square");
    std::size_t n = adj.rows();
    auto rows = value_masks(adj, 1);
    std::size_t wpr = adj.words_per_row();
    // ignore self-loops
    for (std::size_t v = 0; v < n; ++v) rows[v][v >> 6] &= ~(std::uint64_t(1) << (v & 63));

    if (n <= lim.biclique_n) {
        BicliqueSearch search{rows, n, wpr, 0, lim.node_budget, false, {}, {}, {}};
        BicliqueResult best;
        for (std::size_t m = 1; 2 * m <= n; ++m) {
            std::vector<std::uint64_t> all((wpr), ~std::uint64_t(0));
            if ((n & 63) != 0) all[wpr - 1] = (std::uint64_t(1) << (n & 63)) - 1;
            search.chosen.clear();
            if (!search.decide(0, all, m)) break;
            best.s = search.s_out;
            best.t = search.t_out;
        }
        best.exact = !search.exhausted;
        if (search.exhausted) {
            best.s.clear();
            best.t.clear();
        } else {
            return best;
        }
    }

    // greedy with pairwise seeds, deterministic order
    BicliqueResult best;
    best.exact = false;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v : first_set_bits(rows[u], n)) {
            if (v <= u) continue;
            std::vector<std::size_t> S{u}, T{v};
            std::vector<std::uint64_t> commonS = rows[u]; // candidates for T
            std::vector<std::uint64_t> commonT = rows[v]; // candidates for S
            bool grew = true;
            while (grew) {
                grew = false;
                // grow the smaller side first to keep the pair balanced
                bool grow_t = T.size() <= S.size();
                for (int attempt = 0; attempt < 2 && !grew; ++attempt, grow_t = !grow_t) {
                    auto& common = grow_t ? commonS : commonT;
                    auto& side = grow_t ? T : S;
                    auto& other_common = grow_t ? commonT : commonS;
                    for (std::size_t w : first_set_bits(common, n)) {
                        bool used = std::find(S.begin(), S.end(), w) != S.end() ||
                                    std::find(T.begin(), T.end(), w) != T.end();
                        if (used) continue;
                        side.push_back(w);
                        for (std::size_t k = 0; k < wpr; ++k) other_common[k] &= rows[w][k];
                        grew = true;
                        break;
                    }
                }
            }
            std::size_t m = std::min(S.size(), T.size());
            if (m > std::min(best.s.size(), best.t.size())) {
                std::sort(S.begin(), S.end());
                std::sort(T.begin(), T.end());
                S.resize(m);
                T.resize(m);
                best.s = S;
                best.t = T;
            }
        }
    }
    return best;
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

} // namespace

ContainmentResult oracle_contains(const ZeroOneMatrix& a, const ZeroOneMatrix& p, bool unordered,
                                  std::uint64_t budget) {
    if (p.empty()) raise(errc::invalid_size, "pattern must be nonempty");
    std::size_t pk = p.rows(), pl = p.cols();
    if (pk > a.rows() || pl > a.cols()) return {};

    double perms = 1;
    if (unordered) {
        for (std::size_t i = 2; i <= pk; ++i) perms *= double(i);
        for (std::size_t i = 2; i <= pl; ++i) perms *= double(i);
    }
    double work = choose_count(a.rows(), pk) * choose_count(a.cols(), pl) * perms *
                  double(pk * pl);
    if (work > double(budget))
        raise(errc::size_limit_exceeded, "oracle containment budget exceeded");

    std::vector<std::size_t> rows(pk), cols(pl);
    std::vector<std::size_t> rperm(pk), cperm(pl);
    for (std::size_t i = 0; i < pk; ++i) rows[i] = i;
    do {
        for (std::size_t j = 0; j < pl; ++j) cols[j] = j;
        do {
            if (!unordered) {
                bool ok = true;
                for (std::size_t i = 0; i < pk && ok; ++i)
                    for (std::size_t j = 0; j < pl && ok; ++j)
                        if (a(rows[i], cols[j]) != p(i, j)) ok = false;
                if (ok) return {true, SubmatrixWitness{IndexSet(rows), IndexSet(cols)}};
            } else {
                for (std::size_t i = 0; i < pk; ++i) rperm[i] = i;
                bool found = false;
                do {
                    for (std::size_t j = 0; j < pl; ++j) cperm[j] = j;
                    do {
                        bool ok = true;
                        for (std::size_t i = 0; i < pk && ok; ++i)
                            for (std::size_t j = 0; j < pl && ok; ++j)
                                if (a(rows[rperm[i]], cols[cperm[j]]) != p(i, j)) ok = false;
                        if (ok) found = true;
                    } while (!found && std::next_permutation(cperm.begin(), cperm.end()));
                } while (!found && std::next_permutation(rperm.begin(), rperm.end()));
                if (found) return {true, SubmatrixWitness{IndexSet(rows), IndexSet(cols)}};
            }
        } while (next_subset(cols, a.cols()));
    } while (next_subset(rows, a.rows()));
    return {};
}

namespace {

std::size_t zeros_threshold(double eps, std::size_t n) {
    return static_cast<std::size_t>(std::ceil(eps * double(n) * double(n) - 1e-9));
}

} // namespace

GoodnessReport goodness_estimate(const ZeroOneMatrix& p, const std::string& pattern_id,
                                 double eps, std::size_t n, GoodnessMode mode,
                                 std::size_t samples, std::uint64_t seed, bool allow_large) {
    GoodnessReport rep;
    rep.pattern_id = pattern_id;
    rep.eps = eps;
    rep.n = n;
    rep.mode = mode;
    std::size_t need_zeros = zeros_threshold(eps, n);
    Limits lim;

    if (mode == GoodnessMode::exhaustive) {
        if (n > 5 || (n == 5 && !allow_large))
            raise(errc::size_limit_exceeded, "exhaustive goodness limited to n <= 4 "
                                             "(n == 5 with explicit override)");
        std::size_t cells = n * n;
        std::uint64_t total = std::uint64_t(1) << cells;
        std::size_t qualifying = 0;
        std::size_t best = n + 1;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if (cells - std::popcount(mask) < need_zeros) continue;
            auto a = ZeroOneMatrix::from_fn(
                n, n, [&](std::size_t i, std::size_t j) { return (mask >> (i * n + j)) & 1; });
            if (oracle_contains(a, p, false).found) continue;
            ++qualifying;
            std::size_t sq = max_homogeneous_square(a, 0, lim).size;
            if (sq < best) best = sq;
        }
        if (qualifying == 0)
            raise(errc::no_qualifying_matrix,
                  "no " + pattern_id + "-free matrix with the requested zero density at n = " +
                      std::to_string(n));
        rep.samples = qualifying;
        rep.min_max_all0 = best;
        rep.realized_delta = double(best) / double(n);
        return rep;
    }

    // sampled mode: rejection with greedy repair, then local bit-flip descent
    if (n > lim.max_square_n)
        raise(errc::size_limit_exceeded, "sampled goodness limited by the exact square search");
    std::mt19937_64 rng(seed ^ 0x600d7e55u);
    std::size_t best = n + 1;
    std::size_t produced = 0;
    double p0 = std::max(eps, 0.5);
    for (std::size_t s = 0; s < samples; ++s) {
        auto a = ZeroOneMatrix::from_fn(n, n, [&](std::size_t, std::size_t) {
            return std::uniform_real_distribution<double>(0, 1)(rng) > p0;
        });
        bool ok = true;
        for (int rounds = 0; rounds < 4 * int(n * n); ++rounds) {
            if (a.count(0) < need_zeros) {
                // flip a random 1 to 0
                std::vector<std::pair<std::size_t, std::size_t>> ones;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (a(i, j)) ones.emplace_back(i, j);
                if (ones.empty()) break;
                auto [i, j] = ones[rng() % ones.size()];
                a = ZeroOneMatrix::from_fn(n, n, [&, i = i, j = j](std::size_t x, std::size_t y) {
                    return (x == i && y == j) ? false : a(x, y) != 0;
                });
                continue;
            }
            auto hit = oracle_contains(a, p, false);
            if (!hit.found) break;
            // break the copy at a random 1-entry of the witness
            const auto& w = *hit.witness;
            std::vector<std::pair<std::size_t, std::size_t>> cand;
            for (std::size_t i : w.rows.v)
                for (std::size_t j : w.cols.v)
                    if (a(i, j)) cand.emplace_back(i, j);
            if (cand.empty()) {
                ok = false;
                break;
            }
            auto [i, j] = cand[rng() % cand.size()];
            a = ZeroOneMatrix::from_fn(n, n, [&, i = i, j = j](std::size_t x, std::size_t y) {
                return (x == i && y == j) ? false : a(x, y) != 0;
            });
        }
        if (!ok || a.count(0) < need_zeros || oracle_contains(a, p, false).found) continue;
        ++produced;
        std::size_t sq = max_homogeneous_square(a, 0, lim).size;
        // local search: accept flips that keep qualification and shrink the square
        for (std::size_t step = 0; step < 8 * n * n && sq > 1; ++step) {
            std::size_t i = rng() % n, j = rng() % n;
            auto b = ZeroOneMatrix::from_fn(n, n, [&](std::size_t x, std::size_t y) {
                bool v = a(x, y) != 0;
                return (x == i && y == j) ? !v : v;
            });
            if (b.count(0) < need_zeros || oracle_contains(b, p, false).found) continue;
            std::size_t sq2 = max_homogeneous_square(b, 0, lim).size;
            if (sq2 <= sq) {
                a = b;
                sq = sq2;
            }
        }
        best = std::min(best, sq);
    }
    if (produced == 0)
        raise(errc::no_qualifying_matrix, "sampling produced no qualifying matrix");
    rep.samples = produced;
    rep.min_max_all0 = best;
    rep.realized_delta = double(best) / double(n);
    return rep;
}

std::vector<ZeroOneMatrix> enumerate_simple(std::size_t k, std::size_t l) {
    if (k == 0 || l == 0 || k > 5 || l > 5)
        raise(errc::size_limit_exceeded, "simple enumeration limited to 1 <= k,l <= 5");
    std::vector<ZeroOneMatrix> out;
    std::size_t cells = k * l;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << cells); ++mask) {
        auto m = ZeroOneMatrix::from_fn(
            k, l, [&](std::size_t i, std::size_t j) { return (mask >> (i * l + j)) & 1; });
        if (is_simple(m)) out.push_back(std::move(m));
    }
    return out;
}

} // namespace oracle
} // namespace homog
