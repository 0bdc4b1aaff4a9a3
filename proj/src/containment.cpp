#include "homog/containment.hpp"

#include <algorithm>
#include <map>

namespace homog {

namespace {

// Advance a k-combination of [0,n) in lexicographic order; false when done.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
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

// Host column hc restricted to the chosen rows equals pattern column pc?
bool col_matches(const ZeroOneMatrix& a, const std::vector<std::size_t>& rows, std::size_t hc,
                 const ZeroOneMatrix& p, std::size_t pc) {
    for (std::size_t t = 0; t < rows.size(); ++t)
        if (a(rows[t], hc) != p(t, pc)) return false;
    return true;
}

// Column type of a host column under chosen rows, packed into a word
// (pattern heights in scope are tiny).
std::uint64_t col_type(const ZeroOneMatrix& a, const std::vector<std::size_t>& rows,
                       std::size_t hc) {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (a(rows[i], hc)) t |= std::uint64_t(1) << i;
    return t;
}

} // namespace

ContainmentResult contains_ordered(const ZeroOneMatrix& a, const ZeroOneMatrix& p) {
    if (p.empty()) raise(errc::invalid_size, "pattern must be nonempty");
    std::size_t pk = p.rows(), pl = p.cols();
    if (pk > a.rows() || pl > a.cols()) return {};

    std::vector<std::size_t> rows(pk);
    for (std::size_t i = 0; i < pk; ++i) rows[i] = i;
    do {
        std::vector<std::size_t> cols;
        cols.reserve(pl);
        std::size_t pc = 0;
        for (std::size_t hc = 0; hc < a.cols() && pc < pl; ++hc) {
            if (a.cols() - hc < pl - pc) break;
            if (col_matches(a, rows, hc, p, pc)) {
                cols.push_back(hc);
                ++pc;
            }
        }
        if (pc == pl) return {true, SubmatrixWitness{IndexSet(rows), IndexSet(cols)}};
    } while (next_combination(rows, a.rows()));
    return {};
}

ContainmentResult contains_unordered(const ZeroOneMatrix& a, const ZeroOneMatrix& p) {
    if (p.empty()) raise(errc::invalid_size, "pattern must be nonempty");
    std::size_t pk = p.rows(), pl = p.cols();
    if (pk > a.rows() || pl > a.cols()) return {};

    // Row permutations of p, each reduced to its multiset of column types.
    std::vector<std::size_t> perm(pk);
    for (std::size_t i = 0; i < pk; ++i) perm[i] = i;
    std::vector<std::map<std::uint64_t, std::size_t>> requirements;
    do {
        std::map<std::uint64_t, std::size_t> need;
        for (std::size_t j = 0; j < pl; ++j) {
            std::uint64_t t = 0;
            for (std::size_t i = 0; i < pk; ++i)
                if (p(perm[i], j)) t |= std::uint64_t(1) << i;
            ++need[t];
        }
        requirements.push_back(std::move(need));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::size_t> rows(pk);
    for (std::size_t i = 0; i < pk; ++i) rows[i] = i;
    do {
        std::optional<std::vector<std::size_t>> best;
        for (const auto& requirement : requirements) {
            auto need = requirement;
            std::size_t missing = pl;
            std::vector<std::size_t> cols;
            cols.reserve(pl);
            for (std::size_t hc = 0; hc < a.cols() && missing > 0; ++hc) {
                auto it = need.find(col_type(a, rows, hc));
                if (it != need.end() && it->second > 0) {
                    --it->second;
                    --missing;
                    cols.push_back(hc);
                }
            }
            if (missing == 0 && (!best || cols < *best)) best = std::move(cols);
        }
        if (best) return {true, SubmatrixWitness{IndexSet(rows), IndexSet(*best)}};
    } while (next_combination(rows, a.rows()));
    return {};
}

std::size_t count_ordered_copies(const ZeroOneMatrix& a, const ZeroOneMatrix& p,
                                 std::size_t cap) {
    if (p.empty()) raise(errc::invalid_size, "pattern must be nonempty");
    std::size_t pk = p.rows(), pl = p.cols();
    if (pk > a.rows() || pl > a.cols()) return 0;

    std::size_t total = 0;
    std::vector<std::size_t> rows(pk);
    for (std::size_t i = 0; i < pk; ++i) rows[i] = i;
    std::vector<std::size_t> dp(pl + 1, 0);
    do {
        // dp[t] = embeddings of the first t pattern columns, saturated at cap
        std::fill(dp.begin(), dp.end(), 0);
        dp[0] = 1;
        for (std::size_t hc = 0; hc < a.cols(); ++hc) {
            for (std::size_t t = pl; t >= 1; --t) {
                if (dp[t - 1] == 0) continue;
                if (col_matches(a, rows, hc, p, t - 1)) dp[t] = std::min(dp[t] + dp[t - 1], cap + 1);
            }
        }
        total = std::min(total + dp[pl], cap);
        if (total >= cap) return cap;
    } while (next_combination(rows, a.rows()));
    return total;
}

std::vector<SubmatrixWitness> enumerate_ordered_copies(const ZeroOneMatrix& a,
                                                       const ZeroOneMatrix& p, std::size_t cap) {
    if (p.empty()) raise(errc::invalid_size, "pattern must be nonempty");
    std::vector<SubmatrixWitness> out;
    std::size_t pk = p.rows(), pl = p.cols();
    if (pk > a.rows() || pl > a.cols() || cap == 0) return out;

    std::vector<std::size_t> rows(pk);
    for (std::size_t i = 0; i < pk; ++i) rows[i] = i;
    std::vector<std::size_t> cols;
    do {
        cols.clear();
        auto emit = [&](auto&& self, std::size_t pc, std::size_t from) -> bool {
            if (pc == pl) {
                out.push_back({IndexSet(rows), IndexSet(cols)});
                return out.size() >= cap;
            }
            for (std::size_t hc = from; hc + (pl - pc) <= a.cols(); ++hc) {
                if (!col_matches(a, rows, hc, p, pc)) continue;
                cols.push_back(hc);
                bool full = self(self, pc + 1, hc + 1);
                cols.pop_back();
                if (full) return true;
            }
            return false;
        };
        if (emit(emit, 0, 0)) return out;
    } while (next_combination(rows, a.rows()));
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> find_p2_row_pairs(const ZeroOneMatrix& a) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t q = r + 1; q < a.rows(); ++q) {
            bool seen10 = false, seen01 = false, hit = false;
            for (std::size_t c = 0; c < a.cols() && !hit; ++c) {
                int top = a(r, c), bot = a(q, c);
                if (top == 1 && bot == 0) {
                    if (seen01) hit = true;
                    seen10 = true;
                } else if (top == 0 && bot == 1) {
                    if (seen10) hit = true;
                    seen01 = true;
                }
            }
            if (hit) pairs.emplace_back(r, q);
        }
    }
    return pairs;
}

bool is_gamma_free(const ZeroOneMatrix& a) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t q = r + 1; q < a.rows(); ++q) {
            bool seen11 = false;
            for (std::size_t c = 0; c < a.cols(); ++c) {
                int top = a(r, c), bot = a(q, c);
                if (top == 1 && bot == 1) seen11 = true;
                else if (top == 1 && bot == 0 && seen11) return false;
            }
        }
    }
    return true;
}

} // namespace homog
