#include "homog/patterns.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace homog {

namespace {

bool has_hom_col(const ZeroOneMatrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool all0 = true, all1 = true;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (m(i, j)) all0 = false;
            else all1 = false;
        }
        if (all0 || all1) return true;
    }
    return false;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // false if x and y were already connected
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

} // namespace

Pattern::Pattern(ZeroOneMatrix m) : m_(std::move(m)) {
    if (m_.empty()) raise(errc::invalid_size, "pattern must be nonempty");
    acyclic_ = is_acyclic(m_);
    comp_acyclic_ = is_acyclic(m_.complement());
    hom_col_ = has_hom_col(m_);
    hom_row_ = has_hom_col(m_.transpose());
}

Pattern checkerboard(std::size_t k) {
    if (k == 0) raise(errc::invalid_size, "checkerboard needs k >= 1");
    return Pattern(ZeroOneMatrix::from_fn(
        2, k, [](std::size_t i, std::size_t j) { return ((i + 1) + (j + 1)) % 2 == 0; }));
}

Pattern corner(std::size_t k) {
    if (k == 0) raise(errc::invalid_size, "corner needs k >= 1");
    return Pattern(ZeroOneMatrix::from_fn(
        2, k + 1, [k](std::size_t i, std::size_t j) { return i == 0 && j < k; }));
}

Pattern gamma() {
    return Pattern(ZeroOneMatrix::from_rows({{1, 1}, {1, 0}}));
}

Pattern identity_concat(std::size_t k, std::size_t l) {
    if (k == 0 || l == 0) raise(errc::invalid_size, "identity_concat needs k,l >= 1");
    return Pattern(ZeroOneMatrix::from_fn(
        k, k * l, [k](std::size_t i, std::size_t j) { return j % k == i; }));
}

Pattern unordered_star(std::size_t k) {
    if (k == 0) raise(errc::invalid_size, "unordered_star needs k >= 1");
    return Pattern(ZeroOneMatrix::from_fn(2, 2 * k + 2, [k](std::size_t i, std::size_t j) {
        if (j < k) return i == 0;
        if (j < 2 * k) return i == 1;
        return j == 2 * k; // the (1,1) column, then the trailing (0,0) column
    }));
}

bool is_acyclic(const ZeroOneMatrix& p) {
    UnionFind uf(p.rows() + p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j)
            if (p(i, j) && !uf.unite(i, p.rows() + j)) return false;
    return true;
}

bool is_acyclic_peeling(const ZeroOneMatrix& p) {
    std::size_t r = p.rows(), c = p.cols();
    std::vector<std::size_t> rowc(r, 0), colc(c, 0);
    std::vector<bool> rdel(r, false), cdel(c, false);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (p(i, j)) {
                ++rowc[i];
                ++colc[j];
            }
    bool changed = true;
    std::size_t left_r = r, left_c = c;
    while (changed && left_r > 0 && left_c > 0) {
        changed = false;
        for (std::size_t i = 0; i < r; ++i) {
            if (rdel[i] || rowc[i] > 1) continue;
            rdel[i] = true;
            --left_r;
            changed = true;
            for (std::size_t j = 0; j < c; ++j)
                if (!cdel[j] && p(i, j)) --colc[j];
        }
        for (std::size_t j = 0; j < c; ++j) {
            if (cdel[j] || colc[j] > 1) continue;
            cdel[j] = true;
            --left_c;
            changed = true;
            for (std::size_t i = 0; i < r; ++i)
                if (!rdel[i] && p(i, j)) --rowc[i];
        }
    }
    return left_r == 0 || left_c == 0;
}

bool is_simple(const ZeroOneMatrix& p) {
    return is_acyclic(p) && is_acyclic(p.complement());
}

bool simple_dimension_bound_holds(std::size_t k, std::size_t l) {
    // (k-2)(l-2) <= 2 with signed arithmetic; k,l >= 1 in practice
    long long a = static_cast<long long>(k) - 2;
    long long b = static_cast<long long>(l) - 2;
    return a * b <= 2;
}

ZeroOneMatrix cyclic_core(const ZeroOneMatrix& p) {
    std::size_t r = p.rows(), c = p.cols();
    std::vector<std::size_t> rowc(r, 0), colc(c, 0);
    std::vector<bool> rdel(r, false), cdel(c, false);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (p(i, j)) {
                ++rowc[i];
                ++colc[j];
            }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < r; ++i)
            if (!rdel[i] && rowc[i] <= 1) {
                rdel[i] = true;
                changed = true;
                for (std::size_t j = 0; j < c; ++j)
                    if (!cdel[j] && p(i, j)) --colc[j];
            }
        for (std::size_t j = 0; j < c; ++j)
            if (!cdel[j] && colc[j] <= 1) {
                cdel[j] = true;
                changed = true;
                for (std::size_t i = 0; i < r; ++i)
                    if (!rdel[i] && p(i, j)) --rowc[i];
            }
    }
    std::vector<std::size_t> rk, ck;
    for (std::size_t i = 0; i < r; ++i)
        if (!rdel[i]) rk.push_back(i);
    for (std::size_t j = 0; j < c; ++j)
        if (!cdel[j]) ck.push_back(j);
    if (rk.empty() || ck.empty()) return ZeroOneMatrix();
    return slice(p, IndexSet(rk), IndexSet(ck));
}

namespace {

std::size_t parse_count(const std::string& s, const std::string& what) {
    std::size_t value = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || value == 0)
        raise(errc::invalid_params, "bad " + what + " in pattern spec '" + s + "'");
    return value;
}

} // namespace

Pattern parse_pattern_spec(const std::string& spec) {
    if (spec == "gamma") return gamma();
    if (spec.rfind("P2k:", 0) == 0) return checkerboard(parse_count(spec.substr(4), "width"));
    if (spec.rfind("Qk:", 0) == 0) return corner(parse_count(spec.substr(3), "k"));
    if (spec.rfind("S:", 0) == 0) return unordered_star(parse_count(spec.substr(2), "k"));
    if (spec.rfind("R:", 0) == 0) {
        std::string body = spec.substr(2);
        auto x = body.find('x');
        if (x == std::string::npos)
            raise(errc::invalid_params, "identity-concat spec needs KxL, got '" + spec + "'");
        return identity_concat(parse_count(body.substr(0, x), "k"),
                               parse_count(body.substr(x + 1), "l"));
    }
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) raise(errc::invalid_params, "cannot open pattern file '" + spec.substr(1) + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return Pattern(parse_matrix(buf.str()));
    }
    raise(errc::invalid_params, "unknown pattern spec '" + spec + "'");
}

} // namespace homog
