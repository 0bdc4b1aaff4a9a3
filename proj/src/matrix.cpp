#include "homog/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace homog {

const char* errc_name(errc k) {
    switch (k) {
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::empty_matrix: return "EmptyMatrix";
        case errc::format_error: return "FormatError";
        case errc::invalid_size: return "InvalidSize";
        case errc::invalid_params: return "InvalidParams";
        case errc::precondition_failed: return "PreconditionFailed";
        case errc::degenerate_size: return "DegenerateSize";
        case errc::pattern_not_covered: return "PatternNotCovered";
        case errc::pattern_acyclic: return "PatternAcyclic";
        case errc::retries_exhausted: return "RetriesExhausted";
        case errc::size_limit_exceeded: return "SizeLimitExceeded";
        case errc::indivisible_size: return "IndivisibleSize";
        case errc::not_totally_balanced: return "NotTotallyBalanced";
        case errc::not_chordal_bipartite: return "NotChordalBipartite";
        case errc::nice_tuple_not_found: return "NiceTupleNotFound";
        case errc::no_qualifying_matrix: return "NoQualifyingMatrix";
        case errc::ordering_not_found: return "OrderingNotFound";
        case errc::invalid_suite: return "InvalidSuite";
    }
    return "UnknownError";
}

IndexSet::IndexSet(std::vector<std::size_t> idx) : v(std::move(idx)) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i])
            raise(errc::invalid_params, "index set must be strictly increasing");
}

IndexSet IndexSet::full(std::size_t n) {
    IndexSet s;
    s.v.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.v[i] = i;
    return s;
}

ZeroOneMatrix::ZeroOneMatrix(std::size_t rows, std::size_t cols, int fill)
    : rows_(rows), cols_(cols), wpr_((cols + 63) >> 6), bits_(rows * wpr_, 0) {
    if (fill) {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t w = 0; w < wpr_; ++w) bits_[i * wpr_ + w] = ~std::uint64_t(0);
        // clear padding past the last column
        if (wpr_ > 0 && (cols_ & 63) != 0) {
            std::uint64_t tail = (std::uint64_t(1) << (cols_ & 63)) - 1;
            for (std::size_t i = 0; i < rows_; ++i) bits_[i * wpr_ + wpr_ - 1] &= tail;
        }
    }
}

ZeroOneMatrix ZeroOneMatrix::from_rows(const std::vector<std::vector<int>>& data) {
    std::size_t r = data.size();
    std::size_t c = r ? data[0].size() : 0;
    for (const auto& row : data)
        if (row.size() != c) raise(errc::invalid_params, "ragged row data");
    return from_fn(r, c, [&](std::size_t i, std::size_t j) { return data[i][j] != 0; });
}

int ZeroOneMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) raise(errc::index_out_of_range, "matrix access out of range");
    return (*this)(i, j);
}

ZeroOneMatrix ZeroOneMatrix::complement() const {
    ZeroOneMatrix m(rows_, cols_, 1);
    for (std::size_t w = 0; w < bits_.size(); ++w) m.bits_[w] &= ~bits_[w];
    return m;
}

ZeroOneMatrix ZeroOneMatrix::transpose() const {
    ZeroOneMatrix m(cols_, rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j)) m.set_bit(j, i);
    return m;
}

std::size_t ZeroOneMatrix::count(int value) const {
    std::size_t ones = 0;
    for (std::uint64_t w : bits_) ones += static_cast<std::size_t>(std::popcount(w));
    return value ? ones : rows_ * cols_ - ones;
}

std::optional<int> ZeroOneMatrix::homogeneous_value() const {
    if (empty()) raise(errc::empty_matrix, "homogeneous_value of empty matrix");
    std::size_t ones = count(1);
    if (ones == 0) return 0;
    if (ones == rows_ * cols_) return 1;
    return std::nullopt;
}

ZeroOneMatrix slice(const ZeroOneMatrix& a, const IndexSet& rows, const IndexSet& cols) {
    for (std::size_t r : rows.v)
        if (r >= a.rows()) raise(errc::index_out_of_range, "row index " + std::to_string(r));
    for (std::size_t c : cols.v)
        if (c >= a.cols()) raise(errc::index_out_of_range, "col index " + std::to_string(c));
    return ZeroOneMatrix::from_fn(rows.size(), cols.size(), [&](std::size_t i, std::size_t j) {
        return a(rows[i], cols[j]) != 0;
    });
}

ZeroOneMatrix slice(const ZeroOneMatrix& a, const SubmatrixWitness& w) {
    return slice(a, w.rows, w.cols);
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    [[noreturn]] void fail(const std::string& what) const {
        raise(errc::format_error,
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
    }
};

std::size_t parse_dim(Cursor& cur, const char* name) {
    cur.skip_ws();
    if (cur.done()) cur.fail(std::string("missing ") + name);
    std::size_t start = cur.pos;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.advance();
    if (cur.pos == start) cur.fail(std::string("expected number for ") + name);
    std::size_t value = 0;
    auto sv = cur.text.substr(start, cur.pos - start);
    auto res = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (res.ec != std::errc{}) cur.fail(std::string("bad number for ") + name);
    return value;
}

} // namespace

ZeroOneMatrix parse_matrix(std::string_view text) {
    Cursor cur{text};
    std::size_t r = parse_dim(cur, "row count");
    std::size_t c = parse_dim(cur, "column count");
    if (r == 0 || c == 0) cur.fail("dimensions must be at least 1");

    std::vector<std::vector<int>> data(r, std::vector<int>(c, 0));
    for (std::size_t i = 0; i < r; ++i) {
        cur.skip_ws();
        for (std::size_t j = 0; j < c; ++j) {
            if (cur.done()) cur.fail("row " + std::to_string(i + 1) + " is truncated");
            char ch = cur.peek();
            if (ch == '0' || ch == '1') {
                data[i][j] = ch - '0';
                cur.advance();
            } else if (ch == '\n' || ch == '\r') {
                cur.fail("row " + std::to_string(i + 1) + " has length " + std::to_string(j) +
                         ", expected " + std::to_string(c));
            } else {
                cur.fail(std::string("invalid character '") + ch + "'");
            }
        }
        if (!cur.done() && cur.peek() != '\n' && cur.peek() != '\r' &&
            !std::isspace(static_cast<unsigned char>(cur.peek()))) {
            if (cur.peek() == '0' || cur.peek() == '1')
                cur.fail("row " + std::to_string(i + 1) + " is longer than " + std::to_string(c));
            cur.fail(std::string("invalid character '") + cur.peek() + "'");
        }
    }
    cur.skip_ws();
    if (!cur.done()) cur.fail("trailing content after matrix body");
    return ZeroOneMatrix::from_rows(data);
}

std::string emit_matrix(const ZeroOneMatrix& a) {
    std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    out.reserve(out.size() + a.rows() * (a.cols() + 1));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

} // namespace homog
