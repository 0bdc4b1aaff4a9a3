#pragma once

// Dense 0-1 matrices packed 64 entries per word, plus the index-set and
// witness types used to locate submatrices. Values are immutable after
// construction; every transformation returns a new matrix.

#include "homog/error.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homog {

struct IndexSet {
    std::vector<std::size_t> v; // strictly increasing

    IndexSet() = default;
    explicit IndexSet(std::vector<std::size_t> idx);

    static IndexSet full(std::size_t n);

    std::size_t size() const { return v.size(); }
    bool empty() const { return v.empty(); }
    std::size_t operator[](std::size_t i) const { return v[i]; }

    bool operator==(const IndexSet&) const = default;
};

struct SubmatrixWitness {
    IndexSet rows;
    IndexSet cols;

    bool operator==(const SubmatrixWitness&) const = default;
};

class ZeroOneMatrix {
public:
    ZeroOneMatrix() = default; // 0x0, the explicit empty matrix
    ZeroOneMatrix(std::size_t rows, std::size_t cols, int fill = 0);

    static ZeroOneMatrix from_rows(const std::vector<std::vector<int>>& data);

    template <class Fn>
    static ZeroOneMatrix from_fn(std::size_t rows, std::size_t cols, Fn&& fn) {
        ZeroOneMatrix m(rows, cols, 0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (fn(i, j)) m.set_bit(i, j);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    int operator()(std::size_t i, std::size_t j) const {
        return static_cast<int>((bits_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u);
    }
    int at(std::size_t i, std::size_t j) const;

    std::size_t words_per_row() const { return wpr_; }
    // Row i as packed words; bits beyond cols() are always zero.
    const std::uint64_t* row_words(std::size_t i) const { return bits_.data() + i * wpr_; }

    ZeroOneMatrix complement() const;
    ZeroOneMatrix transpose() const;
    std::size_t count(int value) const;

    // 0 or 1 if every entry equals that bit, nullopt otherwise; empty_matrix error on empty.
    std::optional<int> homogeneous_value() const;

    bool operator==(const ZeroOneMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }

private:
    void set_bit(std::size_t i, std::size_t j) {
        bits_[i * wpr_ + (j >> 6)] |= std::uint64_t(1) << (j & 63);
    }

    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Submatrix in the intersection of the given rows and columns; empty index
// sets yield an empty matrix.
ZeroOneMatrix slice(const ZeroOneMatrix& a, const IndexSet& rows, const IndexSet& cols);
ZeroOneMatrix slice(const ZeroOneMatrix& a, const SubmatrixWitness& w);

// Text format: header "R C", then R lines of exactly C characters from {0,1}.
ZeroOneMatrix parse_matrix(std::string_view text);
std::string emit_matrix(const ZeroOneMatrix& a);

} // namespace homog
