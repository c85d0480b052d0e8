// Bit-packed linear algebra over GF(2): matrices, vectors, rank and
// column-space membership tests. Rows are packed into 64-bit words.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cvpk::gf2 {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

    static BitVector from_string(std::string_view bits);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }

    bool any() const;
    void xor_with(const BitVector& other);
    // Index of the lowest set bit, or -1 if the vector is zero.
    int first_set() const;

    std::span<const std::uint64_t> words() const { return w_; }
    std::span<std::uint64_t> words() { return w_; }

    std::string to_string() const;
    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_(cols ? (cols + 63) / 64 : 1),
          bits_(rows * wpr_, 0) {}

    static BitMatrix from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (c & 63);
        if (v) bits_[r * wpr_ + (c >> 6)] |= m;
        else bits_[r * wpr_ + (c >> 6)] &= ~m;
    }

    BitVector row(std::size_t r) const;
    BitVector column(std::size_t c) const;

    // Retained indices keep the relative order in which they are listed.
    BitMatrix submatrix(std::span<const std::size_t> row_idx,
                        std::span<const std::size_t> col_idx) const;

    std::string row_string(std::size_t r) const;
    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 1;
    std::vector<std::uint64_t> bits_;

    friend std::size_t rank(const BitMatrix&);
    friend BitMatrix mul(const BitMatrix&, const BitMatrix&);
};

std::size_t rank(const BitMatrix& m);

BitMatrix mul(const BitMatrix& a, const BitMatrix& b);

// Incremental column-echelon form of a matrix's column space. Build once,
// then test membership of many vectors against the same matrix.
class ColumnEchelon {
public:
    explicit ColumnEchelon(std::size_t num_rows);
    explicit ColumnEchelon(const BitMatrix& m);

    // Returns true if the column enlarged the span.
    bool add_column(BitVector v);
    bool contains(const BitVector& v) const;
    std::size_t rank() const { return basis_.size(); }
    std::size_t num_rows() const { return rows_; }

private:
    std::size_t rows_;
    std::vector<BitVector> basis_;
    std::vector<int> at_row_;  // at_row_[r] = basis index with pivot r, or -1
};

// True iff v lies in the span of m's columns. Requires v.size() == m.rows().
bool column_space_contains(const BitMatrix& m, const BitVector& v);

}  // namespace cvpk::gf2
