#include "cvpk/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace cvpk::gf2 {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i, true);
        else if (bits[i] != '0') throw std::invalid_argument("BitVector: expected '0'/'1'");
    }
    return v;
}

bool BitVector::any() const {
    for (std::uint64_t w : w_)
        if (w) return true;
    return false;
}

void BitVector::xor_with(const BitVector& other) {
    if (other.len_ != len_) throw std::invalid_argument("BitVector: length mismatch");
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= other.w_[k];
}

int BitVector::first_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return int(k * 64 + std::countr_zero(w_[k]));
    return -1;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("BitMatrix: no rows");
    BitMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("BitMatrix: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (rows[r][c] == '1') m.set(r, c, true);
            else if (rows[r][c] != '0') throw std::invalid_argument("BitMatrix: expected '0'/'1'");
        }
    }
    return m;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    for (std::size_t k = 0; k < wpr_; ++k) v.words()[k] = bits_[r * wpr_ + k];
    // mask tail bits beyond cols_
    if (cols_ % 64 && !v.words().empty())
        v.words()[wpr_ - 1] &= (std::uint64_t(1) << (cols_ % 64)) - 1;
    return v;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (get(r, c)) v.set(r, true);
    return v;
}

BitMatrix BitMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
    BitMatrix m(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r) {
        if (row_idx[r] >= rows_) throw std::invalid_argument("submatrix: row out of range");
        for (std::size_t c = 0; c < col_idx.size(); ++c) {
            if (col_idx[c] >= cols_) throw std::invalid_argument("submatrix: col out of range");
            m.set(r, c, get(row_idx[r], col_idx[c]));
        }
    }
    return m;
}

std::string BitMatrix::row_string(std::size_t r) const {
    std::string s(cols_, '0');
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) s[c] = '1';
    return s;
}

std::size_t rank(const BitMatrix& m) {
    std::vector<std::uint64_t> w = m.bits_;
    const std::size_t wpr = m.wpr_;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols_ && r < m.rows_; ++c) {
        const std::size_t cw = c >> 6;
        const std::uint64_t cm = std::uint64_t(1) << (c & 63);
        std::size_t pivot = r;
        while (pivot < m.rows_ && !(w[pivot * wpr + cw] & cm)) ++pivot;
        if (pivot == m.rows_) continue;
        if (pivot != r)
            for (std::size_t k = cw; k < wpr; ++k)
                std::swap(w[r * wpr + k], w[pivot * wpr + k]);
        for (std::size_t i = pivot + 1; i < m.rows_; ++i)
            if (w[i * wpr + cw] & cm)
                for (std::size_t k = cw; k < wpr; ++k)
                    w[i * wpr + k] ^= w[r * wpr + k];
        ++r;
    }
    return r;
}

BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("mul: dimension mismatch");
    BitMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a.get(i, k))
                for (std::size_t w = 0; w < b.wpr_; ++w)
                    c.bits_[i * c.wpr_ + w] ^= b.bits_[k * b.wpr_ + w];
    return c;
}

ColumnEchelon::ColumnEchelon(std::size_t num_rows)
    : rows_(num_rows), at_row_(num_rows, -1) {}

ColumnEchelon::ColumnEchelon(const BitMatrix& m) : ColumnEchelon(m.rows()) {
    for (std::size_t c = 0; c < m.cols(); ++c) add_column(m.column(c));
}

bool ColumnEchelon::add_column(BitVector v) {
    if (v.size() != rows_) throw std::invalid_argument("ColumnEchelon: length mismatch");
    for (;;) {
        const int p = v.first_set();
        if (p < 0) return false;
        if (at_row_[p] < 0) {
            at_row_[p] = int(basis_.size());
            basis_.push_back(std::move(v));
            return true;
        }
        v.xor_with(basis_[at_row_[p]]);
    }
}

bool ColumnEchelon::contains(const BitVector& v) const {
    if (v.size() != rows_) throw std::invalid_argument("ColumnEchelon: length mismatch");
    BitVector r = v;
    for (;;) {
        const int p = r.first_set();
        if (p < 0) return true;
        if (at_row_[p] < 0) return false;
        r.xor_with(basis_[at_row_[p]]);
    }
}

bool column_space_contains(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.rows()) throw std::invalid_argument("column_space_contains: dimension mismatch");
    return ColumnEchelon(m).contains(v);
}

}  // namespace cvpk::gf2
