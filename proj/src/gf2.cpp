#include "cwskit/gf2.hpp"

#include <algorithm>

namespace cwskit {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const char c = bits[i];
        if (c == '1')
            v.set(i);
        else if (c != '0')
            throw ParseError("bit string may contain only '0' and '1'");
    }
    return v;
}

BitVector BitVector::from_word(std::uint64_t bits, std::size_t len) {
    if (len > 64) throw DimensionError("from_word supports at most 64 bits");
    BitVector v(len);
    if (len > 0) {
        const std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
        v.words_[0] = bits & mask;
    }
    return v;
}

void BitVector::check_same_size(const BitVector& rhs, const char* op) const {
    if (len_ != rhs.len_)
        throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(len_) +
                             " vs " + std::to_string(rhs.len_) + ")");
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
    check_same_size(rhs, "xor");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& rhs) {
    check_same_size(rhs, "and");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= rhs.words_[i];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& rhs) {
    check_same_size(rhs, "or");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= rhs.words_[i];
    return *this;
}

bool BitVector::value_less(const BitVector& a, const BitVector& b) {
    if (a.len_ != b.len_)
        throw DimensionError("value_less: length mismatch");
    for (std::size_t i = a.words_.size(); i-- > 0;) {
        if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    }
    return false;
}

bool BitVector::dot(const BitVector& a, const BitVector& b) {
    a.check_same_size(b, "dot");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) acc ^= a.words_[i] & b.words_[i];
    return std::popcount(acc) & 1;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack: row count mismatch");
    BitMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        a.row(i).for_each_set([&](std::size_t j) { m.set(i, j); });
        b.row(i).for_each_set([&](std::size_t j) { m.set(i, a.cols() + j); });
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
    BitMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
        if (r.size() != m.cols_) throw DimensionError("from_rows: ragged rows");
    m.row_ = std::move(rows);
    return m;
}

BitVector BitMatrix::column(std::size_t j) const {
    assert(j < cols_);
    BitVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (row_[i].get(j)) c.set(i);
    return c;
}

BitVector BitMatrix::mat_vec(const BitVector& v) const {
    if (v.size() != cols_) throw DimensionError("mat_vec: vector length != column count");
    BitVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        if (BitVector::dot(row_[i], v)) out.set(i);
    return out;
}

namespace {

// Row-reduces `m` in place to reduced row echelon form; returns the pivot
// column of each pivot row (ascending).
std::vector<std::size_t> rref(std::vector<BitVector>& m, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t pivot = m.size();
        for (std::size_t i = r; i < m.size(); ++i) {
            if (m[i].get(c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i].get(c)) m[i] ^= m[r];
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

} // namespace

std::size_t BitMatrix::rank() const {
    std::vector<BitVector> m = row_;
    return rref(m, cols_).size();
}

std::vector<BitVector> BitMatrix::kernel_basis() const {
    std::vector<BitVector> m = row_;
    const std::vector<std::size_t> pivot_cols = rref(m, cols_);

    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        BitVector x(cols_);
        x.set(f);
        for (std::size_t p = 0; p < pivot_cols.size(); ++p)
            if (m[p].get(f)) x.set(pivot_cols[p]);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace cwskit
