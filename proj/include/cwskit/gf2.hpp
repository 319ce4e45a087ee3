#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cwskit/errors.hpp"

namespace cwskit {

// Bit vector over GF(2), packed LSB-first into 64-bit words. Bit i of the
// vector is bit (i % 64) of word (i / 64). Unused bits of the last word are
// kept zero, so equality and hashing can compare words directly.
class BitVector {
  public:
    BitVector() = default;

    explicit BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

    // Parses "10110": character k is bit k (vertex/coordinate k first).
    static BitVector from_string(std::string_view bits);

    // Low `len` bits of `bits`; requires len <= 64.
    static BitVector from_word(std::uint64_t bits, std::size_t len);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const {
        assert(i < len_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        assert(i < len_);
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) {
        assert(i < len_);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    // Hamming weight.
    std::size_t count() const {
        std::size_t total = 0;
        for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    BitVector& operator^=(const BitVector& rhs);
    BitVector& operator&=(const BitVector& rhs);
    BitVector& operator|=(const BitVector& rhs);

    friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
    friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }
    friend BitVector operator|(BitVector lhs, const BitVector& rhs) { return lhs |= rhs; }

    bool operator==(const BitVector&) const = default;

    // Order by value when the vector is read as an integer with bit 0 least
    // significant. Total order on equal-length vectors; used for witness
    // tie-breaks so results are deterministic.
    static bool value_less(const BitVector& a, const BitVector& b);

    // Parity of the AND of two equal-length vectors (GF(2) inner product).
    static bool dot(const BitVector& a, const BitVector& b);

    std::uint64_t low_word() const {
        assert(len_ <= 64);
        return words_.empty() ? 0 : words_[0];
    }

    std::span<const std::uint64_t> words() const { return words_; }

    // Calls fn(i) for every set bit, in ascending index order.
    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                fn((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::string to_string() const;

    static std::size_t word_count(std::size_t len) { return (len + 63) / 64; }

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;

    void check_same_size(const BitVector& rhs, const char* op) const;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const {
        std::uint64_t h = 0xcbf29ce484222325ull ^ v.size();
        for (std::uint64_t w : v.words()) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Dense GF(2) matrix stored as a vector of row BitVectors. Columns are
// materialized on demand.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_(rows, BitVector(cols)) {}

    static BitMatrix identity(std::size_t n);

    // Horizontal concatenation [A | B]; row counts must agree.
    static BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);

    static BitMatrix from_rows(std::vector<BitVector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const BitVector& row(std::size_t i) const {
        assert(i < rows_);
        return row_[i];
    }
    BitVector& row(std::size_t i) {
        assert(i < rows_);
        return row_[i];
    }

    bool get(std::size_t i, std::size_t j) const { return row(i).get(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { row(i).set(j, v); }

    BitVector column(std::size_t j) const;

    // (M v)_i = <row_i, v> over GF(2).
    BitVector mat_vec(const BitVector& v) const;

    std::size_t rank() const;

    // Basis of {x : M x = 0}. Deterministic: free columns are processed in
    // ascending order. rank() + kernel_basis().size() == cols().
    std::vector<BitVector> kernel_basis() const;

    bool operator==(const BitMatrix&) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> row_;
};

} // namespace cwskit
