#include "cwskit/pauli.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cwskit {

PauliVector::PauliVector(BitVector z_part, BitVector x_part)
    : z(std::move(z_part)), x(std::move(x_part)) {
    if (z.size() != x.size())
        throw DimensionError("pauli: z and x parts must have equal length");
}

std::string PauliVector::to_string() const {
    std::string s(size(), 'I');
    for (std::size_t i = 0; i < size(); ++i) {
        const bool zi = z.get(i), xi = x.get(i);
        if (zi && xi)
            s[i] = 'Y';
        else if (zi)
            s[i] = 'Z';
        else if (xi)
            s[i] = 'X';
    }
    return s;
}

PauliVector PauliVector::from_string(std::string_view text) {
    BitVector z(text.size()), x(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'I': break;
            case 'Z': z.set(i); break;
            case 'X': x.set(i); break;
            case 'Y': z.set(i); x.set(i); break;
            default: throw ParseError("pauli: letters must be one of I, X, Y, Z");
        }
    }
    return PauliVector(std::move(z), std::move(x));
}

bool sym_inner(const PauliVector& a, const PauliVector& b) {
    if (a.size() != b.size()) throw DimensionError("sym_inner: length mismatch");
    return BitVector::dot(a.x, b.z) ^ BitVector::dot(a.z, b.x);
}

bool commutes_with_z(const BitVector& word, const PauliVector& p) {
    if (word.size() != p.size()) throw DimensionError("commutes_with_z: length mismatch");
    return !BitVector::dot(word, p.x);
}

std::uint64_t pauli_count(std::size_t n, std::size_t w) {
    if (w > n) return 0;
    // C(n, w) * 3^w with overflow checks.
    std::uint64_t binom = 1;
    for (std::size_t i = 1; i <= w; ++i) {
        const std::uint64_t num = n - w + i;
        if (binom > std::numeric_limits<std::uint64_t>::max() / num)
            throw DomainError("pauli_count: overflow");
        binom = binom * num / i;
    }
    std::uint64_t result = binom;
    for (std::size_t i = 0; i < w; ++i) {
        if (result > std::numeric_limits<std::uint64_t>::max() / 3)
            throw DomainError("pauli_count: overflow");
        result *= 3;
    }
    return result;
}

PauliWeightEnumerator::PauliWeightEnumerator(std::size_t n, std::size_t w) : n_(n), w_(w) {
    if (w > n) throw DomainError("pauli enumeration: weight exceeds qubit count");
    reset();
}

void PauliWeightEnumerator::reset() {
    support_.resize(w_);
    std::iota(support_.begin(), support_.end(), std::size_t{0});
    letter_.assign(w_, 0);
    done_ = false;
    first_ = true;
}

bool PauliWeightEnumerator::advance_letters() {
    // Odometer over base-3 digits, last position fastest.
    for (std::size_t k = w_; k-- > 0;) {
        if (letter_[k] < 2) {
            ++letter_[k];
            std::fill(letter_.begin() + static_cast<std::ptrdiff_t>(k) + 1, letter_.end(),
                      std::uint8_t{0});
            return true;
        }
    }
    return false;
}

bool PauliWeightEnumerator::advance_support() {
    // Next w-combination of [0, n) in lexicographic tuple order.
    for (std::size_t k = w_; k-- > 0;) {
        if (support_[k] < n_ - (w_ - k)) {
            ++support_[k];
            for (std::size_t j = k + 1; j < w_; ++j) support_[j] = support_[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool PauliWeightEnumerator::next(PauliVector& out) {
    if (done_) return false;
    if (!first_) {
        if (!advance_letters()) {
            if (!advance_support()) {
                done_ = true;
                return false;
            }
            std::fill(letter_.begin(), letter_.end(), std::uint8_t{0});
        }
    }
    first_ = false;

    BitVector z(n_), x(n_);
    for (std::size_t k = 0; k < w_; ++k) {
        const std::size_t i = support_[k];
        switch (letter_[k]) {
            case 0: z.set(i); break;           // Z
            case 1: x.set(i); break;           // X
            default: z.set(i); x.set(i); break; // Y
        }
    }
    out = PauliVector(std::move(z), std::move(x));
    return true;
}

} // namespace cwskit
