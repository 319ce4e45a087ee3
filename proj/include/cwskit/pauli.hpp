#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cwskit/gf2.hpp"

namespace cwskit {

// n-qubit Pauli operator up to phase, as a (z | x) symplectic pair:
// coordinate i carries Z when z_i=1,x_i=0; X when z_i=0,x_i=1; Y when both.
struct PauliVector {
    BitVector z, x;

    PauliVector() = default;
    // Identity on n coordinates.
    explicit PauliVector(std::size_t n) : z(n), x(n) {}
    PauliVector(BitVector z_part, BitVector x_part);

    std::size_t size() const { return z.size(); }

    BitVector support() const { return z | x; }

    // Number of coordinates acted on non-trivially.
    std::size_t symplectic_weight() const { return (z | x).count(); }

    bool is_identity() const { return z.none() && x.none(); }

    // Renders coordinate 0 first, e.g. "ZXIIY".
    std::string to_string() const;
    static PauliVector from_string(std::string_view text);

    bool operator==(const PauliVector&) const = default;
};

// Symplectic inner product <a, b> = <a.x, b.z> + <a.z, b.x> over GF(2).
// Zero iff the operators commute.
bool sym_inner(const PauliVector& a, const PauliVector& b);

// Whether Z(word) commutes with p: true iff <word, p.x> = 0.
bool commutes_with_z(const BitVector& word, const PauliVector& p);

// C(n, w) * 3^w, the number of n-qubit Paulis of symplectic weight w.
// Throws on overflow.
std::uint64_t pauli_count(std::size_t n, std::size_t w);

// Streams every n-qubit Pauli of symplectic weight exactly w, in canonical
// order: supports as ascending index tuples in lexicographic order
// ({0,1} before {0,2} before {1,2}), and for a fixed support the letters
// run through Z < X < Y per coordinate with the last support position
// moving fastest. The canonical order makes first-found witnesses
// deterministic.
class PauliWeightEnumerator {
  public:
    PauliWeightEnumerator(std::size_t n, std::size_t w);

    // Fills `out` and returns true, or returns false when exhausted.
    bool next(PauliVector& out);

    void reset();

  private:
    std::size_t n_, w_;
    bool done_ = false;
    bool first_ = true;
    std::vector<std::size_t> support_; // ascending indices
    std::vector<std::uint8_t> letter_; // 0 = Z, 1 = X, 2 = Y per support slot

    bool advance_letters();
    bool advance_support();
};

// Visits all Paulis of weight 1..max_weight in ascending weight, canonical
// order within each weight. Stops early when fn returns false; returns
// false iff stopped early.
template <typename Fn>
bool for_each_pauli_up_to(std::size_t n, std::size_t max_weight, Fn&& fn) {
    PauliVector p;
    for (std::size_t w = 1; w <= max_weight; ++w) {
        PauliWeightEnumerator e(n, w);
        while (e.next(p))
            if (!fn(p)) return false;
    }
    return true;
}

} // namespace cwskit
