#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <complex>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cwskit/errors.hpp"
#include "cwskit/pauli.hpp"

using namespace cwskit;

namespace {

using Cell = std::complex<double>;
using Mat = std::vector<std::vector<Cell>>;

Mat single_letter(char letter) {
    const Cell i(0, 1);
    if (letter == 'I') return {{1, 0}, {0, 1}};
    if (letter == 'X') return {{0, 1}, {1, 0}};
    if (letter == 'Y') return {{0, -i}, {i, 0}};
    return {{1, 0}, {0, -1}}; // Z
}

Mat kron(const Mat& a, const Mat& b) {
    const std::size_t ra = a.size(), ca = a[0].size();
    const std::size_t rb = b.size(), cb = b[0].size();
    Mat out(ra * rb, std::vector<Cell>(ca * cb));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < cb; ++l)
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
    return out;
}

Mat mul(const Mat& a, const Mat& b) {
    const std::size_t n = a.size();
    Mat out(n, std::vector<Cell>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

// Oracle: build the operators as matrices (phases ignored by construction
// order, which cannot affect commutation) and compare A B with B A.
bool matrices_commute(const std::string& a, const std::string& b) {
    Mat ma = single_letter(a[0]);
    Mat mb = single_letter(b[0]);
    for (std::size_t k = 1; k < a.size(); ++k) {
        ma = kron(ma, single_letter(a[k]));
        mb = kron(mb, single_letter(b[k]));
    }
    const Mat ab = mul(ma, mb);
    const Mat ba = mul(mb, ma);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j)
            if (std::abs(ab[i][j] - ba[i][j]) > 1e-9) return false;
    return true;
}

const std::array<char, 4> letters = {'I', 'Z', 'X', 'Y'};

} // namespace

TEST_CASE("string round trip and coordinate order") {
    const PauliVector p = PauliVector::from_string("IXYZ");
    CHECK(p.size() == 4);
    CHECK_FALSE(p.x.get(0));
    CHECK(p.x.get(1));
    CHECK(p.x.get(2));
    CHECK(p.z.get(2));
    CHECK(p.z.get(3));
    CHECK(p.to_string() == "IXYZ");
    CHECK(p.symplectic_weight() == 3);
    CHECK(p.support() == BitVector::from_string("0111"));
    CHECK_FALSE(p.is_identity());
    CHECK(PauliVector::from_string("II").is_identity());
    CHECK_THROWS_AS(PauliVector::from_string("IXQ"), ParseError);
}

TEST_CASE("symplectic inner product matches matrix commutation for n = 2") {
    for (char a0 : letters)
        for (char a1 : letters)
            for (char b0 : letters)
                for (char b1 : letters) {
                    const std::string sa{a0, a1};
                    const std::string sb{b0, b1};
                    const PauliVector a = PauliVector::from_string(sa);
                    const PauliVector b = PauliVector::from_string(sb);
                    CHECK(sym_inner(a, b) == !matrices_commute(sa, sb));
                    CHECK(sym_inner(a, b) == sym_inner(b, a));
                }
}

TEST_CASE("z-operator commutation depends only on the x part") {
    const BitVector word = BitVector::from_string("110");
    CHECK_FALSE(commutes_with_z(word, PauliVector::from_string("XII")));
    CHECK(commutes_with_z(word, PauliVector::from_string("XXI")));
    CHECK(commutes_with_z(word, PauliVector::from_string("ZZZ")));
    CHECK_FALSE(commutes_with_z(word, PauliVector::from_string("YIZ")));
}

TEST_CASE("weight-class sizes") {
    CHECK(pauli_count(5, 0) == 1);
    CHECK(pauli_count(5, 1) == 15);
    CHECK(pauli_count(5, 2) == 90);
    CHECK(pauli_count(5, 3) == 270);
    CHECK(pauli_count(1, 1) == 3);
    CHECK_THROWS(pauli_count(64, 32)); // overflows 64 bits
}

TEST_CASE("enumerator yields each weight class exactly once") {
    for (std::size_t n : {1u, 3u, 4u}) {
        for (std::size_t w = 1; w <= n; ++w) {
            PauliWeightEnumerator e(n, w);
            PauliVector p;
            std::set<std::string> seen;
            while (e.next(p)) {
                CHECK(p.symplectic_weight() == w);
                CHECK(seen.insert(p.to_string()).second);
            }
            CHECK(seen.size() == pauli_count(n, w));
        }
    }
}

TEST_CASE("enumeration order is canonical") {
    PauliWeightEnumerator e(2, 1);
    PauliVector p;
    std::vector<std::string> order;
    while (e.next(p)) order.push_back(p.to_string());
    CHECK(order == std::vector<std::string>{"ZI", "XI", "YI", "IZ", "IX", "IY"});

    e.reset();
    CHECK(e.next(p));
    CHECK(p.to_string() == "ZI");

    PauliWeightEnumerator pairs(3, 2);
    order.clear();
    while (pairs.next(p) && order.size() < 4) order.push_back(p.to_string());
    CHECK(order ==
          std::vector<std::string>{"ZZI", "ZXI", "ZYI", "XZI"}); // last slot fastest
}

TEST_CASE("bounded sweep visits the union of weight classes") {
    std::size_t visited = 0;
    const bool finished = for_each_pauli_up_to(5, 2, [&](const PauliVector& p) {
        CHECK(p.symplectic_weight() >= 1);
        CHECK(p.symplectic_weight() <= 2);
        ++visited;
        return true;
    });
    CHECK(finished);
    CHECK(visited == 105);

    visited = 0;
    const bool stopped = for_each_pauli_up_to(5, 2, [&](const PauliVector&) {
        ++visited;
        return visited < 10;
    });
    CHECK_FALSE(stopped);
    CHECK(visited == 10);
}
