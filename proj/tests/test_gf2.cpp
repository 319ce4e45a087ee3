#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "cwskit/errors.hpp"
#include "cwskit/gf2.hpp"

using namespace cwskit;

TEST_CASE("bit vector packing is LSB first") {
    const BitVector v = BitVector::from_string("110");
    CHECK(v.size() == 3);
    CHECK(v.get(0));
    CHECK(v.get(1));
    CHECK_FALSE(v.get(2));
    CHECK(v.low_word() == 3);
    CHECK(v.to_string() == "110");
    CHECK(BitVector::from_word(3, 3) == v);
}

TEST_CASE("bit vector mutation and population") {
    BitVector v(70);
    CHECK(v.none());
    v.set(0);
    v.set(69);
    CHECK(v.count() == 2);
    CHECK(v.any());
    v.flip(69);
    CHECK(v.count() == 1);
    v.set(69, false);
    CHECK(v.low_word() == 1);
    std::vector<std::size_t> seen;
    v.set(64);
    v.for_each_set([&](std::size_t i) { seen.push_back(i); });
    CHECK(seen == std::vector<std::size_t>{0, 64});
}

TEST_CASE("bitwise operators match word arithmetic") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        const std::uint64_t a = rng() & mask;
        const std::uint64_t b = rng() & mask;
        BitVector va = BitVector::from_word(a, n);
        const BitVector vb = BitVector::from_word(b, n);
        CHECK((va ^ vb).low_word() == (a ^ b));
        CHECK((va & vb).low_word() == (a & b));
        CHECK((va | vb).low_word() == (a | b));
        CHECK(BitVector::dot(va, vb) == (std::popcount(a & b) % 2 == 1));
        CHECK(BitVector::value_less(va, vb) == (a < b));
        va ^= vb;
        CHECK(va.low_word() == (a ^ b));
    }
}

TEST_CASE("value order compares across word boundaries") {
    BitVector lo(70);
    lo.set(0);
    BitVector hi(70);
    hi.set(69);
    CHECK(BitVector::value_less(lo, hi));
    CHECK_FALSE(BitVector::value_less(hi, lo));
    CHECK_FALSE(BitVector::value_less(lo, lo));
}

TEST_CASE("matrix vector product on a triangle adjacency") {
    const BitMatrix a = BitMatrix::from_rows({BitVector::from_string("011"),
                                              BitVector::from_string("101"),
                                              BitVector::from_string("110")});
    CHECK(a.mat_vec(BitVector::from_string("100")) == BitVector::from_string("011"));
    CHECK(a.mat_vec(BitVector::from_string("110")) == BitVector::from_string("110"));
    CHECK(a.column(0) == BitVector::from_string("011"));
}

TEST_CASE("identity and hstack shapes") {
    const BitMatrix id = BitMatrix::identity(4);
    CHECK(id.rows() == 4);
    CHECK(id.cols() == 4);
    CHECK(id.rank() == 4);
    const BitMatrix two = BitMatrix::hstack(id, id);
    CHECK(two.cols() == 8);
    CHECK(two.column(5) == id.column(1));
    CHECK(two.rank() == 4);
}

TEST_CASE("rank of hand-checked matrices") {
    CHECK(BitMatrix::from_rows({BitVector::from_string("110"),
                                BitVector::from_string("011"),
                                BitVector::from_string("101")})
              .rank() == 2); // rows sum to zero
    CHECK(BitMatrix::from_rows({BitVector::from_string("111")}).rank() == 1);
    CHECK(BitMatrix::from_rows({BitVector(3), BitVector(3)}).rank() == 0);
}

// Exhaustive oracle: for every x in GF(2)^m test A x = 0 directly, then
// demand that kernel_basis spans exactly that set.
TEST_CASE("kernel basis matches exhaustive null-space enumeration") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t rows = 1 + rng() % 6;
        const std::size_t cols = 1 + rng() % 6;
        std::vector<BitVector> r;
        for (std::size_t i = 0; i < rows; ++i)
            r.push_back(BitVector::from_word(rng() & ((std::uint64_t{1} << cols) - 1), cols));
        const BitMatrix a = BitMatrix::from_rows(r);

        std::size_t null_count = 0;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << cols); ++x)
            if (a.mat_vec(BitVector::from_word(x, cols)).none()) ++null_count;

        const std::vector<BitVector> basis = a.kernel_basis();
        for (const BitVector& b : basis) CHECK(a.mat_vec(b).none());
        CHECK((std::uint64_t{1} << basis.size()) == null_count);
        if (!basis.empty())
            CHECK(BitMatrix::from_rows(basis).rank() == basis.size());
        CHECK(basis.size() == cols - a.rank());
    }
}

TEST_CASE("dimension mismatches are refused") {
    CHECK_THROWS_AS((void)(BitVector(3) ^ BitVector(4)), DimensionError);
    CHECK_THROWS_AS((void)BitVector::dot(BitVector(3), BitVector(4)), DimensionError);
    const BitMatrix a = BitMatrix::identity(3);
    CHECK_THROWS_AS((void)a.mat_vec(BitVector(4)), DimensionError);
    CHECK_THROWS_AS((void)BitVector::from_string("012"), ParseError);
}
