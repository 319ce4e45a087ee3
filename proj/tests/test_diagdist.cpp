#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "cwskit/diagdist.hpp"
#include "cwskit/errors.hpp"
#include "cwskit/graph.hpp"
#include "cwskit/pauli.hpp"

using namespace cwskit;

namespace {

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

void check_result(const Graph& g, const DiagDistanceResult& r) {
    CHECK(r.witness_u.any());
    CHECK(r.witness_pauli.symplectic_weight() == r.value);
    CHECK(cls_map(g, r.witness_pauli).none());
}

} // namespace

TEST_CASE("error transfer on hand examples") {
    const Graph c5 = cycle_graph(5);
    PauliVector x0(5);
    x0.x.set(0);
    CHECK(cls_map(c5, x0) == BitVector::from_string("01001")); // neighbors of 0

    PauliVector z(5);
    z.z = BitVector::from_string("10110");
    CHECK(cls_map(c5, z) == z.z); // pure-Z errors map to their own z part

    PauliVector y0 = x0;
    y0.z.set(0);
    CHECK(cls_map(c5, y0) == BitVector::from_string("11001"));
}

TEST_CASE("error transfer is linear") {
    const Graph g = petersen_graph();
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        PauliVector a(10), b(10);
        a.z = BitVector::from_word(rng() & 1023, 10);
        a.x = BitVector::from_word(rng() & 1023, 10);
        b.z = BitVector::from_word(rng() & 1023, 10);
        b.x = BitVector::from_word(rng() & 1023, 10);
        PauliVector sum(10);
        sum.z = a.z ^ b.z;
        sum.x = a.x ^ b.x;
        CHECK(cls_map(g, sum) == (cls_map(g, a) ^ cls_map(g, b)));
    }
}

TEST_CASE("error transfer refuses size mismatches") {
    CHECK_THROWS_AS((void)cls_map(cycle_graph(5), PauliVector(4)), DimensionError);
}

TEST_CASE("named values and pinned witnesses") {
    const DiagDistanceResult k1 = diagonal_distance(complete_graph(1));
    CHECK(k1.value == 1);
    CHECK(k1.witness_u.to_string() == "1");

    const DiagDistanceResult k2 = diagonal_distance(complete_graph(2));
    CHECK(k2.value == 2);
    CHECK(k2.witness_u.to_string() == "10");

    const DiagDistanceResult k3 = diagonal_distance(complete_graph(3));
    CHECK(k3.value == 2);
    CHECK(k3.witness_u.to_string() == "110");
    CHECK(k3.witness_pauli.to_string() == "YYI");

    const DiagDistanceResult c5 = diagonal_distance(cycle_graph(5));
    CHECK(c5.value == 3);
    CHECK(c5.witness_u.to_string() == "10000");

    CHECK(diagonal_distance(complete_graph(4)).value == 2);
    CHECK(diagonal_distance(petersen_graph()).value == 4);
    CHECK(diagonal_distance(projective_plane_incidence(2)).value == 4);

    for (const Graph& g : {cycle_graph(5), complete_graph(3), petersen_graph()})
        check_result(g, diagonal_distance(g));
    CHECK(diagonal_distance(cycle_graph(5)).method == "exact-search");
}

TEST_CASE("the witness is the smallest minimizer as an integer") {
    // Exhaustively recompute the minimum and the least minimizer.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        const std::size_t pairs = n * (n - 1) / 2;
        const Graph g = graph_from_mask(n, rng() & ((std::uint64_t{1} << pairs) - 1));
        std::size_t best = n + 1;
        std::uint64_t best_u = 0;
        for (std::uint64_t u = 1; u < (std::uint64_t{1} << n); ++u) {
            BitVector zu(n);
            BitVector uv = BitVector::from_word(u, n);
            uv.for_each_set([&](std::size_t i) { zu ^= g.neighbors(i); });
            zu |= uv;
            if (zu.count() < best) {
                best = zu.count();
                best_u = u;
            }
        }
        const DiagDistanceResult r = diagonal_distance(g);
        CHECK(r.value == best);
        CHECK(r.witness_u.low_word() == best_u);
    }
}

TEST_CASE("oracle agrees with the exact search everywhere, witness included") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            const DiagDistanceResult exact = diagonal_distance(g);
            const DiagDistanceResult oracle = oracle_diagonal_distance(g);
            CHECK(exact.value == oracle.value);
            CHECK(exact.witness_u == oracle.witness_u);
            check_result(g, oracle);
            CHECK(oracle.method == "oracle");
        }
    }
}

TEST_CASE("oracle crosses its block boundary at n = 14") {
    const Graph h = projective_plane_incidence(2); // 14 vertices
    const DiagDistanceResult exact = diagonal_distance(h);
    const DiagDistanceResult oracle = oracle_diagonal_distance(h);
    CHECK(oracle.value == 4);
    CHECK(exact.value == oracle.value);
    CHECK(exact.witness_u == oracle.witness_u);
    check_result(h, oracle);
}

TEST_CASE("oracle budget") {
    CHECK_THROWS_AS((void)oracle_diagonal_distance(cycle_graph(25)), BudgetError);
    CHECK(oracle_diagonal_distance(cycle_graph(25), 25).value == 3);
    CHECK_THROWS_AS((void)oracle_diagonal_distance(Graph::empty(0)), DomainError);
}

TEST_CASE("fast path equals the exact value on 4-cycle-free graphs") {
    // With a certificate the value is the minimum degree; without one it is
    // one more.
    const DiagDistanceResult k3 = fast_path_diagonal_distance(complete_graph(3));
    CHECK(k3.value == 2);
    CHECK(k3.method == "fast-path");
    check_result(complete_graph(3), k3);

    const DiagDistanceResult c5 = fast_path_diagonal_distance(cycle_graph(5));
    CHECK(c5.value == 3);
    check_result(cycle_graph(5), c5);

    const DiagDistanceResult pg = fast_path_diagonal_distance(projective_plane_incidence(3));
    CHECK(pg.value == 5); // girth 6, 4-regular: no certificate can exist
    check_result(projective_plane_incidence(3), pg);
    CHECK(pg.value == diagonal_distance(projective_plane_incidence(3)).value);
}
