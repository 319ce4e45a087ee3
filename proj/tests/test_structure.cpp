#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "cwskit/errors.hpp"
#include "cwskit/graph.hpp"
#include "cwskit/structure.hpp"

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

// Oracle: any quadruple a-b-c-d-a of distinct vertices with all four edges.
bool brute_has_c4(const Graph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) &&
                        g.has_edge(d, a))
                        return true;
                }
    return false;
}

bool has_form(const ZeroSumClassification& c, ZeroSumForm f) {
    for (ZeroSumForm got : c.forms)
        if (got == f) return true;
    return false;
}

} // namespace

TEST_CASE("column overlap holds exactly on 4-cycle-free graphs, exhaustively") {
    for (std::size_t n = 4; n <= 6; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            const OverlapCheck check = column_overlap_check(ColumnSystem::from_graph(g));
            CHECK(check.holds == !brute_has_c4(g));
        }
    }
}

TEST_CASE("a violated overlap names two genuinely overlapping columns") {
    const ColumnSystem sys = ColumnSystem::from_graph(cycle_graph(4));
    const OverlapCheck check = column_overlap_check(sys);
    REQUIRE_FALSE(check.holds);
    REQUIRE(check.violating_pair.has_value());
    const auto [a, b] = *check.violating_pair;
    CHECK(a != b);
    CHECK((sys.column(a) & sys.column(b)).count() >= 2);
}

TEST_CASE("degree gap") {
    CHECK(degree_gap(ColumnSystem::from_graph(cycle_graph(5))).delta == 2);
    CHECK(degree_gap(ColumnSystem::from_graph(complete_graph(4))).delta == 3);
    CHECK(degree_gap(ColumnSystem::from_graph(petersen_graph())).delta == 3);

    // A degree-1 vertex makes an adjacency column look like a unit column.
    const DegreeGapResult path = degree_gap(ColumnSystem::from_graph(
        Graph::from_edges(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(path.delta.has_value());
    CHECK_FALSE(path.reason.empty());

    // An isolated vertex contributes a zero column.
    const DegreeGapResult isolated = degree_gap(ColumnSystem::from_graph(
        Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}})));
    CHECK_FALSE(isolated.delta.has_value());

    CHECK(degree_gap(ColumnSystem::from_graph(cycle_graph(5)), 2).delta == 2);
    CHECK_FALSE(degree_gap(ColumnSystem::from_graph(cycle_graph(5)), 3).delta.has_value());
}

TEST_CASE("zero-sum classification of hand-built subsets") {
    // Identity columns come first, adjacency columns after: column n + i is
    // the neighbor row of vertex i.
    const ColumnSystem c5 = ColumnSystem::from_graph(cycle_graph(5));
    const std::vector<std::size_t> star = {1, 4, 5}; // e_1 + e_4 = r_0
    const ZeroSumClassification sc = classify_zero_sum(c5, star);
    CHECK(sc.unit_count == 2);
    CHECK(sc.heavy_count == 1);
    CHECK(has_form(sc, ZeroSumForm::support_star));
    CHECK(sc.forms.size() == 1);

    const ColumnSystem k3 = ColumnSystem::from_graph(complete_graph(3));
    const std::vector<std::size_t> rows = {3, 4, 5}; // r_0 + r_1 + r_2 = 0
    const ZeroSumClassification rc = classify_zero_sum(k3, rows);
    CHECK(rc.unit_count == 0);
    CHECK(rc.heavy_count == 3);
    CHECK(has_form(rc, ZeroSumForm::many_heavy));
    CHECK(rc.forms.size() == 1);
}

TEST_CASE("classification refuses bad inputs") {
    const ColumnSystem c5 = ColumnSystem::from_graph(cycle_graph(5));
    const std::vector<std::size_t> nonzero = {0, 1};
    CHECK_THROWS_AS((void)classify_zero_sum(c5, nonzero), ContractError);

    const ColumnSystem gapless =
        ColumnSystem::from_graph(Graph::from_edges(3, {{0, 1}, {1, 2}}));
    const std::vector<std::size_t> subset = {0, 2, 4}; // e_0 + e_2 = r_1
    CHECK_THROWS_AS((void)classify_zero_sum(gapless, subset), DomainError);
}

TEST_CASE("zero-sum subsets of the triangle system") {
    const ColumnSystem k3 = ColumnSystem::from_graph(complete_graph(3));
    const auto subsets = enumerate_zero_sum_subsets(k3, 3);
    const std::vector<std::vector<std::size_t>> expected = {
        {0, 1, 5}, // e_0 + e_1 = r_2
        {0, 2, 4}, // e_0 + e_2 = r_1
        {1, 2, 3}, // e_1 + e_2 = r_0
        {3, 4, 5}, // the rows themselves sum to zero
    };
    CHECK(subsets == expected);

    CHECK(enumerate_zero_sum_subsets(k3, 2).empty());
    CHECK_THROWS_AS((void)enumerate_zero_sum_subsets(k3, 3, 4), BudgetError);
}

TEST_CASE("fixed-set certificates") {
    // Triangle: {0, 1} is matched by edge 0-1 and joined through 2, and the
    // adjacency map fixes its indicator.
    const auto k3 = find_delta_certificate(complete_graph(3));
    REQUIRE(k3.has_value());
    CHECK(k3->v_prime.size() == 2);

    // Bowtie: two triangles sharing vertex 2.
    const Graph bowtie =
        Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    const auto bt = find_delta_certificate(bowtie);
    REQUIRE(bt.has_value());
    CHECK(bt->v_prime.size() == 2);

    // Triangle-free graphs admit no certificate: a matched pair would need a
    // common neighbor.
    CHECK_FALSE(find_delta_certificate(cycle_graph(5)).has_value());
    CHECK_FALSE(find_delta_certificate(petersen_graph()).has_value());
    CHECK_FALSE(find_delta_certificate(projective_plane_incidence(2)).has_value());
}

TEST_CASE("certificate members are fixed by the adjacency map") {
    for (const Graph& g : {complete_graph(3),
                           Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})}) {
        const auto cert = find_delta_certificate(g);
        REQUIRE(cert.has_value());
        BitVector u(g.vertex_count());
        for (std::size_t v : cert->v_prime) u.set(v);
        BitVector au(g.vertex_count());
        u.for_each_set([&](std::size_t i) { au ^= g.neighbors(i); });
        CHECK(au == u);
    }
}
