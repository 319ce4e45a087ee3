#pragma once

#include <cstdint>
#include <optional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwskit/gf2.hpp"

namespace cwskit {

// Facts derived from a graph in one pass. girth is empty for acyclic
// graphs. min_degree_vertices lists every vertex of minimum degree, in
// ascending order.
struct GraphFacts {
    std::size_t min_degree = 0;
    std::size_t max_degree = 0;
    std::optional<std::size_t> girth;
    bool has_four_cycle = false;
    std::vector<std::size_t> min_degree_vertices;
};

// Simple undirected graph (no loops, no multi-edges), adjacency stored as
// one BitVector row per vertex. Treated as immutable once constructed.
class Graph {
  public:
    static Graph empty(std::size_t n);

    // Validates vertex range and rejects loops; duplicate edges collapse.
    static Graph from_edges(std::size_t n,
                            std::span<const std::pair<std::size_t, std::size_t>> edges);
    static Graph from_edges(std::size_t n,
                            std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
        return from_edges(n, std::span<const std::pair<std::size_t, std::size_t>>(edges));
    }

    // Validates symmetry and a zero diagonal.
    static Graph from_adjacency(std::vector<BitVector> rows);

    // Short-form graph6 (n <= 62). Rejects malformed input.
    static Graph from_graph6(std::string_view text);
    std::string to_graph6() const;

    // Adjacency-list text: first line "n", then one "u v" line per edge.
    // Used for graphs too large for short-form graph6.
    static Graph from_edge_list_text(std::string_view text);
    std::string to_edge_list_text() const;

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const;

    bool has_edge(std::size_t i, std::size_t j) const { return adj_[i].get(j); }
    const BitVector& neighbors(std::size_t i) const { return adj_[i]; }
    std::size_t degree(std::size_t i) const { return adj_[i].count(); }

    BitMatrix adjacency_matrix() const { return BitMatrix::from_rows(adj_); }

    GraphFacts facts() const;

    // True iff two vertices share at least two neighbors (a 4-cycle as a
    // subgraph, chords allowed).
    bool has_four_cycle() const;

    // Length of a shortest cycle; empty if acyclic.
    std::optional<std::size_t> girth() const;

    bool is_connected() const;

    bool operator==(const Graph&) const = default;

  private:
    explicit Graph(std::vector<BitVector> adj) : adj_(std::move(adj)) {}
    std::vector<BitVector> adj_;
};

// Generators. All validate their parameters.
Graph cycle_graph(std::size_t n);              // n >= 3
Graph complete_graph(std::size_t n);           // n >= 1
Graph complete_bipartite_graph(std::size_t a, std::size_t b); // a, b >= 1
Graph petersen_graph();

// Point-line incidence graph of the projective plane of prime order q:
// 2(q^2+q+1) vertices (points first, then lines), (q+1)-regular, girth 6.
// Non-prime q is rejected.
Graph projective_plane_incidence(std::uint64_t q);

struct RandomC4FreeResult {
    Graph graph;
    std::size_t target_min_degree;
    std::size_t achieved_min_degree;
    bool met_target; // false means best effort: no legal edge remained
};

// Inserts the candidate edges of K_n in an order shuffled by `seed`,
// rejecting any insertion that would create a 4-cycle, and stops once the
// minimum degree reaches `target_min_degree` (or when every remaining edge
// is illegal; rejection is monotone, so one pass is exhaustive).
// Deterministic for a given (n, target, seed).
RandomC4FreeResult random_c4_free(std::size_t n, std::size_t target_min_degree,
                                  std::uint64_t seed);

} // namespace cwskit
