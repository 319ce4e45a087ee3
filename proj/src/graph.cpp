#include "cwskit/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>

namespace cwskit {

Graph Graph::empty(std::size_t n) { return Graph(std::vector<BitVector>(n, BitVector(n))); }

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<std::size_t, std::size_t>> edges) {
    std::vector<BitVector> adj(n, BitVector(n));
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) throw DomainError("edge endpoint out of range");
        if (u == v) throw DomainError("self-loops are not allowed");
        adj[u].set(v);
        adj[v].set(u);
    }
    return Graph(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<BitVector> rows) {
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw DimensionError("adjacency rows must be n bits long");
        if (rows[i].get(i)) throw DomainError("self-loops are not allowed");
        for (std::size_t j = i + 1; j < n; ++j)
            if (rows[i].get(j) != rows[j].get(i))
                throw DomainError("adjacency matrix must be symmetric");
    }
    return Graph(std::move(rows));
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
}

bool Graph::has_four_cycle() const {
    const std::size_t n = vertex_count();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if ((adj_[i] & adj_[j]).count() >= 2) return true;
    return false;
}

std::optional<std::size_t> Graph::girth() const {
    const std::size_t n = vertex_count();
    std::size_t best = 0;
    bool found = false;
    std::vector<std::ptrdiff_t> dist(n), parent(n);
    for (std::size_t root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<std::size_t> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            adj_[u].for_each_set([&](std::size_t v) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = static_cast<std::ptrdiff_t>(u);
                    queue.push_back(v);
                } else if (static_cast<std::ptrdiff_t>(v) != parent[u]) {
                    // Non-tree edge: closed walk through root of this length
                    // contains a cycle no longer than it. Minimizing over all
                    // roots and all non-tree edges yields the exact girth.
                    const std::size_t len =
                        static_cast<std::size_t>(dist[u] + dist[v]) + 1;
                    if (!found || len < best) {
                        best = len;
                        found = true;
                    }
                }
            });
        }
    }
    if (!found) return std::nullopt;
    return best;
}

bool Graph::is_connected() const {
    const std::size_t n = vertex_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        adj_[u].for_each_set([&](std::size_t v) {
            if (!seen[v]) {
                seen[v] = true;
                ++visited;
                queue.push_back(v);
            }
        });
    }
    return visited == n;
}

GraphFacts Graph::facts() const {
    GraphFacts f;
    const std::size_t n = vertex_count();
    if (n == 0) return f;
    f.min_degree = degree(0);
    f.max_degree = degree(0);
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t d = degree(i);
        f.min_degree = std::min(f.min_degree, d);
        f.max_degree = std::max(f.max_degree, d);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (degree(i) == f.min_degree) f.min_degree_vertices.push_back(i);
    f.girth = girth();
    f.has_four_cycle = has_four_cycle();
    return f;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw DomainError("cycle graph requires n >= 3");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
    if (n < 1) throw DomainError("complete graph requires n >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw DomainError("complete bipartite graph requires a, b >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edges(a + b, edges);
}

Graph petersen_graph() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    return Graph::from_edges(10, edges);
}

namespace {

bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

} // namespace

Graph projective_plane_incidence(std::uint64_t q) {
    if (!is_prime(q))
        throw DomainError("projective plane incidence requires prime order q, got " +
                          std::to_string(q));
    // Normalized homogeneous representatives over F_q:
    //   (1, a, b), (0, 1, a), (0, 0, 1)  -> q^2 + q + 1 of each kind.
    struct Triple {
        std::uint64_t x, y, z;
    };
    std::vector<Triple> reps;
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b) reps.push_back({1, a, b});
    for (std::uint64_t a = 0; a < q; ++a) reps.push_back({0, 1, a});
    reps.push_back({0, 0, 1});

    const std::size_t m = reps.size(); // q^2 + q + 1
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t l = 0; l < m; ++l) {
            const auto& pt = reps[p];
            const auto& ln = reps[l];
            if ((pt.x * ln.x + pt.y * ln.y + pt.z * ln.z) % q == 0)
                edges.emplace_back(p, m + l);
        }
    return Graph::from_edges(2 * m, edges);
}

RandomC4FreeResult random_c4_free(std::size_t n, std::size_t target_min_degree,
                                  std::uint64_t seed) {
    if (n < 1) throw DomainError("random_c4_free requires n >= 1");
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) candidates.emplace_back(i, j);
    std::mt19937_64 rng(seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);

    std::vector<BitVector> adj(n, BitVector(n));
    std::vector<std::size_t> deg(n, 0);
    auto min_degree = [&] { return n ? *std::min_element(deg.begin(), deg.end()) : 0; };

    // Adding (u, v) creates a 4-cycle iff afterwards some pair involving u
    // or v shares two neighbors. Pairs not involving u or v are unaffected.
    auto creates_c4 = [&](std::size_t u, std::size_t v) {
        BitVector nu = adj[u];
        nu.set(v);
        BitVector nv = adj[v];
        nv.set(u);
        if ((nu & nv).count() >= 2) return true;
        for (std::size_t w = 0; w < n; ++w) {
            if (w != u && w != v && ((adj[w] & nu).count() >= 2 || (adj[w] & nv).count() >= 2))
                return true;
        }
        return false;
    };

    bool met = min_degree() >= target_min_degree;
    for (const auto& [u, v] : candidates) {
        if (met) break;
        if (creates_c4(u, v)) continue;
        adj[u].set(v);
        adj[v].set(u);
        ++deg[u];
        ++deg[v];
        if (min_degree() >= target_min_degree) met = true;
    }

    Graph g = Graph::from_adjacency(std::move(adj));
    const std::size_t achieved = [&] {
        std::size_t d = g.vertex_count() ? g.degree(0) : 0;
        for (std::size_t i = 1; i < g.vertex_count(); ++i) d = std::min(d, g.degree(i));
        return d;
    }();
    return RandomC4FreeResult{std::move(g), target_min_degree, achieved, met};
}

} // namespace cwskit
