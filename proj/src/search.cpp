#include "cwskit/search.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "cwskit/diagdist.hpp"
#include "cwskit/errors.hpp"
#include "cwskit/pauli.hpp"

namespace cwskit {

ClsImageSet cls_image_set(const Graph& g, std::size_t d) {
    const std::size_t n = g.vertex_count();
    if (d < 1 || d > n)
        throw DomainError("image set needs 1 <= d <= " + std::to_string(n) + ", got " +
                          std::to_string(d));
    ClsImageSet out;
    out.d = d;
    for (std::size_t w = 1; w < d; ++w) {
        PauliWeightEnumerator errors(n, w);
        PauliVector e;
        while (errors.next(e)) out.images.insert(cls_map(g, e));
    }
    return out;
}

CompatibilityOracle::CompatibilityOracle(const Graph& g, std::size_t d, std::size_t max_n)
    : n_(g.vertex_count()) {
    if (n_ > max_n)
        throw BudgetError("compatibility oracle refuses " + std::to_string(n_) +
                          " qubits (cap " + std::to_string(max_n) + ")");
    const ClsImageSet set = cls_image_set(g, d);
    for (const BitVector& v : set.images) images_.insert(v.low_word());
    if (images_.contains(0))
        throw DomainError("distance " + std::to_string(d) +
                          " exceeds the diagonal distance; only nondegenerate "
                          "targets are certifiable");
}

namespace {

// Exact branch-and-bound on remapped vertex ids 0..m-1, ascending order,
// greedy-coloring upper bounds. Deterministic given the oracle.
class ExactClique {
  public:
    ExactClique(std::uint64_t count,
                const std::function<bool(std::uint64_t, std::uint64_t)>& adjacent,
                std::uint64_t node_budget)
        : count_(count), adjacent_(adjacent), budget_(node_budget) {}

    CliqueResult run() {
        // Greedy seed gives the bound a head start.
        for (std::uint64_t v = 0; v < count_; ++v)
            if (all_adjacent(best_, v)) best_.push_back(v);

        std::vector<std::uint64_t> all(count_);
        for (std::uint64_t v = 0; v < count_; ++v) all[v] = v;
        std::vector<std::uint64_t> current;
        expand(current, all);

        CliqueResult r;
        r.vertices = best_;
        std::sort(r.vertices.begin(), r.vertices.end());
        r.complete = !exhausted_;
        r.explored_nodes = nodes_;
        return r;
    }

  private:
    bool all_adjacent(const std::vector<std::uint64_t>& clique, std::uint64_t v) const {
        for (std::uint64_t u : clique)
            if (!adjacent_(u, v)) return false;
        return true;
    }

    // Orders `p` by greedy color class (vertices taken in ascending id
    // order) and fills `colors` with each vertex's class number, which
    // bounds the largest clique inside any prefix of the order.
    void color_sort(std::vector<std::uint64_t>& p, std::vector<std::size_t>& colors) const {
        std::sort(p.begin(), p.end());
        std::vector<std::vector<std::uint64_t>> classes;
        for (std::uint64_t v : p) {
            bool placed = false;
            for (auto& cls : classes) {
                bool conflict = false;
                for (std::uint64_t u : cls)
                    if (adjacent_(u, v)) {
                        conflict = true;
                        break;
                    }
                if (!conflict) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({v});
        }
        p.clear();
        colors.clear();
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (std::uint64_t v : classes[c]) {
                p.push_back(v);
                colors.push_back(c + 1);
            }
    }

    void expand(std::vector<std::uint64_t>& current, std::vector<std::uint64_t>& p) {
        if (exhausted_) return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        std::vector<std::size_t> colors;
        color_sort(p, colors);
        for (std::size_t i = p.size(); i-- > 0;) {
            if (current.size() + colors[i] <= best_.size()) return;
            const std::uint64_t v = p[i];
            std::vector<std::uint64_t> next;
            for (std::size_t j = 0; j < i; ++j)
                if (adjacent_(p[j], v)) next.push_back(p[j]);
            current.push_back(v);
            if (next.empty()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
            if (exhausted_) return;
        }
    }

    std::uint64_t count_;
    const std::function<bool(std::uint64_t, std::uint64_t)>& adjacent_;
    std::uint64_t budget_;
    std::vector<std::uint64_t> best_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace

CliqueResult max_clique(std::uint64_t vertex_count,
                        const std::function<bool(std::uint64_t, std::uint64_t)>& adjacent,
                        const CliqueOptions& options) {
    if (vertex_count == 0) return CliqueResult{{}, true, 0};

    if (options.mode == CliqueMode::exact)
        return ExactClique(vertex_count, adjacent, options.node_budget).run();

    // Greedy: best clique over restarts; restart 0 uses the natural order,
    // later restarts shuffle. Ties keep the lexicographically smaller set.
    std::vector<std::uint64_t> order(vertex_count);
    for (std::uint64_t v = 0; v < vertex_count; ++v) order[v] = v;
    CliqueResult best;
    for (std::uint32_t r = 0; r < std::max<std::uint32_t>(options.restarts, 1); ++r) {
        if (r > 0) {
            std::mt19937_64 rng(options.seed + r);
            std::shuffle(order.begin(), order.end(), rng);
        }
        std::vector<std::uint64_t> clique;
        for (std::uint64_t v : order) {
            bool ok = true;
            for (std::uint64_t u : clique)
                if (!adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(v);
        }
        std::sort(clique.begin(), clique.end());
        if (clique.size() > best.vertices.size() ||
            (clique.size() == best.vertices.size() && clique < best.vertices))
            best.vertices = std::move(clique);
    }
    best.complete = false;
    best.explored_nodes = std::max<std::uint32_t>(options.restarts, 1);
    return best;
}

SearchResult search_code(const Graph& g, std::size_t d, const CliqueOptions& options) {
    const std::size_t n = g.vertex_count();
    const CompatibilityOracle oracle(g, d);

    // Fix the zero word: adjacency depends only on xor, so some maximum
    // clique contains it. Search the subgraph induced on its neighbors.
    std::vector<std::uint64_t> base;
    for (std::uint64_t v = 1; v < oracle.vertex_count(); ++v)
        if (oracle.adjacent(0, v)) base.push_back(v);

    const CliqueResult clique = max_clique(
        base.size(),
        [&](std::uint64_t i, std::uint64_t j) { return oracle.adjacent(base[i], base[j]); },
        options);

    std::vector<BitVector> words{BitVector(n)};
    for (std::uint64_t i : clique.vertices) words.push_back(BitVector::from_word(base[i], n));
    std::sort(words.begin(), words.end(), BitVector::value_less);

    SearchResult result;
    result.requested_d = d;
    result.clique_method = options.mode;
    result.clique_complete = clique.complete;
    result.explored_nodes = clique.explored_nodes;
    result.words = words;
    const CwsCode code(g, ClassicalCode::from_words(n, std::move(words)));
    result.verified = distance(code, d);
    return result;
}

SqrtFamilyResult construct_sqrt_family(std::uint64_t q, const ClassicalCode& c) {
    Graph g = projective_plane_incidence(q);
    if (c.length() != g.vertex_count())
        throw DimensionError("code length " + std::to_string(c.length()) +
                             " does not match the " + std::to_string(g.vertex_count()) +
                             "-vertex incidence graph");
    const GraphFacts facts = g.facts();
    SqrtFamilyResult out{CwsCode(std::move(g), c),
                         facts.min_degree,
                         facts.max_degree,
                         (facts.min_degree + 1) * facts.max_degree,
                         classical_distance(c),
                         facts.min_degree + 1};
    if (out.classical_dist <= out.distance_threshold)
        throw DomainError("classical distance " + std::to_string(out.classical_dist) +
                          " must strictly exceed " + std::to_string(out.distance_threshold));
    return out;
}

} // namespace cwskit
