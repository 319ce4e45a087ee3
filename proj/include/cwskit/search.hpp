#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "cwskit/cws.hpp"
#include "cwskit/gf2.hpp"
#include "cwskit/graph.hpp"

namespace cwskit {

// All error-transfer images of Paulis with 0 < symplectic weight < d.
// A candidate word set is safe against those errors exactly when no
// pairwise difference of words lies in this set.
struct ClsImageSet {
    std::size_t d = 0;
    std::unordered_set<BitVector, BitVectorHash> images;

    bool contains(const BitVector& v) const { return images.contains(v); }
};

ClsImageSet cls_image_set(const Graph& g, std::size_t d); // 1 <= d <= n

// Adjacency oracle for the compatibility graph over all length-n
// bitstrings: x ~ y iff x != y and x ^ y is not a forbidden image.
// Adjacency depends only on x ^ y, so the graph is never materialized.
// Requires d not to exceed the diagonal distance (a zero image would
// otherwise poison every difference) and n within the cap.
class CompatibilityOracle {
  public:
    CompatibilityOracle(const Graph& g, std::size_t d, std::size_t max_n = 16);

    std::size_t bit_length() const { return n_; }
    std::uint64_t vertex_count() const { return std::uint64_t{1} << n_; }
    std::size_t image_count() const { return images_.size(); }

    bool forbidden(std::uint64_t difference) const { return images_.contains(difference); }
    bool adjacent(std::uint64_t x, std::uint64_t y) const {
        return x != y && !images_.contains(x ^ y);
    }

  private:
    std::size_t n_;
    std::unordered_set<std::uint64_t> images_;
};

enum class CliqueMode { exact, greedy };

struct CliqueOptions {
    CliqueMode mode = CliqueMode::exact;
    // Exact mode: branch-and-bound nodes explored before giving up (a node
    // count, not wall time, so runs are reproducible).
    std::uint64_t node_budget = 5'000'000;
    // Greedy mode: number of shuffled vertex orders tried.
    std::uint32_t restarts = 32;
    std::uint64_t seed = 1;
};

struct CliqueResult {
    std::vector<std::uint64_t> vertices; // ascending
    bool complete = false;               // true iff maximality was proven
    std::uint64_t explored_nodes = 0;
};

// Maximum clique over vertices 0..vertex_count-1 with adjacency given by a
// callback. Exact mode is branch-and-bound with greedy-coloring bounds and
// deterministic ascending vertex order; it returns the best clique found
// flagged incomplete when the node budget runs out. Greedy mode is the best
// of seeded restart passes and never claims maximality.
CliqueResult max_clique(std::uint64_t vertex_count,
                        const std::function<bool(std::uint64_t, std::uint64_t)>& adjacent,
                        const CliqueOptions& options = {});

struct SearchResult {
    std::vector<BitVector> words;      // the clique, as codewords
    std::size_t requested_d = 0;
    DistanceResult verified;           // independent re-check via distance()
    CliqueMode clique_method = CliqueMode::exact;
    bool clique_complete = false;
    std::uint64_t explored_nodes = 0;
};

// Searches for a largest word set whose CWS code has distance >= d: a
// maximum clique in the compatibility graph. The zero word is fixed up
// front (adjacency is translation-invariant, so some maximum clique
// contains it) and the result is re-verified by error enumeration.
SearchResult search_code(const Graph& g, std::size_t d, const CliqueOptions& options = {});

struct SqrtFamilyResult {
    CwsCode code;
    std::size_t min_degree = 0;          // q + 1
    std::size_t max_degree = 0;          // q + 1
    std::size_t distance_threshold = 0;  // (min_degree + 1) * max_degree
    std::size_t classical_dist = 0;      // must strictly exceed the threshold
    std::size_t guaranteed_distance = 0; // min_degree + 1
};

// Pairs a projective-plane incidence graph (girth 6, so the diagonal
// distance is min_degree + 1) with a classical code whose distance strictly
// exceeds (min_degree + 1) * max_degree. Every error of symplectic weight
// <= min_degree then has an image too light to be a word difference, which
// certifies code distance >= min_degree + 1.
SqrtFamilyResult construct_sqrt_family(std::uint64_t q, const ClassicalCode& c);

} // namespace cwskit
