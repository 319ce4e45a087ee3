#pragma once

#include <cstddef>
#include <string>

#include "cwskit/gf2.hpp"
#include "cwskit/graph.hpp"
#include "cwskit/pauli.hpp"

namespace cwskit {

// Error-transfer image of E = Z(v)X(u) under the graph-state stabilizers:
// v xor the sum of adjacency rows over supp(u). E acts on the graph state
// like the identity exactly when the image is zero, so the nonzero kernel
// {(A u | u) : u != 0} is what the diagonal-distance engines search.
BitVector cls_map(const Graph& g, const PauliVector& e);

struct DiagDistanceResult {
    std::size_t value = 0;     // min symplectic weight over the nonzero kernel
    BitVector witness_u;       // nonzero u realizing the minimum
    PauliVector witness_pauli; // (A u | u); symplectic weight equals value
    std::string method;        // "exact-search", "oracle", or "fast-path"
};

// Exact value by weight-ordered search over u. Weight classes are visited
// in increasing order; a class whose weight exceeds the current best is
// skipped outright, since the symplectic weight of (A u | u) is at least
// the weight of u. Ties break toward the smallest u in integer order with
// vertex 0 least significant, regardless of enumeration order.
DiagDistanceResult diagonal_distance(const Graph& g);

// Reference engine: full unpruned enumeration of all 2^n - 1 nonzero u,
// blocked through the popcount scan kernels. Same value and witness
// contract as diagonal_distance; exists to cross-validate it. Graphs with
// more than max_n vertices are refused.
DiagDistanceResult oracle_diagonal_distance(const Graph& g, std::size_t max_n = 24);

// Dichotomy shortcut for 4-cycle-free graphs of minimum degree >= 2: the
// value is the minimum degree when a matched vertex-set certificate exists
// and minimum degree + 1 otherwise. The witness comes from the certificate
// set, or from the least minimum-degree vertex when there is none.
DiagDistanceResult fast_path_diagonal_distance(const Graph& g);

} // namespace cwskit
