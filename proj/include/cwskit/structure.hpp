#pragma once

#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cwskit/gf2.hpp"
#include "cwskit/graph.hpp"

namespace cwskit {

enum class ColumnOrigin { identity, adjacency, other };

// An ordered collection of GF(2) columns with origin tags. For a graph G on
// n vertices, from_graph builds the 2n columns of [I | A_G]: indices
// 0..n-1 are the identity columns e_j, indices n..2n-1 the adjacency
// columns (neighborhoods).
class ColumnSystem {
  public:
    static ColumnSystem from_graph(const Graph& g);
    static ColumnSystem from_columns(std::vector<BitVector> cols,
                                     std::vector<ColumnOrigin> origins = {});

    std::size_t size() const { return cols_.size(); }
    std::size_t dimension() const { return dim_; }
    const BitVector& column(std::size_t i) const { return cols_[i]; }
    ColumnOrigin origin(std::size_t i) const { return origins_[i]; }

  private:
    std::vector<BitVector> cols_;
    std::vector<ColumnOrigin> origins_;
    std::size_t dim_ = 0;
};

struct OverlapCheck {
    bool holds = true;
    // First pair of columns sharing two or more support coordinates.
    std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
};

// Checks that every pair of distinct columns shares at most one support
// coordinate. For [I | A_G] this holds iff G has no 4-cycle.
OverlapCheck column_overlap_check(const ColumnSystem& sys);

struct DegreeGapResult {
    std::optional<std::size_t> delta;
    std::string reason; // set when delta is absent
};

// The degree gap: the delta >= 2 such that every column has weight 1 or
// weight >= delta, with some column of weight exactly delta. Undefined
// (with reason) when a zero column is present, no column has weight >= 2,
// or two weight-1 columns are equal; an equal pair is already a zero-sum
// subset of size 2, defeating the size floor the gap exists to provide.
DegreeGapResult degree_gap(const ColumnSystem& sys);

// Checks whether `required_delta` is the degree gap: the weight dichotomy
// must hold for it and it must be attained.
DegreeGapResult degree_gap(const ColumnSystem& sys, std::size_t required_delta);

// The five mutually non-exclusive shapes a zero-sum column subset can
// take, relative to the system's degree gap delta:
//   empty          - the empty subset
//   many_unit      - at least delta+1 columns of weight 1
//   many_heavy     - at least delta+1 columns of weight > 1
//   balanced_split - exactly 2*delta columns, delta of weight 1 and delta heavier
//   support_star   - one weight-delta column plus the unit vectors of its support
enum class ZeroSumForm { empty, many_unit, many_heavy, balanced_split, support_star };

const char* to_string(ZeroSumForm f);

struct ZeroSumClassification {
    std::vector<std::size_t> subset;    // the classified column indices
    std::vector<ZeroSumForm> forms;     // every form that holds, ascending enum order
    std::size_t unit_count = 0;         // columns of weight exactly 1
    std::size_t heavy_count = 0;        // columns of weight > 1
};

// Classifies a subset whose columns sum to zero. Throws ContractError if
// the sum is nonzero, DomainError if the system has no degree gap.
ZeroSumClassification classify_zero_sum(const ColumnSystem& sys,
                                        std::span<const std::size_t> subset);

// Every nonempty subset of at most max_size column indices whose GF(2) sum
// is zero, found by meeting in the middle on a half split of the columns
// (partial sums of each half are hashed and joined). Output is sorted by
// subset size, then lexicographically by indices. Throws BudgetError when
// the number of partial sums exceeds `budget` (no silent truncation).
std::vector<std::vector<std::size_t>> enumerate_zero_sum_subsets(
    const ColumnSystem& sys, std::size_t max_size, std::size_t budget = 1u << 22);

// Witness that the diagonal distance of a 4-cycle-free graph with minimum
// degree delta >= 2 attains delta. v_prime is a set of delta minimum-degree
// vertices inducing a perfect matching (each member adjacent to exactly one
// other member), every pair of members joined by a length-2 path, all those
// paths pairwise edge-disjoint. midpoints records (u, v, m) for each
// unordered member pair u < v with common neighbor m (unique: no 4-cycles).
struct DeltaCertificate {
    std::vector<std::size_t> v_prime;
    std::vector<std::pair<std::size_t, std::size_t>> pairing;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> midpoints;
};

// Searches for a certificate; absent iff the diagonal distance is delta+1.
// Requires a 4-cycle-free graph with minimum degree >= 2 (DomainError
// otherwise). Deterministic: pairs are tried in lexicographic order.
std::optional<DeltaCertificate> find_delta_certificate(const Graph& g);

} // namespace cwskit
