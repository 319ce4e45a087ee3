#include "cwskit/diagdist.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwskit/errors.hpp"
#include "cwskit/kernels.hpp"
#include "cwskit/structure.hpp"

namespace cwskit {

BitVector cls_map(const Graph& g, const PauliVector& e) {
    if (e.size() != g.vertex_count())
        throw DimensionError("cls_map: operator length " + std::to_string(e.size()) +
                             " does not match vertex count " +
                             std::to_string(g.vertex_count()));
    BitVector image = e.z;
    e.x.for_each_set([&](std::size_t i) { image ^= g.neighbors(i); });
    return image;
}

namespace {

// Ascending-integer (colex) enumeration of the w-subsets of {0..n-1}.
// Yields supports as sorted index arrays; next() returns false when done.
class ColexSupports {
  public:
    ColexSupports(std::size_t n, std::size_t w) : n_(n), w_(w) {
        for (std::size_t k = 0; k < w; ++k) support_.push_back(k);
    }

    const std::vector<std::size_t>& support() const { return support_; }

    bool next() {
        // Advance the lowest index with room above it; reset those below.
        for (std::size_t i = 0; i < w_; ++i) {
            const std::size_t limit = (i + 1 < w_) ? support_[i + 1] : n_;
            if (support_[i] + 1 < limit) {
                ++support_[i];
                for (std::size_t k = 0; k < i; ++k) support_[k] = k;
                return true;
            }
        }
        return false;
    }

  private:
    std::size_t n_, w_;
    std::vector<std::size_t> support_;
};

DiagDistanceResult make_result(const Graph& g, const BitVector& u, std::string method) {
    BitVector z(g.vertex_count());
    u.for_each_set([&](std::size_t i) { z ^= g.neighbors(i); });
    DiagDistanceResult r;
    r.witness_pauli = PauliVector(z, u);
    r.value = r.witness_pauli.symplectic_weight();
    r.witness_u = u;
    r.method = std::move(method);
    return r;
}

} // namespace

DiagDistanceResult diagonal_distance(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw DomainError("diagonal distance needs at least one vertex");

    std::size_t best = n + 1; // strict upper bound on any symplectic weight
    BitVector best_u;
    for (std::size_t w = 1; w <= n && w <= best; ++w) {
        // Classes of weight == best cannot improve the value but may hold a
        // smaller witness in integer order, so they are still scanned.
        ColexSupports supports(n, w);
        do {
            BitVector u(n);
            BitVector zu(n);
            for (std::size_t i : supports.support()) {
                u.set(i);
                zu ^= g.neighbors(i);
            }
            zu |= u;
            const std::size_t weight = zu.count();
            if (weight < best || (weight == best && (best_u.empty() ||
                                                     BitVector::value_less(u, best_u)))) {
                best = weight;
                best_u = u;
            }
        } while (supports.next());
    }
    return make_result(g, best_u, "exact-search");
}

DiagDistanceResult oracle_diagonal_distance(const Graph& g, std::size_t max_n) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw DomainError("diagonal distance needs at least one vertex");
    if (n > max_n)
        throw BudgetError("oracle refuses " + std::to_string(n) + " vertices (cap " +
                          std::to_string(max_n) + "); use diagonal_distance instead");

    std::vector<std::uint64_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = g.neighbors(i).low_word();

    // Split u into k low bits and n - k high bits; precompute adjacency sums
    // for both halves so each block is one linear kernel scan.
    const std::size_t k = n < 13 ? n : 13;
    std::vector<std::uint64_t> lowz(std::uint64_t{1} << k);
    lowz[0] = 0;
    for (std::uint64_t t = 1; t < lowz.size(); ++t)
        lowz[t] = lowz[t & (t - 1)] ^ rows[static_cast<std::size_t>(std::countr_zero(t))];

    std::vector<std::uint64_t> hiz(std::uint64_t{1} << (n - k));
    hiz[0] = 0;
    for (std::uint64_t h = 1; h < hiz.size(); ++h)
        hiz[h] = hiz[h & (h - 1)] ^ rows[k + static_cast<std::size_t>(std::countr_zero(h))];

    kernels::ScanResult best{UINT32_MAX, 0};
    for (std::uint64_t hi = 0; hi < hiz.size(); ++hi) {
        // Block hi == 0 starts at t = 1 to skip u = 0.
        const std::uint64_t skip = hi == 0 ? 1 : 0;
        const kernels::ScanResult r = kernels::sympweight_scan(
            lowz.data() + skip, lowz.size() - skip, hiz[hi], (hi << k) + skip);
        // Later blocks hold strictly larger u, so ties keep the first block.
        if (r.weight < best.weight) best = r;
    }
    return make_result(g, BitVector::from_word(best.value, n), "oracle");
}

DiagDistanceResult fast_path_diagonal_distance(const Graph& g) {
    const std::optional<DeltaCertificate> cert = find_delta_certificate(g);
    if (cert) {
        BitVector u(g.vertex_count());
        for (std::size_t v : cert->v_prime) u.set(v);
        return make_result(g, u, "fast-path");
    }
    const GraphFacts facts = g.facts();
    BitVector u(g.vertex_count());
    u.set(facts.min_degree_vertices.front());
    return make_result(g, u, "fast-path");
}

} // namespace cwskit
