#include "cwskit/structure.hpp"

#include <algorithm>
#include <unordered_map>

namespace cwskit {

ColumnSystem ColumnSystem::from_graph(const Graph& g) {
    const std::size_t n = g.vertex_count();
    ColumnSystem sys;
    sys.dim_ = n;
    sys.cols_.reserve(2 * n);
    sys.origins_.reserve(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        BitVector e(n);
        e.set(j);
        sys.cols_.push_back(std::move(e));
        sys.origins_.push_back(ColumnOrigin::identity);
    }
    for (std::size_t j = 0; j < n; ++j) {
        sys.cols_.push_back(g.neighbors(j));
        sys.origins_.push_back(ColumnOrigin::adjacency);
    }
    return sys;
}

ColumnSystem ColumnSystem::from_columns(std::vector<BitVector> cols,
                                        std::vector<ColumnOrigin> origins) {
    ColumnSystem sys;
    sys.dim_ = cols.empty() ? 0 : cols.front().size();
    for (const auto& c : cols)
        if (c.size() != sys.dim_) throw DimensionError("column system: ragged columns");
    if (origins.empty())
        origins.assign(cols.size(), ColumnOrigin::other);
    else if (origins.size() != cols.size())
        throw DimensionError("column system: origin tag count mismatch");
    sys.cols_ = std::move(cols);
    sys.origins_ = std::move(origins);
    return sys;
}

OverlapCheck column_overlap_check(const ColumnSystem& sys) {
    OverlapCheck result;
    for (std::size_t i = 0; i < sys.size(); ++i)
        for (std::size_t j = i + 1; j < sys.size(); ++j)
            if ((sys.column(i) & sys.column(j)).count() >= 2) {
                result.holds = false;
                result.violating_pair = {i, j};
                return result;
            }
    return result;
}

// Two equal weight-1 columns form a zero-sum pair all by themselves, which
// defeats the size floor the gap exists to provide, so they void the gap.
std::optional<std::string> unit_duplicate(const ColumnSystem& sys) {
    std::unordered_map<BitVector, std::size_t, BitVectorHash> seen;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (sys.column(i).count() != 1) continue;
        const auto [it, fresh] = seen.emplace(sys.column(i), i);
        if (!fresh)
            return "unit column " + std::to_string(i) + " duplicates column " +
                   std::to_string(it->second);
    }
    return std::nullopt;
}

DegreeGapResult degree_gap(const ColumnSystem& sys) {
    std::optional<std::size_t> min_heavy;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const std::size_t w = sys.column(i).count();
        if (w == 0)
            return {std::nullopt, "column " + std::to_string(i) + " is zero"};
        if (w >= 2 && (!min_heavy || w < *min_heavy)) min_heavy = w;
    }
    if (!min_heavy) return {std::nullopt, "no column of weight 2 or more"};
    if (const auto dup = unit_duplicate(sys)) return {std::nullopt, *dup};
    return {*min_heavy, ""};
}

DegreeGapResult degree_gap(const ColumnSystem& sys, std::size_t required_delta) {
    if (required_delta < 2)
        return {std::nullopt, "degree gap must be at least 2"};
    bool attained = false;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const std::size_t w = sys.column(i).count();
        if (w != 1 && w < required_delta)
            return {std::nullopt, "column " + std::to_string(i) + " has weight " +
                                      std::to_string(w) + ", violating the dichotomy for " +
                                      std::to_string(required_delta)};
        if (w == required_delta) attained = true;
    }
    if (!attained)
        return {std::nullopt,
                "no column has weight exactly " + std::to_string(required_delta)};
    if (const auto dup = unit_duplicate(sys)) return {std::nullopt, *dup};
    return {required_delta, ""};
}

const char* to_string(ZeroSumForm f) {
    switch (f) {
        case ZeroSumForm::empty: return "empty";
        case ZeroSumForm::many_unit: return "many-unit";
        case ZeroSumForm::many_heavy: return "many-heavy";
        case ZeroSumForm::balanced_split: return "balanced-split";
        case ZeroSumForm::support_star: return "support-star";
    }
    return "?";
}

ZeroSumClassification classify_zero_sum(const ColumnSystem& sys,
                                        std::span<const std::size_t> subset) {
    for (std::size_t i : subset)
        if (i >= sys.size()) throw ContractError("classify_zero_sum: index out of range");

    BitVector sum(sys.dimension());
    for (std::size_t i : subset) sum ^= sys.column(i);
    if (sum.any()) throw ContractError("classify_zero_sum: subset does not sum to zero");

    const DegreeGapResult gap = degree_gap(sys);
    if (!gap.delta)
        throw DomainError("classify_zero_sum: system has no degree gap (" + gap.reason + ")");
    const std::size_t delta = *gap.delta;

    ZeroSumClassification out;
    out.subset.assign(subset.begin(), subset.end());
    for (std::size_t i : subset) {
        const std::size_t w = sys.column(i).count();
        if (w == 1)
            ++out.unit_count;
        else
            ++out.heavy_count;
    }

    if (subset.empty()) out.forms.push_back(ZeroSumForm::empty);
    if (out.unit_count >= delta + 1) out.forms.push_back(ZeroSumForm::many_unit);
    if (out.heavy_count >= delta + 1) out.forms.push_back(ZeroSumForm::many_heavy);
    if (subset.size() == 2 * delta && out.unit_count == delta && out.heavy_count == delta)
        out.forms.push_back(ZeroSumForm::balanced_split);

    // support_star: some member s of weight delta such that the rest are
    // exactly the unit vectors of supp(s).
    if (subset.size() == delta + 1) {
        for (std::size_t candidate : subset) {
            const BitVector& s = sys.column(candidate);
            if (s.count() != delta) continue;
            std::vector<BitVector> rest;
            bool used_candidate = false;
            for (std::size_t i : subset) {
                if (i == candidate && !used_candidate) {
                    used_candidate = true;
                    continue;
                }
                rest.push_back(sys.column(i));
            }
            std::vector<BitVector> expected;
            s.for_each_set([&](std::size_t j) {
                BitVector e(sys.dimension());
                e.set(j);
                expected.push_back(std::move(e));
            });
            auto key = [](const BitVector& v) { return v.to_string(); };
            std::vector<std::string> a, b;
            for (const auto& v : rest) a.push_back(key(v));
            for (const auto& v : expected) b.push_back(key(v));
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a == b) {
                out.forms.push_back(ZeroSumForm::support_star);
                break;
            }
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> enumerate_zero_sum_subsets(const ColumnSystem& sys,
                                                                 std::size_t max_size,
                                                                 std::size_t budget) {
    const std::size_t m = sys.size();
    const std::size_t half = m / 2;

    // Enumerate subsets of one side with size <= max_size, keyed by sum.
    struct Partial {
        BitVector sum;
        std::vector<std::size_t> indices;
    };
    auto enumerate_side = [&](std::size_t begin, std::size_t end) {
        std::vector<Partial> out;
        out.push_back({BitVector(sys.dimension()), {}});
        std::size_t produced = 1;
        for (std::size_t i = begin; i < end; ++i) {
            const std::size_t existing = out.size();
            for (std::size_t k = 0; k < existing; ++k) {
                if (out[k].indices.size() >= max_size) continue;
                if (++produced > budget)
                    throw BudgetError(
                        "enumerate_zero_sum_subsets: partial-sum budget exceeded; "
                        "result would be incomplete");
                Partial p;
                p.sum = out[k].sum ^ sys.column(i);
                p.indices = out[k].indices;
                p.indices.push_back(i);
                out.push_back(std::move(p));
            }
        }
        return out;
    };

    const std::vector<Partial> left = enumerate_side(0, half);
    const std::vector<Partial> right = enumerate_side(half, m);

    std::unordered_map<BitVector, std::vector<std::size_t>, BitVectorHash> right_by_sum;
    for (std::size_t k = 0; k < right.size(); ++k)
        right_by_sum[right[k].sum].push_back(k);

    std::vector<std::vector<std::size_t>> results;
    for (const Partial& l : left) {
        const auto it = right_by_sum.find(l.sum);
        if (it == right_by_sum.end()) continue;
        for (std::size_t rk : it->second) {
            const Partial& r = right[rk];
            const std::size_t total = l.indices.size() + r.indices.size();
            if (total == 0 || total > max_size) continue;
            std::vector<std::size_t> subset = l.indices;
            subset.insert(subset.end(), r.indices.begin(), r.indices.end());
            results.push_back(std::move(subset));
        }
    }
    std::sort(results.begin(), results.end(),
              [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return results;
}

std::optional<DeltaCertificate> find_delta_certificate(const Graph& g) {
    const GraphFacts facts = g.facts();
    if (facts.has_four_cycle)
        throw DomainError("delta certificate requires a 4-cycle-free graph");
    if (facts.min_degree < 2)
        throw DomainError("delta certificate requires minimum degree >= 2, got " +
                          std::to_string(facts.min_degree));
    const std::size_t delta = facts.min_degree;
    if (delta % 2 != 0) return std::nullopt; // v_prime splits into matched pairs

    // Candidate pairs: adjacent minimum-degree vertices, lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u : facts.min_degree_vertices)
        for (std::size_t v : facts.min_degree_vertices)
            if (u < v && g.has_edge(u, v)) pairs.emplace_back(u, v);

    std::vector<std::size_t> chosen_pairs;
    std::vector<std::size_t> members;

    auto conditions_hold = [&]() -> std::optional<DeltaCertificate> {
        // Every member pair needs a common neighbor (unique: no 4-cycles),
        // and the resulting length-2 paths must be pairwise edge-disjoint.
        DeltaCertificate cert;
        cert.v_prime = members;
        std::sort(cert.v_prime.begin(), cert.v_prime.end());
        std::vector<std::pair<std::size_t, std::size_t>> used_edges;
        for (std::size_t a = 0; a < cert.v_prime.size(); ++a)
            for (std::size_t b = a + 1; b < cert.v_prime.size(); ++b) {
                const std::size_t u = cert.v_prime[a], v = cert.v_prime[b];
                const BitVector common = g.neighbors(u) & g.neighbors(v);
                if (common.none()) return std::nullopt;
                std::size_t mid = 0;
                common.for_each_set([&](std::size_t w) { mid = w; });
                cert.midpoints.emplace_back(u, v, mid);
                used_edges.emplace_back(std::min(u, mid), std::max(u, mid));
                used_edges.emplace_back(std::min(v, mid), std::max(v, mid));
            }
        std::sort(used_edges.begin(), used_edges.end());
        if (std::adjacent_find(used_edges.begin(), used_edges.end()) != used_edges.end())
            return std::nullopt; // paths share an edge
        for (std::size_t pi : chosen_pairs) cert.pairing.push_back(pairs[pi]);
        return cert;
    };

    std::optional<DeltaCertificate> found;
    auto dfs = [&](auto&& self, std::size_t next_pair) -> bool {
        if (members.size() == delta) {
            found = conditions_hold();
            return found.has_value();
        }
        for (std::size_t pi = next_pair; pi < pairs.size(); ++pi) {
            const auto [u, v] = pairs[pi];
            // Members must have exactly one neighbor inside v_prime (their
            // mate), so a new pair may not touch or neighbor chosen members.
            bool ok = true;
            for (std::size_t w : members)
                if (w == u || w == v || g.has_edge(w, u) || g.has_edge(w, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            members.push_back(u);
            members.push_back(v);
            chosen_pairs.push_back(pi);
            if (self(self, pi + 1)) return true;
            members.pop_back();
            members.pop_back();
            chosen_pairs.pop_back();
        }
        return false;
    };
    dfs(dfs, 0);
    return found;
}

} // namespace cwskit
