#include "cwskit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "cwskit/diagdist.hpp"
#include "cwskit/errors.hpp"
#include "cwskit/structure.hpp"

namespace cwskit {

namespace {

constexpr std::size_t dump_cap = 8;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void record_failure(SuiteResult& r, const std::string& dump) {
    ++r.failures;
    if (r.counterexamples.size() < dump_cap) r.counterexamples.push_back(dump);
}

bool witness_invariants_hold(const Graph& g, const DiagDistanceResult& r) {
    return r.witness_u.any() && r.witness_pauli.symplectic_weight() == r.value &&
           cls_map(g, r.witness_pauli).none();
}

SuiteResult suite_diag_range(const std::vector<Graph>& corpus) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult out;
    out.name = "diag-range";
    for (const Graph& g : corpus) {
        ++out.checked;
        const GraphFacts facts = g.facts();
        const DiagDistanceResult r = oracle_diagonal_distance(g);
        const bool in_range = r.value == facts.min_degree || r.value == facts.min_degree + 1;
        if (!in_range || !witness_invariants_hold(g, r))
            record_failure(out, "graph6=" + g.to_graph6() + " value=" +
                                    std::to_string(r.value) +
                                    " delta=" + std::to_string(facts.min_degree) +
                                    " witness=" + r.witness_u.to_string());
    }
    out.seconds = seconds_since(start);
    return out;
}

SuiteResult suite_certificate_iff(const std::vector<Graph>& corpus) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult out;
    out.name = "certificate-iff";
    for (const Graph& g : corpus) {
        ++out.checked;
        const GraphFacts facts = g.facts();
        const auto cert = find_delta_certificate(g);
        const DiagDistanceResult r = oracle_diagonal_distance(g);
        bool ok = cert.has_value() == (r.value == facts.min_degree);
        if (cert) {
            // The member set must be fixed by the adjacency map.
            BitVector u(g.vertex_count());
            for (std::size_t v : cert->v_prime) u.set(v);
            BitVector au(g.vertex_count());
            u.for_each_set([&](std::size_t i) { au ^= g.neighbors(i); });
            ok = ok && cert->v_prime.size() == facts.min_degree && au == u;
        }
        if (!ok)
            record_failure(out, "graph6=" + g.to_graph6() + " value=" +
                                    std::to_string(r.value) +
                                    " delta=" + std::to_string(facts.min_degree) +
                                    " certificate=" + (cert ? "present" : "absent"));
    }
    out.seconds = seconds_since(start);
    return out;
}

SuiteResult suite_fast_path(const std::vector<Graph>& corpus) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult out;
    out.name = "fast-path-equivalence";
    for (const Graph& g : corpus) {
        ++out.checked;
        const DiagDistanceResult fast = fast_path_diagonal_distance(g);
        const DiagDistanceResult exact = diagonal_distance(g);
        const DiagDistanceResult oracle = oracle_diagonal_distance(g);
        const bool ok = fast.value == exact.value && exact.value == oracle.value &&
                        exact.witness_u == oracle.witness_u &&
                        witness_invariants_hold(g, fast) && witness_invariants_hold(g, exact) &&
                        witness_invariants_hold(g, oracle);
        if (!ok)
            record_failure(out, "graph6=" + g.to_graph6() + " fast=" +
                                    std::to_string(fast.value) +
                                    " exact=" + std::to_string(exact.value) +
                                    " oracle=" + std::to_string(oracle.value));
    }
    out.seconds = seconds_since(start);
    return out;
}

SuiteResult suite_zero_sum(const std::vector<Graph>& corpus) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult out;
    out.name = "zero-sum-forms";
    std::size_t graphs = 0;
    for (const Graph& g : corpus) {
        if (g.vertex_count() > 7) continue; // exhaustive subset sweep only
        ++graphs;
        const ColumnSystem sys = ColumnSystem::from_graph(g);
        const DegreeGapResult gap = degree_gap(sys);
        if (!gap.delta) {
            record_failure(out, "graph6=" + g.to_graph6() + " no degree gap: " + gap.reason);
            continue;
        }
        const std::size_t delta = *gap.delta;
        for (const auto& subset : enumerate_zero_sum_subsets(sys, 2 * delta + 1)) {
            ++out.checked;
            const ZeroSumClassification c = classify_zero_sum(sys, subset);
            std::string why;
            if (c.forms.empty()) why = "no form applies";
            if (subset.size() < delta + 1) why = "smaller than delta+1";
            if (subset.size() == delta + 1) {
                const bool star =
                    std::find(c.forms.begin(), c.forms.end(), ZeroSumForm::support_star) !=
                    c.forms.end();
                bool all_delta = true;
                for (std::size_t i : subset)
                    if (sys.column(i).count() != delta) all_delta = false;
                if (!star && !all_delta) why = "size delta+1 outside both forms";
            }
            if (!why.empty()) {
                std::ostringstream dump;
                dump << "graph6=" << g.to_graph6() << " delta=" << delta << " subset=";
                for (std::size_t i : subset) dump << i << ',';
                dump << ' ' << why;
                record_failure(out, dump.str());
            }
        }
    }
    out.notes = std::to_string(graphs) + " graphs, " + std::to_string(out.checked) +
                " zero-sum subsets";
    out.seconds = seconds_since(start);
    return out;
}

SuiteResult suite_half_bound(const std::vector<Graph>& corpus) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult out;
    out.name = "half-bound";
    for (const Graph& g : corpus) {
        ++out.checked;
        const GraphFacts facts = g.facts();
        const DiagDistanceResult r = oracle_diagonal_distance(g);
        if (2 * r.value <= facts.min_degree)
            record_failure(out, "graph6=" + g.to_graph6() + " value=" +
                                    std::to_string(r.value) +
                                    " delta=" + std::to_string(facts.min_degree));
    }
    out.seconds = seconds_since(start);
    return out;
}

SuiteResult suite_degeneracy(const std::vector<RandomCwsInstance>& instances) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult out;
    out.name = "degeneracy-conditions";
    std::size_t degenerate = 0;
    for (const RandomCwsInstance& inst : instances) {
        ++out.checked;
        const DegeneracyReport report = degeneracy_classify(inst.code);
        if (report.verdict == Verdict::unresolved) {
            record_failure(out, "graph6=" + inst.code.graph.to_graph6() +
                                    " seed=" + std::to_string(inst.instance_seed) +
                                    " unresolved under the default budget");
            continue;
        }
        if (report.single_word_code || report.verdict != Verdict::degenerate) continue;
        ++degenerate;
        const NecessaryConditionReport check = check_necessary_conditions(inst.code, report);
        if (!check.pass) {
            std::ostringstream dump;
            dump << "graph6=" << inst.code.graph.to_graph6()
                 << " seed=" << inst.instance_seed << " words=";
            for (const BitVector& w : inst.code.code.words()) dump << w.to_string() << ',';
            dump << " disjunction=" << check.short_cycle_or_degenerate_words
                 << " min-degree-covered=" << check.min_degree_components_covered;
            record_failure(out, dump.str());
        }
    }
    out.notes = std::to_string(degenerate) + " degenerate instances";
    out.seconds = seconds_since(start);
    return out;
}

SuiteResult suite_graph6(const std::vector<Graph>& corpus) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult out;
    out.name = "graph6-roundtrip";
    for (const Graph& g : corpus) {
        ++out.checked;
        const std::string text = g.to_graph6();
        const Graph back = Graph::from_graph6(text);
        if (back != g || back.to_graph6() != text)
            record_failure(out, "graph6=" + text + " round trip changed the graph");
    }
    out.seconds = seconds_since(start);
    return out;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "diag-range",  "certificate-iff",       "fast-path-equivalence",
        "zero-sum-forms", "half-bound",         "degeneracy-conditions",
        "graph6-roundtrip",
    };
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
    if (name == "degeneracy-conditions")
        return suite_degeneracy(
            random_cws_corpus(options.cws_instances, options.cws_max_n, options.seed));

    const std::vector<Graph> corpus = c4free_corpus(options.corpus);
    if (name == "diag-range") return suite_diag_range(corpus);
    if (name == "certificate-iff") return suite_certificate_iff(corpus);
    if (name == "fast-path-equivalence") return suite_fast_path(corpus);
    if (name == "zero-sum-forms") return suite_zero_sum(corpus);
    if (name == "half-bound") return suite_half_bound(corpus);
    if (name == "graph6-roundtrip") return suite_graph6(corpus);
    throw DomainError("unknown suite '" + name + "'");
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& options) {
    const std::vector<Graph> corpus = c4free_corpus(options.corpus);
    std::vector<SuiteResult> out;
    out.push_back(suite_diag_range(corpus));
    out.push_back(suite_certificate_iff(corpus));
    out.push_back(suite_fast_path(corpus));
    out.push_back(suite_zero_sum(corpus));
    out.push_back(suite_half_bound(corpus));
    out.push_back(suite_degeneracy(
        random_cws_corpus(options.cws_instances, options.cws_max_n, options.seed)));
    out.push_back(suite_graph6(corpus));
    return out;
}

} // namespace cwskit
