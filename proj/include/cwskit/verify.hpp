#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cwskit/corpus.hpp"

namespace cwskit {

// Falsification sweep over generated corpora. Every suite re-derives its
// expectations from independent engines (brute-force oracles against
// structural shortcuts), so a failure is a counterexample, not a test bug.
struct SuiteResult {
    std::string name;
    std::size_t checked = 0;  // instances examined
    std::size_t failures = 0; // counterexamples found
    std::vector<std::string> counterexamples; // replayable dumps, capped
    std::string notes;
    double seconds = 0.0;

    bool pass() const { return failures == 0; }
};

struct VerifyOptions {
    CorpusOptions corpus;            // graph corpus for the graph suites
    std::size_t cws_instances = 2000; // (graph, code) pairs for classification
    std::size_t cws_max_n = 8;
    std::uint64_t seed = 1;
};

// Suite names, in canonical order:
//   diag-range             oracle diagonal distance lies in {delta, delta+1}
//   certificate-iff        certificate exists iff oracle value equals delta
//   fast-path-equivalence  fast path = pruned search = oracle, with witness checks
//   zero-sum-forms         every zero-sum column subset classifies nonempty,
//                          none smaller than delta+1, size-(delta+1) dichotomy
//   half-bound             twice the oracle value strictly exceeds delta
//   degeneracy-conditions  degenerate instances satisfy the short-cycle or
//                          degenerate-words disjunction and min-degree coverage
//   graph6-roundtrip       byte-exact encode/decode over the corpus
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

// All suites in canonical order.
std::vector<SuiteResult> run_all_suites(const VerifyOptions& options);

} // namespace cwskit
