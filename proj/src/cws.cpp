#include "cwskit/cws.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "cwskit/errors.hpp"

namespace cwskit {

namespace {

constexpr std::size_t max_linear_words = std::size_t{1} << 20;
constexpr std::size_t max_difference_set = std::size_t{1} << 20;

std::string trimmed(std::string_view line) {
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const std::size_t last = line.find_last_not_of(" \t\r");
    return std::string(line.substr(first, last - first + 1));
}

} // namespace

ClassicalCode ClassicalCode::from_words(std::size_t length, std::vector<BitVector> words) {
    if (words.empty()) throw DomainError("a code needs at least one word");
    std::unordered_set<BitVector, BitVectorHash> seen;
    for (const BitVector& w : words) {
        if (w.size() != length)
            throw DimensionError("codeword length " + std::to_string(w.size()) +
                                 " does not match code length " + std::to_string(length));
        if (!seen.insert(w).second)
            throw DomainError("duplicate codeword " + w.to_string());
    }
    return ClassicalCode(length, std::move(words), CodeOrigin::explicit_list);
}

ClassicalCode ClassicalCode::linear(const BitMatrix& generator) {
    const std::size_t length = generator.cols();
    // Span by coset doubling: a row already in the span leaves the set
    // unchanged, so the count stays a power of two.
    std::vector<BitVector> words{BitVector(length)};
    std::unordered_set<BitVector, BitVectorHash> seen{words.front()};
    for (std::size_t i = 0; i < generator.rows(); ++i) {
        const BitVector& gen = generator.row(i);
        if (seen.contains(gen)) continue;
        if (words.size() * 2 > max_linear_words)
            throw BudgetError("linear code expansion exceeds " +
                              std::to_string(max_linear_words) + " words");
        const std::size_t base = words.size();
        for (std::size_t k = 0; k < base; ++k) {
            BitVector w = words[k] ^ gen;
            seen.insert(w);
            words.push_back(std::move(w));
        }
    }
    std::sort(words.begin(), words.end(), BitVector::value_less);
    return ClassicalCode(length, std::move(words), CodeOrigin::linear);
}

std::size_t classical_distance(const ClassicalCode& c) {
    if (c.word_count() < 2)
        throw DomainError("distance is undefined for a code with fewer than two words");
    const std::vector<BitVector>& words = c.words();
    std::size_t best = c.length() + 1;
    if (c.origin() == CodeOrigin::linear) {
        for (const BitVector& w : words)
            if (w.any()) best = std::min(best, w.count());
        return best;
    }
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, (words[i] ^ words[j]).count());
    return best;
}

std::vector<std::size_t> classical_degenerate_components(const ClassicalCode& c) {
    BitVector used(c.length());
    for (const BitVector& w : c.words()) used |= w;
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < c.length(); ++i)
        if (!used.get(i)) zeros.push_back(i);
    return zeros;
}

CwsCode::CwsCode(Graph g, ClassicalCode c) : graph(std::move(g)), code(std::move(c)) {
    if (code.length() != graph.vertex_count())
        throw DimensionError("code length " + std::to_string(code.length()) +
                             " does not match vertex count " +
                             std::to_string(graph.vertex_count()));
}

const char* Detection::reason() const {
    if (image_in_difference_set) return "image-matches-word-difference";
    if (zero_image_anticommutes) return "zero-image-anticommuting-word";
    return "detected";
}

namespace {

// Shared state for a run of detection tests: the word set always, and the
// pairwise-difference set when it fits the memory cap.
class Detector {
  public:
    explicit Detector(const CwsCode& m) : m_(m) {
        const std::vector<BitVector>& words = m.code.words();
        word_set_.insert(words.begin(), words.end());
        if (words.size() * words.size() <= max_difference_set) {
            differences_.emplace();
            for (std::size_t i = 0; i < words.size(); ++i)
                for (std::size_t j = i + 1; j < words.size(); ++j)
                    differences_->insert(words[i] ^ words[j]);
        }
    }

    Detection check(const PauliVector& e) const {
        if (e.is_identity())
            throw ContractError("detection is undefined for the identity error");
        Detection d;
        d.image = cls_map(m_.graph, e);
        if (d.image.any()) {
            if (differences_) {
                d.image_in_difference_set = differences_->contains(d.image);
            } else {
                for (const BitVector& w : m_.code.words())
                    if (word_set_.contains(w ^ d.image)) {
                        d.image_in_difference_set = true;
                        break;
                    }
            }
        } else {
            for (const BitVector& w : m_.code.words())
                if (BitVector::dot(w, e.x)) {
                    d.zero_image_anticommutes = true;
                    break;
                }
        }
        d.detected = !d.image_in_difference_set && !d.zero_image_anticommutes;
        return d;
    }

  private:
    const CwsCode& m_;
    std::unordered_set<BitVector, BitVectorHash> word_set_;
    std::optional<std::unordered_set<BitVector, BitVectorHash>> differences_;
};

} // namespace

Detection detects_error(const CwsCode& m, const PauliVector& e) {
    return Detector(m).check(e);
}

DistanceResult distance(const CwsCode& m, std::size_t max_weight) {
    const std::size_t n = m.length();
    if (max_weight > n)
        throw DomainError("distance budget " + std::to_string(max_weight) +
                          " exceeds length " + std::to_string(n));
    const Detector detector(m);
    for (std::size_t w = 1; w <= max_weight; ++w) {
        PauliWeightEnumerator errors(n, w);
        PauliVector e;
        while (errors.next(e))
            if (!detector.check(e).detected) {
                DistanceResult r;
                r.status = DistanceStatus::exact;
                r.value = w;
                r.searched_weight = w;
                r.witness = e;
                return r;
            }
    }
    DistanceResult r;
    r.status = DistanceStatus::lower_bound;
    r.value = max_weight + 1;
    r.searched_weight = max_weight;
    return r;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::degenerate: return "degenerate";
        case Verdict::nondegenerate: return "nondegenerate";
        case Verdict::unresolved: return "unresolved";
    }
    return "unresolved";
}

const char* to_string(DistanceStatus s) {
    return s == DistanceStatus::exact ? "exact" : "lower-bound";
}

DegeneracyReport degeneracy_classify(const CwsCode& m, std::size_t budget_cap) {
    const std::size_t n = m.length();
    DegeneracyReport report;
    report.diag_distance = diagonal_distance(m.graph);
    const std::size_t cap = budget_cap == 0 ? n : budget_cap;
    const std::size_t budget = std::min(n, std::max(report.diag_distance.value + 1, cap));
    report.distance = distance(m, budget);
    report.single_word_code = m.code.word_count() == 1;

    if (report.single_word_code) {
        report.verdict = Verdict::degenerate; // by convention, see the flag
    } else if (report.distance.status == DistanceStatus::exact) {
        report.verdict = report.distance.value <= report.diag_distance.value
                             ? Verdict::nondegenerate
                             : Verdict::degenerate;
    } else {
        // All errors below the bound are detected, so the distance is at
        // least distance.value; above diag that alone settles the verdict.
        report.verdict = report.distance.value > report.diag_distance.value
                             ? Verdict::degenerate
                             : Verdict::unresolved;
    }

    const GraphFacts facts = m.graph.facts();
    report.necessary_conditions.has_short_cycle =
        facts.girth.has_value() && *facts.girth <= 4;
    report.necessary_conditions.degenerate_components =
        classical_degenerate_components(m.code);
    report.necessary_conditions.classically_degenerate =
        !report.necessary_conditions.degenerate_components.empty();
    return report;
}

NecessaryConditionReport check_necessary_conditions(const CwsCode& m,
                                                    const DegeneracyReport& report) {
    if (report.single_word_code)
        throw ContractError("single-word reports are conventional and not checkable");
    if (report.verdict != Verdict::degenerate)
        throw ContractError("necessary conditions apply to degenerate verdicts only");

    // Trust nothing: recompute with the same search budget and refuse a
    // report that disagrees.
    const DegeneracyReport fresh = degeneracy_classify(m, report.distance.searched_weight);
    const bool consistent =
        fresh.verdict == report.verdict && fresh.single_word_code == report.single_word_code &&
        fresh.diag_distance.value == report.diag_distance.value &&
        fresh.distance.status == report.distance.status &&
        fresh.distance.value == report.distance.value &&
        fresh.necessary_conditions.has_short_cycle ==
            report.necessary_conditions.has_short_cycle &&
        fresh.necessary_conditions.degenerate_components ==
            report.necessary_conditions.degenerate_components;
    if (!consistent)
        throw ContractError("degeneracy report does not match recomputation");

    NecessaryConditionReport out;
    out.short_cycle_or_degenerate_words = fresh.necessary_conditions.has_short_cycle ||
                                          fresh.necessary_conditions.classically_degenerate;
    out.min_degree_components_covered = true;
    if (!fresh.necessary_conditions.has_short_cycle) {
        const GraphFacts facts = m.graph.facts();
        const std::vector<std::size_t>& zeros = fresh.necessary_conditions.degenerate_components;
        for (std::size_t v : facts.min_degree_vertices)
            if (std::find(zeros.begin(), zeros.end(), v) == zeros.end()) {
                out.min_degree_components_covered = false;
                break;
            }
    }
    out.pass = out.short_cycle_or_degenerate_words && out.min_degree_components_covered;
    return out;
}

CwsCode parse_cws_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<Graph> graph;
    std::vector<BitVector> words;
    while (std::getline(in, line)) {
        const std::string body = trimmed(line);
        if (body.empty()) continue;
        if (!graph) {
            graph = Graph::from_graph6(body);
            continue;
        }
        const BitVector w = BitVector::from_string(body);
        if (w.size() != graph->vertex_count())
            throw ParseError("codeword length " + std::to_string(w.size()) +
                             " does not match vertex count " +
                             std::to_string(graph->vertex_count()));
        words.push_back(w);
    }
    if (!graph) throw ParseError("missing graph6 line");
    if (words.empty()) throw ParseError("missing codeword lines");
    try {
        return CwsCode(*graph, ClassicalCode::from_words(graph->vertex_count(), std::move(words)));
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid code: ") + e.what());
    }
}

std::string format_cws_text(const CwsCode& m) {
    std::string out = m.graph.to_graph6();
    out.push_back('\n');
    for (const BitVector& w : m.code.words()) {
        out += w.to_string();
        out.push_back('\n');
    }
    return out;
}

} // namespace cwskit
