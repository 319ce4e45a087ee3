#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cwskit/diagdist.hpp"
#include "cwskit/gf2.hpp"
#include "cwskit/graph.hpp"
#include "cwskit/pauli.hpp"

namespace cwskit {

enum class CodeOrigin { explicit_list, linear };

// Binary classical code as an explicit word list. Linear codes are expanded
// eagerly from their generator, so every operation sees the same shape.
// Words are distinct and of equal length; explicit lists keep caller order,
// expanded linear codes are sorted by value.
class ClassicalCode {
  public:
    static ClassicalCode from_words(std::size_t length, std::vector<BitVector> words);

    // Expands all 2^rank codewords spanned by the generator rows.
    static ClassicalCode linear(const BitMatrix& generator);

    std::size_t length() const { return length_; }
    std::size_t word_count() const { return words_.size(); }
    const std::vector<BitVector>& words() const { return words_; }
    CodeOrigin origin() const { return origin_; }

    bool operator==(const ClassicalCode&) const = default;

  private:
    ClassicalCode(std::size_t length, std::vector<BitVector> words, CodeOrigin origin)
        : length_(length), words_(std::move(words)), origin_(origin) {}
    std::size_t length_ = 0;
    std::vector<BitVector> words_;
    CodeOrigin origin_ = CodeOrigin::explicit_list;
};

// Minimum Hamming distance between distinct words; for linear codes this is
// the minimum nonzero word weight. Requires at least two words.
std::size_t classical_distance(const ClassicalCode& c);

// Coordinates that are zero in every word. Nonempty means the code is
// degenerate in the classical sense.
std::vector<std::size_t> classical_degenerate_components(const ClassicalCode& c);

// A CWS code in standard form: stabilizer generators X(e_i)Z(r_i) are
// implied by the graph's adjacency rows r_i and never materialized; word
// operators are Z(c) over the classical code's words.
struct CwsCode {
    Graph graph;
    ClassicalCode code;

    CwsCode(Graph g, ClassicalCode c);

    std::size_t length() const { return graph.vertex_count(); }
};

// Outcome of the two-clause detection test for one error. At most one
// clause can fail: a word difference is never zero, so the failure reason
// is unambiguous.
struct Detection {
    bool detected = false;
    bool image_in_difference_set = false; // clause (i) failed
    bool zero_image_anticommutes = false; // clause (ii) failed
    BitVector image;                      // error-transfer image of the error

    // "detected", "image-matches-word-difference", or
    // "zero-image-anticommuting-word".
    const char* reason() const;
};

// An error is detected iff (i) its image is not a difference of two distinct
// words, and (ii) its image is nonzero or every word operator commutes with
// it. Identity errors are refused.
Detection detects_error(const CwsCode& m, const PauliVector& e);

enum class DistanceStatus { exact, lower_bound };

struct DistanceResult {
    DistanceStatus status = DistanceStatus::exact;
    // exact: the distance; lower_bound: the least value the distance can
    // still take after the budget was exhausted with everything detected.
    std::size_t value = 0;
    // exact: the weight where the witness appeared (all lighter weights were
    // fully enumerated and detected); lower_bound: the exhausted budget.
    std::size_t searched_weight = 0;
    std::optional<PauliVector> witness; // undetected error, exact status only
};

// Enumerates errors in canonical order by increasing symplectic weight up to
// max_weight and stops at the first undetected one.
DistanceResult distance(const CwsCode& m, std::size_t max_weight);

enum class Verdict { degenerate, nondegenerate, unresolved };

const char* to_string(Verdict v);
const char* to_string(DistanceStatus s);

struct NecessaryConditions {
    bool has_short_cycle = false;       // graph girth is 3 or 4
    bool classically_degenerate = false;
    std::vector<std::size_t> degenerate_components;
};

struct DegeneracyReport {
    Verdict verdict = Verdict::unresolved;
    DiagDistanceResult diag_distance;
    DistanceResult distance;
    NecessaryConditions necessary_conditions;
    // Single-word codes have no defined distance-based classification; they
    // are flagged and assigned `degenerate` by convention. The comparison
    // invariants below apply only when this flag is false.
    bool single_word_code = false;
};

// Compares the exact diagonal distance against the code distance searched
// with budget min(n, max(diag + 1, budget_cap)); budget_cap = 0 means n.
// Verdicts: exact d <= diag means nondegenerate; exact d > diag or a lower
// bound above diag means degenerate; a lower bound at or below diag cannot
// separate the two and yields unresolved. With the default budget a
// multi-word code always resolves, since d never exceeds n.
DegeneracyReport degeneracy_classify(const CwsCode& m, std::size_t budget_cap = 0);

struct NecessaryConditionReport {
    bool short_cycle_or_degenerate_words = false; // the main disjunction
    bool min_degree_components_covered = false;   // vacuous when girth <= 4
    bool pass = false;
};

// For a genuinely degenerate report: checks that the graph has a 3- or
// 4-cycle or the code is classically degenerate, and, when the girth is 5
// or more, that every minimum-degree vertex is a degenerate component.
// Recomputes the report's numbers first and refuses (contract error) a
// report that is flagged, not degenerate, or inconsistent with recomputation.
NecessaryConditionReport check_necessary_conditions(const CwsCode& m,
                                                    const DegeneracyReport& report);

// Text format: one graph6 line, then one codeword bitstring per line.
// Blank lines and '#' comments are ignored.
CwsCode parse_cws_text(std::string_view text);
std::string format_cws_text(const CwsCode& m);

} // namespace cwskit
