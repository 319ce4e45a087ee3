#include "cwskit/report.hpp"

namespace cwskit {

Json graph_json(const Graph& g) {
    const GraphFacts facts = g.facts();
    Json j;
    j["graph6"] = g.to_graph6();
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["min_degree"] = facts.min_degree;
    j["max_degree"] = facts.max_degree;
    j["girth"] = facts.girth ? Json(*facts.girth) : Json(nullptr);
    j["has_four_cycle"] = facts.has_four_cycle;
    j["connected"] = g.is_connected();
    return j;
}

Json diag_json(const DiagDistanceResult& r) {
    Json j;
    j["value"] = r.value;
    j["witness_u"] = r.witness_u.to_string();
    j["witness_pauli"] = r.witness_pauli.to_string();
    j["method"] = r.method;
    return j;
}

Json distance_json(const DistanceResult& r) {
    Json j;
    j["status"] = to_string(r.status);
    j["value"] = r.value;
    j["searched_weight"] = r.searched_weight;
    j["witness"] = r.witness ? Json(r.witness->to_string()) : Json(nullptr);
    return j;
}

Json degeneracy_json(const DegeneracyReport& r) {
    Json j;
    j["verdict"] = to_string(r.verdict);
    j["single_word_code"] = r.single_word_code;
    j["diagonal_distance"] = diag_json(r.diag_distance);
    j["distance"] = distance_json(r.distance);
    Json nc;
    nc["has_short_cycle"] = r.necessary_conditions.has_short_cycle;
    nc["classically_degenerate"] = r.necessary_conditions.classically_degenerate;
    nc["degenerate_components"] = r.necessary_conditions.degenerate_components;
    j["necessary_conditions"] = nc;
    return j;
}

Json search_json(const SearchResult& r) {
    Json j;
    Json words = Json::array();
    for (const BitVector& w : r.words) words.push_back(w.to_string());
    j["word_count"] = r.words.size();
    j["words"] = std::move(words);
    j["requested_distance"] = r.requested_d;
    j["verified"] = distance_json(r.verified);
    j["clique_method"] = r.clique_method == CliqueMode::exact ? "exact" : "greedy";
    j["clique_complete"] = r.clique_complete;
    j["explored_nodes"] = r.explored_nodes;
    return j;
}

Json suite_json(const SuiteResult& r) {
    Json j;
    j["name"] = r.name;
    j["pass"] = r.pass();
    j["checked"] = r.checked;
    j["failures"] = r.failures;
    j["counterexamples"] = r.counterexamples;
    if (!r.notes.empty()) j["notes"] = r.notes;
    j["seconds"] = r.seconds;
    return j;
}

Json make_report(const std::string& command, Json inputs, Json results, double seconds) {
    Json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    Json timing;
    timing["seconds"] = seconds;
    j["timing"] = std::move(timing);
    return j;
}

} // namespace cwskit
