#pragma once

#include <string>

#include "json.hpp"

#include "cwskit/cws.hpp"
#include "cwskit/diagdist.hpp"
#include "cwskit/graph.hpp"
#include "cwskit/search.hpp"
#include "cwskit/verify.hpp"

namespace cwskit {

using Json = nlohmann::ordered_json;

// JSON views of the library result types. Field order is fixed so reports
// diff cleanly; every field except timing is deterministic for fixed inputs.
Json graph_json(const Graph& g);
Json diag_json(const DiagDistanceResult& r);
Json distance_json(const DistanceResult& r);
Json degeneracy_json(const DegeneracyReport& r);
Json search_json(const SearchResult& r);
Json suite_json(const SuiteResult& r);

// Envelope: schema version, command name, echoed inputs, results, timing.
// The timing section is informational only.
Json make_report(const std::string& command, Json inputs, Json results, double seconds);

} // namespace cwskit
