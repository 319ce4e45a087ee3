#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cwskit/corpus.hpp"
#include "cwskit/cws.hpp"
#include "cwskit/diagdist.hpp"
#include "cwskit/errors.hpp"
#include "cwskit/graph.hpp"
#include "cwskit/report.hpp"
#include "cwskit/search.hpp"
#include "cwskit/verify.hpp"

namespace {

using namespace cwskit;

// Graph source flags shared by `diag` and `search`: exactly one of a graph6
// string, a file, or a named generator.
struct GraphInput {
    std::string graph6;
    std::string file;
    std::string gen;
    std::uint64_t n = 5;
    std::uint64_t q = 2;
    std::uint64_t a = 2;
    std::uint64_t b = 3;
    std::uint64_t target = 2;
    std::string seed = "1";
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t parse_seed(const std::string& text) {
    if (text == "random") {
        std::random_device rd;
        return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    try {
        std::size_t pos = 0;
        const unsigned long long value = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw ParseError("seed must be a nonnegative integer or 'random'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Graph graph_from_file(const std::string& path) {
    std::istringstream lines(read_file(path));
    std::string line;
    while (std::getline(lines, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        return Graph::from_graph6(line.substr(first, last - first + 1));
    }
    throw ParseError("'" + path + "' holds no graph6 line");
}

Graph resolve_graph(const GraphInput& in, Json& generator_info) {
    const int sources =
        (in.graph6.empty() ? 0 : 1) + (in.file.empty() ? 0 : 1) + (in.gen.empty() ? 0 : 1);
    if (sources != 1)
        throw ParseError("give exactly one graph source: --graph6, --file, or --gen");
    if (!in.graph6.empty()) return Graph::from_graph6(in.graph6);
    if (!in.file.empty()) return graph_from_file(in.file);
    if (in.gen == "cycle") return cycle_graph(in.n);
    if (in.gen == "complete") return complete_graph(in.n);
    if (in.gen == "complete-bipartite") return complete_bipartite_graph(in.a, in.b);
    if (in.gen == "petersen") return petersen_graph();
    if (in.gen == "pg") return projective_plane_incidence(in.q);
    if (in.gen == "random-c4free") {
        const RandomC4FreeResult r = random_c4_free(in.n, in.target, parse_seed(in.seed));
        generator_info["target_min_degree"] = r.target_min_degree;
        generator_info["achieved_min_degree"] = r.achieved_min_degree;
        generator_info["met_target"] = r.met_target;
        return r.graph;
    }
    throw ParseError("unknown generator '" + in.gen + "'");
}

Json graph_inputs_json(const GraphInput& in) {
    Json j;
    if (!in.graph6.empty()) j["graph6"] = in.graph6;
    if (!in.file.empty()) j["file"] = in.file;
    if (!in.gen.empty()) {
        j["gen"] = in.gen;
        if (in.gen == "cycle" || in.gen == "complete" || in.gen == "random-c4free")
            j["n"] = in.n;
        if (in.gen == "complete-bipartite") {
            j["a"] = in.a;
            j["b"] = in.b;
        }
        if (in.gen == "pg") j["q"] = in.q;
        if (in.gen == "random-c4free") {
            j["target"] = in.target;
            j["seed"] = in.seed;
        }
    }
    return j;
}

void add_graph_flags(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--graph6", in.graph6, "graph as a graph6 string");
    cmd->add_option("--file", in.file, "file whose first data line is a graph6 string");
    cmd->add_option("--gen", in.gen,
                    "generator: cycle, complete, complete-bipartite, petersen, pg, "
                    "random-c4free");
    cmd->add_option("--n", in.n, "vertex count for cycle, complete, random-c4free");
    cmd->add_option("--q", in.q, "prime order for pg");
    cmd->add_option("--a", in.a, "left part size for complete-bipartite");
    cmd->add_option("--b", in.b, "right part size for complete-bipartite");
    cmd->add_option("--target", in.target, "minimum degree target for random-c4free");
    cmd->add_option("--seed", in.seed, "generator seed (integer or 'random')");
}

void emit(const Json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << text;
}

int fail(const char* type, const std::string& message, int code) {
    Json j;
    Json error;
    error["type"] = type;
    error["message"] = message;
    j["error"] = error;
    std::cerr << j.dump(2) << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"codeword stabilized code toolkit: diagonal distance, degeneracy "
                 "classification, code search"};
    app.require_subcommand(1);
    int exit_code = 0;

    // diag: diagonal distance of a graph.
    auto* diag = app.add_subcommand("diag", "diagonal distance of a graph");
    GraphInput diag_graph;
    bool diag_oracle = false;
    bool diag_fast = false;
    std::uint64_t diag_oracle_cap = 24;
    std::string diag_out;
    add_graph_flags(diag, diag_graph);
    diag->add_flag("--oracle", diag_oracle, "cross-check against the brute-force oracle");
    diag->add_flag("--fast-path", diag_fast,
                   "use the certificate shortcut (4-cycle-free graphs only)");
    diag->add_option("--oracle-cap", diag_oracle_cap, "largest n the oracle accepts");
    diag->add_option("--out", diag_out, "write the JSON report here instead of stdout");
    diag->callback([&] {
        const auto start = std::chrono::steady_clock::now();
        Json generator_info;
        const Graph g = resolve_graph(diag_graph, generator_info);
        const DiagDistanceResult r =
            diag_fast ? fast_path_diagonal_distance(g) : diagonal_distance(g);
        Json results;
        results["graph"] = graph_json(g);
        if (!generator_info.empty()) results["generator"] = generator_info;
        results["diagonal_distance"] = diag_json(r);
        if (diag_oracle) {
            const DiagDistanceResult o = oracle_diagonal_distance(g, diag_oracle_cap);
            results["oracle"] = diag_json(o);
            // The exact engine must reproduce the oracle witness; the fast
            // path only promises the value.
            const bool agree =
                o.value == r.value && (diag_fast || o.witness_u == r.witness_u);
            results["oracle_agrees"] = agree;
            if (!agree) exit_code = 4;
        }
        Json inputs = graph_inputs_json(diag_graph);
        inputs["oracle"] = diag_oracle;
        inputs["fast_path"] = diag_fast;
        inputs["oracle_cap"] = diag_oracle_cap;
        emit(make_report("diag", inputs, results, seconds_since(start)), diag_out);
    });

    // classify: degeneracy verdict for a CWS code file.
    auto* classify = app.add_subcommand("classify", "degeneracy verdict for a CWS code");
    std::string classify_file;
    std::uint64_t classify_max_weight = 0;
    std::string classify_out;
    classify->add_option("--file", classify_file, "CWS code file: graph6 line, then codewords")
        ->required();
    classify->add_option("--max-weight", classify_max_weight,
                         "distance search budget; 0 means automatic");
    classify->add_option("--out", classify_out, "write the JSON report here instead of stdout");
    classify->callback([&] {
        const auto start = std::chrono::steady_clock::now();
        const CwsCode m = parse_cws_text(read_file(classify_file));
        const DegeneracyReport report = degeneracy_classify(m, classify_max_weight);
        Json results;
        results["graph"] = graph_json(m.graph);
        results["word_count"] = m.code.word_count();
        if (m.code.word_count() <= 128) {
            Json words = Json::array();
            for (const BitVector& w : m.code.words()) words.push_back(w.to_string());
            results["words"] = std::move(words);
        }
        results["degeneracy"] = degeneracy_json(report);
        if (report.verdict == Verdict::degenerate && !report.single_word_code) {
            const NecessaryConditionReport check = check_necessary_conditions(m, report);
            Json ncj;
            ncj["short_cycle_or_degenerate_words"] = check.short_cycle_or_degenerate_words;
            ncj["min_degree_components_covered"] = check.min_degree_components_covered;
            ncj["pass"] = check.pass;
            results["necessary_check"] = ncj;
            if (!check.pass) exit_code = 4;
        }
        Json inputs;
        inputs["file"] = classify_file;
        inputs["max_weight"] = classify_max_weight;
        emit(make_report("classify", inputs, results, seconds_since(start)), classify_out);
    });

    // search: clique-based nondegenerate code search.
    auto* search = app.add_subcommand("search", "largest word set with distance >= d");
    GraphInput search_graph;
    std::uint64_t search_d = 2;
    std::string search_mode = "exact";
    std::uint64_t search_budget = 5'000'000;
    std::uint32_t search_restarts = 32;
    std::string search_seed = "1";
    std::string search_out;
    add_graph_flags(search, search_graph);
    search->add_option("--d", search_d, "target distance")->required();
    search->add_option("--mode", search_mode, "clique mode")
        ->check(CLI::IsMember({"exact", "greedy"}));
    search->add_option("--budget", search_budget, "exact-mode branch-and-bound node budget");
    search->add_option("--restarts", search_restarts, "greedy-mode restart count");
    search->add_option("--clique-seed", search_seed, "greedy-mode seed (integer or 'random')");
    search->add_option("--out", search_out, "write the JSON report here instead of stdout");
    search->callback([&] {
        const auto start = std::chrono::steady_clock::now();
        Json generator_info;
        const Graph g = resolve_graph(search_graph, generator_info);
        CliqueOptions options;
        options.mode = search_mode == "greedy" ? CliqueMode::greedy : CliqueMode::exact;
        options.node_budget = search_budget;
        options.restarts = search_restarts;
        options.seed = parse_seed(search_seed);
        const SearchResult r = search_code(g, search_d, options);
        Json results;
        results["graph"] = graph_json(g);
        if (!generator_info.empty()) results["generator"] = generator_info;
        results["search"] = search_json(r);
        const bool meets_target = !(r.verified.status == DistanceStatus::exact &&
                                    r.verified.value < search_d);
        results["verified_meets_target"] = meets_target;
        Json inputs = graph_inputs_json(search_graph);
        inputs["d"] = search_d;
        inputs["mode"] = search_mode;
        inputs["budget"] = search_budget;
        inputs["restarts"] = search_restarts;
        inputs["clique_seed"] = search_seed;
        emit(make_report("search", inputs, results, seconds_since(start)), search_out);
        if (!meets_target)
            exit_code = 4;
        else if (options.mode == CliqueMode::exact && !r.clique_complete)
            exit_code = 3;
    });

    // verify: falsification suites over generated corpora.
    auto* verify = app.add_subcommand("verify", "run falsification suites");
    std::string verify_suite = "all";
    std::uint64_t verify_max_n = 7;
    std::uint64_t verify_random_graphs = 500;
    std::uint64_t verify_cws_instances = 2000;
    std::uint64_t verify_cws_max_n = 8;
    std::string verify_seed = "1";
    std::string verify_out;
    {
        std::vector<std::string> allowed = suite_names();
        allowed.insert(allowed.begin(), "all");
        verify->add_option("--suite", verify_suite, "suite name, or all")
            ->check(CLI::IsMember(allowed));
    }
    verify->add_option("--max-n", verify_max_n, "exhaustive graph corpus upper bound");
    verify->add_option("--random-graphs", verify_random_graphs,
                       "random graphs added to the corpus");
    verify->add_option("--cws-instances", verify_cws_instances,
                       "random CWS codes for the degeneracy suite");
    verify->add_option("--cws-max-n", verify_cws_max_n, "largest random CWS code length");
    verify->add_option("--seed", verify_seed, "corpus seed (integer or 'random')");
    verify->add_option("--out", verify_out, "write the JSON report here instead of stdout");
    verify->callback([&] {
        const auto start = std::chrono::steady_clock::now();
        VerifyOptions options;
        options.corpus.exhaustive_max_n = verify_max_n;
        options.corpus.random_count = verify_random_graphs;
        options.corpus.seed = parse_seed(verify_seed);
        options.cws_instances = verify_cws_instances;
        options.cws_max_n = verify_cws_max_n;
        options.seed = options.corpus.seed;
        std::vector<SuiteResult> suites;
        if (verify_suite == "all")
            suites = run_all_suites(options);
        else
            suites.push_back(run_suite(verify_suite, options));
        Json list = Json::array();
        bool all_pass = true;
        for (const SuiteResult& s : suites) {
            list.push_back(suite_json(s));
            all_pass = all_pass && s.pass();
        }
        Json results;
        results["suites"] = std::move(list);
        results["all_pass"] = all_pass;
        Json inputs;
        inputs["suite"] = verify_suite;
        inputs["max_n"] = verify_max_n;
        inputs["random_graphs"] = verify_random_graphs;
        inputs["cws_instances"] = verify_cws_instances;
        inputs["cws_max_n"] = verify_cws_max_n;
        inputs["seed"] = verify_seed;
        emit(make_report("verify", inputs, results, seconds_since(start)), verify_out);
        if (!all_pass) exit_code = 4;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const BudgetError& e) {
        return fail("budget", e.what(), 3);
    } catch (const ParseError& e) {
        return fail("parse", e.what(), 2);
    } catch (const DimensionError& e) {
        return fail("dimension", e.what(), 2);
    } catch (const ContractError& e) {
        return fail("contract", e.what(), 2);
    } catch (const DomainError& e) {
        return fail("domain", e.what(), 2);
    } catch (const Error& e) {
        return fail("error", e.what(), 2);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 2);
    }
    return exit_code;
}
