#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cwskit/errors.hpp"
#include "cwskit/graph.hpp"

using namespace cwskit;

namespace {

// Independent encoder, written straight from the format definition: byte
// n+63, then the upper triangle in column order (0,1),(0,2),(1,2),(0,3),...
// packed big-endian six bits per byte, zero-padded, each byte offset by 63.
std::string reference_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out(1, static_cast<char>(63 + n));
    std::vector<bool> bits;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    while (bits.size() % 6 != 0) bits.push_back(false);
    for (std::size_t at = 0; at < bits.size(); at += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) value = value * 2 + (bits[at + b] ? 1 : 0);
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("the 5-cycle encodes as Dhc") {
    CHECK(cycle_graph(5).to_graph6() == "Dhc");
    CHECK(reference_graph6(cycle_graph(5)) == "Dhc");
    CHECK(Graph::from_graph6("Dhc") == cycle_graph(5));
}

TEST_CASE("encoder matches the reference exhaustively for n <= 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const Graph g = graph_from_mask(n, mask);
            const std::string text = g.to_graph6();
            CHECK(text == reference_graph6(g));
            CHECK(Graph::from_graph6(text) == g);
        }
    }
}

TEST_CASE("round trip on larger random graphs") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 6 + rng() % 25;
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() & 1) edges.emplace_back(i, j);
        const Graph g = Graph::from_edges(n, edges);
        const std::string text = g.to_graph6();
        CHECK(text == reference_graph6(g));
        const Graph back = Graph::from_graph6(text);
        CHECK(back == g);
        CHECK(back.to_graph6() == text);
    }
}

TEST_CASE("malformed graph6 inputs are refused") {
    CHECK_THROWS_AS(Graph::from_graph6(""), ParseError);
    CHECK_THROWS_AS(Graph::from_graph6("D"), ParseError);       // truncated body
    CHECK_THROWS_AS(Graph::from_graph6("Dhc?"), ParseError);    // trailing bytes
    CHECK_THROWS_AS(Graph::from_graph6("Dh\x1f"), ParseError);  // below printable range
    CHECK_THROWS_AS(Graph::from_graph6("~??"), ParseError);     // long form unsupported
    CHECK_THROWS_AS(Graph::from_graph6("D\x7f" "c"), ParseError);  // above printable range
}

TEST_CASE("padding bits must be zero") {
    // C5 ends with byte 'c' = 100100 whose final two bits are padding;
    // 'd' = 100101 sets the last padding bit.
    CHECK_THROWS_AS(Graph::from_graph6("Dhd"), ParseError);
}
