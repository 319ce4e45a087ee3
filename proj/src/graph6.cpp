#include <sstream>

#include "cwskit/graph.hpp"

namespace cwskit {

namespace {

constexpr std::size_t kGraph6MaxN = 62;
constexpr int kOffset = 63;

// Upper-triangle cell order used by graph6: for each column j >= 1, rows
// i = 0..j-1. Bits are packed into 6-bit groups most significant first.

} // namespace

std::string Graph::to_graph6() const {
    const std::size_t n = vertex_count();
    if (n > kGraph6MaxN)
        throw DomainError("short-form graph6 supports at most 62 vertices; use the "
                          "edge-list text format");
    std::string out;
    out.push_back(static_cast<char>(kOffset + static_cast<int>(n)));
    int group = 0;
    int bits_in_group = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            group = (group << 1) | (has_edge(i, j) ? 1 : 0);
            if (++bits_in_group == 6) {
                out.push_back(static_cast<char>(kOffset + group));
                group = 0;
                bits_in_group = 0;
            }
        }
    }
    if (bits_in_group > 0) {
        group <<= (6 - bits_in_group);
        out.push_back(static_cast<char>(kOffset + group));
    }
    return out;
}

Graph Graph::from_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("graph6: empty input");
    for (char c : text)
        if (c < kOffset || c > 126)
            throw ParseError("graph6: byte out of printable range");

    const std::size_t n = static_cast<std::size_t>(text[0] - kOffset);
    if (n > kGraph6MaxN)
        throw ParseError("graph6: only the short form (n <= 62) is supported");

    const std::size_t cells = n * (n - 1) / 2;
    const std::size_t expected_groups = (cells + 5) / 6;
    if (text.size() != 1 + expected_groups)
        throw ParseError("graph6: length does not match vertex count");

    std::vector<BitVector> adj(n, BitVector(n));
    std::size_t cell = 0, i = 0, j = 1;
    for (std::size_t g = 0; g < expected_groups; ++g) {
        const int group = text[1 + g] - kOffset;
        for (int b = 5; b >= 0 && cell < cells; --b, ++cell) {
            if ((group >> b) & 1) {
                adj[i].set(j);
                adj[j].set(i);
            }
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
        if (g + 1 == expected_groups) {
            // Padding bits after the last cell must be zero.
            const int pad_bits = static_cast<int>(expected_groups * 6 - cells);
            const int pad_mask = (1 << pad_bits) - 1;
            if (group & pad_mask) throw ParseError("graph6: nonzero padding bits");
        }
    }
    return Graph::from_adjacency(std::move(adj));
}

std::string Graph::to_edge_list_text() const {
    std::ostringstream out;
    out << vertex_count() << "\n";
    for (std::size_t i = 0; i < vertex_count(); ++i)
        neighbors(i).for_each_set([&](std::size_t j) {
            if (i < j) out << i << " " << j << "\n";
        });
    return out.str();
}

Graph Graph::from_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    bool have_n = false;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream fields(line);
        if (!have_n) {
            if (!(fields >> n))
                throw ParseError("edge list: first line must be the vertex count");
            std::string rest;
            if (fields >> rest) throw ParseError("edge list: vertex count line has extra fields");
            have_n = true;
            continue;
        }
        std::size_t u, v;
        if (!(fields >> u >> v))
            throw ParseError("edge list: line " + std::to_string(line_no) +
                             " is not an edge \"u v\"");
        std::string rest;
        if (fields >> rest)
            throw ParseError("edge list: line " + std::to_string(line_no) + " has extra fields");
        edges.emplace_back(u, v);
    }
    if (!have_n) throw ParseError("edge list: empty input");
    try {
        return Graph::from_edges(n, edges);
    } catch (const DomainError& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

} // namespace cwskit
