#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cwskit/cws.hpp"
#include "cwskit/graph.hpp"

namespace cwskit {

struct CorpusOptions {
    std::size_t exhaustive_min_n = 3;
    std::size_t exhaustive_max_n = 7; // hard limit 8
    std::size_t random_count = 500;
    std::size_t random_min_n = 8;
    std::size_t random_max_n = 12;
    std::size_t random_target_degree = 2;
    std::uint64_t seed = 1;
};

// Every connected 4-cycle-free graph with minimum degree >= 2 on exactly n
// labeled vertices, in ascending edge-mask order. Exhaustive, so n is
// capped at 8.
std::vector<Graph> exhaustive_c4free_graphs(std::size_t n);

// Exhaustive small graphs plus seeded random larger ones. Every returned
// graph is connected, 4-cycle-free, with minimum degree >= 2.
std::vector<Graph> c4free_corpus(const CorpusOptions& options = {});

struct RandomCwsInstance {
    CwsCode code;
    std::uint64_t instance_seed; // replays this instance alone
};

// Seeded random (graph, code) pairs for classification sweeps: arbitrary
// graph shapes (no 4-cycle or degree constraint) on 3..max_n vertices with
// 2..8 distinct explicit words.
std::vector<RandomCwsInstance> random_cws_corpus(std::size_t count, std::size_t max_n,
                                                 std::uint64_t seed);

} // namespace cwskit
