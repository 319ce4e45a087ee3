#include "cwskit/corpus.hpp"

#include <bit>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>

#include "cwskit/errors.hpp"

namespace cwskit {

namespace {

bool min_degree_at_least(const std::vector<BitVector>& rows, std::size_t bound) {
    for (const BitVector& r : rows)
        if (r.count() < bound) return false;
    return true;
}

bool four_cycle_free(const std::vector<BitVector>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if ((rows[i] & rows[j]).count() >= 2) return false;
    return true;
}

bool connected(const std::vector<BitVector>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) return true;
    BitVector seen(n);
    seen.set(0);
    std::vector<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t v = queue.back();
        queue.pop_back();
        rows[v].for_each_set([&](std::size_t w) {
            if (!seen.get(w)) {
                seen.set(w);
                queue.push_back(w);
            }
        });
    }
    return seen.count() == n;
}

} // namespace

std::vector<Graph> exhaustive_c4free_graphs(std::size_t n) {
    if (n < 3 || n > 8)
        throw DomainError("exhaustive corpus covers 3..8 vertices, got " + std::to_string(n));
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);

    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << cells.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        // Minimum degree 2 needs at least n edges; most masks fail here.
        if (static_cast<std::size_t>(std::popcount(mask)) < n) continue;
        std::vector<BitVector> rows(n, BitVector(n));
        for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
            const auto [i, j] = cells[static_cast<std::size_t>(std::countr_zero(bits))];
            rows[i].set(j);
            rows[j].set(i);
        }
        if (!min_degree_at_least(rows, 2)) continue;
        if (!four_cycle_free(rows)) continue;
        if (!connected(rows)) continue;
        out.push_back(Graph::from_adjacency(std::move(rows)));
    }
    return out;
}

std::vector<Graph> c4free_corpus(const CorpusOptions& options) {
    std::vector<Graph> out;
    for (std::size_t n = options.exhaustive_min_n; n <= options.exhaustive_max_n; ++n) {
        std::vector<Graph> level = exhaustive_c4free_graphs(n);
        out.insert(out.end(), std::make_move_iterator(level.begin()),
                   std::make_move_iterator(level.end()));
    }
    if (options.random_count == 0) return out;
    if (options.random_min_n > options.random_max_n)
        throw DomainError("random corpus range is empty");

    std::size_t made = 0;
    std::size_t n = options.random_min_n;
    std::uint64_t attempt = 0;
    const std::uint64_t attempt_cap = std::uint64_t{100} * options.random_count + 100;
    while (made < options.random_count) {
        if (attempt >= attempt_cap)
            throw BudgetError("random corpus generation stalled after " +
                              std::to_string(attempt) + " attempts");
        RandomC4FreeResult r =
            random_c4_free(n, options.random_target_degree, options.seed + attempt);
        ++attempt;
        n = n == options.random_max_n ? options.random_min_n : n + 1;
        if (!r.met_target) continue;
        out.push_back(std::move(r.graph));
        ++made;
    }
    return out;
}

std::vector<RandomCwsInstance> random_cws_corpus(std::size_t count, std::size_t max_n,
                                                 std::uint64_t seed) {
    if (max_n < 3 || max_n > 62)
        throw DomainError("instance corpus needs 3 <= max_n <= 62, got " +
                          std::to_string(max_n));
    std::vector<RandomCwsInstance> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::uint64_t instance_seed = seed + k;
        std::mt19937_64 rng(instance_seed);
        const std::size_t n = 3 + rng() % (max_n - 2);

        std::vector<BitVector> rows(n, BitVector(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() & 1) {
                    rows[i].set(j);
                    rows[j].set(i);
                }

        // Half the instances use the minimum word count: two-word codes are
        // where degenerate verdicts actually occur, so an even spread would
        // leave the degenerate branch of downstream checks almost untouched.
        const std::size_t want = (rng() & 1) ? 2 : 2 + rng() % 7;
        std::unordered_set<BitVector, BitVectorHash> seen;
        std::vector<BitVector> words;
        while (words.size() < want) {
            BitVector w = BitVector::from_word(rng() & ((std::uint64_t{1} << n) - 1), n);
            if (seen.insert(w).second) words.push_back(std::move(w));
        }
        out.push_back({CwsCode(Graph::from_adjacency(std::move(rows)),
                               ClassicalCode::from_words(n, std::move(words))),
                       instance_seed});
    }
    return out;
}

} // namespace cwskit
