#pragma once

#include <ramsey/coloring.hh>
#include <ramsey/search.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace ramsey
{
    struct CeParams
    {
        int population = 200;
        /// Share of each generation whose mean pulls the edge probabilities.
        double elite_fraction = 0.1;
        /// Weight of the elite mean in the update; 1 replaces the old probabilities outright.
        double smoothing = 0.5;
        int max_generations = 1000;
        /// Best colorings copied unchanged into the next generation.
        int carryover = 10;
        std::uint64_t seed = 1;
        /// Scoring threads; 0 means hardware concurrency.
        unsigned threads = 0;
    };

    struct CeOutcome
    {
        std::optional<Coloring> witness;
        int generations = 0;
        /// Best score after each generation; nondecreasing.
        std::vector<std::int64_t> best_history;
    };

    /// Called after every generation with (generation, best score so far).
    using CeProgress = std::function<void(int, std::int64_t)>;

    /// Cross-entropy search over independent per-edge probabilities of colour 2. Deterministic for
    /// a given seed and parameters; any returned witness has passed the oracle.
    auto ce_search(const RamseyProblem & p, int n, const CeParams & params, const CeProgress & progress = {}) -> CeOutcome;
}
