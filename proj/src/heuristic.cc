#include <ramsey/errors.hh>
#include <ramsey/heuristic.hh>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

using std::int64_t;
using std::uint64_t;
using std::vector;

namespace ramsey
{
    namespace
    {
        auto splitmix(uint64_t & state) -> uint64_t
        {
            uint64_t z = (state += 0x9e3779b97f4a7c15ull);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            return z ^ (z >> 31);
        }

        // One independent stream per (seed, generation, sample), so results do not depend on thread count.
        auto sample(const vector<double> & q, int n, uint64_t seed, int generation, int index) -> Coloring
        {
            uint64_t state = seed;
            state = splitmix(state) ^ static_cast<uint64_t>(generation) * 0x100000001b3ull;
            state = splitmix(state) ^ static_cast<uint64_t>(index);
            splitmix(state);

            Coloring c{n};
            std::size_t e = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++e) {
                    double r = static_cast<double>(splitmix(state) >> 11) * 0x1.0p-53;
                    if (r < q[e])
                        c.set(u, v, Colour::two);
                }
            return c;
        }

        auto check(const CeParams & p) -> void
        {
            if (p.population < 2)
                throw ParameterError{"population must be at least 2"};
            if (! (p.elite_fraction > 0.0 && p.elite_fraction <= 1.0))
                throw ParameterError{"elite fraction must lie in (0, 1]"};
            if (! (p.smoothing > 0.0 && p.smoothing <= 1.0))
                throw ParameterError{"smoothing must lie in (0, 1]"};
            if (p.carryover < 0 || p.carryover >= p.population)
                throw ParameterError{"carryover must lie in [0, population)"};
            if (p.max_generations < 0)
                throw ParameterError{"max_generations must be nonnegative"};
        }
    }

    auto ce_search(const RamseyProblem & p, int n, const CeParams & params, const CeProgress & progress) -> CeOutcome
    {
        check(params);
        if (n < 0 || n > max_order)
            throw ParameterError{"host order must lie in 0.." + std::to_string(max_order)};

        CeOutcome outcome;
        Scorer scorer{p.first.graph, p.mode1, p.second.graph, p.mode2};

        const int edges = n * (n - 1) / 2;
        const int elite = std::max(1, static_cast<int>(std::ceil(params.elite_fraction * params.population)));
        vector<double> q(edges, 0.5);
        vector<Coloring> carried;
        int64_t best = std::numeric_limits<int64_t>::min();

        for (int gen = 0; gen < params.max_generations; ++gen) {
            vector<Coloring> population = carried;
            for (int i = static_cast<int>(population.size()); i < params.population; ++i)
                population.push_back(sample(q, n, params.seed, gen, i));

            auto scores = scorer.batch(population, params.threads);
            vector<int> order(population.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return scores[a] > scores[b]; });

            best = std::max(best, scores[order[0]]);
            outcome.generations = gen + 1;
            outcome.best_history.push_back(best);
            if (progress)
                progress(gen, best);

            if (scores[order[0]] == 0) {
                auto & found = population[order[0]];
                if (! verify_witness(found, p))
                    throw ConsistencyError{"score 0 coloring rejected by the oracle"};
                outcome.witness = found;
                return outcome;
            }

            vector<double> mean(edges, 0.0);
            for (int k = 0; k < elite; ++k) {
                auto & c = population[order[k]];
                std::size_t e = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v, ++e)
                        if (c.colour(u, v) == Colour::two)
                            mean[e] += 1.0;
            }
            for (int e = 0; e < edges; ++e) {
                double updated = (1.0 - params.smoothing) * q[e] + params.smoothing * mean[e] / elite;
                q[e] = std::clamp(updated, 0.01, 0.99);
            }

            carried.clear();
            for (int k = 0; k < params.carryover; ++k)
                carried.push_back(population[order[k]]);
        }
        return outcome;
    }
}
