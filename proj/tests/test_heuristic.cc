#include <ramsey/errors.hh>
#include <ramsey/heuristic.hh>

#include <doctest.h>

using namespace ramsey;

namespace
{
    auto k3_problem() -> RamseyProblem
    {
        auto k3 = pattern_of({GraphClass::complete, 3});
        return make_problem(k3, k3, Variant::std);
    }
}

TEST_CASE("cross-entropy finds a K3 vs K3 witness on five vertices")
{
    auto p = k3_problem();
    int found = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CeParams params;
        params.seed = seed;
        params.max_generations = 200;
        auto out = ce_search(p, 5, params);
        if (out.witness) {
            ++found;
            CHECK(out.witness->order() == 5);
            CHECK(verify_witness(*out.witness, p));
        }
    }
    CHECK(found >= 9);
}

TEST_CASE("no witness where none exists; history is monotone")
{
    CeParams params;
    params.population = 50;
    params.max_generations = 15;
    std::vector<std::pair<int, std::int64_t>> seen;
    auto out = ce_search(k3_problem(), 6, params, [&](int g, std::int64_t best) { seen.emplace_back(g, best); });
    CHECK_FALSE(out.witness);
    CHECK(out.generations == 15);
    REQUIRE(out.best_history.size() == 15);
    REQUIRE(seen.size() == 15);
    for (std::size_t i = 0; i < out.best_history.size(); ++i) {
        CHECK(out.best_history[i] < 0);
        CHECK(seen[i].second == out.best_history[i]);
        if (i > 0)
            CHECK(out.best_history[i] >= out.best_history[i - 1]);
    }
}

TEST_CASE("same seed, same run")
{
    CeParams params;
    params.population = 40;
    params.max_generations = 20;
    params.seed = 99;
    auto palt = pattern_of({GraphClass::palt, 5});
    auto p = make_problem(palt, palt, Variant::ord);
    params.threads = 1;
    auto a = ce_search(p, 8, params);
    params.threads = 4;
    auto b = ce_search(p, 8, params);
    CHECK(a.best_history == b.best_history);
    CHECK(a.generations == b.generations);
    CHECK(a.witness.has_value() == b.witness.has_value());
    if (a.witness && b.witness)
        CHECK(*a.witness == *b.witness);
}

TEST_CASE("small n gives the trivial witness at once")
{
    auto p = make_problem(pattern_of({GraphClass::pmon, 5}), pattern_of({GraphClass::palt, 6}), Variant::ord);
    auto out = ce_search(p, 4, CeParams{});
    REQUIRE(out.witness);
    CHECK(out.witness->order() == 4);
    CHECK(out.generations <= 1);
}

TEST_CASE("parameter validation")
{
    auto p = k3_problem();
    CeParams bad;
    bad.population = 0;
    CHECK_THROWS_AS(ce_search(p, 5, bad), ParameterError);
    bad = {};
    bad.elite_fraction = 0.0;
    CHECK_THROWS_AS(ce_search(p, 5, bad), ParameterError);
    bad = {};
    bad.smoothing = 1.5;
    CHECK_THROWS_AS(ce_search(p, 5, bad), ParameterError);
    CHECK_THROWS_AS(ce_search(p, -1, CeParams{}), ParameterError);
}
