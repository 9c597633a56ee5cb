#include "oracles.hh"

#include <ramsey/constructions.hh>
#include <ramsey/embeddings.hh>
#include <ramsey/errors.hh>

#include <doctest.h>

#include <random>

using namespace ramsey;

namespace
{
    auto cls(GraphClass k, int n, int j = 0) -> OrderedGraph { return make_class({k, n, j}); }

    auto small_patterns() -> std::vector<OrderedGraph>
    {
        return {cls(GraphClass::pmon, 2), cls(GraphClass::pmon, 3), cls(GraphClass::palt, 4), cls(GraphClass::pralt, 4),
            cls(GraphClass::cmon, 3), cls(GraphClass::cmon, 4), cls(GraphClass::ssc, 4), cls(GraphClass::mnest, 4),
            cls(GraphClass::qmon, 4, 1), OrderedGraph(3), OrderedGraph(4, {{0, 2}}), OrderedGraph(1)};
    }

    auto perms_of(const PermGroup & g) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out;
        for (auto & p : g.elements())
            out.push_back(p.images());
        return out;
    }

    auto rotation_stabiliser(const OrderedGraph & h) -> std::uint64_t
    {
        std::uint64_t s = 0;
        for (int t = 0; t < h.order(); ++t)
            s += rotate(h, t) == h;
        return s;
    }
}

TEST_CASE("documented counting examples")
{
    auto edge = cls(GraphClass::pmon, 2), p3 = cls(GraphClass::pmon, 3);
    CHECK(count_embeddings(Coloring(3), edge, Colour::one, EmbedMode::ordered()) == 3);
    CHECK(count_embeddings(Coloring(4), p3, Colour::one, EmbedMode::cyclic()) == 12);

    Coloring c{3};
    c.set(1, 2, Colour::two);
    CHECK(count_embeddings(c, p3, Colour::one, EmbedMode::ordered()) == 0);
}

TEST_CASE("has_forbidden examples")
{
    auto k3 = cls(GraphClass::complete, 3);
    CHECK(has_forbidden(Coloring(5), k3, Colour::one, EmbedMode::ordered()));
    CHECK_FALSE(has_forbidden(Coloring(5), k3, Colour::two, EmbedMode::ordered()));
    auto pentagon = circulant_coloring({5, 1, Colour::one});
    CHECK_FALSE(has_forbidden(pentagon, k3, Colour::one, EmbedMode::ordered()));
    CHECK_FALSE(has_forbidden(pentagon, k3, Colour::two, EmbedMode::ordered()));
}

TEST_CASE("score examples")
{
    auto edge = cls(GraphClass::pmon, 2), p3 = cls(GraphClass::pmon, 3);
    auto ord = EmbedMode::ordered();
    CHECK(score(Coloring(2), edge, edge, ord, ord) == -1);
    CHECK(score(Coloring(3), p3, p3, ord, ord) == -1);
    auto k3 = cls(GraphClass::complete, 3);
    auto sym = EmbedMode::group(group_make(GroupKind::symmetric, 3));
    CHECK(score(circulant_coloring({5, 1, Colour::one}), k3, k3, sym, sym) == 0);
}

TEST_CASE("monochromatic hosts give binomial counts")
{
    for (int n = 1; n <= 8; ++n)
        for (auto & h : small_patterns()) {
            if (h.order() > 5)
                continue;
            CAPTURE(n);
            CAPTURE(graph6_encode(h));
            auto k = h.order();
            CHECK(count_embeddings(Coloring(n, Colour::one), h, Colour::one, EmbedMode::ordered()) == oracle::binomial(n, k));
            CHECK(count_embeddings(Coloring(n, Colour::two), h, Colour::two, EmbedMode::cyclic()) == std::uint64_t(k) * oracle::binomial(n, k));
            if (h.size() > 0)
                CHECK(count_embeddings(Coloring(n, Colour::one), h, Colour::two, EmbedMode::ordered()) == 0);
        }
}

TEST_CASE("ordered, cyclic and group counts agree with brute force on random colorings")
{
    std::mt19937_64 rng{20241017};
    for (int n = 1; n <= 7; ++n)
        for (int trial = 0; trial < 30; ++trial) {
            auto c = oracle::random_coloring(n, rng, 0.2 + 0.6 * (trial % 3) / 2.0);
            for (auto & h : small_patterns())
                for (auto colour : {Colour::one, Colour::two}) {
                    CAPTURE(n);
                    CAPTURE(graph6_encode(h));
                    CHECK(count_embeddings(c, h, colour, EmbedMode::ordered()) == oracle::count_ordered(c, h, colour));
                    CHECK(count_embeddings(c, h, colour, EmbedMode::cyclic()) == oracle::count_cyclic(c, h, colour));
                    auto dih = group_make(GroupKind::dihedral, h.order());
                    CHECK(count_embeddings(c, h, colour, EmbedMode::group(dih)) == oracle::count_group(c, h, colour, perms_of(dih)));
                    if (h.order() <= 4) {
                        auto sym = group_make(GroupKind::symmetric, h.order());
                        CHECK(count_embeddings(c, h, colour, EmbedMode::group(sym)) == oracle::count_group(c, h, colour, perms_of(sym)));
                    }
                }
        }
}

TEST_CASE("trivial and cyclic groups against ordered and cyclic modes on 1000 colorings per size")
{
    std::mt19937_64 rng{7};
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 1000; ++trial) {
            auto c = oracle::random_coloring(n, rng);
            for (auto & h : small_patterns()) {
                auto m = h.order();
                auto trivial = EmbedMode::group(group_make(GroupKind::trivial, m));
                auto cyclic_group = EmbedMode::group(group_make(GroupKind::cyclic, m));
                for (auto colour : {Colour::one, Colour::two}) {
                    auto ord = count_embeddings(c, h, colour, EmbedMode::ordered());
                    auto cyc = count_embeddings(c, h, colour, EmbedMode::cyclic());
                    auto grp = count_embeddings(c, h, colour, cyclic_group);
                    CHECK(count_embeddings(c, h, colour, trivial) == ord);
                    // Orbit members are deduplicated as graphs, so rotation-symmetric patterns
                    // are counted once per distinct rotation instead of once per shift.
                    CHECK(cyc == grp * rotation_stabiliser(h));
                    CHECK((cyc > 0) == (grp > 0));
                    CHECK(has_forbidden(c, h, colour, EmbedMode::ordered()) == (ord > 0));
                    CHECK(has_forbidden(c, h, colour, EmbedMode::cyclic()) == (cyc > 0));
                }
            }
        }
}

TEST_CASE("pattern vertex deletion heredity")
{
    std::mt19937_64 rng{99};
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + trial % 5;
        auto c = oracle::random_coloring(n, rng);
        for (auto & h : small_patterns())
            for (auto colour : {Colour::one, Colour::two}) {
                if (! has_forbidden(c, h, colour, EmbedMode::ordered()))
                    for (int drop = 0; drop < n; ++drop) {
                        std::vector<int> keep;
                        for (int v = 0; v < n; ++v)
                            if (v != drop)
                                keep.push_back(v);
                        CHECK_FALSE(has_forbidden(c.induced(keep), h, colour, EmbedMode::ordered()));
                    }
                if (! has_forbidden(c, h, colour, EmbedMode::cyclic())) {
                    std::vector<int> prefix(n - 1);
                    std::iota(prefix.begin(), prefix.end(), 0);
                    CHECK_FALSE(has_forbidden(c.induced(prefix), h, colour, EmbedMode::cyclic()));
                }
            }
    }
}

TEST_CASE("reflecting pattern and host preserves ordered counts")
{
    std::mt19937_64 rng{5};
    for (int trial = 0; trial < 200; ++trial) {
        auto c = oracle::random_coloring(2 + trial % 7, rng);
        for (auto & h : small_patterns())
            for (auto colour : {Colour::one, Colour::two})
                CHECK(count_embeddings(c, h, colour, EmbedMode::ordered()) == count_embeddings(c.reflected(), reflect(h), colour, EmbedMode::ordered()));
    }
}

TEST_CASE("patterns larger than the host never embed")
{
    CHECK(count_embeddings(Coloring(4), cls(GraphClass::pmon, 5), Colour::one, EmbedMode::ordered()) == 0);
    CHECK(count_embeddings(Coloring(4), cls(GraphClass::pmon, 5), Colour::one, EmbedMode::cyclic()) == 0);
    CHECK(count_embeddings(Coloring(0), cls(GraphClass::pmon, 1), Colour::one, EmbedMode::ordered()) == 0);
}

TEST_CASE("group degree must match the pattern")
{
    CHECK_THROWS_AS(count_embeddings(Coloring(5), cls(GraphClass::pmon, 3), Colour::one, EmbedMode::group(group_make(GroupKind::cyclic, 4))), ParameterError);
}

TEST_CASE("counting works at the 64-vertex limit")
{
    auto edge = cls(GraphClass::pmon, 2);
    CHECK(count_embeddings(Coloring(64), edge, Colour::one, EmbedMode::ordered()) == 64 * 63 / 2);
    CHECK(count_embeddings(Coloring(64), cls(GraphClass::pmon, 3), Colour::one, EmbedMode::ordered()) == oracle::binomial(64, 3));
}

TEST_CASE("batch scoring is positional and matches single scoring")
{
    std::mt19937_64 rng{11};
    std::vector<Coloring> batch;
    for (int i = 0; i < 64; ++i)
        batch.push_back(oracle::random_coloring(9, rng));
    auto h1 = cls(GraphClass::palt, 4), h2 = cls(GraphClass::pmon, 4);
    auto cyc = EmbedMode::cyclic(), ord = EmbedMode::ordered();
    for (unsigned threads : {1u, 4u}) {
        auto scores = batch_score(batch, h1, h2, cyc, ord, threads);
        REQUIRE(scores.size() == batch.size());
        for (std::size_t i = 0; i < batch.size(); ++i) {
            std::int64_t expected = -static_cast<std::int64_t>(oracle::count_cyclic(batch[i], h1, Colour::one) + oracle::count_ordered(batch[i], h2, Colour::two));
            CHECK(scores[i] == expected);
        }
    }
    Scorer scorer{h1, cyc, h2, ord};
    CHECK(scorer.is_witness(Coloring(3)));
    CHECK_FALSE(scorer.is_witness(Coloring(9)));
}
