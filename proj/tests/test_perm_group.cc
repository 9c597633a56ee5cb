#include "oracles.hh"

#include <ramsey/errors.hh>
#include <ramsey/perm_group.hh>

#include <doctest.h>

using namespace ramsey;

namespace
{
    auto shift(int m) -> Permutation
    {
        std::vector<int> images(m);
        for (int v = 0; v < m; ++v)
            images[v] = (v + 1) % m;
        return Permutation{images};
    }

    auto mirror(int m) -> Permutation
    {
        std::vector<int> images(m);
        for (int v = 0; v < m; ++v)
            images[v] = m - 1 - v;
        return Permutation{images};
    }

    auto as_vectors(const PermGroup & g) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out;
        for (auto & p : g.elements())
            out.push_back(p.images());
        return out;
    }

    auto is_closed(const PermGroup & g) -> bool
    {
        for (auto & a : g.elements()) {
            if (! g.contains(a.inverse()))
                return false;
            for (auto & b : g.elements())
                if (! g.contains(a * b))
                    return false;
        }
        return g.contains(Permutation::identity(g.degree()));
    }
}

TEST_CASE("permutations")
{
    auto p = Permutation::parse("1 2 0");
    CHECK(p(0) == 1);
    CHECK(p.to_string() == "1 2 0");
    CHECK((p * p.inverse()).is_identity());
    // (a * b)(v) = a(b(v))
    auto q = Permutation::parse("0 2 1");
    CHECK((p * q).to_string() == "1 0 2");
    CHECK(p.is_even());
    CHECK_FALSE(q.is_even());
    CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), ParameterError);
    CHECK_THROWS_AS(Permutation::parse("0 x"), ParseError);
    CHECK_THROWS_AS(Permutation::parse(""), ParseError);
}

TEST_CASE("named groups have the expected orders")
{
    CHECK(group_make(GroupKind::cyclic, 5).size() == 5);
    CHECK(group_make(GroupKind::dihedral, 5).size() == 10);
    CHECK(group_make(GroupKind::alternating, 4).size() == 12);
    CHECK(group_make(GroupKind::symmetric, 5).size() == 120);
    CHECK(group_make(GroupKind::trivial, 7).size() == 1);
    CHECK(group_make(GroupKind::reflective, 6).size() == 2);
    CHECK(group_make(GroupKind::reflective, 1).size() == 1);
    CHECK(group_make(GroupKind::dihedral, 2).size() == 2);
    CHECK(group_make(GroupKind::dihedral, 1).size() == 1);
    CHECK_THROWS_AS(group_make(GroupKind::symmetric, 11), SizeError);
    CHECK_THROWS_AS(group_make(GroupKind::alternating, 11), SizeError);
    CHECK_THROWS_AS(group_make(GroupKind::cyclic, 0), ParameterError);
}

TEST_CASE("named groups are closed and match their generators")
{
    for (int m = 1; m <= 6; ++m) {
        CAPTURE(m);
        for (auto k : {GroupKind::trivial, GroupKind::cyclic, GroupKind::reflective, GroupKind::dihedral, GroupKind::alternating, GroupKind::symmetric})
            CHECK(is_closed(group_make(k, m)));

        std::vector<Permutation> gens{shift(m)};
        CHECK(as_vectors(closure(gens, m)) == as_vectors(group_make(GroupKind::cyclic, m)));
        gens.push_back(mirror(m));
        CHECK(as_vectors(closure(gens, m)) == as_vectors(group_make(GroupKind::dihedral, m)));
        std::vector<Permutation> refl{mirror(m)};
        CHECK(as_vectors(closure(refl, m)) == as_vectors(group_make(GroupKind::reflective, m)));
    }
    auto a5 = group_make(GroupKind::alternating, 5);
    for (auto & p : a5.elements())
        CHECK(p.is_even());
}

TEST_CASE("closure")
{
    CHECK(closure({}, 4).size() == 1);
    std::vector<Permutation> one{shift(4)};
    CHECK(closure(one, 4).size() == 4);
    std::vector<Permutation> two{shift(4), mirror(4)};
    CHECK(closure(two, 4).size() == 8);
    std::vector<Permutation> sym{shift(6), Permutation::parse("1 0 2 3 4 5")};
    CHECK(closure(sym, 6).size() == 720);
    CHECK_THROWS_AS(closure(sym, 6, 100), SizeError);
    std::vector<Permutation> mixed{shift(4), shift(5)};
    CHECK_THROWS_AS(closure(mixed, 4), ParameterError);

    // Idempotent: closing a group's own elements gives the same group.
    for (auto k : {GroupKind::dihedral, GroupKind::alternating}) {
        auto g = group_make(k, 5);
        CHECK(as_vectors(closure(g.elements(), 5)) == as_vectors(g));
    }
}

TEST_CASE("group parsing")
{
    CHECK(parse_group("1 2 3 0; 3 2 1 0", 4).size() == 8);
    CHECK(parse_group("", 3).size() == 1);
    CHECK_THROWS_AS(parse_group("1 0", 3), ParameterError);
}

TEST_CASE("the public constructor verifies group axioms")
{
    CHECK_NOTHROW(PermGroup(3, {Permutation::identity(3), shift(3), shift(3) * shift(3)}));
    CHECK_THROWS_AS(PermGroup(3, {Permutation::identity(3), shift(3)}), ParameterError);
    CHECK_THROWS_AS(PermGroup(3, {shift(3), shift(3) * shift(3)}), ParameterError);
}

TEST_CASE("orbits: documented examples")
{
    CHECK(orbit(make_class({GraphClass::cmon, 5}), group_make(GroupKind::cyclic, 5)).size() == 1);
    CHECK(orbit(make_class({GraphClass::pmon, 3}), group_make(GroupKind::cyclic, 3)).size() == 3);
    CHECK(orbit(make_class({GraphClass::complete, 4}), group_make(GroupKind::symmetric, 4)).size() == 1);
    CHECK_THROWS_AS(orbit(make_class({GraphClass::pmon, 3}), group_make(GroupKind::cyclic, 4)), ParameterError);

    auto h = make_class({GraphClass::pmon, 4});
    auto members = orbit(h, group_make(GroupKind::trivial, 4));
    REQUIRE(members.size() == 1);
    CHECK(members[0] == h);
}

TEST_CASE("orbit sizes divide the group order and match a direct computation")
{
    const GraphClass classes[] = {GraphClass::pmon, GraphClass::palt, GraphClass::ssc, GraphClass::cmon, GraphClass::complete, GraphClass::mnest};
    for (int m = 2; m <= 6; ++m)
        for (auto k : classes) {
            if ((k == GraphClass::mnest && m % 2) || (k == GraphClass::cmon && m < 2))
                continue;
            auto h = make_class({k, m});
            for (auto kind : {GroupKind::cyclic, GroupKind::reflective, GroupKind::dihedral, GroupKind::alternating, GroupKind::symmetric}) {
                auto g = group_make(kind, m);
                auto members = orbit(h, g);
                CAPTURE(m);
                CAPTURE(class_name(k));
                CHECK(g.size() % members.size() == 0);
                CHECK(members.size() == oracle::orbit_edge_sets(h, as_vectors(g)).size());
                CHECK(std::find(members.begin(), members.end(), h) != members.end());
            }
        }
}

TEST_CASE("symmetric orbit is the full labelled isomorphism class")
{
    // Labelled paths on m vertices: m!/2; labelled stars: m; labelled perfect matchings on 4: 3.
    for (int m = 3; m <= 5; ++m) {
        auto sym = group_make(GroupKind::symmetric, m);
        std::size_t fact = 1;
        for (int i = 2; i <= m; ++i)
            fact *= i;
        CHECK(orbit(make_class({GraphClass::pmon, m}), sym).size() == fact / 2);
        CHECK(orbit(make_class({GraphClass::ssc, m}), sym).size() == std::size_t(m));
    }
    CHECK(orbit(make_class({GraphClass::mnest, 4}), group_make(GroupKind::symmetric, 4)).size() == 3);
}
