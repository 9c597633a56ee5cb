#include "oracles.hh"

#include <ramsey/constructions.hh>
#include <ramsey/errors.hh>
#include <ramsey/search.hh>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sys/stat.h>

using namespace ramsey;
namespace fs = std::filesystem;

namespace
{
    auto pat(GraphClass k, int n, int j = 0) -> PatternSpec
    {
        return pattern_of({k, n, j});
    }

    auto value(const RamseyProblem & p, SearchOptions opts = {}) -> int
    {
        auto r = ramsey_number(p, opts);
        REQUIRE(r.exact());
        for (auto & [n, c] : r.witnesses) {
            CHECK(c.order() == n);
            CHECK(verify_witness(c, p));
        }
        CHECK(r.witnesses.count(r.lower - 1) == (r.lower > 1 ? 1u : 0u));
        return *r.upper;
    }

    auto fig4() -> PatternSpec
    {
        OrderedGraph h{5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 4}}};
        return parse_pattern("g6:" + graph6_encode(h));
    }

    struct TempDir
    {
        fs::path path = fs::temp_directory_path() / ("ramsey-search-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        TempDir() { fs::create_directories(path); }
        ~TempDir()
        {
            std::error_code ec;
            fs::remove_all(path, ec);
        }
        static inline int counter = 0;
    };
}

TEST_CASE("pattern and variant parsing")
{
    auto p = parse_pattern("palt:5");
    CHECK(p.graph == make_class({GraphClass::palt, 5}));
    CHECK(p.text() == "palt:5");
    CHECK(parse_pattern("qmon:5:2").graph == make_class({GraphClass::qmon, 5, 2}));
    CHECK(parse_pattern("g6:A_").graph == OrderedGraph{2, {{0, 1}}});
    CHECK_THROWS_AS(parse_pattern("nope:3"), ParameterError);
    CHECK_THROWS_AS(parse_pattern("mnest:5"), ParameterError);
    CHECK_THROWS_AS(parse_pattern("palt"), ParameterError);
    CHECK_THROWS_AS(parse_pattern("g6:A"), FormatError);

    CHECK(parse_variant("ordered") == Variant::ord);
    CHECK(parse_variant("cyc") == Variant::cyc);
    CHECK(parse_variant("dihedral") == Variant::dih);
    CHECK(parse_variant("standard") == Variant::std);
    CHECK_FALSE(parse_variant("sideways").has_value());

    auto prob = make_problem(parse_pattern("palt:5"), parse_pattern("pmon:4"), Variant::ord);
    CHECK(prob.key() == "ord,palt,5,pmon,4");
    CHECK(prob.label() == "R_ord(palt:5, pmon:4)");
    CHECK(swapped(prob).key() == "ord,pmon,4,palt,5");
}

TEST_CASE("verify_witness examples")
{
    auto k3 = pat(GraphClass::complete, 3);
    auto std_problem = make_problem(k3, k3, Variant::std);
    CHECK(verify_witness(circulant_coloring({5, 1, Colour::one}), std_problem));
    CHECK_FALSE(verify_witness(Coloring(5), std_problem));
}

TEST_CASE("documented values")
{
    CHECK(value(make_problem(pat(GraphClass::pmon, 3), pat(GraphClass::pmon, 3), Variant::ord)) == 5);
    CHECK(value(make_problem(pat(GraphClass::palt, 5), pat(GraphClass::palt, 5), Variant::ord)) == 9);
    CHECK(value(make_problem(fig4(), fig4(), Variant::dih)) == 9);
    CHECK(value(make_problem(pat(GraphClass::pmon, 5), pat(GraphClass::pmon, 5), Variant::cyc)) == 13);
}

TEST_CASE("closed forms for monotone paths, cycles and nested matchings")
{
    for (int a = 2; a <= 4; ++a)
        for (int b = 2; b <= 4; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(value(make_problem(pat(GraphClass::pmon, a), pat(GraphClass::pmon, b), Variant::ord)) == 1 + (a - 1) * (b - 1));
            CHECK(value(make_problem(pat(GraphClass::cmon, a), pat(GraphClass::cmon, b), Variant::ord)) == 2 * a * b - 3 * a - 3 * b + 6);
        }
    for (int a : {4, 6})
        for (int b : {4, 6})
            CHECK(value(make_problem(pat(GraphClass::mnest, a), pat(GraphClass::mnest, b), Variant::ord)) == a + b - 2);
}

TEST_CASE("swapping the patterns leaves the value unchanged")
{
    auto p = make_problem(pat(GraphClass::palt, 4), pat(GraphClass::pmon, 4), Variant::ord);
    CHECK(value(p) == value(swapped(p)));
    auto q = make_problem(pat(GraphClass::ssc, 4), pat(GraphClass::pmon, 3), Variant::cyc);
    CHECK(value(q) == value(swapped(q)));
}

TEST_CASE("cyclic value is invariant under rotating a pattern")
{
    auto base = value(make_problem(pat(GraphClass::pmon, 4), pat(GraphClass::pmon, 4), Variant::cyc));
    for (int s = 0; s < 4; ++s) {
        auto rotated = parse_pattern("g6:" + graph6_encode(rotate(make_class({GraphClass::pmon, 4}), s)));
        CHECK(value(make_problem(rotated, pat(GraphClass::pmon, 4), Variant::cyc)) == base);
    }
}

TEST_CASE("variant chain on small problems")
{
    auto h = pat(GraphClass::palt, 4), g = pat(GraphClass::pmon, 4);
    auto ord = value(make_problem(h, g, Variant::ord));
    auto cyc = value(make_problem(h, g, Variant::cyc));
    auto ref = value(make_problem(h, g, Variant::ref));
    auto dih = value(make_problem(h, g, Variant::dih));
    auto std_ = value(make_problem(h, g, Variant::std));
    CHECK(std_ <= dih);
    CHECK(dih <= std::min(cyc, ref));
    CHECK(std::max(cyc, ref) <= ord);
}

TEST_CASE("custom groups match the named variants")
{
    auto h = pat(GraphClass::palt, 4);
    auto cyc = group_make(GroupKind::cyclic, 4);
    auto custom = make_custom_problem(h, h, cyc, cyc);
    CHECK(custom.variant == Variant::custom);
    CHECK(value(custom) == value(make_problem(h, h, Variant::cyc)));
    auto triv = group_make(GroupKind::trivial, 4);
    CHECK(value(make_custom_problem(h, h, triv, triv)) == value(make_problem(h, h, Variant::ord)));
    CHECK(make_custom_problem(h, h, cyc, cyc).key() != make_custom_problem(h, h, triv, triv).key());
}

TEST_CASE("scan limit leaves an interval")
{
    SearchOptions opts;
    opts.n_max = 5;
    auto r = ramsey_number(make_problem(pat(GraphClass::pmon, 4), pat(GraphClass::pmon, 4), Variant::ord), opts);
    CHECK_FALSE(r.exact());
    CHECK(r.lower == 6);
    CHECK(r.display() == ">= 6");
    CHECK(r.provenance.size() == 5);

    SearchOptions none;
    none.timeout_seconds = 0.0;
    auto t = ramsey_number(make_problem(pat(GraphClass::pmon, 4), pat(GraphClass::pmon, 4), Variant::ord), none);
    CHECK(t.lower >= 1);
    CHECK_FALSE(t.exact());
    CHECK(t.provenance.back().verdict == Verdict::unknown);
    CHECK(t.provenance.back().reason == "timeout");

    opts.n_max = 0;
    CHECK_THROWS_AS(ramsey_number(make_problem(pat(GraphClass::pmon, 3), pat(GraphClass::pmon, 3), Variant::ord), opts), ParameterError);
}

TEST_CASE("a model rejected by the oracle is an internal error")
{
    TempDir dir;
    auto liar = dir.path / "liar";
    std::ofstream{liar} << "#!/bin/sh\necho 's SATISFIABLE'\necho 'v 0'\n";
    ::chmod(liar.c_str(), 0755);

    SearchOptions opts;
    opts.solver = SolverChoice{liar};
    CHECK_THROWS_AS(ramsey_number(make_problem(pat(GraphClass::pmon, 3), pat(GraphClass::pmon, 3), Variant::ord), opts), ConsistencyError);
}

TEST_CASE("results cache records and reuse")
{
    TempDir dir;
    auto p = make_problem(pat(GraphClass::pmon, 3), pat(GraphClass::palt, 4), Variant::cyc);
    SearchOptions opts;
    opts.cache = std::make_shared<ResultsCache>(dir.path);

    auto first = ramsey_number(p, opts);
    REQUIRE(first.exact());
    for (auto & s : first.provenance)
        CHECK_FALSE(s.from_cache);

    std::ifstream in{dir.path / "results.csv"};
    std::string header;
    std::getline(in, header);
    CHECK(header == "variant,class1,params1,class2,params2,n,verdict,witness_path,wall_ms");

    auto records = opts.cache->lookup(p.key());
    REQUIRE(records.size() == first.provenance.size() + 1);
    CHECK(records.back().verdict == "value");
    CHECK(records.back().n == *first.upper);
    for (auto & r : records)
        if (r.verdict == "sat") {
            auto w = Coloring::from_colour_two(graph6_decode([&] {
                std::string s;
                std::ifstream{dir.path / r.witness_path} >> s;
                return s;
            }()));
            CHECK(w.order() == r.n);
            CHECK(verify_witness(w, p));
        }

    SearchOptions again = opts;
    again.cache = std::make_shared<ResultsCache>(dir.path);
    auto second = ramsey_number(p, again);
    CHECK(second.exact());
    CHECK(*second.upper == *first.upper);
    REQUIRE(second.provenance.size() == 1);
    CHECK(second.provenance[0].from_cache);
    CHECK(second.witnesses.at(*first.upper - 1) == first.witnesses.at(*first.upper - 1));

    again.force = true;
    CHECK_FALSE(ramsey_number(p, again).provenance[0].from_cache);

    std::ofstream{dir.path / records.back().witness_path} << "A_\n";
    again.force = false;
    auto third = ramsey_number(p, SearchOptions{again.n_max, {}, {}, std::make_shared<ResultsCache>(dir.path), false});
    CHECK(*third.upper == *first.upper);
    CHECK_FALSE(third.provenance[0].from_cache);
}

TEST_CASE("cache record format")
{
    ResultsCache::Record r{"cyc,pmon,3,palt,4", 5, "sat", "witnesses/x_n5.g6", 1.5};
    auto back = parse_record(format_record(r));
    CHECK(back.key == r.key);
    CHECK(back.n == 5);
    CHECK(back.verdict == "sat");
    CHECK(back.witness_path == r.witness_path);
    CHECK(back.wall_ms == doctest::Approx(1.5));
    CHECK_THROWS_AS(parse_record("ord,pmon,3"), ParseError);
    CHECK_THROWS_AS(parse_record("ord,pmon,3,pmon,3,x,sat,,1"), ParseError);
}

TEST_CASE("table sweep")
{
    TableSpec spec{parse_axis("pmon"), parse_axis("pmon"), parse_range("3..4"), parse_range("3..5"), Variant::cyc};
    auto cells = table_sweep(spec, {}, 4);
    std::map<std::pair<int, int>, int> got;
    for (auto & c : cells) {
        REQUIRE(c.result.exact());
        got[{c.a, c.b}] = *c.result.upper;
    }
    CHECK(got == std::map<std::pair<int, int>, int>{{{3, 3}, 3}, {{3, 4}, 5}, {{3, 5}, 7}, {{4, 4}, 7}, {{4, 5}, 10}});

    auto csv = table_csv(cells);
    CHECK(csv.starts_with("a,b,value,exact,witness\n"));
    CHECK(csv.find("4,5,10,true,") != std::string::npos);
    auto tex = table_latex(spec, cells);
    CHECK(tex.find("\\begin{tabular}") != std::string::npos);
    CHECK(tex.find("$10$") != std::string::npos);

    TableSpec mixed{parse_axis("mnest"), parse_axis("complete"), parse_range("4"), parse_range("3..5"), Variant::cyc};
    std::vector<int> values;
    for (auto & c : table_sweep(mixed, {}, 2))
        values.push_back(*c.result.upper);
    CHECK(values == std::vector<int>{6, 8, 10});

    TableSpec odd{parse_axis("mnest"), parse_axis("pmon"), parse_range("3..4"), parse_range("3"), Variant::ord};
    auto odd_cells = table_sweep(odd, {}, 2);
    REQUIRE(odd_cells.size() == 1);
    CHECK(odd_cells[0].a == 4);

    SearchOptions capped;
    capped.n_max = 6;
    auto partial = table_sweep(TableSpec{parse_axis("pmon"), parse_axis("pmon"), {4}, {5}, Variant::cyc}, capped, 1);
    CHECK(table_latex(spec, partial).find("$\\ge 7$") != std::string::npos);
    CHECK(table_csv(partial).find("4,5,7,false,") != std::string::npos);

    CHECK(parse_range("3..6") == std::vector<int>{3, 4, 5, 6});
    CHECK(parse_range("4") == std::vector<int>{4});
    CHECK_THROWS_AS(parse_axis("qmon"), ParameterError);
    CHECK(parse_axis("qmon:5").at(2).j == 2);
}

TEST_CASE("identical formulas are solved once")
{
    auto h = pat(GraphClass::palt, 5);
    SearchOptions opts;
    opts.memo = std::make_shared<SolveMemo>();
    auto first = ramsey_number(make_problem(h, h, Variant::cyc), opts);
    auto again = ramsey_number(make_problem(h, h, Variant::cyc), opts);
    REQUIRE(first.exact());
    CHECK(*again.upper == *first.upper);
    for (auto & step : again.provenance)
        CHECK(step.solver.starts_with("memo("));
    for (auto & [n, c] : again.witnesses)
        CHECK(verify_witness(c, make_problem(h, h, Variant::cyc)));

    // A different formula misses.
    auto other = ramsey_number(make_problem(h, h, Variant::ord), opts);
    CHECK_FALSE(other.provenance.back().solver.starts_with("memo("));

    SolveMemo memo;
    CnfInstance a;
    a.num_vars = 3;
    a.clauses = {{1, -2}, {3}};
    CnfInstance b = a;
    b.clauses = {{3}, {-2, 1}, {3}};
    SolveOutcome unknown;
    memo.remember(a, unknown);
    CHECK_FALSE(memo.find(a));
    SolveOutcome sat;
    sat.verdict = Verdict::sat;
    sat.model = {true, false, true};
    memo.remember(a, sat);
    REQUIRE(memo.find(b));
    CHECK(memo.find(b)->model == sat.model);
    b.num_vars = 4;
    CHECK_FALSE(memo.find(b));
}
