#include <ramsey/cnf.hh>
#include <ramsey/constructions.hh>
#include <ramsey/errors.hh>
#include <ramsey/heuristic.hh>
#include <ramsey/search.hh>
#include <ramsey/solver.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ramsey;
using std::cerr;
using std::cout;
using std::string;
namespace fs = std::filesystem;

namespace
{
    enum Exit
    {
        ok = 0,
        usage = 1,
        environment = 2,
        consistency = 3
    };

    auto read_file(const fs::path & path) -> string
    {
        std::ifstream in{path, std::ios::binary};
        if (! in)
            throw EnvironmentError{"cannot read " + path.string()};
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    auto write_file(const fs::path & path, const string & text) -> void
    {
        std::ofstream out{path, std::ios::binary};
        if (! out || ! (out << text))
            throw EnvironmentError{"cannot write " + path.string()};
    }

    auto read_witness(const fs::path & path) -> Coloring
    {
        std::istringstream in{read_file(path)};
        string line;
        std::getline(in, line);
        while (! line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        return Coloring::from_colour_two(graph6_decode(line));
    }

    auto print_coloring(const Coloring & c) -> void
    {
        cout << "graph6 " << graph6_encode(c.colour_class(Colour::two)) << "\n";
        for (int u = 0; u < c.order(); ++u)
            for (int v = u + 1; v < c.order(); ++v)
                cout << u << " " << v << " " << static_cast<int>(c.colour(u, v)) << "\n";
    }

    // Flags shared by the problem-shaped commands.
    struct ProblemFlags
    {
        string h1, h2, variant = "ordered", group1, group2;

        auto add(CLI::App * cmd) -> void
        {
            cmd->add_option("--h1", h1, "first pattern, forbidden in colour 1 (name:n[:j] or g6:<graph6>)")->required();
            cmd->add_option("--h2", h2, "second pattern, forbidden in colour 2")->required();
            cmd->add_option("--variant", variant, "ord|cyc|ref|dih|alt|std|group")->capture_default_str();
            cmd->add_option("--group1", group1, "generators for h1 with --variant group, e.g. \"1 2 0; 0 2 1\"");
            cmd->add_option("--group2", group2, "generators for h2 with --variant group");
        }

        auto build() const -> RamseyProblem
        {
            auto v = parse_variant(variant);
            if (! v)
                throw ParameterError{"unknown variant '" + variant + "'"};
            auto first = parse_pattern(h1), second = parse_pattern(h2);
            if (*v == Variant::custom)
                return make_custom_problem(first, second, parse_group(group1, first.graph.order()), parse_group(group2, second.graph.order()));
            if (! group1.empty() || ! group2.empty())
                throw ParameterError{"--group1/--group2 need --variant group"};
            return make_problem(first, second, *v);
        }
    };

    struct SolverFlags
    {
        string solver;
        double timeout = -1.0;

        auto add(CLI::App * cmd) -> void
        {
            cmd->add_option("--solver", solver, "external DIMACS solver (default: $RAMSEY_SAT_SOLVER, else embedded)");
            cmd->add_option("--timeout-s", timeout, "seconds per solver call; negative means no limit");
        }

        auto choice() const -> SolverChoice { return SolverChoice::from_flag_or_env(solver); }
        auto limit() const -> std::optional<double> { return timeout < 0 ? std::nullopt : std::optional{timeout}; }
    };

    auto mode_for(const string & variant, const string & group, int order) -> EmbedMode
    {
        auto v = parse_variant(variant);
        if (! v)
            throw ParameterError{"unknown variant '" + variant + "'"};
        if (*v == Variant::custom)
            return EmbedMode::group(parse_group(group, order));
        return variant_mode(*v, order);
    }

    auto parse_construction(const string & text) -> std::pair<Coloring, string>
    {
        std::vector<string> parts;
        std::istringstream in{text};
        for (string part; std::getline(in, part, ':');)
            parts.push_back(part);
        auto arg = [&](std::size_t i) {
            if (i >= parts.size())
                throw ParameterError{"construction '" + text + "' is missing parameters"};
            return std::stoi(parts[i]);
        };
        const auto & name = parts.empty() ? string{} : parts[0];
        if (name == "block")
            return {block_coloring(arg(1), arg(2)), "block coloring a=" + parts[1] + " b=" + parts[2]};
        if (name == "block-cyclic")
            return {block_coloring_cyclic(arg(1), arg(2)), "cyclic block coloring a=" + parts[1] + " b=" + parts[2]};
        if (name == "nested")
            return {nested_matching_ordered_coloring(arg(1), arg(2)), "nested matching coloring a=" + parts[1] + " b=" + parts[2]};
        if (name == "circulant") {
            Colour near = parts.size() > 3 ? parse_colour(arg(3)) : Colour::one;
            return {circulant_coloring({arg(1), arg(2), near}), "circulant coloring n=" + parts[1] + " threshold=" + parts[2] + " near=" + std::to_string(static_cast<int>(near))};
        }
        throw ParameterError{"unknown construction '" + text + "' (block:a:b, block-cyclic:a:b, nested:a:b, circulant:n:d[:near])"};
    }

    auto provenance(int argc, char ** argv, const string & solver, std::optional<std::uint64_t> seed) -> string
    {
        string line = "# provenance:";
        for (int i = 0; i < argc; ++i) {
            string arg = argv[i];
            bool quote = arg.empty() || arg.find_first_of(" \t;\"'") != string::npos;
            line += " " + (quote ? "'" + arg + "'" : arg);
        }
        line += " | solver=" + solver;
        if (seed)
            line += " seed=" + std::to_string(*seed);
        return line;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Permutational Ramsey numbers of ordered graphs via SAT, with an embedding oracle"};
    app.require_subcommand(1);

    string cache_dir = "results";
    app.add_option("--cache", cache_dir, "results cache directory")->capture_default_str();

    // construct
    auto construct = app.add_subcommand("construct", "print a class graph or an explicit coloring");
    string class_name_flag, coloring_spec, construct_out;
    int class_n = 0, class_j = 0;
    construct->add_option("--class", class_name_flag, "pmon|cmon|palt|pralt|ssc|mnest|complete|qmon");
    construct->add_option("--n", class_n, "order");
    construct->add_option("--j", class_j, "deleted edge for qmon");
    construct->add_option("--coloring", coloring_spec, "block:a:b | block-cyclic:a:b | nested:a:b | circulant:n:d[:near]");
    construct->add_option("--out", construct_out, "write <out>.g6 and <out>.txt for a coloring");

    // encode
    auto encode_cmd = app.add_subcommand("encode", "write the avoidance CNF for one host order");
    ProblemFlags encode_problem;
    encode_problem.add(encode_cmd);
    int encode_n = 0;
    string encode_out;
    encode_cmd->add_option("--n", encode_n, "host order")->required();
    encode_cmd->add_option("--out", encode_out, "DIMACS output file (default stdout)");

    // solve
    auto solve_cmd = app.add_subcommand("solve", "solve a DIMACS file and print the coloring");
    string cnf_path;
    SolverFlags solve_flags;
    solve_cmd->add_option("--cnf", cnf_path, "DIMACS file")->required();
    solve_flags.add(solve_cmd);

    // compute
    auto compute = app.add_subcommand("compute", "compute a Ramsey number by scanning n upward");
    ProblemFlags compute_problem;
    SolverFlags compute_flags;
    int n_max = max_graph6_order;
    bool force = false;
    compute_problem.add(compute);
    compute_flags.add(compute);
    compute->add_option("--n-max", n_max, "largest host order to try")->capture_default_str();
    compute->add_flag("--force", force, "ignore cached values");

    // verify
    auto verify = app.add_subcommand("verify", "check a witness coloring with the embedding oracle");
    ProblemFlags verify_problem;
    string verify_witness_path;
    verify_problem.add(verify);
    verify->add_option("--witness", verify_witness_path, "graph6 file holding the colour-2 graph")->required();

    // count
    auto count = app.add_subcommand("count", "count embeddings of a pattern in one colour");
    count->set_help_flag("--help", "print this help message and exit");
    string count_witness, count_pattern, count_variant = "ordered", count_group;
    int count_colour = 1;
    count->add_option("--witness", count_witness, "graph6 file holding the colour-2 graph")->required();
    count->add_option("--h", count_pattern, "pattern")->required();
    count->add_option("--color", count_colour, "1 or 2")->capture_default_str();
    count->add_option("--variant", count_variant, "ord|cyc|ref|dih|alt|std|group")->capture_default_str();
    count->add_option("--group", count_group, "generators with --variant group");

    // table
    auto table = app.add_subcommand("table", "sweep a table of Ramsey numbers");
    string class1, class2, a_range, b_range, table_variant = "ordered", csv_path, latex_path;
    SolverFlags table_flags;
    unsigned jobs = 1;
    int table_n_max = max_graph6_order;
    bool table_force = false;
    table->add_option("--class1", class1, "row class, e.g. pmon or qmon:5")->required();
    table->add_option("--class2", class2, "column class")->required();
    table->add_option("--a", a_range, "row range, e.g. 3..6")->required();
    table->add_option("--b", b_range, "column range")->required();
    table->add_option("--variant", table_variant, "ord|cyc|ref|dih|alt|std")->capture_default_str();
    table->add_option("--csv", csv_path, "CSV output file");
    table->add_option("--latex", latex_path, "LaTeX tabular output file");
    table->add_option("--jobs", jobs, "concurrent cells")->capture_default_str();
    table->add_option("--n-max", table_n_max, "largest host order per cell")->capture_default_str();
    table->add_flag("--force", table_force, "ignore cached values");
    table_flags.add(table);

    // heuristic
    auto heuristic = app.add_subcommand("heuristic", "cross-entropy search for a witness at one order");
    ProblemFlags heuristic_problem;
    CeParams ce;
    int heuristic_n = 0;
    string heuristic_out;
    heuristic_problem.add(heuristic);
    heuristic->add_option("--n", heuristic_n, "host order")->required();
    heuristic->add_option("--seed", ce.seed, "random seed")->capture_default_str();
    heuristic->add_option("--population", ce.population)->capture_default_str();
    heuristic->add_option("--elite", ce.elite_fraction, "elite fraction")->capture_default_str();
    heuristic->add_option("--smoothing", ce.smoothing)->capture_default_str();
    heuristic->add_option("--generations", ce.max_generations)->capture_default_str();
    heuristic->add_option("--carryover", ce.carryover)->capture_default_str();
    heuristic->add_option("--threads", ce.threads, "scoring threads, 0 = all cores")->capture_default_str();
    heuristic->add_option("--out", heuristic_out, "witness file (default <cache>/witnesses/heuristic_...g6)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? Exit::ok : Exit::usage;
    }

    try {
        if (*construct) {
            cerr << provenance(argc, argv, "none", std::nullopt) << "\n";
            if (! coloring_spec.empty()) {
                auto [c, description] = parse_construction(coloring_spec);
                cout << "# " << description << "\n";
                print_coloring(c);
                if (! construct_out.empty())
                    export_construction(construct_out, c, description);
                return Exit::ok;
            }
            auto kind = parse_class_name(class_name_flag);
            if (! kind)
                throw ParameterError{"construct needs --class NAME --n N, or --coloring"};
            auto g = make_class({*kind, class_n, class_j});
            cout << graph6_encode(g) << "\n" << edge_list(g);
            return Exit::ok;
        }

        if (*encode_cmd) {
            cerr << provenance(argc, argv, "none", std::nullopt) << "\n";
            auto p = encode_problem.build();
            auto inst = encode(p.first.graph, p.mode1, p.second.graph, p.mode2, encode_n);
            auto text = write_dimacs(inst);
            if (encode_out.empty())
                cout << text;
            else {
                write_file(encode_out, text);
                cout << "wrote " << encode_out << ": " << inst.num_vars << " variables, " << inst.clauses.size() << " clauses ("
                     << inst.generated_clauses << " before deduplication)\n";
            }
            return Exit::ok;
        }

        if (*solve_cmd) {
            auto choice = solve_flags.choice();
            cerr << provenance(argc, argv, choice.describe(), std::nullopt) << "\n";
            auto inst = parse_dimacs(read_file(cnf_path));
            auto outcome = solve(inst, choice, solve_flags.limit());
            if (choice.external && ! outcome.raw_output.empty()) {
                std::istringstream raw{outcome.raw_output};
                for (string line; std::getline(raw, line);)
                    cerr << "# solver: " << line << "\n";
            }
            cout << verdict_name(outcome.verdict);
            if (! outcome.reason.empty())
                cout << " (" << outcome.reason << ")";
            cout << "\n";
            if (outcome.verdict == Verdict::sat) {
                if (inst.order > 0 || inst.num_vars == 0)
                    print_coloring(coloring_from_assignment(outcome.model, inst.order));
                else {
                    cout << "v";
                    for (int i = 0; i < inst.num_vars; ++i)
                        cout << " " << (outcome.model[i] ? i + 1 : -(i + 1));
                    cout << " 0\n";
                }
            }
            return Exit::ok;
        }

        if (*compute) {
            auto p = compute_problem.build();
            SearchOptions opts;
            opts.n_max = n_max;
            opts.timeout_seconds = compute_flags.limit();
            opts.solver = compute_flags.choice();
            opts.cache = std::make_shared<ResultsCache>(cache_dir);
            opts.force = force;
            cerr << provenance(argc, argv, opts.solver.describe(), std::nullopt) << "\n";

            auto r = ramsey_number(p, opts);
            for (auto & step : r.provenance)
                cerr << "# n=" << step.n << " " << verdict_name(step.verdict) << " " << step.wall_ms << "ms " << step.solver
                     << (step.reason.empty() ? "" : " (" + step.reason + ")") << "\n";
            cout << "R_" << variant_name(p.variant) << " " << (r.exact() ? "= " : "") << r.display() << "\n";
            if (auto it = r.witness_files.find(r.lower - 1); it != r.witness_files.end())
                cout << "witness " << it->second.string() << "\n";
            return Exit::ok;
        }

        if (*verify) {
            cerr << provenance(argc, argv, "none", std::nullopt) << "\n";
            auto p = verify_problem.build();
            auto c = read_witness(verify_witness_path);
            bool good = verify_witness(c, p);
            cout << (good ? "OK" : "FAIL") << " " << p.label() << " on " << c.order() << " vertices";
            if (! good) {
                auto first = count_embeddings(c, p.first.graph, Colour::one, p.mode1);
                auto second = count_embeddings(c, p.second.graph, Colour::two, p.mode2);
                cout << ": " << first << " copies of h1 in colour 1, " << second << " copies of h2 in colour 2";
            }
            cout << "\n";
            return Exit::ok;
        }

        if (*count) {
            cerr << provenance(argc, argv, "none", std::nullopt) << "\n";
            auto c = read_witness(count_witness);
            auto h = parse_pattern(count_pattern);
            cout << count_embeddings(c, h.graph, parse_colour(count_colour), mode_for(count_variant, count_group, h.graph.order())) << "\n";
            return Exit::ok;
        }

        if (*table) {
            TableSpec spec{parse_axis(class1), parse_axis(class2), parse_range(a_range), parse_range(b_range), Variant::ord};
            auto v = parse_variant(table_variant);
            if (! v || *v == Variant::custom)
                throw ParameterError{"table needs a named variant, got '" + table_variant + "'"};
            spec.variant = *v;

            SearchOptions opts;
            opts.n_max = table_n_max;
            opts.timeout_seconds = table_flags.limit();
            opts.solver = table_flags.choice();
            opts.cache = std::make_shared<ResultsCache>(cache_dir);
            opts.force = table_force;
            opts.memo = std::make_shared<SolveMemo>();
            cerr << provenance(argc, argv, opts.solver.describe(), std::nullopt) << "\n";

            auto cells = table_sweep(spec, opts, jobs);
            auto csv = table_csv(cells);
            auto latex = table_latex(spec, cells);
            if (! csv_path.empty())
                write_file(csv_path, csv);
            if (! latex_path.empty())
                write_file(latex_path, latex);
            if (csv_path.empty() && latex_path.empty())
                cout << csv;
            else
                for (auto & cell : cells)
                    cout << "a=" << cell.a << " b=" << cell.b << " " << cell.result.display() << "\n";
            return Exit::ok;
        }

        if (*heuristic) {
            auto p = heuristic_problem.build();
            cerr << provenance(argc, argv, "none", ce.seed) << "\n";
            auto outcome = ce_search(p, heuristic_n, ce, [](int gen, std::int64_t best) {
                cout << "generation " << gen << " best " << best << "\n";
            });
            if (! outcome.witness) {
                cout << "no witness after " << outcome.generations << " generations\n";
                return Exit::ok;
            }
            fs::path out = heuristic_out;
            if (out.empty()) {
                fs::create_directories(fs::path{cache_dir} / "witnesses");
                auto key = p.key();
                for (auto & ch : key)
                    if (! std::isalnum(static_cast<unsigned char>(ch)) && ch != '-')
                        ch = '_';
                out = fs::path{cache_dir} / "witnesses" / ("heuristic_" + key + "_n" + std::to_string(heuristic_n) + "_s" + std::to_string(ce.seed) + ".g6");
            }
            write_file(out, graph6_encode(outcome.witness->colour_class(Colour::two)) + "\n");
            cout << "witness " << out.string() << "\n";
            return Exit::ok;
        }
    }
    catch (const EnvironmentError & e) {
        cerr << "error: " << e.what() << "\n";
        return Exit::environment;
    }
    catch (const ConsistencyError & e) {
        cerr << "internal consistency error: " << e.what() << "\n";
        return Exit::consistency;
    }
    catch (const Error & e) {
        cerr << "error: " << e.what() << "\n";
        return Exit::usage;
    }
    catch (const std::logic_error & e) {
        cerr << "error: bad number: " << e.what() << "\n";
        return Exit::usage;
    }
    catch (const std::filesystem::filesystem_error & e) {
        cerr << "error: " << e.what() << "\n";
        return Exit::environment;
    }
    return Exit::usage;
}
