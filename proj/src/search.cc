#include <ramsey/cnf.hh>
#include <ramsey/errors.hh>
#include <ramsey/parallel.hh>
#include <ramsey/search.hh>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;
namespace fs = std::filesystem;

namespace ramsey
{
    namespace
    {
        auto to_int(string_view text, string_view what) -> int
        {
            int value = 0;
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || end != text.data() + text.size())
                throw ParameterError{"expected an integer for " + string{what} + ", got '" + string{text} + "'"};
            return value;
        }

        auto split(string_view text, char sep) -> vector<string_view>
        {
            vector<string_view> parts;
            std::size_t start = 0;
            while (true) {
                auto pos = text.find(sep, start);
                parts.push_back(text.substr(start, pos == string_view::npos ? string_view::npos : pos - start));
                if (pos == string_view::npos)
                    return parts;
                start = pos + 1;
            }
        }

        auto fnv1a(string_view text) -> std::uint64_t
        {
            std::uint64_t h = 14695981039346656037ull;
            for (unsigned char ch : text) {
                h ^= ch;
                h *= 1099511628211ull;
            }
            return h;
        }

        auto hex(std::uint64_t v) -> string
        {
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
            return buf;
        }

        auto group_fingerprint(const PermGroup & g) -> string
        {
            string all;
            for (auto & p : g.elements())
                all += p.to_string() + ";";
            return hex(fnv1a(all)).substr(0, 12);
        }
    }

    auto parse_pattern(string_view text) -> PatternSpec
    {
        auto colon = text.find(':');
        if (colon == string_view::npos)
            throw ParameterError{"pattern '" + string{text} + "' should look like name:n[:j] or g6:<graph6>"};

        auto family = text.substr(0, colon);
        auto rest = text.substr(colon + 1);
        if (family == "g6") {
            PatternSpec spec;
            spec.graph = graph6_decode(rest);
            spec.family = "g6";
            spec.params = string{rest};
            return spec;
        }

        auto kind = parse_class_name(family);
        if (! kind)
            throw ParameterError{"unknown graph class '" + string{family} + "'"};
        auto parts = split(rest, ':');
        if (parts.size() > 2 || (parts.size() == 2 && *kind != GraphClass::qmon))
            throw ParameterError{"too many parameters in '" + string{text} + "'"};

        GraphClassSpec spec{*kind, to_int(parts[0], "order")};
        if (*kind == GraphClass::qmon) {
            if (parts.size() != 2)
                throw ParameterError{"qmon needs an order and a deleted-edge index, e.g. qmon:5:0"};
            spec.j = to_int(parts[1], "deleted-edge index");
        }
        return pattern_of(spec);
    }

    auto pattern_of(const GraphClassSpec & spec) -> PatternSpec
    {
        PatternSpec p;
        p.graph = make_class(spec);
        p.family = string{class_name(spec.kind)};
        p.params = std::to_string(spec.n);
        if (spec.kind == GraphClass::qmon)
            p.params += ":" + std::to_string(spec.j);
        return p;
    }

    auto variant_name(Variant v) -> string_view
    {
        switch (v) {
        case Variant::ord: return "ord";
        case Variant::cyc: return "cyc";
        case Variant::ref: return "ref";
        case Variant::dih: return "dih";
        case Variant::alt: return "alt";
        case Variant::std: return "std";
        case Variant::custom: return "custom";
        }
        return "?";
    }

    auto parse_variant(string_view text) -> std::optional<Variant>
    {
        static const std::pair<string_view, Variant> names[] = {
            {"ord", Variant::ord}, {"ordered", Variant::ord},
            {"cyc", Variant::cyc}, {"cyclic", Variant::cyc},
            {"ref", Variant::ref}, {"reflective", Variant::ref},
            {"dih", Variant::dih}, {"dihedral", Variant::dih},
            {"alt", Variant::alt}, {"alternating", Variant::alt},
            {"std", Variant::std}, {"standard", Variant::std},
            {"custom", Variant::custom}, {"group", Variant::custom}};
        for (auto & [name, v] : names)
            if (name == text)
                return v;
        return std::nullopt;
    }

    auto variant_mode(Variant v, int order) -> EmbedMode
    {
        switch (v) {
        case Variant::ord: return EmbedMode::ordered();
        case Variant::cyc: return EmbedMode::cyclic();
        case Variant::ref: return EmbedMode::group(group_make(GroupKind::reflective, order));
        case Variant::dih: return EmbedMode::group(group_make(GroupKind::dihedral, order));
        case Variant::alt: return EmbedMode::group(group_make(GroupKind::alternating, order));
        case Variant::std: return EmbedMode::group(group_make(GroupKind::symmetric, order));
        case Variant::custom: break;
        }
        throw ParameterError{"custom variants need explicit groups"};
    }

    auto RamseyProblem::key() const -> string
    {
        string v{variant_name(variant)};
        if (! group_tag.empty())
            v += "-" + group_tag;
        return v + "," + first.family + "," + first.params + "," + second.family + "," + second.params;
    }

    auto RamseyProblem::label() const -> string
    {
        return "R_" + string{variant_name(variant)} + "(" + first.text() + ", " + second.text() + ")";
    }

    auto make_problem(const PatternSpec & first, const PatternSpec & second, Variant v) -> RamseyProblem
    {
        RamseyProblem p;
        p.first = first;
        p.second = second;
        p.variant = v;
        p.mode1 = variant_mode(v, first.graph.order());
        p.mode2 = variant_mode(v, second.graph.order());
        return p;
    }

    auto make_custom_problem(const PatternSpec & first, const PatternSpec & second, const PermGroup & g1, const PermGroup & g2) -> RamseyProblem
    {
        if (g1.degree() != first.graph.order() || g2.degree() != second.graph.order())
            throw ParameterError{"group degrees must match pattern orders"};
        RamseyProblem p;
        p.first = first;
        p.second = second;
        p.variant = Variant::custom;
        p.mode1 = EmbedMode::group(g1);
        p.mode2 = EmbedMode::group(g2);
        p.group_tag = group_fingerprint(g1) + "-" + group_fingerprint(g2);
        return p;
    }

    auto swapped(const RamseyProblem & p) -> RamseyProblem
    {
        RamseyProblem q = p;
        std::swap(q.first, q.second);
        std::swap(q.mode1, q.mode2);
        if (! q.group_tag.empty()) {
            auto dash = q.group_tag.find('-');
            q.group_tag = q.group_tag.substr(dash + 1) + "-" + q.group_tag.substr(0, dash);
        }
        return q;
    }

    auto verify_witness(const Coloring & c, const RamseyProblem & p) -> bool
    {
        return ! has_forbidden(c, p.first.graph, Colour::one, p.mode1) && ! has_forbidden(c, p.second.graph, Colour::two, p.mode2);
    }

    auto RamseyResult::display() const -> string
    {
        return exact() ? std::to_string(*upper) : ">= " + std::to_string(lower);
    }

    auto format_record(const ResultsCache::Record & r) -> string
    {
        std::ostringstream out;
        out << r.key << ',' << r.n << ',' << r.verdict << ',' << r.witness_path << ',' << r.wall_ms;
        return out.str();
    }

    auto parse_record(string_view line) -> ResultsCache::Record
    {
        auto parts = split(line, ',');
        if (parts.size() != 9)
            throw ParseError{"cache record should have 9 fields: '" + string{line} + "'"};
        ResultsCache::Record r;
        for (int i = 0; i < 5; ++i)
            r.key += (i ? "," : "") + string{parts[i]};
        try {
            r.n = to_int(parts[5], "n");
        }
        catch (const ParameterError & e) {
            throw ParseError{string{"cache record: "} + e.what()};
        }
        r.verdict = string{parts[6]};
        r.witness_path = string{parts[7]};
        try {
            r.wall_ms = std::stod(string{parts[8]});
        }
        catch (const std::exception &) {
            throw ParseError{"bad wall time in cache record '" + string{line} + "'"};
        }
        return r;
    }

    ResultsCache::ResultsCache(fs::path directory) :
        _directory(std::move(directory))
    {
        std::error_code ec;
        fs::create_directories(_directory / "witnesses", ec);
        if (ec)
            throw EnvironmentError{"cannot create cache directory " + _directory.string() + ": " + ec.message()};
        load();
    }

    auto ResultsCache::load() -> void
    {
        std::ifstream in{records_file()};
        string line;
        while (std::getline(in, line)) {
            if (line.empty() || line.starts_with("variant,"))
                continue;
            _records.push_back(parse_record(line));
        }
    }

    auto ResultsCache::append(const Record & r) -> void
    {
        std::lock_guard lock{_mutex};
        bool fresh = ! fs::exists(records_file());
        std::ofstream out{records_file(), std::ios::app};
        if (! out)
            throw EnvironmentError{"cannot append to " + records_file().string()};
        if (fresh)
            out << "variant,class1,params1,class2,params2,n,verdict,witness_path,wall_ms\n";
        out << format_record(r) << '\n';
        _records.push_back(r);
    }

    auto ResultsCache::store_witness(const string & key, int n, const Coloring & c) -> fs::path
    {
        string stem;
        bool safe = true;
        for (char ch : key) {
            if (ch == ',')
                stem += '_';
            else if (ch == ':')
                stem += '-';
            else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_')
                stem += ch;
            else
                safe = false;
        }
        if (! safe)
            stem = "w" + hex(fnv1a(key));
        auto relative = fs::path{"witnesses"} / (stem + "_n" + std::to_string(n) + ".g6");

        std::lock_guard lock{_mutex};
        std::ofstream out{_directory / relative};
        if (! out)
            throw EnvironmentError{"cannot write witness " + (_directory / relative).string()};
        out << graph6_encode(c.colour_class(Colour::two)) << '\n';
        return relative;
    }

    auto ResultsCache::lookup(const string & key) const -> vector<Record>
    {
        std::lock_guard lock{_mutex};
        vector<Record> found;
        for (auto & r : _records)
            if (r.key == key)
                found.push_back(r);
        return found;
    }

    namespace
    {
        auto load_witness(const fs::path & path) -> std::optional<Coloring>
        {
            std::ifstream in{path};
            string text;
            if (! std::getline(in, text))
                return std::nullopt;
            try {
                return Coloring::from_colour_two(graph6_decode(text));
            }
            catch (const Error &) {
                return std::nullopt;
            }
        }

        // A cached final value, reused only if its witness still passes the oracle.
        auto from_cache(const RamseyProblem & p, const ResultsCache & cache) -> std::optional<RamseyResult>
        {
            auto records = cache.lookup(p.key());
            auto value = std::find_if(records.rbegin(), records.rend(), [](auto & r) { return r.verdict == "value"; });
            if (value == records.rend())
                return std::nullopt;

            RamseyResult result;
            result.lower = result.upper.emplace(value->n);
            if (value->n > 1) {
                if (value->witness_path.empty())
                    return std::nullopt;
                auto c = load_witness(cache.directory() / value->witness_path);
                if (! c || c->order() != value->n - 1 || ! verify_witness(*c, p))
                    return std::nullopt;
                result.witnesses.emplace(value->n - 1, *c);
                result.witness_files.emplace(value->n - 1, cache.directory() / value->witness_path);
            }
            result.provenance.push_back(StepRecord{value->n, Verdict::unsat, value->wall_ms, "cache", "", true});
            return result;
        }
    }

    auto SolveMemo::canonical(const CnfInstance & inst) -> string
    {
        vector<Clause> clauses = inst.clauses;
        for (auto & c : clauses)
            std::sort(c.begin(), c.end());
        std::sort(clauses.begin(), clauses.end());
        clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
        string key = std::to_string(inst.num_vars);
        for (auto & c : clauses) {
            key += '|';
            for (int lit : c)
                key += std::to_string(lit) + ' ';
        }
        return key;
    }

    auto SolveMemo::find(const CnfInstance & inst) const -> std::optional<SolveOutcome>
    {
        auto key = canonical(inst);
        std::lock_guard lock{_mutex};
        auto it = _known.find(key);
        if (it == _known.end())
            return std::nullopt;
        SolveOutcome copy = it->second;
        copy.solver = "memo(" + copy.solver + ")";
        copy.wall_ms = 0.0;
        return copy;
    }

    auto SolveMemo::remember(const CnfInstance & inst, const SolveOutcome & outcome) -> void
    {
        if (outcome.verdict == Verdict::unknown)
            return;
        auto key = canonical(inst);
        std::lock_guard lock{_mutex};
        _known.emplace(std::move(key), outcome);
    }

    auto ramsey_number(const RamseyProblem & p, const SearchOptions & opts) -> RamseyResult
    {
        if (opts.n_max < 1)
            throw ParameterError{"n_max must be at least 1"};

        if (opts.cache && ! opts.force)
            if (auto cached = from_cache(p, *opts.cache))
                return *cached;

        const auto key = p.key();
        RamseyResult result;
        for (int n = 1; n <= opts.n_max; ++n) {
            auto inst = encode(p.first.graph, p.mode1, p.second.graph, p.mode2, n);
            SolveOutcome outcome;
            if (auto known = opts.memo ? opts.memo->find(inst) : std::nullopt)
                outcome = std::move(*known);
            else {
                outcome = solve(inst, opts.solver, opts.timeout_seconds);
                if (opts.memo)
                    opts.memo->remember(inst, outcome);
            }
            result.provenance.push_back(StepRecord{n, outcome.verdict, outcome.wall_ms, outcome.solver, outcome.reason, false});

            ResultsCache::Record record{key, n, string{verdict_name(outcome.verdict)}, "", outcome.wall_ms};

            if (outcome.verdict == Verdict::sat) {
                auto c = coloring_from_assignment(outcome.model, n);
                if (! verify_witness(c, p))
                    throw ConsistencyError{"oracle rejected the model for " + p.label() + " at n = " + std::to_string(n) + " from " + outcome.solver};
                result.lower = n + 1;
                if (opts.cache) {
                    auto path = opts.cache->store_witness(key, n, c);
                    record.witness_path = path.string();
                    result.witness_files.emplace(n, opts.cache->directory() / path);
                }
                result.witnesses.emplace(n, std::move(c));
            }
            if (opts.cache)
                opts.cache->append(record);

            if (outcome.verdict == Verdict::unsat)
                result.upper = n;
            if (outcome.verdict != Verdict::sat)
                break;
        }

        if (opts.cache && result.exact()) {
            string witness;
            if (auto it = result.witness_files.find(result.lower - 1); it != result.witness_files.end())
                witness = fs::relative(it->second, opts.cache->directory()).string();
            double total = 0.0;
            for (auto & s : result.provenance)
                total += s.wall_ms;
            opts.cache->append({key, *result.upper, "value", witness, total});
        }
        return result;
    }

    auto TableAxis::at(int index) const -> GraphClassSpec
    {
        if (fixed_order)
            return GraphClassSpec{kind, *fixed_order, index};
        return GraphClassSpec{kind, index, 0};
    }

    auto TableAxis::valid(int index) const -> bool
    {
        try {
            make_class(at(index));
            return true;
        }
        catch (const Error &) {
            return false;
        }
    }

    auto TableAxis::text() const -> string
    {
        string s{class_name(kind)};
        if (fixed_order)
            s += ":" + std::to_string(*fixed_order);
        return s;
    }

    auto parse_axis(string_view text) -> TableAxis
    {
        auto parts = split(text, ':');
        auto kind = parse_class_name(parts[0]);
        if (! kind || parts.size() > 2)
            throw ParameterError{"unknown table class '" + string{text} + "'"};
        TableAxis axis{*kind, std::nullopt};
        if (*kind == GraphClass::qmon) {
            if (parts.size() != 2)
                throw ParameterError{"a qmon axis needs a fixed order, e.g. qmon:5; the range then sweeps the deleted edge"};
            axis.fixed_order = to_int(parts[1], "order");
        }
        else if (parts.size() == 2)
            throw ParameterError{"only qmon takes a fixed order in a table axis"};
        return axis;
    }

    auto parse_range(string_view text) -> vector<int>
    {
        auto dots = text.find("..");
        int lo, hi;
        if (dots == string_view::npos)
            lo = hi = to_int(text, "range");
        else {
            lo = to_int(text.substr(0, dots), "range start");
            hi = to_int(text.substr(dots + 2), "range end");
        }
        if (lo > hi)
            throw ParameterError{"empty range '" + string{text} + "'"};
        vector<int> values;
        for (int v = lo; v <= hi; ++v)
            values.push_back(v);
        return values;
    }

    auto table_sweep(const TableSpec & spec, const SearchOptions & opts, unsigned jobs) -> vector<TableCell>
    {
        const bool same = spec.first.kind == spec.second.kind && spec.first.fixed_order == spec.second.fixed_order;
        vector<TableCell> cells;
        for (int a : spec.a)
            for (int b : spec.b)
                if ((! same || b >= a) && spec.first.valid(a) && spec.second.valid(b))
                    cells.push_back(TableCell{a, b, {}});

        parallel_for(cells.size(), std::max(1u, jobs), [&](std::size_t i) {
            auto & cell = cells[i];
            auto p = make_problem(pattern_of(spec.first.at(cell.a)), pattern_of(spec.second.at(cell.b)), spec.variant);
            cell.result = ramsey_number(p, opts);
        });
        return cells;
    }

    auto table_csv(const vector<TableCell> & cells) -> string
    {
        string out = "a,b,value,exact,witness\n";
        for (auto & c : cells) {
            auto & r = c.result;
            string witness;
            if (auto it = r.witness_files.find(r.lower - 1); it != r.witness_files.end())
                witness = it->second.string();
            out += std::to_string(c.a) + "," + std::to_string(c.b) + "," + std::to_string(r.exact() ? *r.upper : r.lower) + ","
                + (r.exact() ? "true" : "false") + "," + witness + "\n";
        }
        return out;
    }

    auto table_latex(const TableSpec & spec, const vector<TableCell> & cells) -> string
    {
        std::set<int> rows, cols;
        for (auto & c : cells) {
            rows.insert(c.a);
            cols.insert(c.b);
        }
        auto find = [&](int a, int b) -> const TableCell * {
            for (auto & c : cells)
                if (c.a == a && c.b == b)
                    return &c;
            return nullptr;
        };

        std::ostringstream out;
        out << "\\begin{tabular}{|c||" << string(cols.size(), 'r') << "|}\n\\hline\n\\backslashbox{$a$}{$b$}";
        for (int b : cols)
            out << " & $" << b << "$";
        out << "\\\\\n\\hline\n\\hline\n";
        for (int a : rows) {
            out << "$" << a << "$";
            for (int b : cols) {
                out << " &";
                if (auto cell = find(a, b)) {
                    auto & r = cell->result;
                    out << (r.exact() ? " $" + std::to_string(*r.upper) + "$" : " $\\ge " + std::to_string(r.lower) + "$");
                }
            }
            out << "\\\\\n";
        }
        out << "\\hline\n\\end{tabular}\n";
        out << "% R_" << variant_name(spec.variant) << "(" << spec.first.text() << " a, " << spec.second.text() << " b)\n";
        return out.str();
    }
}
