#include <ramsey/cnf.hh>
#include <ramsey/errors.hh>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace ramsey
{
    auto var_id(int u, int v, int n) -> int
    {
        if (u < 0 || v >= n || u >= v)
            throw ParameterError{"var_id needs 0 <= u < v < n, got (" + std::to_string(u) + "," + std::to_string(v) + ") n=" + std::to_string(n)};
        return u * n - u * (u + 1) / 2 + (v - u);
    }

    auto var_edge(int id, int n) -> std::pair<int, int>
    {
        if (id < 1 || id > n * (n - 1) / 2)
            throw ParameterError{"variable " + std::to_string(id) + " outside 1.." + std::to_string(n * (n - 1) / 2)};
        int u = 0;
        while (var_id(u, n - 1, n) < id)
            ++u;
        int v = u + (id - var_id(u, u + 1, n)) + 1;
        return {u, v};
    }

    namespace
    {
        // One clause per increasing tuple per variant; sign +1 for colour 1 avoidance, -1 for colour 2.
        auto emit(const OrderedGraph & h, const EmbedMode & mode, int n, int sign, std::set<Clause> & out) -> std::size_t
        {
            const int m = h.order();
            if (m > n)
                return 0;

            auto variants = mode_variants(h, mode);
            std::size_t generated = 0;
            vector<int> tuple(m);
            for (int i = 0; i < m; ++i)
                tuple[i] = i;

            while (true) {
                for (auto & variant : variants) {
                    Clause clause;
                    clause.reserve(variant.size());
                    for (auto [u, v] : variant.edges())
                        clause.push_back(sign * var_id(tuple[u], tuple[v], n));
                    std::sort(clause.begin(), clause.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
                    out.insert(std::move(clause));
                    ++generated;
                }

                // Next increasing tuple in lexicographic order.
                int i = m - 1;
                while (i >= 0 && tuple[i] == n - m + i)
                    --i;
                if (i < 0)
                    break;
                ++tuple[i];
                for (int j = i + 1; j < m; ++j)
                    tuple[j] = tuple[j - 1] + 1;
            }
            return generated;
        }
    }

    auto encode(const OrderedGraph & h1, const EmbedMode & mode1, const OrderedGraph & h2, const EmbedMode & mode2, int n) -> CnfInstance
    {
        if (n < 1 || n > max_order)
            throw ParameterError{"host order " + std::to_string(n) + " outside 1.." + std::to_string(max_order)};
        for (auto [h, mode] : {std::pair{&h1, &mode1}, std::pair{&h2, &mode2}})
            if (mode->permutation_group() && mode->permutation_group()->degree() != h->order())
                throw ParameterError{"group degree " + std::to_string(mode->permutation_group()->degree()) + " does not match pattern order " + std::to_string(h->order())};

        CnfInstance inst;
        inst.order = n;
        inst.num_vars = n * (n - 1) / 2;

        std::set<Clause> positive, negative;
        inst.generated_clauses = emit(h1, mode1, n, +1, positive) + emit(h2, mode2, n, -1, negative);
        inst.clauses.reserve(positive.size() + negative.size());

        // Colour-1 clauses first, then colour-2, each block in sorted order.
        for (auto * group : {&positive, &negative})
            for (auto & clause : *group)
                inst.clauses.push_back(clause);

        std::ostringstream desc;
        desc << "h1=" << graph6_encode(h1) << " " << mode1.describe() << " h2=" << graph6_encode(h2) << " " << mode2.describe() << " n=" << n;
        inst.description = desc.str();
        return inst;
    }

    auto write_dimacs(const CnfInstance & inst) -> string
    {
        string out = "p cnf " + std::to_string(inst.num_vars) + " " + std::to_string(inst.clauses.size()) + "\n";
        for (auto & clause : inst.clauses) {
            for (auto lit : clause) {
                out += std::to_string(lit);
                out += ' ';
            }
            out += "0\n";
        }
        return out;
    }

    namespace
    {
        class Tokens
        {
        public:
            explicit Tokens(string_view text) :
                _text(text)
            {
            }

            auto skip_space() -> void
            {
                while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                    ++_pos;
            }

            auto at_end() -> bool
            {
                skip_space();
                return _pos >= _text.size();
            }

            auto peek() -> char { return _text[_pos]; }

            auto skip_line() -> void
            {
                while (_pos < _text.size() && _text[_pos] != '\n')
                    ++_pos;
            }

            auto word() -> string_view
            {
                skip_space();
                auto start = _pos;
                while (_pos < _text.size() && ! std::isspace(static_cast<unsigned char>(_text[_pos])))
                    ++_pos;
                return _text.substr(start, _pos - start);
            }

            auto integer() -> long long
            {
                auto w = word();
                long long value = 0;
                auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
                if (w.empty() || ec != std::errc{} || ptr != w.data() + w.size())
                    throw ParseError{"expected integer, found '" + string{w} + "'"};
                return value;
            }

        private:
            string_view _text;
            std::size_t _pos = 0;
        };
    }

    auto parse_dimacs(string_view text) -> CnfInstance
    {
        Tokens tokens{text};
        CnfInstance inst;
        long long declared = -1;

        while (! tokens.at_end() && (tokens.peek() == 'c'))
            tokens.skip_line();
        if (tokens.at_end() || tokens.word() != "p")
            throw ParseError{"missing 'p cnf' header"};
        if (tokens.word() != "cnf")
            throw ParseError{"header is not 'p cnf'"};
        auto vars = tokens.integer();
        declared = tokens.integer();
        if (vars < 0 || declared < 0)
            throw ParseError{"negative counts in header"};
        inst.num_vars = static_cast<int>(vars);

        Clause current;
        while (! tokens.at_end()) {
            if (tokens.peek() == 'c') {
                tokens.skip_line();
                continue;
            }
            auto lit = tokens.integer();
            if (lit == 0) {
                inst.clauses.push_back(std::move(current));
                current.clear();
            }
            else {
                if (std::llabs(lit) > vars)
                    throw ParseError{"literal " + std::to_string(lit) + " exceeds declared variable count " + std::to_string(vars)};
                current.push_back(static_cast<Literal>(lit));
            }
        }
        if (! current.empty())
            throw ParseError{"last clause is not 0-terminated"};
        if (static_cast<long long>(inst.clauses.size()) != declared)
            throw ParseError{"header declares " + std::to_string(declared) + " clauses, found " + std::to_string(inst.clauses.size())};
        inst.generated_clauses = inst.clauses.size();

        // Recover the host order when the variable count is a triangular number.
        for (int n = 1; n <= max_order; ++n)
            if (n * (n - 1) / 2 == inst.num_vars) {
                inst.order = n;
                break;
            }
        return inst;
    }

    auto coloring_from_assignment(const vector<bool> & assignment, int n) -> Coloring
    {
        Coloring result{n};
        int id = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++id)
                if (static_cast<std::size_t>(id) < assignment.size() && assignment[id])
                    result.set(u, v, Colour::two);
        return result;
    }

    auto parse_model(string_view solver_output, int n) -> std::optional<Coloring>
    {
        const int num_vars = n * (n - 1) / 2;
        std::optional<bool> satisfiable;
        vector<bool> assignment(num_vars, false);

        std::size_t pos = 0;
        while (pos <= solver_output.size()) {
            auto end = solver_output.find('\n', pos);
            if (end == string_view::npos)
                end = solver_output.size();
            auto line = solver_output.substr(pos, end - pos);
            pos = end + 1;
            if (! line.empty() && line.back() == '\r')
                line.remove_suffix(1);

            if (line.starts_with("s ")) {
                auto verdict = line.substr(2);
                while (! verdict.empty() && verdict.back() == ' ')
                    verdict.remove_suffix(1);
                if (verdict == "SATISFIABLE")
                    satisfiable = true;
                else if (verdict == "UNSATISFIABLE")
                    satisfiable = false;
                else
                    throw ParseError{"unrecognised verdict line: '" + string{line} + "'"};
            }
            else if (line.starts_with("v ") || line == "v") {
                Tokens tokens{line.substr(1)};
                while (! tokens.at_end()) {
                    auto lit = tokens.integer();
                    if (lit == 0)
                        continue;
                    if (std::llabs(lit) > num_vars)
                        throw ParseError{"model literal " + std::to_string(lit) + " exceeds " + std::to_string(num_vars) + " variables"};
                    assignment[std::llabs(lit) - 1] = lit > 0;
                }
            }
            if (end == solver_output.size())
                break;
        }

        if (! satisfiable)
            throw ParseError{"solver output contains no 's' verdict line"};
        if (! *satisfiable)
            return std::nullopt;
        return coloring_from_assignment(assignment, n);
    }
}
