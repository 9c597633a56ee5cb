#pragma once

#include <ramsey/coloring.hh>
#include <ramsey/embeddings.hh>
#include <ramsey/ordered_graph.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsey
{
    /// Literal: signed 1-based variable id. Positive x_{u,v} means edge {u,v} has colour 2.
    using Literal = int;
    using Clause = std::vector<Literal>;

    struct CnfInstance
    {
        int num_vars = 0;
        std::vector<Clause> clauses;

        /// Clauses emitted before duplicate removal.
        std::size_t generated_clauses = 0;

        /// Provenance echo: host order and a human-readable problem summary.
        int order = 0;
        std::string description;
    };

    /// Row-major, 1-based: (0,1), (0,2), ..., (0,n-1), (1,2), ...
    auto var_id(int u, int v, int n) -> int;

    /// Inverse of var_id.
    auto var_edge(int id, int n) -> std::pair<int, int>;

    /// Clauses forbidding h1 in colour 1 (positive literals) and h2 in colour 2 (negative literals)
    /// under their modes on K_n. Duplicate clauses are removed by sorted-literal form.
    auto encode(const OrderedGraph & h1, const EmbedMode & mode1, const OrderedGraph & h2, const EmbedMode & mode2, int n) -> CnfInstance;

    auto write_dimacs(const CnfInstance & inst) -> std::string;

    /// Reads "p cnf V C" followed by 0-terminated clauses; comment lines start with 'c'.
    auto parse_dimacs(std::string_view text) -> CnfInstance;

    /// Polarity map: assignment[i] is variable i + 1; true means colour 2.
    auto coloring_from_assignment(const std::vector<bool> & assignment, int n) -> Coloring;

    /// Reads SAT-competition output. Returns nullopt on an UNSATISFIABLE verdict; unassigned
    /// variables default to colour 1. Throws ParseError when no verdict or malformed value lines.
    auto parse_model(std::string_view solver_output, int n) -> std::optional<Coloring>;
}
