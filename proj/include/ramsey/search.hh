#pragma once

#include <ramsey/coloring.hh>
#include <ramsey/embeddings.hh>
#include <ramsey/ordered_graph.hh>
#include <ramsey/perm_group.hh>
#include <ramsey/solver.hh>

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey
{
    /// A pattern as named on the command line: "name:n[:j]" for a class graph, "g6:<graph6>" otherwise.
    struct PatternSpec
    {
        OrderedGraph graph;
        /// Class name, or "g6".
        std::string family;
        /// "n" or "n:j" for classes, the graph6 string for "g6".
        std::string params;

        auto text() const -> std::string { return family + ":" + params; }
    };

    auto parse_pattern(std::string_view text) -> PatternSpec;
    auto pattern_of(const GraphClassSpec & spec) -> PatternSpec;

    enum class Variant
    {
        ord,
        cyc,
        ref,
        dih,
        alt,
        std,
        custom
    };

    auto variant_name(Variant v) -> std::string_view;

    /// Accepts the short names and ordered, cyclic, reflective, dihedral, alternating,
    /// standard, group.
    auto parse_variant(std::string_view text) -> std::optional<Variant>;

    /// The embedding mode a named variant induces on a pattern of the given order.
    auto variant_mode(Variant v, int order) -> EmbedMode;

    struct RamseyProblem
    {
        PatternSpec first;
        PatternSpec second;
        EmbedMode mode1 = EmbedMode::ordered();
        EmbedMode mode2 = EmbedMode::ordered();
        Variant variant = Variant::ord;

        /// Distinguishes custom groups in cache keys; empty for named variants.
        std::string group_tag;

        /// "variant,class1,params1,class2,params2"
        auto key() const -> std::string;

        /// "R_ord(palt:5, palt:5)"
        auto label() const -> std::string;
    };

    auto make_problem(const PatternSpec & first, const PatternSpec & second, Variant v) -> RamseyProblem;
    auto make_custom_problem(const PatternSpec & first, const PatternSpec & second, const PermGroup & g1, const PermGroup & g2) -> RamseyProblem;

    /// Same problem with the patterns (and their modes) exchanged.
    auto swapped(const RamseyProblem & p) -> RamseyProblem;

    /// Oracle check: neither pattern occurs in its colour under its mode.
    auto verify_witness(const Coloring & c, const RamseyProblem & p) -> bool;

    struct StepRecord
    {
        int n = 0;
        Verdict verdict = Verdict::unknown;
        double wall_ms = 0.0;
        std::string solver;
        std::string reason;
        bool from_cache = false;
    };

    struct RamseyResult
    {
        /// R >= lower: a verified witness exists on lower - 1 vertices.
        int lower = 1;
        /// R <= upper once some n was shown unsatisfiable; then upper == lower.
        std::optional<int> upper;
        std::map<int, Coloring> witnesses;
        std::map<int, std::filesystem::path> witness_files;
        std::vector<StepRecord> provenance;

        auto exact() const -> bool { return upper.has_value(); }

        /// "9" or ">= 13".
        auto display() const -> std::string;
    };

    /// Append-only record file plus graph6 witness files, shared by concurrent searches.
    class ResultsCache
    {
    public:
        struct Record
        {
            std::string key;
            int n = 0;
            /// sat, unsat, unknown or value.
            std::string verdict;
            std::string witness_path;
            double wall_ms = 0.0;
        };

        explicit ResultsCache(std::filesystem::path directory);

        auto directory() const -> const std::filesystem::path & { return _directory; }
        auto records_file() const -> std::filesystem::path { return _directory / "results.csv"; }

        auto append(const Record & r) -> void;

        /// Writes the colour-2 graph of c; returns the path.
        auto store_witness(const std::string & key, int n, const Coloring & c) -> std::filesystem::path;

        /// Latest records for a key, in file order.
        auto lookup(const std::string & key) const -> std::vector<Record>;

    private:
        auto load() -> void;

        std::filesystem::path _directory;
        mutable std::mutex _mutex;
        std::vector<Record> _records;
    };

    auto parse_record(std::string_view line) -> ResultsCache::Record;
    auto format_record(const ResultsCache::Record & r) -> std::string;

    /// Verdicts of formulas already solved, keyed by the clause set; lets problems whose
    /// encodings coincide share one solver call. Only sat and unsat outcomes are kept.
    class SolveMemo
    {
    public:
        auto find(const CnfInstance & inst) const -> std::optional<SolveOutcome>;
        auto remember(const CnfInstance & inst, const SolveOutcome & outcome) -> void;

    private:
        static auto canonical(const CnfInstance & inst) -> std::string;

        mutable std::mutex _mutex;
        std::map<std::string, SolveOutcome> _known;
    };

    struct SearchOptions
    {
        int n_max = max_graph6_order;
        /// Per solver call; nullopt means unlimited.
        std::optional<double> timeout_seconds;
        SolverChoice solver;
        /// Shared cache, or none.
        std::shared_ptr<ResultsCache> cache;
        /// Ignore cached values.
        bool force = false;
        /// Shared verdicts of identical formulas, or none.
        std::shared_ptr<SolveMemo> memo;
    };

    /// Linear scan n = 1, 2, ...: sat records a verified witness and continues, unsat closes the
    /// value, unknown or n_max stops with an interval. Throws ConsistencyError if the oracle
    /// rejects a model.
    auto ramsey_number(const RamseyProblem & p, const SearchOptions & opts) -> RamseyResult;

    /// One axis of a table: a class swept by order, or qmon of fixed order swept by deleted edge.
    struct TableAxis
    {
        GraphClass kind;
        std::optional<int> fixed_order;

        auto at(int index) const -> GraphClassSpec;
        auto valid(int index) const -> bool;
        auto text() const -> std::string;
    };

    /// "pmon" or "qmon:5".
    auto parse_axis(std::string_view text) -> TableAxis;

    /// "3..6" or "4".
    auto parse_range(std::string_view text) -> std::vector<int>;

    struct TableCell
    {
        int a = 0;
        int b = 0;
        RamseyResult result;
    };

    struct TableSpec
    {
        TableAxis first;
        TableAxis second;
        std::vector<int> a;
        std::vector<int> b;
        Variant variant = Variant::ord;
    };

    /// Cells run concurrently on up to `jobs` workers. A table of one class against itself
    /// keeps only b >= a; invalid parameters (odd nested matchings) are skipped.
    auto table_sweep(const TableSpec & spec, const SearchOptions & opts, unsigned jobs) -> std::vector<TableCell>;

    auto table_csv(const std::vector<TableCell> & cells) -> std::string;
    auto table_latex(const TableSpec & spec, const std::vector<TableCell> & cells) -> std::string;
}
