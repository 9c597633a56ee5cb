#pragma once

#include <ramsey/cnf.hh>

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ramsey
{
    enum class Verdict
    {
        sat,
        unsat,
        unknown
    };

    auto verdict_name(Verdict v) -> std::string_view;

    struct SolveOutcome
    {
        Verdict verdict = Verdict::unknown;

        /// For sat: one entry per variable, variable i + 1 at index i; unassigned filled false.
        std::vector<bool> model;

        /// For unknown: "timeout", "unrecognised output", ...
        std::string reason;

        double wall_ms = 0.0;
        std::string solver;

        /// Verbatim standard output of an external solver.
        std::string raw_output;
    };

    /// Complete search; the verdict is never unknown.
    auto solve_embedded(const CnfInstance & inst) -> SolveOutcome;

    /// As above, but gives up with unknown("timeout") once the deadline passes.
    auto solve_embedded(const CnfInstance & inst, std::optional<std::chrono::steady_clock::time_point> deadline) -> SolveOutcome;

    /// Runs `solver_path <dimacs file>` and reads SAT-competition output: exit code 10 or
    /// "s SATISFIABLE" means sat with "v" lines as the model, exit code 20 or "s UNSATISFIABLE"
    /// means unsat. Timeouts and unrecognised output are reported as unknown. nullopt means no
    /// time limit; a budget of zero or less has already expired. A missing or non-executable
    /// solver throws EnvironmentError.
    auto solve_external(const CnfInstance & inst, const std::filesystem::path & solver_path, std::optional<double> timeout_seconds) -> SolveOutcome;

    /// Either the embedded solver or an external executable.
    struct SolverChoice
    {
        std::optional<std::filesystem::path> external;

        /// --solver flag first, then RAMSEY_SAT_SOLVER, else embedded.
        static auto from_flag_or_env(const std::string & flag) -> SolverChoice;

        auto describe() const -> std::string;
    };

    auto solve(const CnfInstance & inst, const SolverChoice & choice, std::optional<double> timeout_seconds) -> SolveOutcome;
}
