#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ramsey
{
    struct CdclLimits
    {
        std::optional<std::chrono::steady_clock::time_point> deadline;
        /// Zero means unlimited.
        std::uint64_t max_conflicts = 0;
    };

    struct CdclStats
    {
        std::uint64_t conflicts = 0;
        std::uint64_t decisions = 0;
        std::uint64_t propagations = 0;
        std::uint64_t restarts = 0;
        std::uint64_t reductions = 0;
    };

    enum class CdclResult
    {
        sat,
        unsat,
        unknown
    };

    /// Conflict-driven clause learning: two watched literals, first-UIP learning with recursive
    /// minimisation, VSIDS with phase saving, Luby restarts, LBD-based learnt clause reduction.
    class CdclSolver
    {
    public:
        explicit CdclSolver(int num_vars);

        /// DIMACS-style literals (signed, 1-based). Returns false once the formula is trivially unsatisfiable.
        auto add_clause(std::span<const int> literals) -> bool;

        auto solve(const CdclLimits & limits = {}) -> CdclResult;

        /// Model value of a 1-based variable after a sat result.
        auto model_value(int var) const -> bool { return _model[var - 1]; }
        auto model() const -> const std::vector<bool> & { return _model; }

        auto stats() const -> const CdclStats & { return _stats; }

    private:
        using Lit = std::uint32_t;
        using CRef = std::uint32_t;
        static constexpr CRef no_reason = UINT32_MAX;
        static constexpr Lit no_lit = UINT32_MAX;

        struct Watcher
        {
            CRef clause;
            Lit blocker;
        };

        static auto var_of(Lit l) -> int { return static_cast<int>(l >> 1); }

        // Literal truth: 1 true, -1 false, 0 unassigned.
        auto value(Lit l) const -> int { return _lit_value[l]; }

        auto clause_size(CRef c) const -> std::uint32_t { return _arena[c]; }
        auto clause_lits(CRef c) -> Lit * { return &_arena[c + 3]; }
        auto is_learnt(CRef c) const -> bool { return _arena[c + 1] & 1; }
        auto is_deleted(CRef c) const -> bool { return _arena[c + 1] & 2; }
        auto lbd(CRef c) const -> std::uint32_t { return _arena[c + 1] >> 2; }
        auto activity(CRef c) const -> float;
        auto set_activity(CRef c, float a) -> void;

        auto allocate(std::span<const Lit> lits, bool learnt, std::uint32_t lbd) -> CRef;
        auto attach(CRef c) -> void;
        auto locked(CRef c) -> bool;

        auto decision_level() const -> int { return static_cast<int>(_trail_limits.size()); }
        auto enqueue(Lit l, CRef reason) -> void;
        auto propagate() -> CRef;
        auto analyze(CRef conflict, std::vector<Lit> & learnt, int & backtrack_level) -> void;
        auto redundant(Lit l, std::uint32_t abstract_levels) -> bool;
        auto compute_lbd(std::span<const Lit> lits) -> std::uint32_t;
        auto cancel_until(int level) -> void;
        auto pick_branch() -> Lit;
        auto reduce_learnts() -> void;
        auto collect_garbage() -> void;

        auto bump_var(int v) -> void;
        auto bump_clause(CRef c) -> void;

        auto heap_insert(int v) -> void;
        auto heap_pop() -> int;
        auto heap_up(std::size_t i) -> void;
        auto heap_down(std::size_t i) -> void;

        int _num_vars;
        bool _ok = true;

        std::vector<std::uint32_t> _arena;
        std::size_t _wasted = 0;
        std::vector<CRef> _originals;
        std::vector<CRef> _learnts;
        std::vector<std::vector<Watcher>> _watches;

        std::vector<std::int8_t> _lit_value;
        std::vector<int> _level;
        std::vector<CRef> _reason;
        std::vector<Lit> _trail;
        std::vector<std::size_t> _trail_limits;
        std::size_t _queue_head = 0;

        std::vector<double> _activity;
        double _var_increment = 1.0;
        float _clause_increment = 1.0f;
        std::vector<int> _heap;
        std::vector<int> _heap_index;
        std::vector<bool> _phase;

        std::vector<std::uint8_t> _seen;
        std::vector<Lit> _analyze_stack;
        std::vector<Lit> _analyze_clear;
        std::vector<std::uint64_t> _level_stamp;
        std::uint64_t _stamp = 0;

        std::vector<bool> _model;
        CdclStats _stats;
    };
}
