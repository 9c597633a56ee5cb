#include <ramsey/cdcl.hh>

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>

using std::vector;

namespace ramsey
{
    namespace
    {
        constexpr double var_decay = 0.95;
        constexpr float clause_decay = 0.999f;
        constexpr std::uint64_t restart_base = 100;
        constexpr std::uint64_t first_reduce = 2000;
        constexpr std::uint64_t reduce_increment = 300;

        // Finite Luby sequence 1 1 2 1 1 2 4 ... scaled by powers of two.
        auto luby(std::uint64_t i) -> std::uint64_t
        {
            std::uint64_t size = 1, seq = 0;
            while (size < i + 1) {
                ++seq;
                size = 2 * size + 1;
            }
            while (size - 1 != i) {
                size = (size - 1) >> 1;
                --seq;
                i = i % size;
            }
            return std::uint64_t{1} << seq;
        }
    }

    CdclSolver::CdclSolver(int num_vars) :
        _num_vars(num_vars),
        _watches(2 * static_cast<std::size_t>(num_vars)),
        _lit_value(2 * static_cast<std::size_t>(num_vars), 0),
        _level(num_vars, 0),
        _reason(num_vars, no_reason),
        _activity(num_vars, 0.0),
        _heap_index(num_vars, -1),
        _phase(num_vars, false),
        _seen(num_vars, 0),
        _level_stamp(num_vars + 1, 0),
        _model(num_vars, false)
    {
        for (int v = 0; v < num_vars; ++v)
            heap_insert(v);
    }

    auto CdclSolver::activity(CRef c) const -> float
    {
        return std::bit_cast<float>(_arena[c + 2]);
    }

    auto CdclSolver::set_activity(CRef c, float a) -> void
    {
        _arena[c + 2] = std::bit_cast<std::uint32_t>(a);
    }

    auto CdclSolver::allocate(std::span<const Lit> lits, bool learnt, std::uint32_t lbd) -> CRef
    {
        auto c = static_cast<CRef>(_arena.size());
        _arena.push_back(static_cast<std::uint32_t>(lits.size()));
        _arena.push_back((lbd << 2) | (learnt ? 1u : 0u));
        _arena.push_back(std::bit_cast<std::uint32_t>(0.0f));
        _arena.insert(_arena.end(), lits.begin(), lits.end());
        return c;
    }

    auto CdclSolver::attach(CRef c) -> void
    {
        Lit * lits = clause_lits(c);
        _watches[lits[0]].push_back({c, lits[1]});
        _watches[lits[1]].push_back({c, lits[0]});
    }

    auto CdclSolver::locked(CRef c) -> bool
    {
        Lit first = clause_lits(c)[0];
        return value(first) == 1 && _reason[var_of(first)] == c;
    }

    auto CdclSolver::add_clause(std::span<const int> literals) -> bool
    {
        if (! _ok)
            return false;

        vector<Lit> lits;
        lits.reserve(literals.size());
        for (int l : literals) {
            int v = std::abs(l) - 1;
            lits.push_back(static_cast<Lit>(2 * v + (l < 0 ? 1 : 0)));
        }
        std::sort(lits.begin(), lits.end());
        lits.erase(std::unique(lits.begin(), lits.end()), lits.end());

        vector<Lit> kept;
        for (std::size_t i = 0; i < lits.size(); ++i) {
            if (i + 1 < lits.size() && (lits[i] ^ 1) == lits[i + 1])
                return true; // tautology
            if (value(lits[i]) == 1)
                return true; // satisfied at level 0
            if (value(lits[i]) == 0)
                kept.push_back(lits[i]);
        }

        if (kept.empty())
            return _ok = false;
        if (kept.size() == 1) {
            enqueue(kept[0], no_reason);
            if (propagate() != no_reason)
                _ok = false;
            return _ok;
        }
        CRef c = allocate(kept, false, 0);
        _originals.push_back(c);
        attach(c);
        return true;
    }

    auto CdclSolver::enqueue(Lit l, CRef reason) -> void
    {
        _lit_value[l] = 1;
        _lit_value[l ^ 1] = -1;
        int v = var_of(l);
        _level[v] = decision_level();
        _reason[v] = reason;
        _trail.push_back(l);
    }

    auto CdclSolver::propagate() -> CRef
    {
        CRef conflict = no_reason;
        while (_queue_head < _trail.size()) {
            Lit p = _trail[_queue_head++];
            Lit false_lit = p ^ 1;
            auto & ws = _watches[false_lit];
            ++_stats.propagations;

            std::size_t i = 0, j = 0;
            const std::size_t end = ws.size();
            while (i < end) {
                Watcher w = ws[i];
                if (value(w.blocker) == 1) {
                    ws[j++] = ws[i++];
                    continue;
                }

                CRef c = w.clause;
                Lit * lits = clause_lits(c);
                if (lits[0] == false_lit)
                    std::swap(lits[0], lits[1]);
                ++i;

                Lit first = lits[0];
                Watcher replacement{c, first};
                if (first != w.blocker && value(first) == 1) {
                    ws[j++] = replacement;
                    continue;
                }

                bool moved = false;
                const std::uint32_t size = clause_size(c);
                for (std::uint32_t k = 2; k < size; ++k)
                    if (value(lits[k]) != -1) {
                        lits[1] = lits[k];
                        lits[k] = false_lit;
                        _watches[lits[1]].push_back(replacement);
                        moved = true;
                        break;
                    }
                if (moved)
                    continue;

                ws[j++] = replacement;
                if (value(first) == -1) {
                    conflict = c;
                    _queue_head = _trail.size();
                    while (i < end)
                        ws[j++] = ws[i++];
                }
                else
                    enqueue(first, c);
            }
            ws.resize(j);
            if (conflict != no_reason)
                break;
        }
        return conflict;
    }

    auto CdclSolver::bump_var(int v) -> void
    {
        if ((_activity[v] += _var_increment) > 1e100) {
            for (auto & a : _activity)
                a *= 1e-100;
            _var_increment *= 1e-100;
        }
        if (_heap_index[v] >= 0)
            heap_up(static_cast<std::size_t>(_heap_index[v]));
    }

    auto CdclSolver::bump_clause(CRef c) -> void
    {
        float a = activity(c) + _clause_increment;
        set_activity(c, a);
        if (a > 1e20f) {
            for (CRef l : _learnts)
                set_activity(l, activity(l) * 1e-20f);
            _clause_increment *= 1e-20f;
        }
    }

    auto CdclSolver::compute_lbd(std::span<const Lit> lits) -> std::uint32_t
    {
        ++_stamp;
        std::uint32_t count = 0;
        for (Lit l : lits) {
            int lv = _level[var_of(l)];
            if (_level_stamp[lv] != _stamp) {
                _level_stamp[lv] = _stamp;
                ++count;
            }
        }
        return count;
    }

    auto CdclSolver::analyze(CRef conflict, vector<Lit> & learnt, int & backtrack_level) -> void
    {
        learnt.clear();
        learnt.push_back(no_lit);
        int path_count = 0;
        Lit p = no_lit;
        std::size_t index = _trail.size();

        do {
            if (is_learnt(conflict))
                bump_clause(conflict);
            Lit * lits = clause_lits(conflict);
            const std::uint32_t size = clause_size(conflict);
            for (std::uint32_t k = (p == no_lit ? 0 : 1); k < size; ++k) {
                Lit q = lits[k];
                int v = var_of(q);
                if (! _seen[v] && _level[v] > 0) {
                    bump_var(v);
                    _seen[v] = 1;
                    if (_level[v] >= decision_level())
                        ++path_count;
                    else
                        learnt.push_back(q);
                }
            }
            while (! _seen[var_of(_trail[--index])])
                ;
            p = _trail[index];
            conflict = _reason[var_of(p)];
            _seen[var_of(p)] = 0;
            --path_count;
        } while (path_count > 0);
        learnt[0] = p ^ 1;

        // Recursive minimisation: drop literals implied by the rest of the clause.
        _analyze_clear.assign(learnt.begin(), learnt.end());
        std::uint32_t abstract_levels = 0;
        for (std::size_t k = 1; k < learnt.size(); ++k)
            abstract_levels |= 1u << (_level[var_of(learnt[k])] & 31);
        std::size_t kept = 1;
        for (std::size_t k = 1; k < learnt.size(); ++k)
            if (_reason[var_of(learnt[k])] == no_reason || ! redundant(learnt[k], abstract_levels))
                learnt[kept++] = learnt[k];
        learnt.resize(kept);

        for (Lit l : _analyze_clear)
            _seen[var_of(l)] = 0;

        if (learnt.size() == 1)
            backtrack_level = 0;
        else {
            std::size_t max_k = 1;
            for (std::size_t k = 2; k < learnt.size(); ++k)
                if (_level[var_of(learnt[k])] > _level[var_of(learnt[max_k])])
                    max_k = k;
            std::swap(learnt[1], learnt[max_k]);
            backtrack_level = _level[var_of(learnt[1])];
        }
    }

    auto CdclSolver::redundant(Lit l, std::uint32_t abstract_levels) -> bool
    {
        _analyze_stack.clear();
        _analyze_stack.push_back(l);
        const std::size_t top = _analyze_clear.size();
        while (! _analyze_stack.empty()) {
            CRef c = _reason[var_of(_analyze_stack.back())];
            _analyze_stack.pop_back();
            Lit * lits = clause_lits(c);
            const std::uint32_t size = clause_size(c);
            for (std::uint32_t k = 1; k < size; ++k) {
                Lit q = lits[k];
                int v = var_of(q);
                if (_seen[v] || _level[v] == 0)
                    continue;
                if (_reason[v] != no_reason && (abstract_levels & (1u << (_level[v] & 31)))) {
                    _seen[v] = 1;
                    _analyze_stack.push_back(q);
                    _analyze_clear.push_back(q);
                }
                else {
                    for (std::size_t j = top; j < _analyze_clear.size(); ++j)
                        _seen[var_of(_analyze_clear[j])] = 0;
                    _analyze_clear.resize(top);
                    return false;
                }
            }
        }
        return true;
    }

    auto CdclSolver::cancel_until(int level) -> void
    {
        if (decision_level() <= level)
            return;
        for (std::size_t k = _trail.size(); k-- > _trail_limits[level];) {
            Lit l = _trail[k];
            int v = var_of(l);
            _lit_value[l] = 0;
            _lit_value[l ^ 1] = 0;
            _reason[v] = no_reason;
            _phase[v] = (l & 1) == 0;
            if (_heap_index[v] < 0)
                heap_insert(v);
        }
        _trail.resize(_trail_limits[level]);
        _trail_limits.resize(level);
        _queue_head = _trail.size();
    }

    auto CdclSolver::pick_branch() -> Lit
    {
        while (! _heap.empty()) {
            int v = heap_pop();
            if (value(static_cast<Lit>(2 * v)) == 0)
                return static_cast<Lit>(2 * v + (_phase[v] ? 0 : 1));
        }
        return no_lit;
    }

    auto CdclSolver::reduce_learnts() -> void
    {
        ++_stats.reductions;
        std::sort(_learnts.begin(), _learnts.end(), [this](CRef a, CRef b) {
            if (lbd(a) != lbd(b))
                return lbd(a) > lbd(b);
            return activity(a) < activity(b);
        });

        std::size_t target = _learnts.size() / 2;
        std::size_t removed = 0;
        vector<CRef> kept;
        kept.reserve(_learnts.size());
        for (CRef c : _learnts) {
            if (removed < target && lbd(c) > 2 && clause_size(c) > 2 && ! locked(c)) {
                _arena[c + 1] |= 2;
                _wasted += 3 + clause_size(c);
                ++removed;
            }
            else
                kept.push_back(c);
        }
        _learnts = std::move(kept);

        for (auto & ws : _watches)
            std::erase_if(ws, [this](const Watcher & w) { return is_deleted(w.clause); });

        if (_wasted * 4 > _arena.size())
            collect_garbage();
    }

    auto CdclSolver::collect_garbage() -> void
    {
        vector<std::uint32_t> fresh;
        fresh.reserve(_arena.size() - _wasted);

        // Old header slot 2 becomes the forwarding address once a clause has moved.
        auto move = [&](CRef c) -> CRef {
            auto to = static_cast<CRef>(fresh.size());
            fresh.insert(fresh.end(), _arena.begin() + c, _arena.begin() + c + 3 + clause_size(c));
            _arena[c + 2] = to;
            return to;
        };
        for (auto & c : _originals)
            c = move(c);
        for (auto & c : _learnts)
            c = move(c);

        for (auto & ws : _watches)
            for (auto & w : ws)
                w.clause = _arena[w.clause + 2];
        for (Lit l : _trail) {
            CRef & r = _reason[var_of(l)];
            if (r != no_reason)
                r = _arena[r + 2];
        }

        _arena = std::move(fresh);
        _wasted = 0;
    }

    auto CdclSolver::solve(const CdclLimits & limits) -> CdclResult
    {
        if (! _ok)
            return CdclResult::unsat;
        if (propagate() != no_reason) {
            _ok = false;
            return CdclResult::unsat;
        }

        vector<Lit> learnt;
        std::uint64_t restart_count = 0;
        std::uint64_t conflicts_this_restart = 0;
        std::uint64_t restart_limit = restart_base * luby(0);
        std::uint64_t next_reduce = first_reduce;
        std::uint64_t reduce_count = 0;
        const std::uint64_t start_conflicts = _stats.conflicts;

        while (true) {
            CRef conflict = propagate();
            if (conflict != no_reason) {
                ++_stats.conflicts;
                ++conflicts_this_restart;
                if (decision_level() == 0) {
                    _ok = false;
                    return CdclResult::unsat;
                }

                int backtrack_level = 0;
                analyze(conflict, learnt, backtrack_level);
                cancel_until(backtrack_level);
                if (learnt.size() == 1)
                    enqueue(learnt[0], no_reason);
                else {
                    CRef c = allocate(learnt, true, compute_lbd(learnt));
                    _learnts.push_back(c);
                    attach(c);
                    bump_clause(c);
                    enqueue(learnt[0], c);
                }
                _var_increment /= var_decay;
                _clause_increment /= clause_decay;

                if (_stats.conflicts % 256 == 0) {
                    if (limits.deadline && std::chrono::steady_clock::now() >= *limits.deadline) {
                        cancel_until(0);
                        return CdclResult::unknown;
                    }
                }
                if (limits.max_conflicts && _stats.conflicts - start_conflicts >= limits.max_conflicts) {
                    cancel_until(0);
                    return CdclResult::unknown;
                }

                if (conflicts_this_restart >= restart_limit) {
                    ++_stats.restarts;
                    conflicts_this_restart = 0;
                    restart_limit = restart_base * luby(++restart_count);
                    cancel_until(0);
                }
                if (_stats.conflicts - start_conflicts >= next_reduce) {
                    next_reduce += first_reduce + reduce_increment * ++reduce_count;
                    reduce_learnts();
                }
            }
            else {
                Lit decision = pick_branch();
                if (decision == no_lit) {
                    for (int v = 0; v < _num_vars; ++v)
                        _model[v] = value(static_cast<Lit>(2 * v)) == 1;
                    cancel_until(0);
                    return CdclResult::sat;
                }
                ++_stats.decisions;
                _trail_limits.push_back(_trail.size());
                enqueue(decision, no_reason);
            }
        }
    }

    auto CdclSolver::heap_insert(int v) -> void
    {
        _heap_index[v] = static_cast<int>(_heap.size());
        _heap.push_back(v);
        heap_up(_heap.size() - 1);
    }

    auto CdclSolver::heap_pop() -> int
    {
        int top = _heap.front();
        _heap_index[top] = -1;
        int last = _heap.back();
        _heap.pop_back();
        if (! _heap.empty()) {
            _heap[0] = last;
            _heap_index[last] = 0;
            heap_down(0);
        }
        return top;
    }

    auto CdclSolver::heap_up(std::size_t i) -> void
    {
        int v = _heap[i];
        while (i > 0) {
            std::size_t parent = (i - 1) / 2;
            if (_activity[_heap[parent]] >= _activity[v])
                break;
            _heap[i] = _heap[parent];
            _heap_index[_heap[i]] = static_cast<int>(i);
            i = parent;
        }
        _heap[i] = v;
        _heap_index[v] = static_cast<int>(i);
    }

    auto CdclSolver::heap_down(std::size_t i) -> void
    {
        int v = _heap[i];
        while (true) {
            std::size_t child = 2 * i + 1;
            if (child >= _heap.size())
                break;
            if (child + 1 < _heap.size() && _activity[_heap[child + 1]] > _activity[_heap[child]])
                ++child;
            if (_activity[_heap[child]] <= _activity[v])
                break;
            _heap[i] = _heap[child];
            _heap_index[_heap[i]] = static_cast<int>(i);
            i = child;
        }
        _heap[i] = v;
        _heap_index[v] = static_cast<int>(i);
    }
}
