#include <ramsey/cdcl.hh>
#include <ramsey/errors.hh>
#include <ramsey/solver.hh>

#include <cerrno>
#include <csignal>
#include <cstdlib>
#include <cstring>
#include <fstream>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

using std::string;
using std::vector;
using Clock = std::chrono::steady_clock;
namespace fs = std::filesystem;

namespace ramsey
{
    auto verdict_name(Verdict v) -> std::string_view
    {
        switch (v) {
        case Verdict::sat: return "sat";
        case Verdict::unsat: return "unsat";
        case Verdict::unknown: return "unknown";
        }
        return "?";
    }

    namespace
    {
        auto elapsed_ms(Clock::time_point start) -> double
        {
            return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        }

        auto resolve_executable(const fs::path & path) -> fs::path
        {
            auto runnable = [](const fs::path & p) {
                std::error_code ec;
                return fs::is_regular_file(p, ec) && ::access(p.c_str(), X_OK) == 0;
            };

            if (path.string().find('/') != string::npos) {
                if (! runnable(path))
                    throw EnvironmentError{"SAT solver '" + path.string() + "' is missing or not executable"};
                return path;
            }
            if (const char * env_path = std::getenv("PATH")) {
                string dirs{env_path};
                std::size_t pos = 0;
                while (pos <= dirs.size()) {
                    auto end = dirs.find(':', pos);
                    if (end == string::npos)
                        end = dirs.size();
                    fs::path candidate = fs::path{dirs.substr(pos, end - pos)} / path;
                    if (runnable(candidate))
                        return candidate;
                    pos = end + 1;
                }
            }
            throw EnvironmentError{"SAT solver '" + path.string() + "' not found on PATH"};
        }

        class TempFile
        {
        public:
            explicit TempFile(const string & contents)
            {
                string pattern = (fs::temp_directory_path() / "ramsey-XXXXXX.cnf").string();
                vector<char> buffer(pattern.begin(), pattern.end());
                buffer.push_back('\0');
                int fd = ::mkstemps(buffer.data(), 4);
                if (fd < 0)
                    throw EnvironmentError{"cannot create temporary DIMACS file: " + string{std::strerror(errno)}};
                _path = buffer.data();
                std::size_t written = 0;
                while (written < contents.size()) {
                    auto n = ::write(fd, contents.data() + written, contents.size() - written);
                    if (n <= 0) {
                        ::close(fd);
                        throw EnvironmentError{"cannot write temporary DIMACS file"};
                    }
                    written += static_cast<std::size_t>(n);
                }
                ::close(fd);
            }

            TempFile(const TempFile &) = delete;
            auto operator=(const TempFile &) -> TempFile & = delete;

            ~TempFile()
            {
                std::error_code ec;
                fs::remove(_path, ec);
            }

            auto path() const -> const fs::path & { return _path; }

        private:
            fs::path _path;
        };

        struct ProcessResult
        {
            bool timed_out = false;
            int exit_code = -1;
            string output;
        };

        auto run_process(const fs::path & executable, const fs::path & argument, std::optional<Clock::time_point> deadline) -> ProcessResult
        {
            int out_pipe[2], err_pipe[2];
            if (::pipe(out_pipe) != 0 || ::pipe2(err_pipe, O_CLOEXEC) != 0)
                throw EnvironmentError{"pipe failed: " + string{std::strerror(errno)}};

            pid_t pid = ::fork();
            if (pid < 0)
                throw EnvironmentError{"fork failed: " + string{std::strerror(errno)}};

            if (pid == 0) {
                ::setpgid(0, 0);
                ::dup2(out_pipe[1], STDOUT_FILENO);
                int devnull = ::open("/dev/null", O_WRONLY);
                if (devnull >= 0)
                    ::dup2(devnull, STDERR_FILENO);
                ::close(out_pipe[0]);
                ::close(out_pipe[1]);
                ::close(err_pipe[0]);
                const char * argv[] = {executable.c_str(), argument.c_str(), nullptr};
                ::execv(executable.c_str(), const_cast<char * const *>(argv));
                int code = errno;
                [[maybe_unused]] auto ignored = ::write(err_pipe[1], &code, sizeof code);
                ::_exit(127);
            }

            ::close(out_pipe[1]);
            ::close(err_pipe[1]);

            int exec_errno = 0;
            if (::read(err_pipe[0], &exec_errno, sizeof exec_errno) == sizeof exec_errno) {
                ::close(err_pipe[0]);
                ::close(out_pipe[0]);
                ::waitpid(pid, nullptr, 0);
                throw EnvironmentError{"cannot execute '" + executable.string() + "': " + std::strerror(exec_errno)};
            }
            ::close(err_pipe[0]);

            ProcessResult result;
            char buffer[65536];
            pollfd fds{out_pipe[0], POLLIN, 0};
            while (true) {
                int wait_ms = -1;
                if (deadline) {
                    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(*deadline - Clock::now()).count();
                    if (left <= 0) {
                        result.timed_out = true;
                        break;
                    }
                    wait_ms = static_cast<int>(std::min<long long>(left, 1000));
                }
                int ready = ::poll(&fds, 1, wait_ms);
                if (ready < 0 && errno != EINTR)
                    break;
                if (ready <= 0)
                    continue;
                auto n = ::read(out_pipe[0], buffer, sizeof buffer);
                if (n <= 0)
                    break;
                result.output.append(buffer, static_cast<std::size_t>(n));
            }
            ::close(out_pipe[0]);

            if (result.timed_out)
                ::kill(-pid, SIGKILL);
            int status = 0;
            ::waitpid(pid, &status, 0);
            if (! result.timed_out && WIFEXITED(status))
                result.exit_code = WEXITSTATUS(status);
            return result;
        }

        auto to_outcome(const ProcessResult & run, int num_vars) -> SolveOutcome
        {
            SolveOutcome outcome;
            outcome.raw_output = run.output;
            if (run.timed_out) {
                outcome.verdict = Verdict::unknown;
                outcome.reason = "timeout";
                return outcome;
            }

            std::optional<Verdict> stated;
            vector<bool> model(num_vars, false);
            bool malformed = false;

            std::size_t pos = 0;
            const string & out = run.output;
            while (pos < out.size()) {
                auto end = out.find('\n', pos);
                if (end == string::npos)
                    end = out.size();
                std::string_view line{out.data() + pos, end - pos};
                pos = end + 1;
                if (! line.empty() && line.back() == '\r')
                    line.remove_suffix(1);

                if (line == "s SATISFIABLE")
                    stated = Verdict::sat;
                else if (line == "s UNSATISFIABLE")
                    stated = Verdict::unsat;
                else if (line.starts_with("v ")) {
                    std::size_t i = 1;
                    while (i < line.size()) {
                        while (i < line.size() && line[i] == ' ')
                            ++i;
                        if (i >= line.size())
                            break;
                        char * endp = nullptr;
                        string token{line.substr(i, line.find(' ', i) - i)};
                        long lit = std::strtol(token.c_str(), &endp, 10);
                        if (*endp != '\0' || std::labs(lit) > num_vars) {
                            malformed = true;
                            break;
                        }
                        if (lit != 0)
                            model[std::labs(lit) - 1] = lit > 0;
                        i += token.size();
                    }
                }
            }

            Verdict verdict = Verdict::unknown;
            if (stated)
                verdict = *stated;
            else if (run.exit_code == 10)
                verdict = Verdict::sat;
            else if (run.exit_code == 20)
                verdict = Verdict::unsat;

            if ((stated && run.exit_code == 10 && *stated != Verdict::sat) || (stated && run.exit_code == 20 && *stated != Verdict::unsat)) {
                outcome.reason = "exit code contradicts verdict line";
                return outcome;
            }
            if (verdict == Verdict::sat && malformed) {
                outcome.reason = "malformed model line";
                return outcome;
            }
            if (verdict == Verdict::unknown) {
                outcome.reason = "unrecognised output (exit code " + std::to_string(run.exit_code) + ")";
                return outcome;
            }
            outcome.verdict = verdict;
            if (verdict == Verdict::sat)
                outcome.model = std::move(model);
            return outcome;
        }
    }

    auto solve_embedded(const CnfInstance & inst) -> SolveOutcome
    {
        return solve_embedded(inst, std::nullopt);
    }

    auto solve_embedded(const CnfInstance & inst, std::optional<Clock::time_point> deadline) -> SolveOutcome
    {
        auto start = Clock::now();
        SolveOutcome outcome;
        outcome.solver = "embedded-cdcl";

        CdclSolver solver{inst.num_vars};
        for (auto & clause : inst.clauses)
            if (! solver.add_clause(clause))
                break;

        CdclLimits limits;
        limits.deadline = deadline;
        switch (solver.solve(limits)) {
        case CdclResult::sat:
            outcome.verdict = Verdict::sat;
            outcome.model = solver.model();
            break;
        case CdclResult::unsat:
            outcome.verdict = Verdict::unsat;
            break;
        case CdclResult::unknown:
            outcome.verdict = Verdict::unknown;
            outcome.reason = "timeout";
            break;
        }
        outcome.wall_ms = elapsed_ms(start);
        return outcome;
    }

    auto solve_external(const CnfInstance & inst, const fs::path & solver_path, std::optional<double> timeout_seconds) -> SolveOutcome
    {
        auto start = Clock::now();
        auto executable = resolve_executable(solver_path);

        SolveOutcome outcome;
        if (timeout_seconds && *timeout_seconds <= 0.0) {
            outcome.verdict = Verdict::unknown;
            outcome.reason = "timeout";
        }
        else {
            std::optional<Clock::time_point> deadline;
            if (timeout_seconds)
                deadline = start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*timeout_seconds));
            TempFile file{write_dimacs(inst)};
            outcome = to_outcome(run_process(executable, file.path(), deadline), inst.num_vars);
        }
        outcome.solver = executable.string();
        outcome.wall_ms = elapsed_ms(start);
        return outcome;
    }

    auto SolverChoice::from_flag_or_env(const string & flag) -> SolverChoice
    {
        if (! flag.empty())
            return SolverChoice{fs::path{flag}};
        if (const char * env = std::getenv("RAMSEY_SAT_SOLVER"); env && *env)
            return SolverChoice{fs::path{env}};
        return SolverChoice{};
    }

    auto SolverChoice::describe() const -> string
    {
        return external ? external->string() : string{"embedded-cdcl"};
    }

    auto solve(const CnfInstance & inst, const SolverChoice & choice, std::optional<double> timeout_seconds) -> SolveOutcome
    {
        if (choice.external)
            return solve_external(inst, *choice.external, timeout_seconds);
        if (timeout_seconds && *timeout_seconds <= 0.0) {
            SolveOutcome expired;
            expired.solver = "embedded-cdcl";
            expired.reason = "timeout";
            return expired;
        }
        std::optional<Clock::time_point> deadline;
        if (timeout_seconds)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*timeout_seconds));
        return solve_embedded(inst, deadline);
    }
}
