#include "pms/external.hh"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <sstream>

#include "core/wcnf.hh"

namespace topksat {

namespace {

struct Transcript {
    bool have_status = false;
    std::string status_line;
    bool have_o = false;
    long long last_o = -1;
    std::vector<Lit> witness_lits;
    bool witness_terminated = false;
};

Transcript scan_transcript(std::string_view text) {
    Transcript tr;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.size() >= 2 && line[0] == 'o' && (line[1] == ' ' || line[1] == '\t')) {
            long long v = 0;
            std::istringstream ls(line.substr(2));
            if (ls >> v) {
                tr.have_o = true;
                tr.last_o = v;
            }
        } else if (line.size() >= 2 && line[0] == 's' && line[1] == ' ') {
            tr.have_status = true;
            tr.status_line = line.substr(2);
            while (!tr.status_line.empty() &&
                   (tr.status_line.back() == '\r' || tr.status_line.back() == ' '))
                tr.status_line.pop_back();
        } else if (line.size() >= 2 && line[0] == 'v' && (line[1] == ' ' || line[1] == '\t')) {
            if (tr.witness_terminated) continue;
            std::istringstream ls(line.substr(2));
            long long v = 0;
            while (ls >> v) {
                if (v == 0) {
                    tr.witness_terminated = true;
                    break;
                }
                tr.witness_lits.push_back(static_cast<Lit>(v));
            }
        }
    }
    return tr;
}

// Missing variables default to true; verification catches bad witnesses.
std::optional<Model> witness_model(const std::vector<Lit>& lits, int num_vars,
                                   std::string& problem) {
    Model m(static_cast<size_t>(num_vars), true);
    for (Lit l : lits) {
        int v = var_of(l);
        if (v < 1 || v > num_vars) {
            problem = "witness literal " + std::to_string(l) + " out of range";
            return std::nullopt;
        }
        m[static_cast<size_t>(v) - 1] = positive(l);
    }
    return m;
}

SolverResult unknown(std::string msg) {
    SolverResult res;
    res.status = SolveStatus::Unknown;
    res.message = std::move(msg);
    return res;
}

} // namespace

SolverResult parse_solver_output(std::string_view text, const Formula& f) {
    Transcript tr = scan_transcript(text);
    if (!tr.have_status) return unknown("no `s` status line in solver output");

    if (tr.status_line == "UNSATISFIABLE") {
        SolverResult res;
        res.status = SolveStatus::UnsatHard;
        return res;
    }
    const bool optimum = tr.status_line == "OPTIMUM FOUND";
    const bool satisfiable = tr.status_line == "SATISFIABLE";
    if (!optimum && !satisfiable) return unknown("unrecognized status `s " + tr.status_line + "`");

    if (tr.witness_lits.empty() && !tr.witness_terminated)
        return unknown("status `s " + tr.status_line + "` without a `v` witness line");
    std::string problem;
    std::optional<Model> m = witness_model(tr.witness_lits, f.num_vars(), problem);
    if (!m) return unknown(problem);
    if (int bad = first_violated_hard(f, *m))
        return unknown("witness violates hard clause " + std::to_string(bad));
    int unsat = f.num_soft() - static_cast<int>(soft_coverage(f, *m).count());
    if (tr.have_o && tr.last_o != unsat)
        return unknown("witness leaves " + std::to_string(unsat) +
                       " soft clauses unsatisfied but last `o` line reported " +
                       std::to_string(tr.last_o));

    SolverResult res;
    res.status = optimum ? SolveStatus::Optimum : SolveStatus::SatSuboptimal;
    res.min_unsat = unsat;
    res.witness = std::move(m);
    return res;
}

namespace {

std::vector<std::string> build_argv(const std::string& command_template, const std::string& path) {
    std::vector<std::string> argv;
    std::istringstream in(command_template);
    std::string tok;
    bool substituted = false;
    while (in >> tok) {
        size_t at = tok.find("{wcnf}");
        if (at != std::string::npos) {
            tok.replace(at, 6, path);
            substituted = true;
        }
        argv.push_back(tok);
    }
    if (argv.empty()) throw Error(ErrorCode::Invalid, "empty external solver command");
    if (!substituted) argv.push_back(path);
    return argv;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        char name[] = "/tmp/topksat-XXXXXX.wcnf";
        int fd = mkstemps(name, 5);
        if (fd < 0) throw Error(ErrorCode::Io, "mkstemps failed");
        path = name;
        size_t off = 0;
        while (off < contents.size()) {
            ssize_t n = write(fd, contents.data() + off, contents.size() - off);
            if (n < 0) {
                close(fd);
                throw Error(ErrorCode::Io, "write to " + path + " failed");
            }
            off += static_cast<size_t>(n);
        }
        close(fd);
    }
    ~TempFile() { unlink(path.c_str()); }
};

} // namespace

SolverResult external_solve(const Formula& f, const std::string& command_template,
                            const ExternalOptions& opts) {
    TempFile wcnf(write_wcnf(f));
    std::vector<std::string> argv = build_argv(command_template, wcnf.path);

    // Built before fork: the child must not allocate (concurrent callers
    // may hold the allocator lock at fork time).
    std::vector<char*> cargv;
    cargv.reserve(argv.size() + 1);
    for (std::string& a : argv) cargv.push_back(a.data());
    cargv.push_back(nullptr);

    int pipefd[2];
    if (pipe(pipefd) != 0) throw Error(ErrorCode::Io, "pipe failed");
    auto t0 = std::chrono::steady_clock::now();
    pid_t pid = fork();
    if (pid < 0) {
        close(pipefd[0]);
        close(pipefd[1]);
        throw Error(ErrorCode::Io, "fork failed");
    }
    if (pid == 0) {
        setpgid(0, 0); // own process group so the whole tree can be killed
        dup2(pipefd[1], STDOUT_FILENO);
        int devnull = open("/dev/null", O_WRONLY);
        if (devnull >= 0) dup2(devnull, STDERR_FILENO);
        close(pipefd[0]);
        close(pipefd[1]);
        execvp(cargv[0], cargv.data());
        _exit(127);
    }
    close(pipefd[1]);

    std::string output;
    bool timed_out = false;
    char buf[4096];
    while (true) {
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!timed_out && opts.time_limit_s > 0 && elapsed >= opts.time_limit_s) {
            kill(-pid, SIGKILL); // the whole process group
            kill(pid, SIGKILL);
            timed_out = true;
        }
        struct pollfd pfd{pipefd[0], POLLIN, 0};
        int pr = poll(&pfd, 1, 50);
        if (pr > 0) {
            ssize_t n = read(pipefd[0], buf, sizeof buf);
            if (n > 0) {
                output.append(buf, static_cast<size_t>(n));
                continue;
            }
            break; // EOF or error
        }
        // Once killed, orphans may still hold the pipe open; stop waiting.
        if (pr == 0 && timed_out) break;
        if (pr < 0 && errno != EINTR) break;
    }
    close(pipefd[0]);
    int wstatus = 0;
    waitpid(pid, &wstatus, 0);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    SolverResult res = parse_solver_output(output, f);
    res.time_s = elapsed;
    // A complete verified transcript survives the timeout; anything weaker
    // becomes the "-" convention.
    if (timed_out && res.status != SolveStatus::Optimum && res.status != SolveStatus::UnsatHard) {
        res = unknown("time limit of " + std::to_string(opts.time_limit_s) + " s exceeded");
        res.time_s = elapsed;
        return res;
    }
    if (res.status == SolveStatus::Unknown && WIFEXITED(wstatus) && WEXITSTATUS(wstatus) == 127)
        res.message += " (command not found: " + argv[0] + ")";
    return res;
}

} // namespace topksat
