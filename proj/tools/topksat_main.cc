// Command-line front end for the topksat shared library.
//
// Exit codes: 0 success, 1 usage or parse error, 2 infeasible hard part,
// 3 timeout or budget exhausted, 4 verification mismatch.

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "topksat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitMismatch = 4;

int exit_code_for(int rc) {
    switch (rc) {
    case TKS_OK: return kExitOk;
    case TKS_ERR_OVERFLOW:
    case TKS_ERR_TIMEOUT: return kExitTimeout;
    case TKS_ERR_VERIFY: return kExitMismatch;
    default: return kExitUsage;
    }
}

[[noreturn]] void fail(int rc) {
    std::cerr << "error: " << tks_last_error() << "\n";
    std::exit(exit_code_for(rc));
}

void check(int rc) {
    if (rc != TKS_OK) fail(rc);
}

template <typename T, void (*Free)(T*)> class Handle {
  public:
    Handle() = default;
    ~Handle() { reset(); }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    T** out() {
        reset();
        return &ptr_;
    }
    T* get() const { return ptr_; }
    explicit operator bool() const { return ptr_ != nullptr; }

  private:
    void reset() {
        if (ptr_) Free(ptr_);
        ptr_ = nullptr;
    }
    T* ptr_ = nullptr;
};

using FormulaHandle = Handle<tks_formula, tks_formula_free>;
using VarMapHandle = Handle<tks_varmap, tks_varmap_free>;
using GraphHandle = Handle<tks_graph, tks_graph_free>;
using CaSpecHandle = Handle<tks_ca_spec, tks_ca_spec_free>;
using SolutionHandle = Handle<tks_solution, tks_solution_free>;

std::string take_string(char* s) {
    std::string out(s ? s : "");
    tks_string_free(s);
    return out;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        std::exit(kExitUsage);
    }
    out << text;
}

struct EncodeArgs {
    std::string input;
    std::string output;
    int k = 1;
};

int run_encode(const std::string& kind, const EncodeArgs& args) {
    FormulaHandle encoded;
    std::string wcnf;
    if (kind == "ee") {
        FormulaHandle original;
        VarMapHandle map;
        check(tks_formula_read_wcnf(args.input.c_str(), original.out()));
        check(tks_ee_encode(original.get(), args.k, encoded.out(), map.out()));
        char* text = nullptr;
        check(tks_ee_write_wcnf(encoded.get(), map.get(), &text));
        wcnf = take_string(text);
    } else if (kind == "clique") {
        GraphHandle graph;
        check(tks_graph_read(args.input.c_str(), graph.out()));
        check(tks_encode_clique(graph.get(), args.k, encoded.out()));
        char* text = nullptr;
        check(tks_formula_write_wcnf(encoded.get(), &text));
        wcnf = take_string(text);
    } else {
        CaSpecHandle spec;
        check(tks_ca_spec_read(args.input.c_str(), spec.out()));
        check(tks_encode_ca(spec.get(), args.k, encoded.out()));
        char* text = nullptr;
        check(tks_formula_write_wcnf(encoded.get(), &text));
        wcnf = take_string(text);
    }
    std::ostringstream summary;
    summary << "vars " << tks_formula_num_vars(encoded.get()) << " hard "
            << tks_formula_num_hard(encoded.get()) << " soft "
            << tks_formula_num_soft(encoded.get()) << "\n";
    write_output(args.output, wcnf);
    if (args.output.empty() || args.output == "-")
        std::cerr << summary.str();
    else
        std::cout << summary.str();
    return kExitOk;
}

struct SolveArgs {
    std::string input;
    int k = 1;
    bool from_graph = false;
    bool from_ca = false;
    bool json = false;
    bool maximalize = true;
    double time_limit_s = 300.0;
    long model_cap = 0;
    long node_budget = 0;
    std::string solver_cmd;
};

int solve_one(const std::string& method, const tks_formula* formula, int k,
              const tks_solve_options* opts, tks_solution** out) {
    if (method == "memkc") return tks_solve_memkc(formula, k, opts, out);
    if (method == "ee-internal") return tks_solve_ee_internal(formula, k, opts, out);
    return tks_solve_ee_external(formula, k, opts, out);
}

tks_solve_options make_options(const SolveArgs& args, std::string& cmd_storage) {
    tks_solve_options opts;
    tks_solve_options_init(&opts);
    opts.maximalize = args.maximalize ? 1 : 0;
    if (args.model_cap > 0) opts.model_cap = args.model_cap;
    if (args.node_budget > 0) opts.node_budget = args.node_budget;
    if (args.time_limit_s > 0) opts.time_limit_s = args.time_limit_s;
    cmd_storage = args.solver_cmd;
    if (cmd_storage.empty()) {
        const char* env = std::getenv("TOPKSAT_SOLVER_CMD");
        if (env) cmd_storage = env;
    }
    if (!cmd_storage.empty()) opts.solver_cmd = cmd_storage.c_str();
    return opts;
}

int run_solve(const std::string& method, const SolveArgs& args) {
    if (args.from_graph && args.from_ca) {
        std::cerr << "error: --from-graph and --from-ca are mutually exclusive\n";
        return kExitUsage;
    }
    FormulaHandle formula;
    GraphHandle graph;
    CaSpecHandle spec;
    if (args.from_graph) {
        check(tks_graph_read(args.input.c_str(), graph.out()));
        check(tks_encode_clique(graph.get(), args.k, formula.out()));
    } else if (args.from_ca) {
        check(tks_ca_spec_read(args.input.c_str(), spec.out()));
        check(tks_encode_ca(spec.get(), args.k, formula.out()));
    } else {
        check(tks_formula_read_wcnf(args.input.c_str(), formula.out()));
    }

    std::string cmd_storage;
    tks_solve_options opts = make_options(args, cmd_storage);
    SolutionHandle sol;
    check(solve_one(method, formula.get(), args.k, &opts, sol.out()));

    char* text = nullptr;
    if (args.json)
        check(tks_report_json(sol.get(), graph.get(), spec.get(), &text));
    else
        check(tks_report_text(sol.get(), graph.get(), spec.get(), &text));
    std::cout << take_string(text);

    const char* note = tks_solution_note(sol.get());
    if (note && *note) std::cerr << "note: " << note << "\n";

    switch (tks_solution_status(sol.get())) {
    case TKS_STATUS_INFEASIBLE_HARD: return kExitInfeasible;
    case TKS_STATUS_UNKNOWN: return kExitTimeout;
    default: return kExitOk;
    }
}

struct VerifyArgs {
    std::string input;
    int k = 1;
    long model_cap = 0;
    int oracle_cap = 0;
};

int run_verify(const VerifyArgs& args) {
    FormulaHandle formula;
    check(tks_formula_read_wcnf(args.input.c_str(), formula.out()));
    int memkc_obj = -1, ee_obj = -1, oracle_obj = -1, agree = 0;
    check(tks_verify(formula.get(), args.k, args.model_cap, args.oracle_cap, &memkc_obj, &ee_obj,
                     &oracle_obj, &agree));
    std::cout << "memkc       " << memkc_obj << "\n"
              << "ee-internal " << ee_obj << "\n"
              << "oracle      " << oracle_obj << "\n"
              << "verdict     " << (agree ? "pass" : "FAIL") << "\n";
    return agree ? kExitOk : kExitMismatch;
}

// ---- bench ----------------------------------------------------------------

struct BenchCell {
    bool ok = false;
    double uncov = 0.0;
    double time_s = 0.0;
};

struct BenchRow {
    std::string instance;
    int k = 1;
    std::vector<BenchCell> cells;
    std::string error;
};

struct BenchTask {
    std::string name;
    std::string path;
    std::string type; // wcnf | graph | ca
    int k = 1;
};

struct BenchConfig {
    std::vector<BenchTask> tasks;
    std::vector<std::string> methods;
    double time_limit_s = 300.0;
    int repetitions = 1;
    std::string solver_cmd;
    int jobs = 0;
};

BenchConfig load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open manifest " << path << "\n";
        std::exit(kExitUsage);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        std::cerr << "error: manifest is not valid JSON: " << e.what() << "\n";
        std::exit(kExitUsage);
    }
    BenchConfig cfg;
    std::vector<int> ks;
    if (j.contains("k")) {
        if (j["k"].is_array())
            ks = j["k"].get<std::vector<int>>();
        else if (j["k"].is_object())
            for (int k = j["k"]["from"].get<int>(); k <= j["k"]["to"].get<int>(); ++k)
                ks.push_back(k);
        else
            ks.push_back(j["k"].get<int>());
    } else {
        ks.push_back(1);
    }
    cfg.methods = j.value("methods", std::vector<std::string>{"memkc"});
    for (const std::string& m : cfg.methods) {
        if (m != "memkc" && m != "ee-internal" && m != "ee-external") {
            std::cerr << "error: unknown method `" << m << "` in manifest\n";
            std::exit(kExitUsage);
        }
    }
    cfg.time_limit_s = j.value("time_limit_s", 300.0);
    cfg.repetitions = j.value("repetitions", 1);
    cfg.solver_cmd = j.value("solver_cmd", std::string());
    cfg.jobs = j.value("jobs", 0);
    for (const auto& inst : j.value("instances", nlohmann::json::array())) {
        std::string p = inst.at("path").get<std::string>();
        std::string name = inst.value("name", p);
        std::string type = inst.value("type", "wcnf");
        for (int k : ks) cfg.tasks.push_back({name, p, type, k});
    }
    return cfg;
}

BenchRow run_bench_row(const BenchConfig& cfg, const BenchTask& task) {
    BenchRow row;
    row.instance = task.name;
    row.k = task.k;
    FormulaHandle formula;
    int rc = TKS_OK;
    if (task.type == "graph") {
        GraphHandle g;
        rc = tks_graph_read(task.path.c_str(), g.out());
        if (rc == TKS_OK) rc = tks_encode_clique(g.get(), task.k, formula.out());
    } else if (task.type == "ca") {
        CaSpecHandle s;
        rc = tks_ca_spec_read(task.path.c_str(), s.out());
        if (rc == TKS_OK) rc = tks_encode_ca(s.get(), task.k, formula.out());
    } else {
        rc = tks_formula_read_wcnf(task.path.c_str(), formula.out());
    }
    if (rc != TKS_OK) {
        row.error = tks_last_error();
        row.cells.assign(cfg.methods.size(), {});
        return row;
    }
    tks_solve_options opts;
    tks_solve_options_init(&opts);
    opts.time_limit_s = cfg.time_limit_s;
    if (!cfg.solver_cmd.empty()) opts.solver_cmd = cfg.solver_cmd.c_str();

    for (const std::string& method : cfg.methods) {
        BenchCell cell;
        double uncov_sum = 0.0, time_sum = 0.0;
        int good = 0;
        for (int rep = 0; rep < std::max(1, cfg.repetitions); ++rep) {
            SolutionHandle sol;
            int src = solve_one(method, formula.get(), task.k, &opts, sol.out());
            if (src != TKS_OK) continue;
            int status = tks_solution_status(sol.get());
            if (status != TKS_STATUS_OPTIMAL && status != TKS_STATUS_FEASIBLE) continue;
            uncov_sum += tks_solution_uncovered(sol.get());
            time_sum += tks_solution_time_s(sol.get());
            ++good;
        }
        if (good == std::max(1, cfg.repetitions)) {
            cell.ok = true;
            cell.uncov = uncov_sum / good;
            cell.time_s = time_sum / good;
        }
        row.cells.push_back(cell);
    }
    return row;
}

std::string format_number(double v) {
    char buf[32];
    if (v == static_cast<long long>(v))
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
    else
        std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

int run_bench(const std::string& manifest, int jobs_override, bool csv) {
    BenchConfig cfg = load_manifest(manifest);
    if (jobs_override > 0) cfg.jobs = jobs_override;
    int jobs = cfg.jobs > 0 ? cfg.jobs
                            : std::max(1u, std::thread::hardware_concurrency());

    std::vector<BenchRow> rows(cfg.tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= cfg.tasks.size()) return;
            rows[i] = run_bench_row(cfg, cfg.tasks[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    // Header.
    std::vector<std::string> headers{"Instance", "k"};
    for (const std::string& m : cfg.methods) {
        headers.push_back(m + ".uncov");
        headers.push_back(m + ".time");
    }
    std::vector<std::vector<std::string>> table;
    table.push_back(headers);
    for (const BenchRow& row : rows) {
        std::vector<std::string> line{row.instance, std::to_string(row.k)};
        for (const BenchCell& cell : row.cells) {
            line.push_back(cell.ok ? format_number(cell.uncov) : "-");
            line.push_back(cell.ok ? format_number(cell.time_s) : "-");
        }
        table.push_back(std::move(line));
        if (!row.error.empty())
            std::cerr << "note: " << row.instance << " k=" << row.k << ": " << row.error << "\n";
    }

    if (csv) {
        for (const auto& line : table) {
            for (size_t c = 0; c < line.size(); ++c)
                std::cout << (c ? "," : "") << line[c];
            std::cout << "\n";
        }
        return kExitOk;
    }
    std::vector<size_t> width(headers.size(), 0);
    for (const auto& line : table)
        for (size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    for (const auto& line : table) {
        for (size_t c = 0; c < line.size(); ++c) {
            std::cout << line[c] << std::string(width[c] - line[c].size(), ' ');
            if (c + 1 < line.size()) std::cout << "  ";
        }
        std::cout << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"topksat: diversified top-k partial MaxSAT toolkit"};
    app.require_subcommand(1);

    // encode
    auto* encode = app.add_subcommand("encode", "Encode an instance into WCNF");
    encode->require_subcommand(1);
    EncodeArgs encode_args;
    std::string encode_kind;
    for (const char* kind : {"ee", "clique", "ca"}) {
        auto* sub = encode->add_subcommand(
            kind, kind == std::string("ee")
                      ? "Expand a top-k WCNF instance into ordinary partial MaxSAT"
                      : (kind == std::string("clique")
                             ? "Encode a DIMACS graph for diversified top-k clique"
                             : "Encode a covering-array spec for diversified top-k rows"));
        sub->add_option("--k", encode_args.k, "copy count / solution count")
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_option("input", encode_args.input, "input file")->required();
        sub->add_option("-o,--output", encode_args.output, "output WCNF path (default stdout)");
        sub->callback([&encode_kind, kind] { encode_kind = kind; });
    }

    // solve
    auto* solve = app.add_subcommand("solve", "Solve a diversified top-k instance");
    solve->require_subcommand(1);
    SolveArgs solve_args;
    std::string solve_method;
    for (const char* method : {"memkc", "ee-internal", "ee-external"}) {
        auto* sub = solve->add_subcommand(
            method, method == std::string("memkc")
                        ? "Exact model enumeration + max-k-cover"
                        : (method == std::string("ee-internal")
                               ? "Expanding encoding + built-in branch and bound"
                               : "Expanding encoding + external MaxSAT solver"));
        sub->add_option("--k", solve_args.k, "number of solutions")
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_option("input", solve_args.input, "input file")->required();
        sub->add_flag("--from-graph", solve_args.from_graph,
                      "input is a DIMACS graph (top-k clique)");
        sub->add_flag("--from-ca", solve_args.from_ca,
                      "input is a covering-array spec (top-k rows)");
        sub->add_flag("--json", solve_args.json, "emit the JSON report");
        sub->add_flag("--maximalize,!--no-maximalize", solve_args.maximalize,
                      "grow models into maximal solutions (default on)");
        sub->add_option("--time-limit", solve_args.time_limit_s,
                        "external solver time limit in seconds");
        sub->add_option("--model-cap", solve_args.model_cap, "memkc enumeration cap");
        sub->add_option("--node-budget", solve_args.node_budget,
                        "internal branch-and-bound decision budget");
        sub->add_option("--solver-cmd", solve_args.solver_cmd,
                        "external solver command template ({wcnf} placeholder; "
                        "defaults to $TOPKSAT_SOLVER_CMD)");
        sub->callback([&solve_method, method] { solve_method = method; });
    }

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-check memkc, ee-internal and the oracle");
    VerifyArgs verify_args;
    verify->add_option("--k", verify_args.k, "number of solutions")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("input", verify_args.input, "WCNF file")->required();
    verify->add_option("--model-cap", verify_args.model_cap, "memkc enumeration cap");
    verify->add_option("--oracle-cap", verify_args.oracle_cap, "oracle variable cap");

    // bench
    auto* bench = app.add_subcommand("bench", "Run a benchmark manifest");
    std::string bench_manifest;
    int bench_jobs = 0;
    bool bench_csv = false;
    bench->add_option("manifest", bench_manifest, "JSON manifest path")->required();
    bench->add_option("--jobs", bench_jobs, "worker pool size (default: core count)");
    bench->add_flag("--csv", bench_csv, "emit CSV instead of the aligned table");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate seeded random instances");
    gen->require_subcommand(1);
    auto* gen_rand = gen->add_subcommand("rand", "Random partial MaxSAT instance");
    int gr_vars = 0, gr_hard = 0, gr_len = 3;
    uint64_t gr_seed = 0;
    std::string gen_out;
    gen_rand->add_option("--n", gr_vars, "variables")->required()->check(CLI::PositiveNumber);
    gen_rand->add_option("--hard", gr_hard, "hard clause count")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gen_rand->add_option("--len", gr_len, "hard clause length (default 3)");
    gen_rand->add_option("--seed", gr_seed, "seed")->required();
    gen_rand->add_option("-o,--output", gen_out, "output path (default stdout)");
    auto* gen_graph = gen->add_subcommand("graph", "G(n,p) random graph");
    int gg_n = 0;
    double gg_p = 0.0;
    uint64_t gg_seed = 0;
    gen_graph->add_option("--n", gg_n, "vertices")->required()->check(CLI::PositiveNumber);
    gen_graph->add_option("--p", gg_p, "edge probability")->required();
    gen_graph->add_option("--seed", gg_seed, "seed")->required();
    gen_graph->add_option("-o,--output", gen_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (encode->parsed()) return run_encode(encode_kind, encode_args);
    if (solve->parsed()) return run_solve(solve_method, solve_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (bench->parsed()) return run_bench(bench_manifest, bench_jobs, bench_csv);
    if (gen->parsed()) {
        if (gen_rand->parsed()) {
            FormulaHandle f;
            check(tks_gen_random_instance(gr_vars, gr_hard, gr_len, gr_seed, f.out()));
            char* text = nullptr;
            check(tks_formula_write_wcnf(f.get(), &text));
            write_output(gen_out, take_string(text));
        } else {
            GraphHandle g;
            check(tks_gen_random_graph(gg_n, gg_p, gg_seed, g.out()));
            char* text = nullptr;
            check(tks_graph_write(g.get(), &text));
            write_output(gen_out, take_string(text));
        }
        return kExitOk;
    }
    return kExitUsage;
}
