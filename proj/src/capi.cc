#include "topksat.h"

#include <cstring>
#include <new>

#include "apps/ca.hh"
#include "apps/clique.hh"
#include "core/formula.hh"
#include "core/solution.hh"
#include "core/wcnf.hh"
#include "ee/ee.hh"
#include "gen/gen.hh"
#include "memkc/memkc.hh"
#include "oracle/oracle.hh"
#include "report.hh"
#include "solve.hh"

using namespace topksat;

struct tks_formula {
    Formula f;
};
struct tks_varmap {
    VarMap m;
};
struct tks_graph {
    Graph g;
};
struct tks_ca_spec {
    CaSpec s;
};
struct tks_solution {
    TopKSolution s;
};

namespace {

thread_local std::string g_last_error;

int code_of(const Error& e) {
    switch (e.code()) {
    case ErrorCode::Parse: return TKS_ERR_PARSE;
    case ErrorCode::Invalid: return TKS_ERR_INVALID;
    case ErrorCode::Overflow: return TKS_ERR_OVERFLOW;
    case ErrorCode::Timeout: return TKS_ERR_TIMEOUT;
    case ErrorCode::Verify: return TKS_ERR_VERIFY;
    case ErrorCode::Io: return TKS_ERR_IO;
    case ErrorCode::Internal: return TKS_ERR_INTERNAL;
    }
    return TKS_ERR_INTERNAL;
}

template <typename Fn> int guarded(Fn&& fn) noexcept {
    try {
        fn();
        return TKS_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return code_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TKS_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return TKS_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

EeSolveOptions ee_options(const tks_solve_options* opts) {
    EeSolveOptions out;
    if (opts) {
        out.maximalize = opts->maximalize != 0;
        if (opts->node_budget != 0) out.node_budget = opts->node_budget;
        if (opts->time_limit_s > 0) out.time_limit_s = opts->time_limit_s;
        if (opts->solver_cmd) out.solver_cmd = opts->solver_cmd;
    }
    return out;
}

} // namespace

extern "C" {

const char* tks_version(void) { return "0.1.0"; }
const char* tks_last_error(void) { return g_last_error.c_str(); }

void tks_string_free(char* s) { delete[] s; }
void tks_formula_free(tks_formula* f) { delete f; }
void tks_varmap_free(tks_varmap* m) { delete m; }
void tks_graph_free(tks_graph* g) { delete g; }
void tks_ca_spec_free(tks_ca_spec* s) { delete s; }
void tks_solution_free(tks_solution* s) { delete s; }

int tks_formula_parse_wcnf(const char* text, tks_formula** out) {
    return guarded([&] { *out = new tks_formula{parse_wcnf(text ? text : "")}; });
}

int tks_formula_read_wcnf(const char* path, tks_formula** out) {
    return guarded([&] { *out = new tks_formula{read_wcnf_file(path)}; });
}

int tks_formula_write_wcnf(const tks_formula* f, char** out) {
    return guarded([&] { *out = copy_string(write_wcnf(f->f)); });
}

int tks_formula_num_vars(const tks_formula* f) { return f->f.num_vars(); }
int tks_formula_num_hard(const tks_formula* f) { return f->f.num_hard(); }
int tks_formula_num_soft(const tks_formula* f) { return f->f.num_soft(); }

int tks_ee_encode(const tks_formula* f, int k, tks_formula** enc, tks_varmap** map) {
    return guarded([&] {
        EeEncoding e = ee_encode(f->f, k);
        *enc = new tks_formula{std::move(e.formula)};
        *map = new tks_varmap{e.map};
    });
}

int tks_ee_write_wcnf(const tks_formula* enc, const tks_varmap* map, char** out) {
    return guarded([&] { *out = copy_string(write_wcnf_with_map(enc->f, map->m)); });
}

int tks_varmap_parse(const char* wcnf_text, tks_varmap** out) {
    return guarded([&] { *out = new tks_varmap{parse_eemap(wcnf_text ? wcnf_text : "")}; });
}

int tks_ee_decode(const tks_formula* original, const tks_varmap* map, const int* lits,
                  int num_lits, tks_solution** out) {
    return guarded([&] {
        Model m(static_cast<size_t>(map->m.expanded_vars()), true);
        for (int i = 0; i < num_lits; ++i) {
            int v = var_of(lits[i]);
            if (lits[i] == 0 || v > map->m.expanded_vars())
                throw Error(ErrorCode::Invalid,
                            "literal " + std::to_string(lits[i]) + " outside the expanded range");
            m[static_cast<size_t>(v) - 1] = positive(lits[i]);
        }
        *out = new tks_solution{ee_decode(m, map->m, original->f)};
    });
}

int tks_graph_parse(const char* text, tks_graph** out) {
    return guarded([&] { *out = new tks_graph{parse_dimacs_graph(text ? text : "")}; });
}

int tks_graph_read(const char* path, tks_graph** out) {
    return guarded([&] { *out = new tks_graph{parse_dimacs_graph(read_text_file(path))}; });
}

int tks_graph_write(const tks_graph* g, char** out) {
    return guarded([&] { *out = copy_string(write_dimacs_graph(g->g)); });
}

int tks_graph_num_vertices(const tks_graph* g) { return g->g.num_vertices(); }
int tks_graph_num_edges(const tks_graph* g) { return g->g.num_edges(); }

int tks_encode_clique(const tks_graph* g, int k, tks_formula** out) {
    return guarded([&] { *out = new tks_formula{encode_clique(g->g, k).formula}; });
}

int tks_ca_spec_parse(const char* text, tks_ca_spec** out) {
    return guarded([&] { *out = new tks_ca_spec{parse_ca_spec(text ? text : "")}; });
}

int tks_ca_spec_read(const char* path, tks_ca_spec** out) {
    return guarded([&] { *out = new tks_ca_spec{parse_ca_spec(read_text_file(path))}; });
}

int tks_encode_ca(const tks_ca_spec* spec, int k, tks_formula** out) {
    return guarded([&] { *out = new tks_formula{encode_ca(spec->s, k).formula}; });
}

void tks_solve_options_init(tks_solve_options* opts) {
    opts->maximalize = 1;
    opts->model_cap = MemkcOptions{}.model_cap;
    opts->node_budget = SolveOptions{}.node_budget;
    opts->time_limit_s = 300.0;
    opts->solver_cmd = nullptr;
}

int tks_solve_memkc(const tks_formula* f, int k, const tks_solve_options* opts,
                    tks_solution** out) {
    return guarded([&] {
        MemkcOptions mo;
        if (opts) {
            if (opts->model_cap > 0) mo.model_cap = opts->model_cap;
            mo.maximalize = opts->maximalize != 0;
        }
        *out = new tks_solution{memkc_solve(f->f, k, mo)};
    });
}

int tks_solve_ee_internal(const tks_formula* f, int k, const tks_solve_options* opts,
                          tks_solution** out) {
    return guarded([&] { *out = new tks_solution{solve_ee_internal(f->f, k, ee_options(opts))}; });
}

int tks_solve_ee_external(const tks_formula* f, int k, const tks_solve_options* opts,
                          tks_solution** out) {
    return guarded([&] { *out = new tks_solution{solve_ee_external(f->f, k, ee_options(opts))}; });
}

int tks_solve_oracle(const tks_formula* f, int k, int var_cap, tks_solution** out) {
    return guarded([&] {
        *out = new tks_solution{
            oracle::brute_topk(f->f, k, var_cap > 0 ? var_cap : oracle::kDefaultVarCap)};
    });
}

int tks_verify(const tks_formula* f, int k, long model_cap, int oracle_cap, int* memkc_obj,
               int* ee_obj, int* oracle_obj, int* agree) {
    return guarded([&] {
        VerifyOutcome v =
            verify_instance(f->f, k, model_cap > 0 ? model_cap : MemkcOptions{}.model_cap,
                            oracle_cap > 0 ? oracle_cap : oracle::kDefaultVarCap);
        if (memkc_obj) *memkc_obj = v.memkc_objective;
        if (ee_obj) *ee_obj = v.ee_objective;
        if (oracle_obj) *oracle_obj = v.oracle_objective;
        if (agree) *agree = v.agree ? 1 : 0;
    });
}

int tks_solution_status(const tks_solution* s) {
    switch (s->s.status) {
    case SolutionStatus::Optimal: return TKS_STATUS_OPTIMAL;
    case SolutionStatus::Feasible: return TKS_STATUS_FEASIBLE;
    case SolutionStatus::InfeasibleHard: return TKS_STATUS_INFEASIBLE_HARD;
    case SolutionStatus::Unknown: return TKS_STATUS_UNKNOWN;
    }
    return TKS_STATUS_UNKNOWN;
}

int tks_solution_k(const tks_solution* s) { return s->s.k; }
int tks_solution_objective(const tks_solution* s) { return s->s.objective; }
int tks_solution_uncovered(const tks_solution* s) { return s->s.uncovered; }
double tks_solution_time_s(const tks_solution* s) { return s->s.time_s; }
int tks_solution_model_count(const tks_solution* s) {
    return static_cast<int>(s->s.models.size());
}

int tks_solution_model(const tks_solution* s, int index, int* lits, int capacity) {
    if (index < 0 || index >= static_cast<int>(s->s.models.size())) {
        g_last_error = "model index out of range";
        return -1;
    }
    const Model& m = s->s.models[static_cast<size_t>(index)];
    int n = static_cast<int>(m.size());
    for (int v = 1; v <= n && v <= capacity; ++v)
        lits[v - 1] = m[static_cast<size_t>(v) - 1] ? v : -v;
    return n;
}

const char* tks_solution_note(const tks_solution* s) { return s->s.note.c_str(); }

int tks_report_text(const tks_solution* s, const tks_graph* g, const tks_ca_spec* ca,
                    char** out) {
    return guarded([&] {
        *out = copy_string(report_text(s->s, g ? &g->g : nullptr, ca ? &ca->s : nullptr));
    });
}

int tks_report_json(const tks_solution* s, const tks_graph* g, const tks_ca_spec* ca,
                    char** out) {
    return guarded([&] {
        *out = copy_string(report_json(s->s, g ? &g->g : nullptr, ca ? &ca->s : nullptr));
    });
}

int tks_gen_random_instance(int num_vars, int num_hard, int clause_len, uint64_t seed,
                            tks_formula** out) {
    return guarded([&] {
        *out = new tks_formula{gen_random_instance({num_vars, num_hard, clause_len, seed})};
    });
}

int tks_gen_random_graph(int n, double p, uint64_t seed, tks_graph** out) {
    return guarded([&] { *out = new tks_graph{gen_random_graph(n, p, seed)}; });
}

} // extern "C"
