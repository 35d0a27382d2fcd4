/* topksat: diversified top-k partial MaxSAT toolkit, C interface.
 *
 * Every function returning int yields TKS_OK or an error code; on error,
 * tks_last_error() describes the failure (thread-local). Objects created
 * through out-parameters are owned by the caller and released with the
 * matching *_free function. Strings returned through char** are released
 * with tks_string_free. Handles are never shared between calls that could
 * free them; distinct handles may be used from distinct threads.
 */
#ifndef TOPKSAT_H
#define TOPKSAT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define TKS_OK 0
#define TKS_ERR_PARSE 1
#define TKS_ERR_INVALID 2
#define TKS_ERR_OVERFLOW 3 /* enumeration or oracle cap exceeded */
#define TKS_ERR_TIMEOUT 4
#define TKS_ERR_VERIFY 5 /* solution or witness failed re-verification */
#define TKS_ERR_IO 6
#define TKS_ERR_INTERNAL 7

#define TKS_STATUS_OPTIMAL 0
#define TKS_STATUS_FEASIBLE 1
#define TKS_STATUS_INFEASIBLE_HARD 2
#define TKS_STATUS_UNKNOWN 3

typedef struct tks_formula tks_formula;   /* partial MaxSAT formula */
typedef struct tks_varmap tks_varmap;     /* expanded-variable bijection */
typedef struct tks_graph tks_graph;       /* simple undirected graph */
typedef struct tks_ca_spec tks_ca_spec;   /* covering-array shape */
typedef struct tks_solution tks_solution; /* top-k solution */

const char* tks_version(void);
const char* tks_last_error(void);

void tks_string_free(char* s);
void tks_formula_free(tks_formula* f);
void tks_varmap_free(tks_varmap* m);
void tks_graph_free(tks_graph* g);
void tks_ca_spec_free(tks_ca_spec* s);
void tks_solution_free(tks_solution* s);

/* --- formulas and WCNF ------------------------------------------------ */

int tks_formula_parse_wcnf(const char* text, tks_formula** out);
int tks_formula_read_wcnf(const char* path, tks_formula** out);
int tks_formula_write_wcnf(const tks_formula* f, char** out);
int tks_formula_num_vars(const tks_formula* f);
int tks_formula_num_hard(const tks_formula* f);
int tks_formula_num_soft(const tks_formula* f);

/* --- expanding encoding ----------------------------------------------- */

int tks_ee_encode(const tks_formula* f, int k, tks_formula** enc, tks_varmap** map);
/* WCNF of the expanded formula with `c eemap` comments. */
int tks_ee_write_wcnf(const tks_formula* enc, const tks_varmap* map, char** out);
/* Recover the map from the `c eemap` comments of a WCNF text. */
int tks_varmap_parse(const char* wcnf_text, tks_varmap** out);
/* Split a total model of the expanded formula (signed literals) back into
 * k models of the original one. */
int tks_ee_decode(const tks_formula* original, const tks_varmap* map, const int* lits,
                  int num_lits, tks_solution** out);

/* --- application encoders --------------------------------------------- */

int tks_graph_parse(const char* text, tks_graph** out); /* DIMACS edge format */
int tks_graph_read(const char* path, tks_graph** out);
int tks_graph_write(const tks_graph* g, char** out);
int tks_graph_num_vertices(const tks_graph* g);
int tks_graph_num_edges(const tks_graph* g);
int tks_encode_clique(const tks_graph* g, int k, tks_formula** out);

int tks_ca_spec_parse(const char* text, tks_ca_spec** out); /* `M t s_1..s_M [N]` */
int tks_ca_spec_read(const char* path, tks_ca_spec** out);
int tks_encode_ca(const tks_ca_spec* spec, int k, tks_formula** out);

/* --- solving ----------------------------------------------------------- */

typedef struct tks_solve_options {
    int maximalize;         /* nonzero: grow models into maximal solutions */
    long model_cap;         /* memkc enumeration limit */
    long node_budget;       /* internal branch-and-bound decision limit */
    double time_limit_s;    /* external solver wall-clock limit */
    const char* solver_cmd; /* external command template, `{wcnf}` placeholder */
} tks_solve_options;

void tks_solve_options_init(tks_solve_options* opts);

int tks_solve_memkc(const tks_formula* f, int k, const tks_solve_options* opts,
                    tks_solution** out);
int tks_solve_ee_internal(const tks_formula* f, int k, const tks_solve_options* opts,
                          tks_solution** out);
int tks_solve_ee_external(const tks_formula* f, int k, const tks_solve_options* opts,
                          tks_solution** out);
/* Exhaustive reference for small instances (var_cap <= 0: default cap). */
int tks_solve_oracle(const tks_formula* f, int k, int var_cap, tks_solution** out);

/* Objectives of memkc, ee-internal and the oracle on the same instance;
 * agree is nonzero when all three match. */
int tks_verify(const tks_formula* f, int k, long model_cap, int oracle_cap, int* memkc_obj,
               int* ee_obj, int* oracle_obj, int* agree);

/* --- solutions ---------------------------------------------------------- */

int tks_solution_status(const tks_solution* s);
int tks_solution_k(const tks_solution* s);
int tks_solution_objective(const tks_solution* s);
int tks_solution_uncovered(const tks_solution* s);
double tks_solution_time_s(const tks_solution* s);
int tks_solution_model_count(const tks_solution* s);
/* Copies up to capacity signed literals of model `index` into lits and
 * returns the model's literal count (call with capacity 0 to size). */
int tks_solution_model(const tks_solution* s, int index, int* lits, int capacity);
const char* tks_solution_note(const tks_solution* s);

/* Reports carry status, k, objective, uncovered, time_s, the models, and,
 * when a graph or CA spec is supplied, the decoded cliques or rows. */
int tks_report_text(const tks_solution* s, const tks_graph* g, const tks_ca_spec* ca, char** out);
int tks_report_json(const tks_solution* s, const tks_graph* g, const tks_ca_spec* ca, char** out);

/* --- generators ---------------------------------------------------------- */

int tks_gen_random_instance(int num_vars, int num_hard, int clause_len, uint64_t seed,
                            tks_formula** out);
int tks_gen_random_graph(int n, double p, uint64_t seed, tks_graph** out);

#ifdef __cplusplus
}
#endif

#endif /* TOPKSAT_H */
