// Brute-force reference computations for the tests. Everything here works
// by plain enumeration and stays independent of the solver modules.
#ifndef TOPKSAT_TESTS_ORACLES_HH
#define TOPKSAT_TESTS_ORACLES_HH

#include <vector>

#include "apps/clique.hh"
#include "core/formula.hh"

namespace testutil {

topksat::Formula make_formula(int num_vars, const std::vector<std::vector<int>>& hard,
                              const std::vector<std::vector<int>>& soft);

// Example 1: hard {x1 v x2, -x1 v -x2}, soft {x1}, {x2}.
topksat::Formula example1();

// C4 cycle on vertices 1..4.
topksat::Graph c4();

bool naive_satisfied(const topksat::Clause& c, const topksat::Model& m);
bool naive_hard_ok(const topksat::Formula& f, const topksat::Model& m);

// Truth-table models of the hard clauses, in mask order (variable 1 is the
// lowest bit, false before true).
std::vector<topksat::Model> all_models(const topksat::Formula& f);

std::vector<int> coverage_vec(const topksat::Formula& f, const topksat::Model& m);

// Distinct set-maximal coverage sets over all models, lexicographically.
std::vector<std::vector<int>> maximal_coverage_sets(const topksat::Formula& f);

// Exhaustive best union of soft indices over all <=k subsets of the models.
int best_k_cover(const topksat::Formula& f, const std::vector<topksat::Model>& models, int k);

// Minimum unsatisfied soft clauses over all models (-1 when hard is unsat).
int min_unsat(const topksat::Formula& f);

// Bron-Kerbosch enumeration of all maximal cliques (ascending vertex lists).
std::vector<std::vector<int>> maximal_cliques(const topksat::Graph& g);

// Exhaustive max vertices coverable by <=k of the given vertex sets.
int best_k_set_cover(const std::vector<std::vector<int>>& sets, int n, int k);

} // namespace testutil

#endif
