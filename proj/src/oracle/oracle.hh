#ifndef TOPKSAT_ORACLE_ORACLE_HH
#define TOPKSAT_ORACLE_ORACLE_HH

#include <vector>

#include "core/formula.hh"
#include "core/solution.hh"

namespace topksat::oracle {

inline constexpr int kDefaultVarCap = 20;

// Ground truth by exhaustive 2^n enumeration: every assignment is tested
// against the hard clauses, coverage sets are reduced to the distinct
// set-maximal ones, and all subsets of size min(k, #maximal) are tried.
// Deliberately independent of the solver modules.
TopKSolution brute_topk(const Formula& f, int k, int var_cap = kDefaultVarCap);

// The distinct set-maximal coverage sets over all models, as 1-based soft
// indices, ordered lexicographically.
std::vector<std::vector<int>> brute_coverage_sets(const Formula& f, int var_cap = kDefaultVarCap);

} // namespace topksat::oracle

#endif
