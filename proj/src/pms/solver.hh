#ifndef TOPKSAT_PMS_SOLVER_HH
#define TOPKSAT_PMS_SOLVER_HH

#include <optional>
#include <string>
#include <vector>

#include "core/formula.hh"

namespace topksat {

// Plain DPLL feasibility check. Branching: variable with the most
// occurrences in remaining clauses (ties to the smallest index), true
// branch first; unconstrained variables complete to true. Deterministic.
std::optional<Model> sat_check(const std::vector<Clause>& clauses, int num_vars);

enum class SolveStatus {
    Optimum,
    SatSuboptimal, // budget ran out; best incumbent returned
    UnsatHard,
    Unknown,
};

const char* to_string(SolveStatus s);

struct SolverResult {
    SolveStatus status = SolveStatus::Unknown;
    int min_unsat = -1;           // unsatisfied soft clauses under the witness
    std::optional<Model> witness; // total model, present unless unsat/unknown
    long nodes = 0;               // decisions explored (internal solver)
    double time_s = 0.0;
    std::string message; // diagnostics for unknown results
};

struct SolveOptions {
    long node_budget = 200'000'000; // decision limit; <= 0 means unlimited
};

// Exact minimum number of unsatisfied soft clauses over all models of the
// hard part, by DPLL branch and bound with incumbent pruning on the count
// of definitely falsified soft clauses.
SolverResult solve_exact(const Formula& f, const SolveOptions& opts = {});

} // namespace topksat

#endif
