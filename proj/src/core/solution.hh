#ifndef TOPKSAT_CORE_SOLUTION_HH
#define TOPKSAT_CORE_SOLUTION_HH

#include <string>
#include <vector>

#include "core/formula.hh"

namespace topksat {

enum class SolutionStatus {
    Optimal,        // objective proven maximal
    Feasible,       // valid solution, optimality not established
    InfeasibleHard, // hard clauses unsatisfiable
    Unknown,        // no solution produced (timeout / budget)
};

const char* to_string(SolutionStatus s);

struct TopKSolution {
    SolutionStatus status = SolutionStatus::Unknown;
    int k = 0;
    std::vector<Model> models;
    CoverageSet covered;  // union over models, recomputed from scratch
    int objective = 0;    // |covered|
    int uncovered = 0;    // num_soft - objective
    double time_s = 0.0;
    std::string method;
    std::string note; // diagnostics (budget messages and the like)
};

// Assembles a solution from solver output: checks every model against the
// hard clauses (throws ErrorCode::Verify on violation) and recomputes the
// coverage union.
TopKSolution make_solution(const Formula& f, std::vector<Model> models, SolutionStatus status,
                           int k, std::string method);

// Re-derives coverage and counts from the solution's own models and checks
// them against the stored fields. Throws ErrorCode::Verify on mismatch.
void verify_solution(const Formula& f, const TopKSolution& sol);

} // namespace topksat

#endif
