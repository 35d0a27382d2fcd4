#ifndef TOPKSAT_SOLVE_HH
#define TOPKSAT_SOLVE_HH

#include <string>

#include "core/formula.hh"
#include "core/solution.hh"
#include "memkc/memkc.hh"
#include "pms/solver.hh"

namespace topksat {

struct EeSolveOptions {
    bool maximalize = true;
    long node_budget = SolveOptions{}.node_budget; // internal backend
    double time_limit_s = 300.0;                   // external backend
    std::string solver_cmd;                        // external backend
};

// Expand to an ordinary partial MaxSAT formula, solve it with the internal
// branch and bound, and split the witness back into k models.
TopKSolution solve_ee_internal(const Formula& f, int k, const EeSolveOptions& opts = {});

// Same pipeline driving an external solver executable.
TopKSolution solve_ee_external(const Formula& f, int k, const EeSolveOptions& opts);

struct VerifyOutcome {
    int memkc_objective = -1;
    int ee_objective = -1;
    int oracle_objective = -1;
    bool agree = false;
};

// Runs the two solvers and the brute-force oracle on the same instance.
VerifyOutcome verify_instance(const Formula& f, int k, long model_cap, int oracle_cap);

} // namespace topksat

#endif
