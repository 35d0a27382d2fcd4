#include "core/solution.hh"

namespace topksat {

const char* to_string(SolutionStatus s) {
    switch (s) {
    case SolutionStatus::Optimal: return "optimal";
    case SolutionStatus::Feasible: return "feasible";
    case SolutionStatus::InfeasibleHard: return "infeasible-hard";
    case SolutionStatus::Unknown: return "unknown";
    }
    return "unknown";
}

TopKSolution make_solution(const Formula& f, std::vector<Model> models, SolutionStatus status,
                           int k, std::string method) {
    TopKSolution sol;
    sol.status = status;
    sol.k = k;
    sol.method = std::move(method);
    sol.covered = CoverageSet(static_cast<size_t>(f.num_soft()));
    for (const Model& m : models) sol.covered |= coverage(f, m);
    sol.models = std::move(models);
    sol.objective = static_cast<int>(sol.covered.count());
    sol.uncovered = f.num_soft() - sol.objective;
    return sol;
}

void verify_solution(const Formula& f, const TopKSolution& sol) {
    if (static_cast<int>(sol.models.size()) > sol.k && sol.k > 0)
        throw Error(ErrorCode::Verify, "solution has more than k models");
    CoverageSet cov(static_cast<size_t>(f.num_soft()));
    for (const Model& m : sol.models) cov |= coverage(f, m);
    if (cov != sol.covered)
        throw Error(ErrorCode::Verify, "stored coverage differs from recomputed coverage");
    if (sol.objective != static_cast<int>(cov.count()))
        throw Error(ErrorCode::Verify, "stored objective differs from recomputed coverage size");
    if (sol.objective + sol.uncovered != f.num_soft())
        throw Error(ErrorCode::Verify, "objective and uncovered do not add up to soft count");
    if ((sol.status == SolutionStatus::InfeasibleHard) != sol.models.empty() &&
        sol.status != SolutionStatus::Unknown)
        throw Error(ErrorCode::Verify, "infeasible status inconsistent with model list");
}

} // namespace topksat
