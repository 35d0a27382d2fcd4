#include "solve.hh"

#include <chrono>

#include "ee/ee.hh"
#include "oracle/oracle.hh"
#include "pms/external.hh"

namespace topksat {

namespace {

TopKSolution from_solver_result(const Formula& f, int k, const EeEncoding& enc,
                                const SolverResult& res, const EeSolveOptions& opts,
                                const std::string& method) {
    if (res.status == SolveStatus::UnsatHard)
        return make_solution(f, {}, SolutionStatus::InfeasibleHard, k, method);
    if (res.status == SolveStatus::Unknown) {
        TopKSolution sol = make_solution(f, {}, SolutionStatus::Unknown, k, method);
        sol.note = res.message;
        return sol;
    }
    TopKSolution decoded = ee_decode(*res.witness, enc.map, f);
    if (res.status == SolveStatus::Optimum && decoded.objective != f.num_soft() - res.min_unsat)
        throw Error(ErrorCode::Verify,
                    "decoded objective " + std::to_string(decoded.objective) +
                        " disagrees with the backend optimum " +
                        std::to_string(f.num_soft() - res.min_unsat));
    std::vector<Model> models = std::move(decoded.models);
    if (opts.maximalize)
        for (Model& m : models) m = grow_to_maximal(f, std::move(m), sat_check);
    SolutionStatus status = res.status == SolveStatus::Optimum ? SolutionStatus::Optimal
                                                               : SolutionStatus::Feasible;
    return make_solution(f, std::move(models), status, k, method);
}

} // namespace

TopKSolution solve_ee_internal(const Formula& f, int k, const EeSolveOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    EeEncoding enc = ee_encode(f, k);
    SolverResult res = solve_exact(enc.formula, SolveOptions{opts.node_budget});
    TopKSolution sol = from_solver_result(f, k, enc, res, opts, "ee-internal");
    sol.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sol;
}

TopKSolution solve_ee_external(const Formula& f, int k, const EeSolveOptions& opts) {
    if (opts.solver_cmd.empty())
        throw Error(ErrorCode::Invalid, "no external solver command configured");
    auto t0 = std::chrono::steady_clock::now();
    EeEncoding enc = ee_encode(f, k);
    SolverResult res = external_solve(enc.formula, opts.solver_cmd,
                                      ExternalOptions{opts.time_limit_s});
    TopKSolution sol = from_solver_result(f, k, enc, res, opts, "ee-external");
    sol.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sol;
}

VerifyOutcome verify_instance(const Formula& f, int k, long model_cap, int oracle_cap) {
    VerifyOutcome out;
    MemkcOptions mopts;
    mopts.model_cap = model_cap;
    out.memkc_objective = memkc_solve(f, k, mopts).objective;
    out.ee_objective = solve_ee_internal(f, k).objective;
    out.oracle_objective = oracle::brute_topk(f, k, oracle_cap).objective;
    out.agree = out.memkc_objective == out.ee_objective &&
                out.ee_objective == out.oracle_objective;
    return out;
}

} // namespace topksat
