#ifndef TOPKSAT_PMS_EXTERNAL_HH
#define TOPKSAT_PMS_EXTERNAL_HH

#include <string>
#include <string_view>

#include "core/formula.hh"
#include "pms/solver.hh"

namespace topksat {

struct ExternalOptions {
    double time_limit_s = 300.0;
};

// Interprets MaxSAT-evaluation style output (`c`/`o`/`s`/`v` lines) against
// the formula it was produced for. Witnesses are re-verified; any claimed
// result whose witness is missing, violates a hard clause, or disagrees
// with the last `o` value degrades to Unknown.
SolverResult parse_solver_output(std::string_view text, const Formula& f);

// Writes f to a temporary WCNF file and runs the command template (tokens
// split on whitespace, `{wcnf}` replaced by the file path; appended if the
// placeholder is absent). The child is killed once the time limit passes.
SolverResult external_solve(const Formula& f, const std::string& command_template,
                            const ExternalOptions& opts = {});

} // namespace topksat

#endif
