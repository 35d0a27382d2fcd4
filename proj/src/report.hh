#ifndef TOPKSAT_REPORT_HH
#define TOPKSAT_REPORT_HH

#include <string>

#include "apps/ca.hh"
#include "apps/clique.hh"
#include "core/solution.hh"

namespace topksat {

// Text and JSON render the same fields: status, k, objective, uncovered,
// time_s, the models as signed literals, and (with a graph or spec to
// decode against) the cliques or test-case rows.
std::string report_text(const TopKSolution& sol, const Graph* g = nullptr,
                        const CaSpec* ca = nullptr);
std::string report_json(const TopKSolution& sol, const Graph* g = nullptr,
                        const CaSpec* ca = nullptr);

} // namespace topksat

#endif
