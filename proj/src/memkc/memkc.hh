#ifndef TOPKSAT_MEMKC_MEMKC_HH
#define TOPKSAT_MEMKC_MEMKC_HH

#include <vector>

#include "core/formula.hh"
#include "core/solution.hh"

namespace topksat {

using ModelList = std::vector<Model>;

struct MemkcOptions {
    long model_cap = 1'000'000; // enumeration limit; exceeding it is an error
    bool maximalize = true;     // grow chosen models into maximal solutions
};

// All total models of the hard clauses extending the given assumptions.
// Variables still free when the hard set empties are expanded over both
// values if they occur in any soft clause and fixed to true otherwise.
// Throws ErrorCode::Overflow past the model cap.
ModelList me_enumerate(const Formula& f, const std::vector<Lit>& assumptions, long model_cap);

struct MkcResult {
    int best_count = 0;
    ModelList best_set; // at most k models achieving best_count
};

// Maximum number of distinct soft clauses coverable by at most k models
// from the list, with the models that achieve it. Coverage-dominated
// models are discarded up front; the branch and bound prunes on an upper
// bound of current count plus the k largest remaining residuals.
MkcResult mkc(const Formula& f, const ModelList& models, int k);

// Model enumeration followed by max-k-cover selection; the returned models
// are grown into maximal solutions unless maximalize is off.
TopKSolution memkc_solve(const Formula& f, int k, const MemkcOptions& opts = {});

} // namespace topksat

#endif
