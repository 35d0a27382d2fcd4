#include "oracle/oracle.hh"

#include <algorithm>

namespace topksat::oracle {

namespace {

struct MaximalCover {
    CoverageSet cover;
    Model witness; // first model with this coverage, in enumeration order
};

// Evaluates a clause by scanning every literal; no early exit, no sharing
// with the solver-side evaluators.
bool plain_satisfied(const Clause& c, const Model& m) {
    bool sat = false;
    for (Lit l : c.lits) {
        bool val = m[static_cast<size_t>(var_of(l)) - 1];
        if (positive(l) ? val : !val) sat = true;
    }
    return sat;
}

std::vector<MaximalCover> maximal_covers(const Formula& f, int var_cap) {
    const int n = f.num_vars();
    if (n > var_cap)
        throw Error(ErrorCode::Overflow, "instance has " + std::to_string(n) +
                                             " variables, above the oracle cap of " +
                                             std::to_string(var_cap));
    std::vector<MaximalCover> maximal;
    Model m(static_cast<size_t>(n));
    const uint64_t total = uint64_t{1} << n;
    for (uint64_t mask = 0; mask < total; ++mask) {
        for (int v = 0; v < n; ++v) m[static_cast<size_t>(v)] = (mask >> v) & 1;
        bool ok = true;
        for (const Clause& c : f.hard())
            if (!plain_satisfied(c, m)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        CoverageSet cover(static_cast<size_t>(f.num_soft()));
        for (int i = 0; i < f.num_soft(); ++i)
            if (plain_satisfied(f.soft()[static_cast<size_t>(i)], m)) cover.set(static_cast<size_t>(i));
        bool dominated = false;
        for (const MaximalCover& mc : maximal)
            if (cover.is_subset_of(mc.cover)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        std::erase_if(maximal,
                      [&](const MaximalCover& mc) { return mc.cover.is_subset_of(cover); });
        maximal.push_back({std::move(cover), m});
    }
    return maximal;
}

void best_union(const std::vector<MaximalCover>& covers, size_t i, int left, CoverageSet& acc,
                std::vector<int>& picked, int& best, std::vector<int>& best_picked) {
    if (left == 0 || i == covers.size()) {
        int count = static_cast<int>(acc.count());
        if (count > best) {
            best = count;
            best_picked = picked;
        }
        return;
    }
    picked.push_back(static_cast<int>(i));
    CoverageSet with = acc | covers[i].cover;
    best_union(covers, i + 1, left - 1, with, picked, best, best_picked);
    picked.pop_back();
    if (covers.size() - i > static_cast<size_t>(left))
        best_union(covers, i + 1, left, acc, picked, best, best_picked);
}

} // namespace

TopKSolution brute_topk(const Formula& f, int k, int var_cap) {
    if (k < 1) throw Error(ErrorCode::Invalid, "k must be >= 1");
    std::vector<MaximalCover> covers = maximal_covers(f, var_cap);
    if (covers.empty())
        return make_solution(f, {}, SolutionStatus::InfeasibleHard, k, "oracle");

    int take = std::min<int>(k, static_cast<int>(covers.size()));
    CoverageSet acc(static_cast<size_t>(f.num_soft()));
    std::vector<int> picked, best_picked;
    int best = -1;
    best_union(covers, 0, take, acc, picked, best, best_picked);

    std::vector<Model> models;
    for (int idx : best_picked) models.push_back(covers[static_cast<size_t>(idx)].witness);
    return make_solution(f, std::move(models), SolutionStatus::Optimal, k, "oracle");
}

std::vector<std::vector<int>> brute_coverage_sets(const Formula& f, int var_cap) {
    std::vector<std::vector<int>> out;
    for (const MaximalCover& mc : maximal_covers(f, var_cap))
        out.push_back(coverage_indices(mc.cover));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace topksat::oracle
