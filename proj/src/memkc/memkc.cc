#include "memkc/memkc.hh"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "core/engine.hh"
#include "ee/ee.hh"
#include "pms/solver.hh"

namespace topksat {

namespace {

class Enumerator {
  public:
    Enumerator(const Formula& f, long cap)
        : f_(f), engine_(f.hard(), f.num_vars()), cap_(cap),
          in_soft_(static_cast<size_t>(f.num_vars()) + 1, false) {
        for (const Clause& c : f.soft())
            for (Lit l : c.lits) in_soft_[static_cast<size_t>(var_of(l))] = true;
    }

    ModelList run(const std::vector<Lit>& assumptions) {
        for (Lit l : assumptions)
            if (!engine_.assume(l)) return {};
        if (!engine_.init_propagate()) return {};
        search();
        return std::move(models_);
    }

  private:
    void search() {
        if (engine_.all_satisfied()) {
            emit_completions();
            return;
        }
        int var = engine_.pick_branch_var();
        for (Lit lit : {var, -var}) {
            size_t mark = engine_.mark();
            if (engine_.assume(lit)) search();
            engine_.undo_to(mark);
        }
    }

    void emit_completions() {
        free_.clear();
        for (int v = 1; v <= f_.num_vars(); ++v)
            if (engine_.value(v) == Assignment::Unassigned && in_soft_[static_cast<size_t>(v)])
                free_.push_back(v);
        Model base(static_cast<size_t>(f_.num_vars()));
        for (int v = 1; v <= f_.num_vars(); ++v)
            base[static_cast<size_t>(v) - 1] = engine_.value(v) != Assignment::False;
        complete(base, 0);
    }

    void complete(Model& m, size_t i) {
        if (i == free_.size()) {
            if (static_cast<long>(models_.size()) >= cap_)
                throw Error(ErrorCode::Overflow, "model enumeration exceeded the cap of " +
                                                     std::to_string(cap_) + " models");
            models_.push_back(m);
            return;
        }
        auto at = static_cast<size_t>(free_[i]) - 1;
        m[at] = true;
        complete(m, i + 1);
        m[at] = false;
        complete(m, i + 1);
        m[at] = true; // restore the default
    }

    const Formula& f_;
    CnfEngine engine_;
    long cap_;
    std::vector<bool> in_soft_;
    std::vector<int> free_;
    ModelList models_;
};

// Keeps one representative per set-maximal coverage set. Input order:
// coverage size descending, model bits ascending.
struct Candidate {
    CoverageSet cover;
    int model_index;
};

std::vector<Candidate> dominance_filter(const Formula& f, const ModelList& models) {
    std::vector<Candidate> all;
    all.reserve(models.size());
    for (size_t i = 0; i < models.size(); ++i)
        all.push_back({soft_coverage(f, models[i]), static_cast<int>(i)});
    std::sort(all.begin(), all.end(), [&](const Candidate& a, const Candidate& b) {
        size_t ca = a.cover.count(), cb = b.cover.count();
        if (ca != cb) return ca > cb;
        return models[static_cast<size_t>(a.model_index)] < models[static_cast<size_t>(b.model_index)];
    });
    std::vector<Candidate> kept;
    for (Candidate& c : all) {
        bool dominated = false;
        for (const Candidate& k : kept) {
            if (c.cover.is_subset_of(k.cover)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(std::move(c));
    }
    return kept;
}

class CoverSearch {
  public:
    CoverSearch(std::vector<Candidate> cands, size_t universe)
        : cands_(std::move(cands)), universe_(universe) {}

    void run(int k) {
        CoverageSet covered(universe_);
        std::vector<int> chosen;
        branch(0, k, covered, chosen);
    }

    int best() const { return best_; }
    const std::vector<int>& best_set() const { return best_choice_; }

  private:
    void branch(size_t i, int k_left, CoverageSet& covered, std::vector<int>& chosen) {
        int count = static_cast<int>(covered.count());
        if (count > best_) {
            best_ = count;
            best_choice_ = chosen;
        }
        if (k_left == 0 || i == cands_.size() || best_ == static_cast<int>(universe_)) return;
        if (count + upper_bound(i, k_left, covered) <= best_) return;

        CoverageSet with = covered | cands_[i].cover;
        if (with.count() > covered.count()) {
            chosen.push_back(cands_[i].model_index);
            branch(i + 1, k_left - 1, with, chosen);
            chosen.pop_back();
        }
        branch(i + 1, k_left, covered, chosen);
    }

    int upper_bound(size_t i, int k_left, const CoverageSet& covered) const {
        std::vector<int> residuals;
        residuals.reserve(cands_.size() - i);
        for (size_t j = i; j < cands_.size(); ++j) {
            CoverageSet rest = cands_[j].cover - covered;
            int r = static_cast<int>(rest.count());
            if (r > 0) residuals.push_back(r);
        }
        int take = std::min<int>(k_left, static_cast<int>(residuals.size()));
        std::partial_sort(residuals.begin(), residuals.begin() + take, residuals.end(),
                          std::greater<int>());
        return std::accumulate(residuals.begin(), residuals.begin() + take, 0);
    }

    std::vector<Candidate> cands_;
    size_t universe_;
    int best_ = -1;
    std::vector<int> best_choice_;
};

} // namespace

ModelList me_enumerate(const Formula& f, const std::vector<Lit>& assumptions, long model_cap) {
    return Enumerator(f, model_cap).run(assumptions);
}

MkcResult mkc(const Formula& f, const ModelList& models, int k) {
    MkcResult res;
    if (k <= 0 || models.empty()) return res;
    std::vector<Candidate> cands = dominance_filter(f, models);
    CoverSearch search(std::move(cands), static_cast<size_t>(f.num_soft()));
    search.run(k);
    res.best_count = std::max(search.best(), 0);
    for (int idx : search.best_set()) res.best_set.push_back(models[static_cast<size_t>(idx)]);
    return res;
}

TopKSolution memkc_solve(const Formula& f, int k, const MemkcOptions& opts) {
    if (k < 1) throw Error(ErrorCode::Invalid, "k must be >= 1");
    auto t0 = std::chrono::steady_clock::now();
    ModelList models = me_enumerate(f, {}, opts.model_cap);
    TopKSolution sol;
    if (models.empty()) {
        sol = make_solution(f, {}, SolutionStatus::InfeasibleHard, k, "memkc");
    } else {
        MkcResult cover = mkc(f, models, k);
        ModelList chosen = std::move(cover.best_set);
        // Definition of the problem admits an empty choice only for an
        // empty model set; keep one model so feasible solutions are never
        // modelless.
        if (chosen.empty()) chosen.push_back(models.front());
        if (opts.maximalize)
            for (Model& m : chosen) m = grow_to_maximal(f, std::move(m), sat_check);
        sol = make_solution(f, std::move(chosen), SolutionStatus::Optimal, k, "memkc");
    }
    sol.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sol;
}

} // namespace topksat
