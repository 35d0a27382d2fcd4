#include "pms/solver.hh"

#include <chrono>

#include "core/engine.hh"

namespace topksat {

namespace {

bool sat_search(CnfEngine& eng) {
    if (eng.all_satisfied()) return true;
    int var = eng.pick_branch_var();
    for (Lit lit : {var, -var}) {
        size_t mark = eng.mark();
        if (eng.assume(lit) && sat_search(eng)) return true;
        eng.undo_to(mark);
    }
    return false;
}

Model model_from_engine(const CnfEngine& eng, int num_vars) {
    Model m(static_cast<size_t>(num_vars));
    for (int v = 1; v <= num_vars; ++v) m[static_cast<size_t>(v) - 1] = eng.value(v) != Assignment::False;
    return m;
}

class BranchAndBound {
  public:
    BranchAndBound(const Formula& f, const SolveOptions& opts)
        : f_(f), hard_(f.hard(), f.num_vars()), soft_(f.soft(), f.num_vars()), opts_(opts) {}

    SolverResult run() {
        auto t0 = std::chrono::steady_clock::now();
        SolverResult res;
        best_ = f_.num_soft() + 1;
        if (hard_.init_propagate()) {
            apply_soft(0);
            search();
        }
        res.nodes = nodes_;
        res.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!witness_) {
            if (out_of_budget_) {
                res.status = SolveStatus::Unknown;
                res.message = "node budget exhausted before any model was found";
            } else {
                res.status = SolveStatus::UnsatHard;
            }
            return res;
        }
        res.status = out_of_budget_ ? SolveStatus::SatSuboptimal : SolveStatus::Optimum;
        res.min_unsat = best_;
        res.witness = std::move(witness_);
        return res;
    }

  private:
    // Mirrors the hard engine's trail into the soft counters.
    void apply_soft(size_t from) {
        const auto& trail = hard_.trail();
        for (size_t i = from; i < trail.size(); ++i) soft_.apply(trail[i]);
    }
    void unapply_soft(size_t to) {
        const auto& trail = hard_.trail();
        for (size_t i = trail.size(); i > to; --i) soft_.unapply(trail[i - 1]);
    }

    // Reached with every soft clause determined, so the default-true
    // completion of the remaining variables changes nothing.
    void record_leaf() {
        int unsat = soft_.falsified();
        if (unsat < best_) {
            best_ = unsat;
            witness_ = model_from_engine(hard_, f_.num_vars());
        }
    }

    void search() {
        if (done()) return;
        if (soft_.falsified() >= best_) return;
        int var = hard_.pick_branch_var();
        if (var == 0) {
            // Hard part satisfied; only undetermined softs matter now.
            var = soft_.pick_var();
            if (var == 0) {
                record_leaf();
                return;
            }
        }
        ++nodes_;
        if (opts_.node_budget > 0 && nodes_ > opts_.node_budget) {
            out_of_budget_ = true;
            return;
        }
        for (Lit lit : {var, -var}) {
            size_t mark = hard_.mark();
            if (hard_.assume(lit)) {
                apply_soft(mark);
                search();
                unapply_soft(mark);
            }
            hard_.undo_to(mark);
            if (done()) return;
        }
    }

    bool done() const { return best_ == 0 || out_of_budget_; }

    const Formula& f_;
    CnfEngine hard_;
    SoftCounter soft_;
    SolveOptions opts_;
    long nodes_ = 0;
    int best_ = 0;
    bool out_of_budget_ = false;
    std::optional<Model> witness_;
};

} // namespace

std::optional<Model> sat_check(const std::vector<Clause>& clauses, int num_vars) {
    CnfEngine eng(clauses, num_vars);
    if (!eng.init_propagate()) return std::nullopt;
    if (!sat_search(eng)) return std::nullopt;
    return model_from_engine(eng, num_vars);
}

const char* to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::Optimum: return "optimum";
    case SolveStatus::SatSuboptimal: return "satisfiable-suboptimal";
    case SolveStatus::UnsatHard: return "unsat-hard";
    case SolveStatus::Unknown: return "unknown";
    }
    return "unknown";
}

SolverResult solve_exact(const Formula& f, const SolveOptions& opts) {
    return BranchAndBound(f, opts).run();
}

} // namespace topksat
