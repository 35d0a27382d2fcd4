#include "core/engine.hh"

namespace topksat {

CnfEngine::CnfEngine(const std::vector<Clause>& clauses, int num_vars)
    : clauses_(clauses), num_vars_(num_vars), assign_(num_vars),
      pos_occ_(static_cast<size_t>(num_vars) + 1), neg_occ_(static_cast<size_t>(num_vars) + 1),
      sat_count_(clauses.size(), 0), unassigned_(clauses.size(), 0) {
    active_ = static_cast<int>(clauses_.size());
    for (size_t ci = 0; ci < clauses_.size(); ++ci) {
        unassigned_[ci] = clauses_[ci].size();
        for (Lit l : clauses_[ci].lits)
            (positive(l) ? pos_occ_ : neg_occ_)[static_cast<size_t>(var_of(l))].push_back(
                static_cast<int>(ci));
    }
}

bool CnfEngine::init_propagate() {
    for (size_t ci = 0; ci < clauses_.size(); ++ci) {
        if (clauses_[ci].empty()) return false;
        if (clauses_[ci].size() == 1 && !enqueue(clauses_[ci].lits[0])) {
            queue_.clear();
            return false;
        }
    }
    return propagate();
}

bool CnfEngine::assume(Lit lit) {
    if (!enqueue(lit)) {
        queue_.clear();
        return false;
    }
    return propagate();
}

// Assigns lit and updates all clause counters at once, so the trail and the
// counters never disagree. Returns false if lit was already false or some
// clause ran out of literals.
bool CnfEngine::enqueue(Lit lit) {
    int8_t v = assign_.value_of(lit);
    if (v == Assignment::True) return true;
    if (v == Assignment::False) return false;
    assign_.set(lit);
    trail_.push_back(lit);
    queue_.push_back(lit);
    int var = var_of(lit);
    for (int ci : (positive(lit) ? pos_occ_ : neg_occ_)[static_cast<size_t>(var)]) {
        if (sat_count_[static_cast<size_t>(ci)]++ == 0) --active_;
    }
    bool ok = true;
    for (int ci : (positive(lit) ? neg_occ_ : pos_occ_)[static_cast<size_t>(var)]) {
        auto cu = static_cast<size_t>(ci);
        if (--unassigned_[cu] == 0 && sat_count_[cu] == 0) ok = false;
    }
    return ok;
}

bool CnfEngine::propagate() {
    while (!queue_.empty()) {
        Lit lit = queue_.back();
        queue_.pop_back();
        ++propagations_;
        // Clauses losing this literal may have become unit.
        for (int ci : (positive(lit) ? neg_occ_ : pos_occ_)[static_cast<size_t>(var_of(lit))]) {
            auto cu = static_cast<size_t>(ci);
            if (sat_count_[cu] != 0 || unassigned_[cu] != 1) continue;
            for (Lit cand : clauses_[cu].lits) {
                if (assign_.value_of(cand) == Assignment::Unassigned) {
                    if (!enqueue(cand)) {
                        queue_.clear();
                        return false;
                    }
                    break;
                }
            }
        }
    }
    return true;
}

void CnfEngine::undo_to(size_t mark) {
    queue_.clear();
    while (trail_.size() > mark) {
        Lit lit = trail_.back();
        trail_.pop_back();
        int var = var_of(lit);
        for (int ci : (positive(lit) ? pos_occ_ : neg_occ_)[static_cast<size_t>(var)]) {
            if (--sat_count_[static_cast<size_t>(ci)] == 0) ++active_;
        }
        for (int ci : (positive(lit) ? neg_occ_ : pos_occ_)[static_cast<size_t>(var)])
            ++unassigned_[static_cast<size_t>(ci)];
        assign_.unset(var);
    }
}

int CnfEngine::pick_branch_var() const {
    std::vector<int> count(static_cast<size_t>(num_vars_) + 1, 0);
    for (size_t ci = 0; ci < clauses_.size(); ++ci) {
        if (sat_count_[ci] > 0) continue;
        for (Lit l : clauses_[ci].lits)
            if (assign_.value(var_of(l)) == Assignment::Unassigned)
                ++count[static_cast<size_t>(var_of(l))];
    }
    int best = 0;
    for (int v = 1; v <= num_vars_; ++v)
        if (count[static_cast<size_t>(v)] > (best == 0 ? 0 : count[static_cast<size_t>(best)]))
            best = v;
    return best;
}

SoftCounter::SoftCounter(const std::vector<Clause>& clauses, int num_vars)
    : clauses_(clauses), num_vars_(num_vars), assign_(num_vars),
      pos_occ_(static_cast<size_t>(num_vars) + 1), neg_occ_(static_cast<size_t>(num_vars) + 1),
      sat_count_(clauses.size(), 0), unassigned_(clauses.size(), 0) {
    for (size_t ci = 0; ci < clauses_.size(); ++ci) {
        unassigned_[ci] = clauses_[ci].size();
        if (clauses_[ci].empty()) ++falsified_;
        for (Lit l : clauses_[ci].lits)
            (positive(l) ? pos_occ_ : neg_occ_)[static_cast<size_t>(var_of(l))].push_back(
                static_cast<int>(ci));
    }
}

void SoftCounter::apply(Lit lit) {
    assign_.set(lit);
    int var = var_of(lit);
    for (int ci : (positive(lit) ? pos_occ_ : neg_occ_)[static_cast<size_t>(var)]) {
        auto cu = static_cast<size_t>(ci);
        --unassigned_[cu];
        if (sat_count_[cu]++ == 0) ++satisfied_;
    }
    for (int ci : (positive(lit) ? neg_occ_ : pos_occ_)[static_cast<size_t>(var)]) {
        auto cu = static_cast<size_t>(ci);
        if (--unassigned_[cu] == 0 && sat_count_[cu] == 0) ++falsified_;
    }
}

void SoftCounter::unapply(Lit lit) {
    int var = var_of(lit);
    for (int ci : (positive(lit) ? pos_occ_ : neg_occ_)[static_cast<size_t>(var)]) {
        auto cu = static_cast<size_t>(ci);
        ++unassigned_[cu];
        if (--sat_count_[cu] == 0) --satisfied_;
    }
    for (int ci : (positive(lit) ? neg_occ_ : pos_occ_)[static_cast<size_t>(var)]) {
        auto cu = static_cast<size_t>(ci);
        if (unassigned_[cu]++ == 0 && sat_count_[cu] == 0) --falsified_;
    }
    assign_.unset(var);
}

int SoftCounter::pick_var() const {
    std::vector<int> count(static_cast<size_t>(num_vars_) + 1, 0);
    for (size_t ci = 0; ci < clauses_.size(); ++ci) {
        if (sat_count_[ci] > 0 || unassigned_[ci] == 0) continue;
        for (Lit l : clauses_[ci].lits)
            if (assign_.value(var_of(l)) == Assignment::Unassigned)
                ++count[static_cast<size_t>(var_of(l))];
    }
    int best = 0;
    for (int v = 1; v <= num_vars_; ++v)
        if (count[static_cast<size_t>(v)] > (best == 0 ? 0 : count[static_cast<size_t>(best)]))
            best = v;
    return best;
}

} // namespace topksat
