#ifndef TOPKSAT_CORE_ENGINE_HH
#define TOPKSAT_CORE_ENGINE_HH

#include <vector>

#include "core/formula.hh"

namespace topksat {

// Clause-state tracker with unit propagation and a chronological trail.
// Counters per clause (satisfied literals / unassigned literals) instead of
// watched literals; at toolkit scale simplicity beats constant factors.
class CnfEngine {
  public:
    CnfEngine(const std::vector<Clause>& clauses, int num_vars);

    // Propagates clauses that are unit or empty from the start.
    // Returns false on conflict.
    bool init_propagate();

    // Makes lit true and propagates to fixpoint. Returns false on conflict;
    // the partial trail remains for the caller to undo.
    bool assume(Lit lit);

    size_t mark() const { return trail_.size(); }
    void undo_to(size_t mark);

    int8_t value(int var) const { return assign_.value(var); }
    bool all_satisfied() const { return active_ == 0; }
    int active_clauses() const { return active_; }
    long propagations() const { return propagations_; }
    const std::vector<Lit>& trail() const { return trail_; }

    // Unassigned variable occurring most often in not-yet-satisfied clauses;
    // ties broken by smallest index. 0 if every active clause is decided.
    int pick_branch_var() const;

  private:
    bool enqueue(Lit lit);
    bool propagate();

    std::vector<Clause> clauses_;
    int num_vars_;
    Assignment assign_;
    std::vector<std::vector<int>> pos_occ_; // clause indices containing +var
    std::vector<std::vector<int>> neg_occ_; // clause indices containing -var
    std::vector<int> sat_count_;            // true literals per clause
    std::vector<int> unassigned_;           // unassigned literals per clause
    int active_ = 0;                        // clauses with sat_count == 0
    std::vector<Lit> trail_;
    std::vector<Lit> queue_;
    long propagations_ = 0;
};

// Counter tracking for soft clauses: no propagation, no conflicts, just how
// many clauses are satisfied / falsified under externally applied literals.
class SoftCounter {
  public:
    SoftCounter(const std::vector<Clause>& clauses, int num_vars);

    void apply(Lit lit);
    void unapply(Lit lit); // literals must be undone in reverse order

    int falsified() const { return falsified_; }
    int satisfied() const { return satisfied_; }
    int undetermined() const { return static_cast<int>(clauses_.size()) - satisfied_ - falsified_; }

    // Most frequent variable among undetermined clauses, 0 if none.
    int pick_var() const;

  private:
    std::vector<Clause> clauses_;
    int num_vars_;
    Assignment assign_;
    std::vector<std::vector<int>> pos_occ_;
    std::vector<std::vector<int>> neg_occ_;
    std::vector<int> sat_count_;
    std::vector<int> unassigned_;
    int falsified_ = 0;
    int satisfied_ = 0;
};

} // namespace topksat

#endif
