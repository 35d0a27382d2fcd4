#ifndef TOPKSAT_CORE_FORMULA_HH
#define TOPKSAT_CORE_FORMULA_HH

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "core/errors.hh"

namespace topksat {

// A literal is a signed DIMACS-style integer: +v for the variable v, -v for
// its negation. Variables are 1-based; 0 never appears inside a clause.
using Lit = int;

inline int var_of(Lit l) { return std::abs(l); }
inline bool positive(Lit l) { return l > 0; }

struct Clause {
    std::vector<Lit> lits;

    Clause() = default;
    explicit Clause(std::vector<Lit> ls) : lits(std::move(ls)) {}

    int size() const { return static_cast<int>(lits.size()); }
    bool empty() const { return lits.empty(); }
    bool operator==(const Clause& o) const { return lits == o.lits; }
};

// Removes duplicate literals in place, keeping first occurrences in order.
// Returns false if the clause is a tautology (contains both x and -x).
bool normalize_clause(std::vector<Lit>& lits);

// A total model: value of variable v is m[v - 1].
using Model = std::vector<bool>;

inline std::vector<Lit> model_to_lits(const Model& m) {
    std::vector<Lit> out;
    out.reserve(m.size());
    for (int v = 1; v <= static_cast<int>(m.size()); ++v)
        out.push_back(m[v - 1] ? v : -v);
    return out;
}

// Partial truth assignment over variables 1..n.
class Assignment {
  public:
    static constexpr int8_t False = -1;
    static constexpr int8_t Unassigned = 0;
    static constexpr int8_t True = 1;

    Assignment() = default;
    explicit Assignment(int num_vars) : val_(static_cast<size_t>(num_vars) + 1, Unassigned) {}

    int num_vars() const { return static_cast<int>(val_.size()) - 1; }
    int8_t value(int var) const { return val_[static_cast<size_t>(var)]; }
    int8_t value_of(Lit l) const {
        int8_t v = value(var_of(l));
        return positive(l) ? v : static_cast<int8_t>(-v);
    }
    void set(Lit l) { val_[static_cast<size_t>(var_of(l))] = positive(l) ? True : False; }
    void unset(int var) { val_[static_cast<size_t>(var)] = Unassigned; }
    bool total() const {
        for (size_t i = 1; i < val_.size(); ++i)
            if (val_[i] == Unassigned) return false;
        return true;
    }
    // Unassigned variables default to true.
    Model to_model() const {
        Model m(val_.empty() ? 0 : val_.size() - 1);
        for (size_t i = 1; i < val_.size(); ++i) m[i - 1] = val_[i] != False;
        return m;
    }

  private:
    std::vector<int8_t> val_;
};

// Set of soft-clause indices; bit i stands for soft clause i+1.
using CoverageSet = boost::dynamic_bitset<>;

// 1-based soft-clause indices in ascending order.
std::vector<int> coverage_indices(const CoverageSet& s);

// Partial MaxSAT formula: hard clauses must all hold, soft clauses are
// counted. Soft clause indices 1..num_soft() are stable identities.
class Formula {
  public:
    Formula() = default;
    explicit Formula(int num_vars) : num_vars_(num_vars) {
        if (num_vars < 0) throw Error(ErrorCode::Invalid, "negative variable count");
    }

    int num_vars() const { return num_vars_; }
    int num_hard() const { return static_cast<int>(hard_.size()); }
    int num_soft() const { return static_cast<int>(soft_.size()); }
    const std::vector<Clause>& hard() const { return hard_; }
    const std::vector<Clause>& soft() const { return soft_; }
    // Input clauses discarded because they were tautological.
    int dropped_tautologies() const { return dropped_; }

    // Both adders deduplicate literals and drop tautologies (counted).
    void add_hard(std::vector<Lit> lits) { add(hard_, std::move(lits)); }
    void add_soft(std::vector<Lit> lits) { add(soft_, std::move(lits)); }

    bool operator==(const Formula& o) const {
        return num_vars_ == o.num_vars_ && hard_ == o.hard_ && soft_ == o.soft_;
    }

  private:
    void add(std::vector<Clause>& group, std::vector<Lit> lits);

    int num_vars_ = 0;
    std::vector<Clause> hard_;
    std::vector<Clause> soft_;
    int dropped_ = 0;
};

struct TopKInstance {
    Formula formula;
    int k = 1;
};

bool clause_satisfied(const Clause& c, const Model& m);

// 1-based index of the first violated hard clause, or 0 if none.
int first_violated_hard(const Formula& f, const Model& m);

inline bool satisfies_hard(const Formula& f, const Model& m) {
    return first_violated_hard(f, m) == 0;
}

// Indices of soft clauses satisfied by the model. The model must be total
// and satisfy every hard clause.
CoverageSet coverage(const Formula& f, const Model& m);

// Same, without the hard-clause check (for sets of known models).
CoverageSet soft_coverage(const Formula& f, const Model& m);

// F restricted by making lit true: clauses containing lit are removed and
// occurrences of -lit are deleted from the rest. May yield empty clauses.
std::vector<Clause> condition(const std::vector<Clause>& clauses, Lit lit);

} // namespace topksat

#endif
