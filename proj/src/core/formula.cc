#include "core/formula.hh"

#include <algorithm>
#include <string>

namespace topksat {

bool normalize_clause(std::vector<Lit>& lits) {
    std::vector<Lit> seen;
    seen.reserve(lits.size());
    size_t out = 0;
    for (Lit l : lits) {
        if (std::find(seen.begin(), seen.end(), -l) != seen.end()) return false;
        if (std::find(seen.begin(), seen.end(), l) != seen.end()) continue;
        seen.push_back(l);
        lits[out++] = l;
    }
    lits.resize(out);
    return true;
}

std::vector<int> coverage_indices(const CoverageSet& s) {
    std::vector<int> out;
    out.reserve(s.count());
    for (size_t i = s.find_first(); i != CoverageSet::npos; i = s.find_next(i))
        out.push_back(static_cast<int>(i) + 1);
    return out;
}

void Formula::add(std::vector<Clause>& group, std::vector<Lit> lits) {
    for (Lit l : lits) {
        int v = var_of(l);
        if (l == 0 || v > num_vars_)
            throw Error(ErrorCode::Invalid,
                        "literal " + std::to_string(l) + " outside declared variable range 1.." +
                            std::to_string(num_vars_));
    }
    if (!normalize_clause(lits)) {
        ++dropped_;
        return;
    }
    group.emplace_back(std::move(lits));
}

bool clause_satisfied(const Clause& c, const Model& m) {
    for (Lit l : c.lits)
        if (m[static_cast<size_t>(var_of(l)) - 1] == positive(l)) return true;
    return false;
}

int first_violated_hard(const Formula& f, const Model& m) {
    for (int i = 0; i < f.num_hard(); ++i)
        if (!clause_satisfied(f.hard()[static_cast<size_t>(i)], m)) return i + 1;
    return 0;
}

CoverageSet coverage(const Formula& f, const Model& m) {
    if (static_cast<int>(m.size()) != f.num_vars())
        throw Error(ErrorCode::Invalid, "model size does not match variable count");
    if (int bad = first_violated_hard(f, m))
        throw Error(ErrorCode::Verify, "model violates hard clause " + std::to_string(bad));
    return soft_coverage(f, m);
}

CoverageSet soft_coverage(const Formula& f, const Model& m) {
    CoverageSet cov(static_cast<size_t>(f.num_soft()));
    for (int i = 0; i < f.num_soft(); ++i)
        if (clause_satisfied(f.soft()[static_cast<size_t>(i)], m)) cov.set(static_cast<size_t>(i));
    return cov;
}

std::vector<Clause> condition(const std::vector<Clause>& clauses, Lit lit) {
    std::vector<Clause> out;
    out.reserve(clauses.size());
    for (const Clause& c : clauses) {
        if (std::find(c.lits.begin(), c.lits.end(), lit) != c.lits.end()) continue;
        Clause reduced;
        reduced.lits.reserve(c.lits.size());
        for (Lit l : c.lits)
            if (l != -lit) reduced.lits.push_back(l);
        out.push_back(std::move(reduced));
    }
    return out;
}

} // namespace topksat
