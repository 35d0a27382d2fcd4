#ifndef TOPKSAT_EE_EE_HH
#define TOPKSAT_EE_EE_HH

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "core/formula.hh"
#include "core/solution.hh"

namespace topksat {

// Bijection between (original variable, copy index) and expanded variables.
// Copy j occupies the contiguous block (j-1)*n+1 .. j*n.
struct VarMap {
    int num_vars = 0; // original n
    int copies = 1;   // k

    int expanded(int var, int copy) const { return (copy - 1) * num_vars + var; }
    int original_var(int xvar) const { return (xvar - 1) % num_vars + 1; }
    int copy_of(int xvar) const { return (xvar - 1) / num_vars + 1; }
    int expanded_vars() const { return num_vars * copies; }
};

struct EeEncoding {
    Formula formula;
    VarMap map;
};

// Expands a top-k instance into an ordinary partial MaxSAT formula with
// k*n variables, k*m hard clauses, and m' soft clauses. Every hard clause
// yields k block-substituted copies (consecutively, copy 1..k); every soft
// clause becomes the disjunction of its k copies in copy order.
EeEncoding ee_encode(const Formula& f, int k);

// Expanded WCNF prefixed with `c eemap <orig> <copy> <expanded>` comment
// lines, so a solution can be decoded from files alone.
std::string write_wcnf_with_map(const Formula& expanded, const VarMap& map);

// Recovers the VarMap from the `c eemap` lines of a WCNF text.
VarMap parse_eemap(std::string_view wcnf_text);

// Splits a total model of the expanded formula into k models of the
// original one; coverage is the union over models, duplicates retained.
TopKSolution ee_decode(const Model& expanded_model, const VarMap& map, const Formula& original);

using SatCheckFn =
    std::function<std::optional<Model>(const std::vector<Clause>& clauses, int num_vars)>;

// Grows a model into a maximal solution: soft clauses are visited in index
// order and committed whenever the hard clauses plus the committed softs
// plus the candidate stay satisfiable, adopting the oracle's witness.
// Never loses coverage; idempotent.
Model grow_to_maximal(const Formula& f, Model model, const SatCheckFn& check);

} // namespace topksat

#endif
