#ifndef TOPKSAT_APPS_CA_HH
#define TOPKSAT_APPS_CA_HH

#include <string>
#include <string_view>
#include <vector>

#include "core/formula.hh"
#include "core/solution.hh"

namespace topksat {

// Covering-array shape: M columns with levels[c] symbols each (0-based
// symbol values), interaction strength t. The run size N of the source
// array plays no role in the encoding; it is parsed and carried only.
struct CaSpec {
    int columns = 0;   // M
    int strength = 0;  // t
    std::vector<int> levels;
    int runs = 0;      // N, optional in the input line

    void validate() const;
};

// One text line `M t s_1 ... s_M [N]`; `c` comments and blank lines skipped.
CaSpec parse_ca_spec(std::string_view text);

// An assignment of symbols to a t-subset of columns.
struct ValueCombination {
    std::vector<int> columns; // ascending t-subset of 1..M
    std::vector<int> values;  // value for columns[i], within its level
    int id = 0;               // 1-based enumeration index
};

// All value combinations: column subsets in lexicographic order, value
// tuples in lexicographic order within a subset (last column fastest).
std::vector<ValueCombination> enumerate_combinations(const CaSpec& spec);

// True when some shared column is assigned different values.
bool contradicts(const ValueCombination& a, const ValueCombination& b);

// One variable per combination; hard clauses exclude every contradicting
// pair (i < j, lexicographic); one unit soft clause per combination.
TopKInstance encode_ca(const CaSpec& spec, int k);

// One test-case row per model: each column takes the value of any true
// combination mentioning it (all agree when the hard clauses hold) and
// defaults to 0 when no true combination mentions it.
std::vector<std::vector<int>> decode_ca(const TopKSolution& sol, const CaSpec& spec);

} // namespace topksat

#endif
