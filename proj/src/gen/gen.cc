#include "gen/gen.hh"

#include <algorithm>

namespace topksat {

Formula gen_random_instance(const RandomInstanceParams& p) {
    if (p.num_vars < 0 || p.num_hard < 0)
        throw Error(ErrorCode::Invalid, "negative instance size");
    if (p.clause_len < 1 || p.clause_len > p.num_vars)
        throw Error(ErrorCode::Invalid, "clause length must be within 1.." +
                                            std::to_string(p.num_vars));
    SplitMix64 rng(p.seed);
    Formula f(p.num_vars);
    std::vector<Lit> lits;
    for (int c = 0; c < p.num_hard; ++c) {
        lits.clear();
        while (static_cast<int>(lits.size()) < p.clause_len) {
            int var = static_cast<int>(rng.below(static_cast<uint64_t>(p.num_vars))) + 1;
            bool dup = false;
            for (Lit l : lits)
                if (var_of(l) == var) dup = true;
            if (dup) continue;
            lits.push_back(rng.next() & 1 ? var : -var);
        }
        f.add_hard(lits);
    }
    for (int v = 1; v <= p.num_vars; ++v) f.add_soft({v});
    return f;
}

Graph gen_random_graph(int n, double p, uint64_t seed) {
    if (n < 0) throw Error(ErrorCode::Invalid, "negative vertex count");
    if (p < 0.0 || p > 1.0) throw Error(ErrorCode::Invalid, "edge probability outside [0, 1]");
    SplitMix64 rng(seed);
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.next_double() < p) g.add_edge(u, v);
    return g;
}

} // namespace topksat
