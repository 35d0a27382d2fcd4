#include "oracles.hh"

#include <algorithm>
#include <bit>
#include <set>

namespace testutil {

using namespace topksat;

Formula make_formula(int num_vars, const std::vector<std::vector<int>>& hard,
                     const std::vector<std::vector<int>>& soft) {
    Formula f(num_vars);
    for (const auto& c : hard) f.add_hard(c);
    for (const auto& c : soft) f.add_soft(c);
    return f;
}

Formula example1() { return make_formula(2, {{1, 2}, {-1, -2}}, {{1}, {2}}); }

Graph c4() {
    Graph g(4);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(1, 4);
    return g;
}

bool naive_satisfied(const Clause& c, const Model& m) {
    bool sat = false;
    for (Lit l : c.lits) {
        bool v = m[static_cast<size_t>(var_of(l)) - 1];
        if ((l > 0 && v) || (l < 0 && !v)) sat = true;
    }
    return sat;
}

bool naive_hard_ok(const Formula& f, const Model& m) {
    for (const Clause& c : f.hard())
        if (!naive_satisfied(c, m)) return false;
    return true;
}

std::vector<Model> all_models(const Formula& f) {
    std::vector<Model> out;
    const int n = f.num_vars();
    Model m(static_cast<size_t>(n));
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
        for (int v = 0; v < n; ++v) m[static_cast<size_t>(v)] = (mask >> v) & 1;
        if (naive_hard_ok(f, m)) out.push_back(m);
    }
    return out;
}

std::vector<int> coverage_vec(const Formula& f, const Model& m) {
    std::vector<int> cov;
    for (int i = 0; i < f.num_soft(); ++i)
        if (naive_satisfied(f.soft()[static_cast<size_t>(i)], m)) cov.push_back(i + 1);
    return cov;
}

std::vector<std::vector<int>> maximal_coverage_sets(const Formula& f) {
    std::set<std::vector<int>> distinct;
    for (const Model& m : all_models(f)) distinct.insert(coverage_vec(f, m));
    std::vector<std::vector<int>> maximal;
    for (const auto& cand : distinct) {
        bool dominated = false;
        for (const auto& other : distinct) {
            if (cand == other) continue;
            if (std::includes(other.begin(), other.end(), cand.begin(), cand.end()))
                dominated = true;
        }
        if (!dominated) maximal.push_back(cand);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

namespace {

// Exhaustive <=k-subset maximum over 64-bit element masks.
void cover_rec(const std::vector<uint64_t>& covs, size_t i, int left, uint64_t acc, int& best) {
    best = std::max(best, static_cast<int>(std::popcount(acc)));
    if (left == 0 || i == covs.size()) return;
    cover_rec(covs, i + 1, left, acc, best);
    cover_rec(covs, i + 1, left - 1, acc | covs[i], best);
}

uint64_t to_mask(const std::vector<int>& elems) {
    uint64_t mask = 0;
    for (int e : elems) mask |= uint64_t{1} << (e - 1);
    return mask;
}

} // namespace

int best_k_cover(const Formula& f, const std::vector<Model>& models, int k) {
    std::vector<uint64_t> covs;
    covs.reserve(models.size());
    for (const Model& m : models) covs.push_back(to_mask(coverage_vec(f, m)));
    int best = 0;
    cover_rec(covs, 0, k, 0, best);
    return best;
}

int min_unsat(const Formula& f) {
    int best = -1;
    for (const Model& m : all_models(f)) {
        int unsat = f.num_soft() - static_cast<int>(coverage_vec(f, m).size());
        if (best < 0 || unsat < best) best = unsat;
    }
    return best;
}

namespace {

void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    std::vector<int> p_copy = p;
    for (int v : p_copy) {
        r.push_back(v);
        std::vector<int> p2, x2;
        for (int u : p)
            if (g.has_edge(u, v)) p2.push_back(u);
        for (int u : x)
            if (g.has_edge(u, v)) x2.push_back(u);
        bron_kerbosch(g, r, p2, x2, out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

} // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    std::vector<int> r, p, x;
    for (int v = 1; v <= g.num_vertices(); ++v) p.push_back(v);
    std::vector<std::vector<int>> out;
    bron_kerbosch(g, r, p, x, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

int best_k_set_cover(const std::vector<std::vector<int>>& sets, int, int k) {
    std::vector<uint64_t> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) masks.push_back(to_mask(s));
    int best = 0;
    cover_rec(masks, 0, k, 0, best);
    return best;
}

} // namespace testutil
