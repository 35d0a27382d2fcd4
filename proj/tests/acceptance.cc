// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails or overruns its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "apps/ca.hh"
#include "apps/clique.hh"
#include "core/wcnf.hh"
#include "ee/ee.hh"
#include "gen/gen.hh"
#include "memkc/memkc.hh"
#include "oracle/oracle.hh"
#include "oracles.hh"
#include "pms/external.hh"
#include "pms/solver.hh"
#include "solve.hh"

using namespace topksat;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        g_notes.push_back(what);
        ++g_failures;
    }
}

void criterion(int number, const std::string& name, double budget_s,
               const std::function<void()>& body) {
    int before = g_failures;
    g_notes.clear();
    auto t0 = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        expect(false, std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = elapsed < budget_s;
    bool pass = g_failures == before && in_budget;
    if (!in_budget) ++g_failures;
    std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs)\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), elapsed, budget_s);
    for (const std::string& note : g_notes) std::printf("       %s\n", note.c_str());
    std::fflush(stdout);
}

std::string lits_str(const std::vector<Lit>& lits) {
    std::string s;
    for (Lit l : lits) s += std::to_string(l) + " ";
    return s;
}

// --- criterion 1: golden encodings -----------------------------------------

void golden_encodings() {
    // Expanding encoding of the running example, k=2: the six clauses.
    EeEncoding enc = ee_encode(testutil::example1(), 2);
    const std::vector<std::vector<Lit>> hard{{1, 2}, {3, 4}, {-1, -2}, {-3, -4}};
    const std::vector<std::vector<Lit>> soft{{1, 3}, {2, 4}};
    expect(enc.formula.num_vars() == 4, "expanded variable count");
    expect(enc.formula.num_hard() == 4 && enc.formula.num_soft() == 2, "expanded clause counts");
    for (size_t i = 0; i < hard.size(); ++i)
        expect(enc.formula.hard()[i].lits == hard[i], "hard clause " + std::to_string(i + 1) +
                                                          " is " + lits_str(enc.formula.hard()[i].lits));
    for (size_t i = 0; i < soft.size(); ++i)
        expect(enc.formula.soft()[i].lits == soft[i], "soft clause mismatch");

    // Diversified top-k clique encoding of the four-cycle.
    TopKInstance clique = encode_clique(testutil::c4(), 2);
    expect(clique.formula.num_hard() == 2 && clique.formula.num_soft() == 4,
           "clique encoding counts");
    expect(clique.formula.hard()[0].lits == std::vector<Lit>{-1, -3} &&
               clique.formula.hard()[1].lits == std::vector<Lit>{-2, -4},
           "clique hard clauses");
    for (int v = 1; v <= 4; ++v)
        expect(clique.formula.soft()[static_cast<size_t>(v) - 1].lits == std::vector<Lit>{v},
               "clique soft clause");

    // Covering-array encoding of the mixed-level example.
    TopKInstance ca = encode_ca(CaSpec{3, 2, {1, 1, 2}, 2}, 2);
    expect(ca.formula.num_vars() == 5, "ca encoding has 5 variables");
    std::vector<std::vector<Lit>> ca_hard;
    for (const Clause& c : ca.formula.hard()) ca_hard.push_back(c.lits);
    auto has = [&](std::vector<Lit> c) {
        return std::find(ca_hard.begin(), ca_hard.end(), c) != ca_hard.end();
    };
    expect(has({-2, -3}), "ca hard clause -2 -3 present");
    expect(has({-4, -5}), "ca hard clause -4 -5 present");
    expect(ca.formula.num_soft() == 5, "ca soft clause count");
}

// --- criterion 2: ee size law -----------------------------------------------

void ee_size_law() {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        int n = 3 + static_cast<int>(seed % 12);
        int m = static_cast<int>((seed * 11) % static_cast<uint64_t>(4 * n));
        Formula f = gen_random_instance({n, m, 3, seed});
        for (int k = 1; k <= 6; ++k) {
            EeEncoding enc = ee_encode(f, k);
            expect(enc.formula.num_vars() == k * n, "variables != k*n");
            expect(enc.formula.num_hard() == k * m, "hard clauses != k*m");
            expect(enc.formula.num_soft() == f.num_soft(), "soft clauses changed");
        }
    }
}

// --- criterion 3: triple equivalence ----------------------------------------

void triple_equivalence() {
    int instances = 0;
    for (uint64_t seed = 0; instances < 100; ++seed) {
        int n = 4 + static_cast<int>(seed % 9); // 4..12
        int m = static_cast<int>((seed * 17) % static_cast<uint64_t>(4 * n) + 1);
        Formula f = gen_random_instance({n, m, 3, seed});
        if (!sat_check(f.hard(), n)) continue;
        ++instances;
        for (int k = 1; k <= 4; ++k) {
            TopKSolution me = memkc_solve(f, k);
            verify_solution(f, me);
            TopKSolution ee = solve_ee_internal(f, k);
            verify_solution(f, ee);
            expect(ee.status == SolutionStatus::Optimal, "ee-internal not optimal");
            TopKSolution oracle_sol = oracle::brute_topk(f, k);
            verify_solution(f, oracle_sol);
            bool same = me.objective == oracle_sol.objective &&
                        ee.objective == oracle_sol.objective;
            expect(same, "objectives disagree on seed " + std::to_string(seed) +
                             " k=" + std::to_string(k) + ": memkc " +
                             std::to_string(me.objective) + ", ee " + std::to_string(ee.objective) +
                             ", oracle " + std::to_string(oracle_sol.objective));
        }
    }
}

// --- criterion 4: covering-array optima ---------------------------------------

void ca_optima() {
    struct Row {
        CaSpec spec;
        std::vector<int> uncovered; // k = 1..6
    };
    const std::vector<Row> table{
        {{3, 2, {2, 2, 2}, 8}, {9, 6, 3, 0, 0, 0}},
        {{4, 2, {2, 2, 2, 2}, 16}, {18, 12, 7, 2, 0, 0}},
        {{4, 3, {2, 2, 2, 2}, 16}, {28, 24, 20, 16, 12, 8}},
        {{5, 2, {2, 2, 2, 2, 2}, 32}, {30, 20, 12, 4, 2, 0}},
        {{5, 3, {2, 2, 2, 2, 2}, 32}, {70, 60, 50, 40, 32, 24}},
    };
    for (const Row& row : table) {
        for (int k = 1; k <= 6; ++k) {
            TopKInstance inst = encode_ca(row.spec, k);
            TopKSolution sol = memkc_solve(inst.formula, k);
            verify_solution(inst.formula, sol);
            int want = row.uncovered[static_cast<size_t>(k) - 1];
            expect(sol.uncovered == want,
                   "M=" + std::to_string(row.spec.columns) + " t=" +
                       std::to_string(row.spec.strength) + " k=" + std::to_string(k) + ": got " +
                       std::to_string(sol.uncovered) + ", want " + std::to_string(want));
        }
    }
}

// --- criterion 5: clique pipeline ---------------------------------------------

void clique_pipeline() {
    const double probs[] = {0.1, 0.3, 0.5};
    for (uint64_t seed = 0; seed < 30; ++seed) {
        int n = 6 + static_cast<int>(seed % 7); // 6..12
        Graph g = gen_random_graph(n, probs[seed % 3], seed);
        std::vector<std::vector<int>> cliques = testutil::maximal_cliques(g);
        for (int k = 1; k <= 4; ++k) {
            TopKInstance inst = encode_clique(g, k);
            TopKSolution sol = memkc_solve(inst.formula, k);
            verify_solution(inst.formula, sol);
            int brute = testutil::best_k_set_cover(cliques, n, k);
            expect(sol.objective == brute, "clique objective mismatch on seed " +
                                               std::to_string(seed) + " k=" + std::to_string(k));
            // Decoded sets must be maximal cliques of the source graph.
            for (const std::vector<int>& c : decode_clique(sol, g))
                expect(std::find(cliques.begin(), cliques.end(), c) != cliques.end(),
                       "decoded set is not a maximal clique");
        }
    }
}

// --- criterion 6: property suites ----------------------------------------------

void property_suites() {
    // Monotonicity in k and saturation at the distinct-maximal count.
    for (uint64_t seed = 0; seed < 10; ++seed) {
        int n = 4 + static_cast<int>(seed % 6);
        Formula f = gen_random_instance({n, n + static_cast<int>(seed % (2 * n)), 3, seed});
        if (!sat_check(f.hard(), n)) continue;
        int k0 = static_cast<int>(testutil::maximal_coverage_sets(f).size());
        int prev = -1, at_k0 = -1;
        for (int k = 1; k <= k0 + 2; ++k) {
            TopKSolution sol = memkc_solve(f, k);
            verify_solution(f, sol);
            expect(sol.objective >= prev, "objective decreased in k");
            prev = sol.objective;
            if (k == k0) at_k0 = sol.objective;
        }
        expect(prev == at_k0, "objective grew past the saturation point");
    }

    // grow_to_maximal: idempotent, never loses coverage, lands on a
    // set-maximal coverage set.
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Formula f = gen_random_instance({6, 6 + static_cast<int>(seed), 2, seed});
        std::vector<Model> models = testutil::all_models(f);
        if (models.empty()) continue;
        std::vector<std::vector<int>> maximal = testutil::maximal_coverage_sets(f);
        Model grown = grow_to_maximal(f, models[seed % models.size()], sat_check);
        std::vector<int> before = testutil::coverage_vec(f, models[seed % models.size()]);
        std::vector<int> after = testutil::coverage_vec(f, grown);
        expect(std::includes(after.begin(), after.end(), before.begin(), before.end()),
               "growth lost coverage");
        expect(std::find(maximal.begin(), maximal.end(), after) != maximal.end(),
               "grown coverage is not set-maximal");
        expect(grow_to_maximal(f, grown, sat_check) == grown, "growth is not idempotent");
    }

    // WCNF round trip.
    for (uint64_t seed = 0; seed < 100; ++seed) {
        int n = 3 + static_cast<int>(seed % 10);
        Formula f = gen_random_instance({n, static_cast<int>(seed % 30), 3, seed});
        std::string text = write_wcnf(f);
        expect(parse_wcnf(text) == f, "parse(write(f)) != f");
        expect(write_wcnf(parse_wcnf(text)) == text, "second write differs");
    }

    // Witness re-verification on reported solutions across methods.
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Formula f = gen_random_instance({6, 12, 3, seed});
        if (!sat_check(f.hard(), 6)) continue;
        for (int k : {1, 3}) {
            verify_solution(f, memkc_solve(f, k));
            verify_solution(f, solve_ee_internal(f, k));
            verify_solution(f, oracle::brute_topk(f, k));
        }
    }
}

// --- criterion 7: external adapter ----------------------------------------------

void external_adapter() {
    Formula f = testutil::make_formula(2, {{-1, 2}, {-1}}, {{1}, {-2}, {1, -2}});
    SolverResult opt = parse_solver_output("c t\no 4\no 3\ns OPTIMUM FOUND\nv -1 2 0\n", f);
    expect(opt.status == SolveStatus::Optimum && opt.min_unsat == 3, "optimum transcript");
    expect(opt.witness == Model{false, true}, "optimum witness");

    SolverResult timeout = parse_solver_output("c interrupted\no 3\n", f);
    expect(timeout.status == SolveStatus::Unknown, "timeout transcript yields unknown");

    SolverResult corrupt = parse_solver_output("o 0\ns OPTIMUM FOUND\nv 1 2 0\n", f);
    expect(corrupt.status == SolveStatus::Unknown &&
               corrupt.message.find("hard clause") != std::string::npos,
           "corrupt witness rejected");

    SolverResult unsat = parse_solver_output("s UNSATISFIABLE\n", f);
    expect(unsat.status == SolveStatus::UnsatHard, "unsat transcript");

    SolverResult mismatch = parse_solver_output("o 1\ns OPTIMUM FOUND\nv -1 2 0\n", f);
    expect(mismatch.status == SolveStatus::Unknown, "o-line disagreement rejected");
}

} // namespace

int main() {
    criterion(1, "golden encodings", 1.0, golden_encodings);
    criterion(2, "ee size law on 50 seeded instances, k=1..6", 5.0, ee_size_law);
    criterion(3, "memkc = ee-internal = oracle on 100 seeded instances", 120.0,
              triple_equivalence);
    criterion(4, "covering-array optima for k=1..6", 300.0, ca_optima);
    criterion(5, "clique pipeline equals brute force on 30 seeded graphs", 60.0,
              clique_pipeline);
    criterion(6, "property suites", 120.0, property_suites);
    criterion(7, "external adapter transcript parsing", 1.0, external_adapter);

    if (g_failures > 0) {
        std::printf("%d failure(s)\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
