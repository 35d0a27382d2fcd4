#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sys/stat.h>
#include <unistd.h>

#include "core/wcnf.hh"
#include "ee/ee.hh"
#include "gen/gen.hh"
#include "oracles.hh"
#include "pms/external.hh"
#include "pms/solver.hh"

using namespace topksat;

TEST_CASE("sat_check finds a model or reports unsat") {
    SUBCASE("exclusive-or clauses") {
        Formula f = testutil::example1();
        std::optional<Model> m = sat_check(f.hard(), 2);
        REQUIRE(m.has_value());
        CHECK(testutil::naive_hard_ok(f, *m));
    }
    SUBCASE("complementary units") {
        Formula f = testutil::make_formula(1, {{1}, {-1}}, {});
        CHECK_FALSE(sat_check(f.hard(), 1).has_value());
    }
    SUBCASE("no clauses completes to all-true") {
        std::optional<Model> m = sat_check({}, 3);
        REQUIRE(m.has_value());
        CHECK(*m == Model{true, true, true});
    }
    SUBCASE("deterministic") {
        Formula f = gen_random_instance({8, 20, 3, 42});
        CHECK(sat_check(f.hard(), 8) == sat_check(f.hard(), 8));
    }
}

TEST_CASE("solve_exact on the named examples") {
    Formula f = testutil::example1();
    SUBCASE("expanded running example has optimum 0") {
        EeEncoding enc = ee_encode(f, 2);
        SolverResult res = solve_exact(enc.formula);
        CHECK(res.status == SolveStatus::Optimum);
        CHECK(res.min_unsat == 0);
    }
    SUBCASE("the formula itself loses one soft clause") {
        SolverResult res = solve_exact(f);
        CHECK(res.status == SolveStatus::Optimum);
        CHECK(res.min_unsat == 1);
    }
    SUBCASE("complementary soft units") {
        Formula g = testutil::make_formula(1, {}, {{1}, {-1}});
        SolverResult res = solve_exact(g);
        CHECK(res.min_unsat == 1);
    }
    SUBCASE("unsatisfiable hard part") {
        Formula g = testutil::make_formula(1, {{1}, {-1}}, {{1}});
        CHECK(solve_exact(g).status == SolveStatus::UnsatHard);
    }
}

TEST_CASE("solve_exact matches exhaustive search on 100 seeded formulas") {
    int checked = 0;
    for (uint64_t seed = 0; checked < 100; ++seed) {
        int n = 3 + static_cast<int>(seed % 10);
        Formula f = gen_random_instance(
            {n, static_cast<int>(seed % static_cast<uint64_t>(4 * n)), 3, seed});
        int expect = testutil::min_unsat(f);
        SolverResult res = solve_exact(f);
        if (expect < 0) {
            CHECK(res.status == SolveStatus::UnsatHard);
        } else {
            CHECK(res.status == SolveStatus::Optimum);
            CHECK(res.min_unsat == expect);
            REQUIRE(res.witness.has_value());
            // The witness re-verifies against its own report.
            CHECK(testutil::naive_hard_ok(f, *res.witness));
            CHECK(f.num_soft() - static_cast<int>(testutil::coverage_vec(f, *res.witness).size()) ==
                  res.min_unsat);
        }
        ++checked;
    }
}

TEST_CASE("expanded optima never get worse as k grows") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        Formula f = gen_random_instance({6, 10 + static_cast<int>(seed % 10), 3, seed});
        if (testutil::min_unsat(f) < 0) continue;
        int prev = f.num_soft() + 1;
        for (int k = 1; k <= 4; ++k) {
            SolverResult res = solve_exact(ee_encode(f, k).formula);
            REQUIRE(res.status == SolveStatus::Optimum);
            CHECK(res.min_unsat <= prev);
            prev = res.min_unsat;
        }
    }
}

TEST_CASE("solve_exact degrades to an incumbent when the budget runs out") {
    Formula f = gen_random_instance({12, 24, 3, 7});
    SolveOptions opts;
    opts.node_budget = 3;
    SolverResult res = solve_exact(f, opts);
    if (res.status == SolveStatus::SatSuboptimal) {
        REQUIRE(res.witness.has_value());
        CHECK(res.min_unsat >= testutil::min_unsat(f));
        CHECK(testutil::naive_hard_ok(f, *res.witness));
    } else {
        CHECK(res.status == SolveStatus::Unknown);
    }
}

TEST_CASE("parse_solver_output handles the evaluation conventions") {
    // x1=F, x2=T satisfies the hard part and falsifies all three softs.
    Formula f = testutil::make_formula(2, {{-1, 2}, {-1}}, {{1}, {-2}, {1, -2}});
    SUBCASE("optimum with a consistent witness") {
        SolverResult res = parse_solver_output("c comment\no 5\no 3\ns OPTIMUM FOUND\nv -1 2 0\n", f);
        CHECK(res.status == SolveStatus::Optimum);
        CHECK(res.min_unsat == 3);
        REQUIRE(res.witness.has_value());
        CHECK(*res.witness == Model{false, true});
    }
    SUBCASE("witness split across several v lines") {
        SolverResult res = parse_solver_output("o 3\ns OPTIMUM FOUND\nv -1\nv 2 0\n", f);
        CHECK(res.status == SolveStatus::Optimum);
        CHECK(*res.witness == Model{false, true});
    }
    SUBCASE("no status line means unknown") {
        SolverResult res = parse_solver_output("c killed\no 3\n", f);
        CHECK(res.status == SolveStatus::Unknown);
        CHECK(res.message.find("status line") != std::string::npos);
    }
    SUBCASE("unsatisfiable") {
        CHECK(parse_solver_output("s UNSATISFIABLE\n", f).status == SolveStatus::UnsatHard);
    }
    SUBCASE("witness violating a hard clause is rejected") {
        SolverResult res = parse_solver_output("o 0\ns OPTIMUM FOUND\nv 1 2 0\n", f);
        CHECK(res.status == SolveStatus::Unknown);
        CHECK(res.message.find("hard clause") != std::string::npos);
    }
    SUBCASE("witness disagreeing with the o line is rejected") {
        SolverResult res = parse_solver_output("o 1\ns OPTIMUM FOUND\nv -1 2 0\n", f);
        CHECK(res.status == SolveStatus::Unknown);
        CHECK(res.message.find("o") != std::string::npos);
    }
    SUBCASE("suboptimal satisfiable answer keeps the incumbent") {
        SolverResult res = parse_solver_output("o 3\ns SATISFIABLE\nv -1 2 0\n", f);
        CHECK(res.status == SolveStatus::SatSuboptimal);
        CHECK(res.min_unsat == 3);
    }
    SUBCASE("optimum without any witness is rejected") {
        SolverResult res = parse_solver_output("o 3\ns OPTIMUM FOUND\n", f);
        CHECK(res.status == SolveStatus::Unknown);
    }
}

namespace {

// Writes an executable shell script and returns its path.
std::string make_script(const std::string& name, const std::string& body) {
    std::string path = "/tmp/topksat-test-" + name + "-" + std::to_string(getpid()) + ".sh";
    std::ofstream out(path);
    out << "#!/bin/sh\n" << body;
    out.close();
    chmod(path.c_str(), 0755);
    return path;
}

} // namespace

TEST_CASE("external_solve runs a command on a temporary WCNF file") {
    Formula f = testutil::example1();
    SUBCASE("transcript with verified optimum") {
        std::string script = make_script(
            "opt", "grep -q '^p wcnf 2 4 3' \"$1\" || exit 1\n"
                   "echo 'o 1'\necho 's OPTIMUM FOUND'\necho 'v 1 -2 0'\n");
        SolverResult res = external_solve(f, script + " {wcnf}", {5.0});
        CHECK(res.status == SolveStatus::Optimum);
        CHECK(res.min_unsat == 1);
        std::remove(script.c_str());
    }
    SUBCASE("a sleeping solver is killed at the time limit") {
        std::string script = make_script("slow", "sleep 30\necho 's OPTIMUM FOUND'\n");
        SolverResult res = external_solve(f, script + " {wcnf}", {0.2});
        CHECK(res.status == SolveStatus::Unknown);
        CHECK(res.message.find("time limit") != std::string::npos);
        CHECK(res.time_s < 5.0);
        std::remove(script.c_str());
    }
    SUBCASE("missing executables are reported") {
        SolverResult res = external_solve(f, "/nonexistent/solver {wcnf}", {1.0});
        CHECK(res.status == SolveStatus::Unknown);
        CHECK(res.message.find("command not found") != std::string::npos);
    }
    SUBCASE("the path is appended when the placeholder is missing") {
        std::string script =
            make_script("append", "grep -q 'p wcnf' \"$1\" && echo 's UNSATISFIABLE'\n");
        SolverResult res = external_solve(f, script, {5.0});
        CHECK(res.status == SolveStatus::UnsatHard);
        std::remove(script.c_str());
    }
}
