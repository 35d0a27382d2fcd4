#include <doctest.h>

#include <cmath>
#include <set>

#include "core/wcnf.hh"
#include "gen/gen.hh"

using namespace topksat;

TEST_CASE("gen_random_instance has the vicj shape") {
    Formula f = gen_random_instance({10, 40, 3, 7});
    CHECK(f.num_vars() == 10);
    CHECK(f.num_hard() == 40);
    CHECK(f.num_soft() == 10);
    for (int i = 0; i < 10; ++i)
        CHECK(f.soft()[static_cast<size_t>(i)].lits == std::vector<Lit>{i + 1});
    for (const Clause& c : f.hard()) {
        CHECK(c.size() == 3);
        std::set<int> vars;
        for (Lit l : c.lits) vars.insert(var_of(l));
        CHECK(vars.size() == 3); // distinct variables
    }
}

TEST_CASE("gen_random_instance corner cases") {
    Formula f = gen_random_instance({5, 0, 3, 123});
    CHECK(f.num_hard() == 0);
    CHECK(f.num_soft() == 5);
    CHECK_THROWS_AS(gen_random_instance({2, 1, 3, 0}), Error); // len > vars
}

TEST_CASE("identical parameters produce byte-identical WCNF") {
    std::string a = write_wcnf(gen_random_instance({12, 48, 3, 99}));
    std::string b = write_wcnf(gen_random_instance({12, 48, 3, 99}));
    CHECK(a == b);
    std::string c = write_wcnf(gen_random_instance({12, 48, 3, 100}));
    CHECK(a != c);
}

TEST_CASE("gen_random_graph determinism and extremes") {
    Graph a = gen_random_graph(20, 0.3, 5);
    Graph b = gen_random_graph(20, 0.3, 5);
    CHECK(write_dimacs_graph(a) == write_dimacs_graph(b));

    CHECK(gen_random_graph(15, 0.0, 1).num_edges() == 0);
    CHECK(gen_random_graph(15, 1.0, 1).num_edges() == 15 * 14 / 2);
}

TEST_CASE("edge counts stay within sampling bounds") {
    // C(60,2) * 0.1 = 177 expected edges, sigma = sqrt(1770 * 0.1 * 0.9).
    const double mean = 177.0;
    const double sigma = std::sqrt(1770 * 0.1 * 0.9);
    double sum = 0.0;
    for (uint64_t seed = 0; seed < 200; ++seed) {
        int edges = gen_random_graph(60, 0.1, seed).num_edges();
        CHECK(std::abs(edges - mean) <= 5.0 * sigma);
        sum += edges;
    }
    double avg = sum / 200.0;
    CHECK(std::abs(avg - mean) <= 3.0 * sigma / std::sqrt(200.0));
}
