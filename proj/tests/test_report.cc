#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "memkc/memkc.hh"
#include "oracles.hh"
#include "report.hh"

using namespace topksat;

namespace {

// Pulls "key value" lines out of the text report.
std::string text_field(const std::string& report, const std::string& key) {
    std::istringstream in(report);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(key, 0) == 0) {
            size_t at = line.find_last_of(' ');
            return line.substr(at + 1);
        }
    }
    return "";
}

} // namespace

TEST_CASE("text and json reports encode identical values") {
    Graph g = testutil::c4();
    TopKInstance inst = encode_clique(g, 2);
    TopKSolution sol = memkc_solve(inst.formula, 2);

    std::string text = report_text(sol, &g, nullptr);
    nlohmann::json j = nlohmann::json::parse(report_json(sol, &g, nullptr));

    CHECK(text_field(text, "status") == j["status"].get<std::string>());
    CHECK(text_field(text, "k") == std::to_string(j["k"].get<int>()));
    CHECK(text_field(text, "objective") == std::to_string(j["objective"].get<int>()));
    CHECK(text_field(text, "uncovered") == std::to_string(j["uncovered"].get<int>()));

    // Model and decoded lines line up with the JSON arrays.
    for (size_t i = 0; i < j["models"].size(); ++i) {
        std::string line = "model " + std::to_string(i + 1) + "  ";
        for (int l : j["models"][i].get<std::vector<int>>()) line += ' ' + std::to_string(l);
        CHECK(text.find(line) != std::string::npos);
    }
    REQUIRE(j.contains("decoded"));
    for (size_t i = 0; i < j["decoded"].size(); ++i) {
        std::string line = "clique " + std::to_string(i + 1) + "  ";
        for (int v : j["decoded"][i].get<std::vector<int>>()) line += ' ' + std::to_string(v);
        CHECK(text.find(line) != std::string::npos);
    }
}

TEST_CASE("reports without a decode context omit the decoded section") {
    Formula f = testutil::example1();
    TopKSolution sol = memkc_solve(f, 1);
    nlohmann::json j = nlohmann::json::parse(report_json(sol, nullptr, nullptr));
    CHECK(!j.contains("decoded"));
    std::string text = report_text(sol, nullptr, nullptr);
    CHECK(text.find("clique") == std::string::npos);
    CHECK(text.find("row") == std::string::npos);
}
