#include "report.hh"

#include <json.hpp>

namespace topksat {

namespace {

struct Decoded {
    const char* label = nullptr;
    std::vector<std::vector<int>> rows;
};

Decoded decode_for(const TopKSolution& sol, const Graph* g, const CaSpec* ca) {
    Decoded d;
    if (g) {
        d.label = "clique";
        d.rows = decode_clique(sol, *g);
    } else if (ca) {
        d.label = "row";
        d.rows = decode_ca(sol, *ca);
    }
    return d;
}

} // namespace

std::string report_text(const TopKSolution& sol, const Graph* g, const CaSpec* ca) {
    Decoded d = decode_for(sol, g, ca);
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.6f", sol.time_s);
    std::string out;
    out += "status    " + std::string(to_string(sol.status)) + '\n';
    out += "k         " + std::to_string(sol.k) + '\n';
    out += "objective " + std::to_string(sol.objective) + '\n';
    out += "uncovered " + std::to_string(sol.uncovered) + '\n';
    out += "time_s    " + std::string(time_buf) + '\n';
    for (size_t i = 0; i < sol.models.size(); ++i) {
        out += "model " + std::to_string(i + 1) + "  ";
        for (Lit l : model_to_lits(sol.models[i])) out += ' ' + std::to_string(l);
        out += '\n';
    }
    for (size_t i = 0; i < d.rows.size(); ++i) {
        out += std::string(d.label) + ' ' + std::to_string(i + 1) + "  ";
        for (int v : d.rows[i]) out += ' ' + std::to_string(v);
        out += '\n';
    }
    return out;
}

std::string report_json(const TopKSolution& sol, const Graph* g, const CaSpec* ca) {
    Decoded d = decode_for(sol, g, ca);
    nlohmann::json j;
    j["status"] = to_string(sol.status);
    j["k"] = sol.k;
    j["objective"] = sol.objective;
    j["uncovered"] = sol.uncovered;
    j["time_s"] = sol.time_s;
    nlohmann::json models = nlohmann::json::array();
    for (const Model& m : sol.models) models.push_back(model_to_lits(m));
    j["models"] = std::move(models);
    if (d.label) j["decoded"] = d.rows;
    return j.dump(2) + "\n";
}

} // namespace topksat
