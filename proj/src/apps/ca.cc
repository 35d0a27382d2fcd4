#include "apps/ca.hh"

#include <sstream>

#include "core/errors.hh"

namespace topksat {

void CaSpec::validate() const {
    if (columns < 1) throw Error(ErrorCode::Invalid, "column count must be >= 1");
    if (strength < 1 || strength > columns)
        throw Error(ErrorCode::Invalid, "strength must be within 1.." + std::to_string(columns));
    if (static_cast<int>(levels.size()) != columns)
        throw Error(ErrorCode::Invalid, "expected one level per column");
    for (int s : levels)
        if (s < 1) throw Error(ErrorCode::Invalid, "levels must be positive");
}

CaSpec parse_ca_spec(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c") continue;

        auto fail = [&](const std::string& msg) -> void {
            throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + msg);
        };
        CaSpec spec;
        std::istringstream data(line);
        if (!(data >> spec.columns >> spec.strength) || spec.columns < 1)
            fail("expected `M t s_1 ... s_M [N]`");
        spec.levels.resize(static_cast<size_t>(spec.columns));
        for (int c = 0; c < spec.columns; ++c)
            if (!(data >> spec.levels[static_cast<size_t>(c)]))
                fail("expected " + std::to_string(spec.columns) + " level entries");
        if (!(data >> spec.runs)) spec.runs = 0;
        std::string extra;
        if (data >> extra) fail("trailing tokens after the run count");
        try {
            spec.validate();
        } catch (const Error& e) {
            fail(e.what());
        }
        return spec;
    }
    throw Error(ErrorCode::Parse, "no covering-array spec line found");
}

std::vector<ValueCombination> enumerate_combinations(const CaSpec& spec) {
    spec.validate();
    std::vector<ValueCombination> out;
    const int m = spec.columns, t = spec.strength;
    std::vector<int> cols(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) cols[static_cast<size_t>(i)] = i + 1;
    while (true) {
        std::vector<int> vals(static_cast<size_t>(t), 0);
        while (true) {
            out.push_back({cols, vals, static_cast<int>(out.size()) + 1});
            int pos = t - 1;
            while (pos >= 0 &&
                   ++vals[static_cast<size_t>(pos)] ==
                       spec.levels[static_cast<size_t>(cols[static_cast<size_t>(pos)]) - 1]) {
                vals[static_cast<size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        int pos = t - 1;
        while (pos >= 0 && cols[static_cast<size_t>(pos)] == m - (t - 1 - pos)) --pos;
        if (pos < 0) break;
        ++cols[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < t; ++i)
            cols[static_cast<size_t>(i)] = cols[static_cast<size_t>(i) - 1] + 1;
    }
    return out;
}

bool contradicts(const ValueCombination& a, const ValueCombination& b) {
    size_t i = 0, j = 0;
    while (i < a.columns.size() && j < b.columns.size()) {
        if (a.columns[i] == b.columns[j]) {
            if (a.values[i] != b.values[j]) return true;
            ++i;
            ++j;
        } else if (a.columns[i] < b.columns[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return false;
}

TopKInstance encode_ca(const CaSpec& spec, int k) {
    if (k < 1) throw Error(ErrorCode::Invalid, "k must be >= 1");
    std::vector<ValueCombination> combos = enumerate_combinations(spec);
    Formula f(static_cast<int>(combos.size()));
    for (size_t i = 0; i < combos.size(); ++i)
        for (size_t j = i + 1; j < combos.size(); ++j)
            if (contradicts(combos[i], combos[j]))
                f.add_hard({-(static_cast<int>(i) + 1), -(static_cast<int>(j) + 1)});
    for (size_t i = 0; i < combos.size(); ++i) f.add_soft({static_cast<int>(i) + 1});
    return {std::move(f), k};
}

std::vector<std::vector<int>> decode_ca(const TopKSolution& sol, const CaSpec& spec) {
    std::vector<ValueCombination> combos = enumerate_combinations(spec);
    std::vector<std::vector<int>> rows;
    rows.reserve(sol.models.size());
    for (const Model& m : sol.models) {
        if (m.size() != combos.size())
            throw Error(ErrorCode::Invalid, "model size does not match the combination count");
        std::vector<int> row(static_cast<size_t>(spec.columns), 0);
        std::vector<bool> seen(static_cast<size_t>(spec.columns), false);
        for (const ValueCombination& vc : combos) {
            if (!m[static_cast<size_t>(vc.id) - 1]) continue;
            for (size_t i = 0; i < vc.columns.size(); ++i) {
                auto col = static_cast<size_t>(vc.columns[i]) - 1;
                if (seen[col] && row[col] != vc.values[i])
                    throw Error(ErrorCode::Verify,
                                "column " + std::to_string(vc.columns[i]) +
                                    " receives conflicting values from true combinations");
                seen[col] = true;
                row[col] = vc.values[i];
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace topksat
