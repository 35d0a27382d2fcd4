#include "ee/ee.hh"

#include <array>
#include <sstream>

#include "core/wcnf.hh"

namespace topksat {

EeEncoding ee_encode(const Formula& f, int k) {
    if (k < 1) throw Error(ErrorCode::Invalid, "k must be >= 1");
    VarMap map{f.num_vars(), k};
    Formula out(map.expanded_vars());
    for (const Clause& c : f.hard()) {
        for (int j = 1; j <= k; ++j) {
            std::vector<Lit> lits;
            lits.reserve(c.lits.size());
            for (Lit l : c.lits) {
                int x = map.expanded(var_of(l), j);
                lits.push_back(positive(l) ? x : -x);
            }
            out.add_hard(std::move(lits));
        }
    }
    for (const Clause& c : f.soft()) {
        std::vector<Lit> lits;
        lits.reserve(c.lits.size() * static_cast<size_t>(k));
        for (int j = 1; j <= k; ++j) {
            for (Lit l : c.lits) {
                int x = map.expanded(var_of(l), j);
                lits.push_back(positive(l) ? x : -x);
            }
        }
        out.add_soft(std::move(lits));
    }
    return {std::move(out), map};
}

std::string write_wcnf_with_map(const Formula& expanded, const VarMap& map) {
    std::vector<std::string> comments;
    comments.reserve(static_cast<size_t>(map.expanded_vars()));
    for (int i = 1; i <= map.num_vars; ++i)
        for (int j = 1; j <= map.copies; ++j)
            comments.push_back("eemap " + std::to_string(i) + ' ' + std::to_string(j) + ' ' +
                               std::to_string(map.expanded(i, j)));
    return write_wcnf(expanded, comments);
}

VarMap parse_eemap(std::string_view wcnf_text) {
    int max_var = 0, max_copy = 0;
    std::vector<std::array<int, 3>> entries;
    std::istringstream in{std::string(wcnf_text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string c, tag;
        int var = 0, copy = 0, expanded = 0;
        if (!(ls >> c >> tag) || c != "c" || tag != "eemap") continue;
        if (!(ls >> var >> copy >> expanded) || var < 1 || copy < 1 || expanded < 1)
            throw Error(ErrorCode::Parse, "malformed eemap comment: " + line);
        entries.push_back({var, copy, expanded});
        max_var = std::max(max_var, var);
        max_copy = std::max(max_copy, copy);
    }
    if (entries.empty()) throw Error(ErrorCode::Parse, "no eemap comments found");
    VarMap map{max_var, max_copy};
    std::vector<bool> seen(static_cast<size_t>(map.expanded_vars()) + 1, false);
    for (const auto& [var, copy, expanded] : entries) {
        if (expanded != map.expanded(var, copy))
            throw Error(ErrorCode::Parse, "eemap entry does not follow the block layout");
        if (seen[static_cast<size_t>(expanded)])
            throw Error(ErrorCode::Parse, "duplicate eemap entry for variable " +
                                              std::to_string(expanded));
        seen[static_cast<size_t>(expanded)] = true;
    }
    for (size_t x = 1; x < seen.size(); ++x)
        if (!seen[x])
            throw Error(ErrorCode::Parse,
                        "eemap is missing expanded variable " + std::to_string(x));
    return map;
}

TopKSolution ee_decode(const Model& expanded_model, const VarMap& map, const Formula& original) {
    if (static_cast<int>(expanded_model.size()) != map.expanded_vars())
        throw Error(ErrorCode::Invalid, "expanded model size does not match the map");
    if (map.num_vars != original.num_vars())
        throw Error(ErrorCode::Invalid, "map does not match the original formula");
    std::vector<Model> models;
    models.reserve(static_cast<size_t>(map.copies));
    for (int j = 1; j <= map.copies; ++j) {
        Model m(static_cast<size_t>(map.num_vars));
        for (int i = 1; i <= map.num_vars; ++i)
            m[static_cast<size_t>(i) - 1] = expanded_model[static_cast<size_t>(map.expanded(i, j)) - 1];
        if (int bad = first_violated_hard(original, m))
            throw Error(ErrorCode::Verify, "copy " + std::to_string(j) +
                                               " violates hard clause " + std::to_string(bad));
        models.push_back(std::move(m));
    }
    return make_solution(original, std::move(models), SolutionStatus::Feasible, map.copies, "ee");
}

Model grow_to_maximal(const Formula& f, Model model, const SatCheckFn& check) {
    if (int bad = first_violated_hard(f, model))
        throw Error(ErrorCode::Invalid,
                    "model to grow violates hard clause " + std::to_string(bad));
    std::vector<Clause> committed = f.hard();
    std::vector<char> done(static_cast<size_t>(f.num_soft()), 0);
    // Everything the model already covers is committed up front; witnesses
    // adopted later are constrained to keep satisfying it.
    for (int idx = 0; idx < f.num_soft(); ++idx) {
        if (clause_satisfied(f.soft()[static_cast<size_t>(idx)], model)) {
            committed.push_back(f.soft()[static_cast<size_t>(idx)]);
            done[static_cast<size_t>(idx)] = 1;
        }
    }
    for (int idx = 0; idx < f.num_soft(); ++idx) {
        if (done[static_cast<size_t>(idx)]) continue;
        const Clause& c = f.soft()[static_cast<size_t>(idx)];
        if (clause_satisfied(c, model)) {
            // Covered incidentally by an adopted witness; keep it covered.
            committed.push_back(c);
            continue;
        }
        committed.push_back(c);
        std::optional<Model> witness = check(committed, f.num_vars());
        if (witness) {
            model = std::move(*witness);
        } else {
            committed.pop_back();
        }
    }
    return model;
}

} // namespace topksat
