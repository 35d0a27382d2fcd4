#include "apps/clique.hh"

#include <algorithm>
#include <sstream>

#include "core/errors.hh"

namespace topksat {

Graph::Graph(int num_vertices) : num_vertices_(num_vertices) {
    if (num_vertices < 0) throw Error(ErrorCode::Invalid, "negative vertex count");
}

void Graph::add_edge(int u, int v) {
    if (u < 1 || v < 1 || u > num_vertices_ || v > num_vertices_)
        throw Error(ErrorCode::Invalid, "edge endpoint outside 1.." + std::to_string(num_vertices_));
    if (u == v) throw Error(ErrorCode::Invalid, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it != edges_.end() && *it == std::make_pair(u, v)) return;
    edges_.insert(it, {u, v});
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

Graph parse_dimacs_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0, edges_seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "c") continue;
        auto fail = [&](const std::string& msg) -> void {
            throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + msg);
        };
        if (head == "p") {
            std::string fmt;
            if (have_header) fail("duplicate header");
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
                fail("malformed header (expected `p edge <n> <m>`)");
            have_header = true;
            g = Graph(static_cast<int>(n));
        } else if (head == "e") {
            if (!have_header) fail("edge before header");
            long long u = 0, v = 0;
            if (!(ls >> u >> v)) fail("malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n) fail("edge endpoint outside 1.." + std::to_string(n));
            if (u == v) fail("self-loop at vertex " + std::to_string(u));
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
            ++edges_seen;
        } else {
            fail("unrecognized line `" + head + "`");
        }
    }
    if (!have_header) throw Error(ErrorCode::Parse, "missing `p edge` header");
    if (edges_seen != m)
        throw Error(ErrorCode::Parse, "header declares " + std::to_string(m) +
                                          " edges but file contains " + std::to_string(edges_seen));
    return g;
}

std::string write_dimacs_graph(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.num_vertices()) + ' ' +
                      std::to_string(g.num_edges()) + '\n';
    for (const auto& [u, v] : g.edges())
        out += "e " + std::to_string(u) + ' ' + std::to_string(v) + '\n';
    return out;
}

TopKInstance encode_clique(const Graph& g, int k) {
    if (k < 1) throw Error(ErrorCode::Invalid, "k must be >= 1");
    Formula f(g.num_vertices());
    for (int u = 1; u <= g.num_vertices(); ++u)
        for (int v = u + 1; v <= g.num_vertices(); ++v)
            if (!g.has_edge(u, v)) f.add_hard({-u, -v});
    for (int v = 1; v <= g.num_vertices(); ++v) f.add_soft({v});
    return {std::move(f), k};
}

std::vector<std::vector<int>> decode_clique(const TopKSolution& sol, const Graph& g) {
    std::vector<std::vector<int>> cliques;
    cliques.reserve(sol.models.size());
    for (const Model& m : sol.models) {
        if (static_cast<int>(m.size()) != g.num_vertices())
            throw Error(ErrorCode::Invalid, "model size does not match the graph");
        std::vector<int> verts;
        for (int v = 1; v <= g.num_vertices(); ++v)
            if (m[static_cast<size_t>(v) - 1]) verts.push_back(v);
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = a + 1; b < verts.size(); ++b)
                if (!g.has_edge(verts[a], verts[b]))
                    throw Error(ErrorCode::Verify,
                                "selected vertices " + std::to_string(verts[a]) + " and " +
                                    std::to_string(verts[b]) + " are not adjacent");
        cliques.push_back(std::move(verts));
    }
    return cliques;
}

} // namespace topksat
