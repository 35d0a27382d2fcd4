#ifndef TOPKSAT_APPS_CLIQUE_HH
#define TOPKSAT_APPS_CLIQUE_HH

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/formula.hh"
#include "core/solution.hh"

namespace topksat {

// Simple undirected graph with 1-based vertices.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int num_vertices);

    int num_vertices() const { return num_vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; } // u < v, sorted
    int num_edges() const { return static_cast<int>(edges_.size()); }

    void add_edge(int u, int v); // rejects self-loops, ignores duplicates
    bool has_edge(int u, int v) const;

  private:
    int num_vertices_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

// DIMACS edge format: `p edge <n> <m>`, `e <u> <v>` lines, `c` comments.
Graph parse_dimacs_graph(std::string_view text);
std::string write_dimacs_graph(const Graph& g);

// Hard clauses forbid picking two non-adjacent vertices (lexicographic pair
// order); one positive unit soft clause per vertex. Models of the hard part
// are exactly the cliques of g.
TopKInstance encode_clique(const Graph& g, int k);

// Vertex sets picked by the models. Throws if a set is not a clique of g.
std::vector<std::vector<int>> decode_clique(const TopKSolution& sol, const Graph& g);

} // namespace topksat

#endif
