#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmatch/errors.hpp"

namespace dmatch {

// Undirected edge, normalized so that u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Simple undirected graph over dense vertex ids 0..n-1. Self-loops are
// rejected, parallel edges collapse. Adjacency lists are kept sorted, so
// every traversal is deterministic. Vertices may carry a role label; gadget
// builders use labels instead of id arithmetic.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    int max_degree() const;

    void set_label(int v, std::string label);
    const std::string* label(int v) const;
    const std::map<int, std::string>& labels() const { return labels_; }
    // Smallest vertex carrying `label`, or -1.
    int find_label(const std::string& label) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::map<int, std::string> labels_;
};

// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// Components containing at least one edge, i.e. at least two vertices.
int count_nontrivial(const std::vector<std::vector<int>>& comps);
int nontrivial_component_count(const Graph& g);

// Longest shortest-path distance; nullopt when g is disconnected.
// Throws EmptyGraphError when n = 0.
std::optional<int> diameter(const Graph& g);

struct Bipartition {
    std::vector<int> side_one;
    std::vector<int> side_two;
};

// Two-coloring by BFS; in each component the smallest vertex id goes to
// side_one. Returns nullopt exactly when g contains an odd cycle.
std::optional<Bipartition> bipartition_of(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_old;  // new id -> old id
    std::vector<int> to_new;  // old id -> new id, -1 if dropped
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& w);

// G - N[s]: the subgraph induced on the vertices outside the closed
// neighborhood of s.
Graph delete_closed_neighborhood(const Graph& g, const std::vector<int>& s);
InducedSubgraph delete_closed_neighborhood_mapped(const Graph& g,
                                                  const std::vector<int>& s);

}  // namespace dmatch
