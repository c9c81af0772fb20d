#include "dmatch/graph.hpp"

#include <algorithm>
#include <queue>

namespace dmatch {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw InvalidVertexError("vertex count must be non-negative");
    adj_.resize(n_);
    edges_.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw InvalidVertexError("edge endpoint out of range [0," +
                                     std::to_string(n_) + "): (" +
                                     std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b) throw SelfLoopError("self-loop at vertex " + std::to_string(a));
        edges_.push_back(make_edge(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidVertexError("vertex " + std::to_string(v) + " out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

void Graph::set_label(int v, std::string label) {
    check_vertex(v);
    labels_[v] = std::move(label);
}

const std::string* Graph::label(int v) const {
    auto it = labels_.find(v);
    return it == labels_.end() ? nullptr : &it->second;
}

int Graph::find_label(const std::string& label) const {
    for (const auto& [v, l] : labels_)
        if (l == label) return v;
    return -1;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

int count_nontrivial(const std::vector<std::vector<int>>& comps) {
    int k = 0;
    for (const auto& c : comps)
        if (c.size() >= 2) ++k;
    return k;
}

int nontrivial_component_count(const Graph& g) {
    return count_nontrivial(components(g));
}

std::optional<int> diameter(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw EmptyGraphError("diameter of the empty graph is undefined");
    int diam = 0;
    std::vector<int> dist(n);
    std::vector<int> queue(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        int head = 0, tail = 0;
        dist[s] = 0;
        queue[tail++] = s;
        while (head < tail) {
            int v = queue[head++];
            for (int w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
        }
        if (tail < n) return std::nullopt;
        diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
    }
    return diam;
}

std::optional<Bipartition> bipartition_of(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        queue.clear();
        queue.push_back(s);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (int v = 0; v < n; ++v)
        (color[v] == 0 ? b.side_one : b.side_two).push_back(v);
    return b;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& w) {
    const int n = g.vertex_count();
    InducedSubgraph out;
    out.to_new.assign(n, -1);
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted) {
        if (v < 0 || v >= n)
            throw InvalidVertexError("induced_subgraph: vertex " + std::to_string(v) +
                                     " out of range");
        out.to_new[v] = static_cast<int>(out.to_old.size());
        out.to_old.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges())
        if (out.to_new[e.u] >= 0 && out.to_new[e.v] >= 0)
            edges.emplace_back(out.to_new[e.u], out.to_new[e.v]);
    out.graph = Graph(static_cast<int>(out.to_old.size()), edges);
    for (size_t i = 0; i < out.to_old.size(); ++i)
        if (const std::string* l = g.label(out.to_old[i]))
            out.graph.set_label(static_cast<int>(i), *l);
    return out;
}

InducedSubgraph delete_closed_neighborhood_mapped(const Graph& g,
                                                  const std::vector<int>& s) {
    const int n = g.vertex_count();
    std::vector<char> drop(n, 0);
    for (int v : s) {
        if (v < 0 || v >= n)
            throw InvalidVertexError("delete_closed_neighborhood: vertex " +
                                     std::to_string(v) + " out of range");
        drop[v] = 1;
        for (int w : g.neighbors(v)) drop[w] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (!drop[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

Graph delete_closed_neighborhood(const Graph& g, const std::vector<int>& s) {
    return delete_closed_neighborhood_mapped(g, s).graph;
}

}  // namespace dmatch
