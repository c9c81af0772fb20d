#include "dmatch/matching.hpp"

#include <algorithm>

#include "dmatch/dynamic_matcher.hpp"

namespace dmatch {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (Edge& e : edges_) e = make_edge(e.u, e.v);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<int> Matching::saturated() const {
    std::vector<int> vs;
    vs.reserve(edges_.size() * 2);
    for (const Edge& e : edges_) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    return vs;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::vector<char> hit(g.vertex_count(), 0);
    for (const Edge& e : m.edges()) {
        if (e.u < 0 || e.v >= g.vertex_count()) return false;
        if (!g.has_edge(e.u, e.v)) return false;
        if (hit[e.u] || hit[e.v]) return false;
        hit[e.u] = hit[e.v] = 1;
    }
    return true;
}

MatchingAnalysis analyze(const Graph& g, const Matching& m) {
    if (!is_valid_matching(g, m))
        throw InvalidMatchingError("matching is not valid on its host graph");
    MatchingAnalysis a;
    a.saturated = m.saturated();
    InducedSubgraph sub = induced_subgraph(g, a.saturated);
    auto comps = components(sub.graph);
    a.induced_components = static_cast<int>(comps.size());
    a.is_induced = true;
    for (int v = 0; v < sub.graph.vertex_count(); ++v)
        if (sub.graph.degree(v) != 1) a.is_induced = false;
    a.is_disconnected = m.empty() || a.induced_components >= 2;
    return a;
}

bool is_maximal(const Graph& g, const Matching& m) {
    if (!is_valid_matching(g, m))
        throw InvalidMatchingError("matching is not valid on its host graph");
    std::vector<char> hit(g.vertex_count(), 0);
    for (int v : m.saturated()) hit[v] = 1;
    for (const Edge& e : g.edges())
        if (!hit[e.u] && !hit[e.v]) return false;
    return true;
}

Matching maximum_matching(const Graph& g) {
    DynamicMatcher dm(g);
    std::vector<Edge> edges;
    const auto& mate = dm.mate();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[v] > v) edges.push_back(Edge{v, mate[v]});
    return Matching(std::move(edges));
}

int matching_number(const Graph& g) {
    return DynamicMatcher(g).matching_size();
}

}  // namespace dmatch
