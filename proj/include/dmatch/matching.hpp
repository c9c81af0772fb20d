#pragma once

#include <vector>

#include "dmatch/graph.hpp"

namespace dmatch {

// A set of pairwise non-adjacent edges. Edges are normalized (u < v) and kept
// sorted, so equal matchings serialize identically. The host graph is passed
// to the functions that need it rather than stored.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges);

    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<int> saturated() const;

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    std::vector<Edge> edges_;
};

// Every matching edge is a host edge and no two share an endpoint.
bool is_valid_matching(const Graph& g, const Matching& m);

struct MatchingAnalysis {
    std::vector<int> saturated;
    int induced_components = 0;
    bool is_induced = false;      // G[M] is 1-regular, or M empty
    bool is_disconnected = false; // G[M] disconnected, or M empty

    // The empty matching is c-disconnected for every c.
    bool is_c_disconnected(int c) const {
        return saturated.empty() || induced_components >= c;
    }
};

// Classifies m on its host graph. Throws InvalidMatchingError.
MatchingAnalysis analyze(const Graph& g, const Matching& m);

// True iff no host edge can be added without an endpoint collision.
bool is_maximal(const Graph& g, const Matching& m);

// Maximum matching on general graphs via augmenting paths with blossom
// contraction. Ties are broken by processing vertices and neighbors in
// ascending id order, so the result is reproducible.
Matching maximum_matching(const Graph& g);
int matching_number(const Graph& g);

}  // namespace dmatch
