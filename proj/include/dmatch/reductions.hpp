#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmatch/graph.hpp"
#include "dmatch/matching.hpp"

namespace dmatch {

// Ground set X = {0, ..., 3q-1} and a collection of 3-element subsets.
struct X3CInstance {
    int ground_size = 0;
    std::vector<std::array<int, 3>> triples;

    int q() const { return ground_size / 3; }
    // occurrence[i] = number of triples containing element i
    std::vector<int> occurrence() const;
    void validate() const;
};

std::string write_x3c_json(const X3CInstance& inst);
X3CInstance read_x3c_json(const std::string& text);

// Exhaustive exact-cover search with disjointness pruning; returns the
// lexicographically first cover as sorted triple indices, or nullopt.
std::optional<std::vector<int>> solve_x3c(const X3CInstance& inst,
                                          int max_triples = 20);

// A built gadget graph with labeled vertex roles, its declared bipartition
// and the proven maximum matching size.
struct ReductionArtifact {
    Graph graph;
    std::vector<int> v1, v2;
    int predicted_nu = 0;
    std::map<std::string, int> metadata;
    std::optional<X3CInstance> instance;  // set by the X3C-based builders
};

std::string write_artifact_json(const ReductionArtifact& a);

// Bipartite diameter-4 gadget: complete bipartite core K_{q,|C|}, one P3 per
// triple, one K_{f_i,f_i-1} per element, and the two anchor K2s. With
// add_diameter_vertex an apex adjacent to all of V1 pins the diameter at 4.
// nu equals |V1| = 4|C| - 2q + 2 (plus one per element of zero occurrence).
ReductionArtifact build_reduction_diam4(const X3CInstance& inst,
                                        bool add_diameter_vertex);

// The constructive maximum disconnected matching for a YES instance: anchor
// edges, q core edges covering the chosen triples, the P3 edge away from the
// cover side, and a perfect matching of each K_{f_i,f_i-1} minus the covered
// occurrence. Verified internally to be maximum, disconnected, 2 components.
Matching witness_matching_diam4(const ReductionArtifact& artifact,
                                const std::vector<int>& cover);

// Variant deciding nu = nu_{d,i}: i-2 extra K2s plus an apex adjacent to V1
// and the new K2 endpoints on the V1 side.
ReductionArtifact build_reduction_nu_nudi(const X3CInstance& inst, int i);

// Variant deciding nu_{d,i} = nu_{d,j} at diameter 3: j-2 extra K2s plus a
// dominating K2 {u, v} with u joined to V1' and v joined to V2'.
ReductionArtifact build_reduction_nudi_nudj(const X3CInstance& inst, int i, int j);

// Path-grid replacement for K_{q,m}: q paths P_{2m-1}, m paths P_{2q-1} with
// head vertex c*_j, and one cross edge per path pair. nu = m(2q-1).
ReductionArtifact build_gadget_H(int q, int m);

// Maximum matching of H(q,m) saturating everything except the q..m head
// vertices c*_j listed in avoid (|avoid| = m - q).
Matching s_avoiding_H_matching(const ReductionArtifact& gadget,
                               const std::vector<int>& avoid);

// Caterpillar gadget replacing a high-degree apex: spine v_{l,1} v_{l,2} and
// pendant paths v_{l,2} v_{l,3} v_{l,4}; 4k vertices, perfect matching of
// size 2k. Hook vertices are the v_{l,3}.
Graph build_gadget_Pi(int k, const std::string& label);

// Subcubic bipartite gadget: H(q,|C|) core, one caterpillar unit per triple,
// a path P_{2f_i-1} per element and the two big caterpillars replacing the
// anchors. Requires |C| >= q >= 2 and every element covered at least once.
ReductionArtifact build_subcubic_F(const X3CInstance& inst);

// Constructive maximum disconnected matching of F for a YES instance.
Matching witness_matching_F(const ReductionArtifact& artifact,
                            const std::vector<int>& cover);

// co-NP-side gadget: k-1 fresh edges u_l v_l with {v_l} completely joined to
// side A of the bipartite base and {u_l} to side B. Requires
// k > 1 + max over edges uv of nu(base - N[{u,v}]); the builder recomputes
// that bound itself. nu_s(G') != nu_d(G') iff nu_d(base) >= k.
ReductionArtifact build_conp_reduction(const Graph& base, int k);

}  // namespace dmatch
