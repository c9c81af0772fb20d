#pragma once

#include <optional>
#include <vector>

#include "dmatch/graph.hpp"
#include "dmatch/matching.hpp"
#include "dmatch/solver.hpp"

namespace dmatch {

// Partition (A, B, C, D) witnessing the Cameron-Walker structure:
//   - every vertex of A has degree 1 in G,
//   - G[A+B], when A+B is non-empty, is 1-regular and bipartite with sides A, B,
//   - G[B+C] is bipartite with sides B, C,
//   - G[D], when D is non-empty, is 1-regular and every edge xy of G[D] has a
//     vertex z in C with N(x)\{y} = N(y)\{x} = {z}.
struct CWDecomposition {
    std::vector<int> set_a, set_b, set_c, set_d;
};

// Re-checks every clause above; used by tests and called internally before a
// decomposition is returned.
bool verify_cw_decomposition(const Graph& g, const CWDecomposition& d);

// Deterministic recognition: D from degree-2 triangle pairs, B from pendant
// neighborhoods, A one pendant per B vertex, C the remainder, then full
// verification. Throws PreconditionError on disconnected input.
std::optional<CWDecomposition> recognize_cameron_walker(const Graph& g);

// nu(g) = nu_s(g) iff every non-trivial component is Cameron-Walker.
bool decide_nu_eq_nus(const Graph& g);

struct DiameterWitness {
    int vertex = -1;
    int nontrivial_components = 0;
    bool matching_preserved = false;
};

struct DiameterDecision {
    bool equal = false;
    std::optional<DiameterWitness> witness;
};

// nu(g) = nu_{d,j}(g) for connected g of diameter <= 3: holds iff some vertex
// v leaves >= j non-trivial components with nu(g) = nu(g - v). Witness is the
// smallest such vertex id. Costs n maximum-matching calls.
DiameterDecision decide_nu_eq_nudj_small_diameter(const Graph& g, int j);

// Diameter <= 2 fast path: only universal vertices v are tested, requiring
// g - v to have a perfect matching and >= j non-trivial components.
DiameterDecision decide_nu_eq_nudj_diameter2(const Graph& g, int j);

struct SBoundReport {
    struct PerEdge {
        Edge edge;
        int residual_nu = 0;  // nu(g - N[{u,v}])
        bool equality = false;  // nu = nu_s on g - N[{u,v}]
    };
    int s_value = 0;
    Edge argmax_edge{};
    std::vector<PerEdge> per_edge;
};

// s(g) = max over edges uv of nu(g - N[{u,v}]) + [nu = nu_s on g - N[{u,v}]];
// an upper bound on nu_s(g). Argmax ties break to the lexicographically
// smallest edge. Throws NoEdgesError when g has no edge.
SBoundReport compute_s_bound(const Graph& g);

// max over edges uv of nu(g - N[{u,v}]).
int max_residual_matching_number(const Graph& g);

struct BoundChainReport {
    int nu_s = 0;
    int middle = 0;  // 1 + max over edges uv of nu(g - N[{u,v}])
    int nu_d = 0;
    bool right_vacuous = false;  // middle = 1 because every residual is edgeless
};

// Computes nu_s <= middle <= nu_d and asserts both inequalities, except that
// the right one is only asserted when some residual graph retains an edge;
// otherwise the constructed disconnected matching degenerates to a single
// edge and the report carries right_vacuous instead.
BoundChainReport check_bound_chain(const Graph& g, Budget& budget);

// Certificate that nu_d(g) != nu_s(g): a disconnected matching strictly
// larger than s(g). Polynomial-time checkable.
bool verify_disequality_certificate(const Graph& g, const Matching& m);

// nu_d(g) = nu_s(g)? With >= 2 non-trivial components this reduces to the
// Cameron-Walker test; otherwise the unique non-trivial component H is
// searched for an induced matching of size 2*max_degree(H), which justifies
// the Cameron-Walker characterization, and failing that both numbers are
// computed exactly. Intended for small maximum degree.
bool decide_nud_eq_nus_bounded_degree(const Graph& g, Budget& budget);
bool decide_nud_eq_nus_bounded_degree(const Graph& g);

}  // namespace dmatch
