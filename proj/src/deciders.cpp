#include "dmatch/deciders.hpp"

#include <algorithm>

namespace dmatch {

namespace {

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || components(g).size() == 1;
}

std::vector<int> all_but(const Graph& g, int v) {
    std::vector<int> keep;
    keep.reserve(g.vertex_count() - 1);
    for (int w = 0; w < g.vertex_count(); ++w)
        if (w != v) keep.push_back(w);
    return keep;
}

}  // namespace

bool verify_cw_decomposition(const Graph& g, const CWDecomposition& d) {
    const int n = g.vertex_count();
    std::vector<int> role(n, -1);  // 0=A 1=B 2=C 3=D
    auto assign = [&](const std::vector<int>& vs, int r) {
        for (int v : vs) {
            if (v < 0 || v >= n || role[v] != -1) return false;
            role[v] = r;
        }
        return true;
    };
    if (!assign(d.set_a, 0) || !assign(d.set_b, 1) || !assign(d.set_c, 2) ||
        !assign(d.set_d, 3))
        return false;
    for (int v = 0; v < n; ++v)
        if (role[v] == -1) return false;

    for (int a : d.set_a)
        if (g.degree(a) != 1) return false;

    // G[A+B]: when non-empty, 1-regular with every edge between A and B
    if (!d.set_a.empty() || !d.set_b.empty()) {
        for (int v : d.set_a) {
            int inside = 0;
            for (int w : g.neighbors(v))
                if (role[w] <= 1) {
                    if (role[w] == 0) return false;  // A-A edge
                    ++inside;
                }
            if (inside != 1) return false;
        }
        for (int v : d.set_b) {
            int inside = 0;
            for (int w : g.neighbors(v))
                if (role[w] <= 1) {
                    if (role[w] == 1) return false;  // B-B edge
                    ++inside;
                }
            if (inside != 1) return false;
        }
    }

    // G[B+C]: no edge inside B, none inside C
    for (const Edge& e : g.edges()) {
        if (role[e.u] == 1 && role[e.v] == 1) return false;
        if (role[e.u] == 2 && role[e.v] == 2) return false;
    }

    // G[D]: 1-regular when non-empty, each pair hanging off one C vertex
    if (!d.set_d.empty()) {
        for (int x : d.set_d) {
            int partner = -1, inside = 0;
            for (int w : g.neighbors(x))
                if (role[w] == 3) {
                    partner = w;
                    ++inside;
                }
            if (inside != 1) return false;
            // N(x)\{partner} must be exactly one C vertex shared with partner
            if (g.degree(x) != 2) return false;
            int z = -1;
            for (int w : g.neighbors(x))
                if (w != partner) z = w;
            if (z == -1 || role[z] != 2) return false;
            int zp = -1;
            if (g.degree(partner) != 2) return false;
            for (int w : g.neighbors(partner))
                if (w != x) zp = w;
            if (zp != z) return false;
        }
    }
    return true;
}

std::optional<CWDecomposition> recognize_cameron_walker(const Graph& g) {
    if (!is_connected(g))
        throw PreconditionError("recognize_cameron_walker expects a connected graph");
    const int n = g.vertex_count();
    CWDecomposition d;
    if (n == 1) {
        d.set_c = {0};
        return d;
    }
    if (n == 2) {
        // K2: pendant pair; smaller id becomes the A vertex
        d.set_a = {0};
        d.set_b = {1};
        return verify_cw_decomposition(g, d) ? std::optional(d) : std::nullopt;
    }
    if (n == 3 && g.edge_count() == 3) {
        // K3: the two smallest ids form the D pair
        d.set_d = {0, 1};
        d.set_c = {2};
        return verify_cw_decomposition(g, d) ? std::optional(d) : std::nullopt;
    }

    std::vector<int> role(n, -1);
    // D: edges whose endpoints both have degree 2 and share their third
    // neighbor. Outside K3 these pairs are vertex-disjoint.
    for (const Edge& e : g.edges()) {
        if (g.degree(e.u) != 2 || g.degree(e.v) != 2) continue;
        int zu = -1, zv = -1;
        for (int w : g.neighbors(e.u))
            if (w != e.v) zu = w;
        for (int w : g.neighbors(e.v))
            if (w != e.u) zv = w;
        if (zu != zv || zu == -1) continue;
        if (role[e.u] != -1 || role[e.v] != -1) return std::nullopt;
        role[e.u] = role[e.v] = 3;
        d.set_d.push_back(e.u);
        d.set_d.push_back(e.v);
    }
    // B: neighbors of pendants. A: the smallest pendant of each B vertex.
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 1) continue;
        int b = g.neighbors(v)[0];
        if (role[b] == -1) role[b] = 1;
        if (role[b] != 1) return std::nullopt;
    }
    for (int b = 0; b < n; ++b) {
        if (role[b] != 1) continue;
        d.set_b.push_back(b);
        for (int w : g.neighbors(b))
            if (g.degree(w) == 1 && role[w] == -1) {
                role[w] = 0;  // neighbors are sorted: first pendant has smallest id
                d.set_a.push_back(w);
                break;
            }
    }
    for (int v = 0; v < n; ++v)
        if (role[v] == -1) d.set_c.push_back(v);

    std::sort(d.set_a.begin(), d.set_a.end());
    std::sort(d.set_b.begin(), d.set_b.end());
    std::sort(d.set_d.begin(), d.set_d.end());
    if (!verify_cw_decomposition(g, d)) return std::nullopt;
    return d;
}

bool decide_nu_eq_nus(const Graph& g) {
    for (const auto& comp : components(g)) {
        if (comp.size() < 2) continue;
        InducedSubgraph sub = induced_subgraph(g, comp);
        if (!recognize_cameron_walker(sub.graph).has_value()) return false;
    }
    return true;
}

namespace {

void check_diameter_precondition(const Graph& g, int j, int max_diameter) {
    if (j < 2) throw PreconditionError("j must be >= 2");
    if (g.edge_count() < 1) throw PreconditionError("graph has no edges");
    auto diam = diameter(g);
    if (!diam.has_value()) throw PreconditionError("graph is disconnected");
    if (*diam > max_diameter)
        throw PreconditionError("diameter " + std::to_string(*diam) + " exceeds " +
                                std::to_string(max_diameter));
}

}  // namespace

DiameterDecision decide_nu_eq_nudj_small_diameter(const Graph& g, int j) {
    check_diameter_precondition(g, j, 3);
    const int nu = matching_number(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        InducedSubgraph rest = induced_subgraph(g, all_but(g, v));
        int nontrivial = nontrivial_component_count(rest.graph);
        if (nontrivial < j) continue;
        if (matching_number(rest.graph) != nu) continue;
        return {true, DiameterWitness{v, nontrivial, true}};
    }
    return {false, std::nullopt};
}

DiameterDecision decide_nu_eq_nudj_diameter2(const Graph& g, int j) {
    check_diameter_precondition(g, j, 2);
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != n - 1) continue;  // universal vertices only
        if ((n - 1) % 2 != 0) continue;
        InducedSubgraph rest = induced_subgraph(g, all_but(g, v));
        if (matching_number(rest.graph) * 2 != n - 1) continue;  // perfect matching
        int nontrivial = nontrivial_component_count(rest.graph);
        if (nontrivial < j) continue;
        return {true, DiameterWitness{v, nontrivial, true}};
    }
    return {false, std::nullopt};
}

SBoundReport compute_s_bound(const Graph& g) {
    if (g.edge_count() == 0) throw NoEdgesError("s(G) needs at least one edge");
    SBoundReport report;
    report.s_value = -1;
    for (const Edge& e : g.edges()) {
        Graph rest = delete_closed_neighborhood(g, {e.u, e.v});
        SBoundReport::PerEdge pe;
        pe.edge = e;
        pe.residual_nu = matching_number(rest);
        pe.equality = decide_nu_eq_nus(rest);
        int value = pe.residual_nu + (pe.equality ? 1 : 0);
        if (value > report.s_value) {
            report.s_value = value;
            report.argmax_edge = e;
        }
        report.per_edge.push_back(pe);
    }
    return report;
}

int max_residual_matching_number(const Graph& g) {
    if (g.edge_count() == 0) throw NoEdgesError("needs at least one edge");
    int best = 0;
    for (const Edge& e : g.edges())
        best = std::max(best, matching_number(delete_closed_neighborhood(g, {e.u, e.v})));
    return best;
}

BoundChainReport check_bound_chain(const Graph& g, Budget& budget) {
    if (g.edge_count() == 0) throw NoEdgesError("bound chain needs at least one edge");
    BoundChainReport r;
    int max_residual = max_residual_matching_number(g);
    r.middle = 1 + max_residual;
    r.nu_s = induced_matching_number(g, budget);
    r.nu_d = c_disconnected_matching_number(g, 2, budget);
    r.right_vacuous = max_residual == 0;
    if (r.nu_s > r.middle)
        throw InternalInvariantError("nu_s exceeds 1 + max residual matching number");
    if (!r.right_vacuous && r.nu_d < r.middle)
        throw InternalInvariantError("nu_d below 1 + max residual matching number");
    return r;
}

bool verify_disequality_certificate(const Graph& g, const Matching& m) {
    if (!is_valid_matching(g, m))
        throw InvalidMatchingError("certificate matching is not valid on the graph");
    if (m.empty()) return false;
    MatchingAnalysis a = analyze(g, m);
    if (!a.is_disconnected) return false;
    return static_cast<int>(m.size()) > compute_s_bound(g).s_value;
}

bool decide_nud_eq_nus_bounded_degree(const Graph& g, Budget& budget) {
    auto comps = components(g);
    std::vector<const std::vector<int>*> nontrivial;
    for (const auto& c : comps)
        if (c.size() >= 2) nontrivial.push_back(&c);
    if (nontrivial.size() >= 2) {
        // nu_d = nu here, so equality holds iff nu = nu_s
        return decide_nu_eq_nus(g);
    }
    if (nontrivial.empty()) return true;  // nu_d = nu_s = 0

    InducedSubgraph sub = induced_subgraph(g, *nontrivial.front());
    const Graph& h = sub.graph;
    int delta = h.max_degree();
    if (has_induced_matching_of_size(h, 2 * delta, budget))
        return recognize_cameron_walker(h).has_value();
    int nus = induced_matching_number(h, budget);
    int nud = c_disconnected_matching_number(h, 2, budget);
    return nud == nus;
}

bool decide_nud_eq_nus_bounded_degree(const Graph& g) {
    Budget b;
    return decide_nud_eq_nus_bounded_degree(g, b);
}

}  // namespace dmatch
