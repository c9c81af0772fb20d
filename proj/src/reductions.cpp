#include "dmatch/reductions.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "dmatch/deciders.hpp"
#include "dmatch/graph_io.hpp"
#include "dmatch/solver.hpp"

namespace dmatch {

using ordered_json = nlohmann::ordered_json;

std::vector<int> X3CInstance::occurrence() const {
    std::vector<int> f(ground_size, 0);
    for (const auto& t : triples)
        for (int x : t) ++f[x];
    return f;
}

void X3CInstance::validate() const {
    if (ground_size < 3 || ground_size % 3 != 0)
        throw PreconditionError("ground set size must be a positive multiple of 3");
    for (const auto& t : triples) {
        if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
            throw PreconditionError("triple elements must be distinct");
        for (int x : t)
            if (x < 0 || x >= ground_size)
                throw PreconditionError("triple element out of range");
    }
    if (static_cast<int>(triples.size()) < q())
        throw PreconditionError("need at least q triples");
}

std::string write_x3c_json(const X3CInstance& inst) {
    ordered_json j;
    j["ground_size"] = inst.ground_size;
    ordered_json ts = ordered_json::array();
    for (const auto& t : inst.triples) ts.push_back({t[0], t[1], t[2]});
    j["triples"] = std::move(ts);
    return j.dump(2) + "\n";
}

X3CInstance read_x3c_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("x3c json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("ground_size") || !j.contains("triples"))
        throw ParseError("x3c json: expected object with 'ground_size' and 'triples'");
    X3CInstance inst;
    inst.ground_size = j.at("ground_size").get<int>();
    for (const auto& t : j.at("triples")) {
        if (!t.is_array() || t.size() != 3)
            throw ParseError("x3c json: each triple must be a 3-array");
        inst.triples.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    inst.validate();
    return inst;
}

namespace {

bool is_exact_cover(const X3CInstance& inst, const std::vector<int>& cover) {
    std::vector<char> hit(inst.ground_size, 0);
    std::set<int> seen;
    for (int idx : cover) {
        if (idx < 0 || idx >= static_cast<int>(inst.triples.size())) return false;
        if (!seen.insert(idx).second) return false;
        for (int x : inst.triples[idx]) {
            if (hit[x]) return false;
            hit[x] = 1;
        }
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool x3c_search(const X3CInstance& inst, std::vector<char>& hit,
                std::vector<int>& chosen, int covered) {
    if (covered == inst.ground_size) return true;
    int elem = 0;
    while (hit[elem]) ++elem;
    for (int idx = 0; idx < static_cast<int>(inst.triples.size()); ++idx) {
        const auto& t = inst.triples[idx];
        if (std::find(t.begin(), t.end(), elem) == t.end()) continue;
        if (hit[t[0]] || hit[t[1]] || hit[t[2]]) continue;
        for (int x : t) hit[x] = 1;
        chosen.push_back(idx);
        if (x3c_search(inst, hit, chosen, covered + 3)) return true;
        chosen.pop_back();
        for (int x : t) hit[x] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> solve_x3c(const X3CInstance& inst, int max_triples) {
    inst.validate();
    if (static_cast<int>(inst.triples.size()) > max_triples)
        throw TooLargeError("solve_x3c: instance has " +
                            std::to_string(inst.triples.size()) +
                            " triples, cap is " + std::to_string(max_triples));
    std::vector<char> hit(inst.ground_size, 0);
    std::vector<int> chosen;
    if (!x3c_search(inst, hit, chosen, 0)) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

std::string write_artifact_json(const ReductionArtifact& a) {
    ordered_json j;
    j["graph"] = ordered_json::parse(write_graph_json(a.graph));
    j["v1"] = a.v1;
    j["v2"] = a.v2;
    j["predicted_nu"] = a.predicted_nu;
    ordered_json meta = ordered_json::object();
    for (const auto& [k, v] : a.metadata) meta[k] = v;
    j["metadata"] = std::move(meta);
    return j.dump(2) + "\n";
}

namespace {

struct Builder {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::map<int, std::string> labels;

    int vertex(const std::string& label) {
        labels[n] = label;
        return n++;
    }
    void edge(int a, int b) { edges.emplace_back(a, b); }
    Graph build() const {
        Graph g(n, edges);
        for (const auto& [v, l] : labels) g.set_label(v, l);
        return g;
    }
};

void check_artifact_bipartition(const ReductionArtifact& a) {
    std::vector<int> side(a.graph.vertex_count(), -1);
    for (int v : a.v1) side[v] = 0;
    for (int v : a.v2) {
        if (side[v] != -1) throw InternalInvariantError("v1 and v2 overlap");
        side[v] = 1;
    }
    for (int v = 0; v < a.graph.vertex_count(); ++v)
        if (side[v] == -1) throw InternalInvariantError("v1 and v2 miss a vertex");
    for (const Edge& e : a.graph.edges())
        if (side[e.u] == side[e.v])
            throw InternalInvariantError("declared bipartition has an internal edge");
}

// ---- diameter-4 family -----------------------------------------------------

struct Diam4Layout {
    int t_minus, t_plus, b_minus, b_plus;
    std::vector<int> h;        // h_j, one per triple
    std::vector<int> core;     // the q-side of the complete bipartite core
    std::vector<int> u, u_plus, u_minus;       // per triple
    std::vector<std::vector<int>> w_plus;      // per element, ascending triple
    std::vector<std::vector<int>> w_minus;     // per element
    std::vector<std::vector<int>> w_plus_triple;  // triple index per w_plus entry
};

Diam4Layout emit_diam4_base(Builder& b, const X3CInstance& inst) {
    const int m = static_cast<int>(inst.triples.size());
    const int q = inst.q();
    const auto f = inst.occurrence();
    Diam4Layout lay;
    lay.t_minus = b.vertex("t-");
    lay.t_plus = b.vertex("t+");
    lay.b_minus = b.vertex("b-");
    lay.b_plus = b.vertex("b+");
    b.edge(lay.t_minus, lay.t_plus);
    b.edge(lay.b_minus, lay.b_plus);

    for (int j = 0; j < m; ++j) lay.h.push_back(b.vertex("h:" + std::to_string(j)));
    for (int k = 0; k < q; ++k) lay.core.push_back(b.vertex("vH:" + std::to_string(k)));
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < q; ++k) b.edge(lay.h[j], lay.core[k]);

    for (int j = 0; j < m; ++j) {
        int up = b.vertex("u+:" + std::to_string(j));
        int uj = b.vertex("u:" + std::to_string(j));
        int um = b.vertex("u-:" + std::to_string(j));
        lay.u_plus.push_back(up);
        lay.u.push_back(uj);
        lay.u_minus.push_back(um);
        b.edge(uj, up);
        b.edge(uj, um);
        b.edge(uj, lay.h[j]);
    }

    lay.w_plus.resize(inst.ground_size);
    lay.w_minus.resize(inst.ground_size);
    lay.w_plus_triple.resize(inst.ground_size);
    for (int i = 0; i < inst.ground_size; ++i) {
        for (int j = 0; j < m; ++j) {
            const auto& t = inst.triples[j];
            if (std::find(t.begin(), t.end(), i) == t.end()) continue;
            int w = b.vertex("w:" + std::to_string(i) + "," + std::to_string(j));
            lay.w_plus[i].push_back(w);
            lay.w_plus_triple[i].push_back(j);
            b.edge(lay.u[j], w);
        }
        for (int k = 0; k + 1 < f[i]; ++k) {
            int wm = b.vertex("w-:" + std::to_string(i) + "," + std::to_string(k));
            lay.w_minus[i].push_back(wm);
            for (int w : lay.w_plus[i]) b.edge(w, wm);
        }
    }

    for (int j = 0; j < m; ++j) b.edge(lay.b_minus, lay.u_minus[j]);
    for (int i = 0; i < inst.ground_size; ++i)
        for (int w : lay.w_plus[i]) b.edge(lay.b_minus, w);
    for (int j = 0; j < m; ++j) b.edge(lay.t_minus, lay.h[j]);
    for (int j = 0; j < m; ++j) b.edge(lay.t_minus, lay.u_plus[j]);
    return lay;
}

std::vector<int> diam4_side_one(const Diam4Layout& lay, const X3CInstance& inst) {
    std::vector<int> v1{lay.t_minus, lay.b_minus};
    v1.insert(v1.end(), lay.core.begin(), lay.core.end());
    v1.insert(v1.end(), lay.u.begin(), lay.u.end());
    for (int i = 0; i < inst.ground_size; ++i)
        v1.insert(v1.end(), lay.w_minus[i].begin(), lay.w_minus[i].end());
    std::sort(v1.begin(), v1.end());
    return v1;
}

ReductionArtifact finish_artifact(const Builder& b, std::vector<int> v1,
                                  int predicted_nu,
                                  std::map<std::string, int> metadata,
                                  std::optional<X3CInstance> inst) {
    ReductionArtifact a;
    a.graph = b.build();
    a.v1 = std::move(v1);
    std::vector<char> in1(a.graph.vertex_count(), 0);
    for (int v : a.v1) in1[v] = 1;
    for (int v = 0; v < a.graph.vertex_count(); ++v)
        if (!in1[v]) a.v2.push_back(v);
    a.predicted_nu = predicted_nu;
    a.metadata = std::move(metadata);
    a.instance = std::move(inst);
    check_artifact_bipartition(a);
    return a;
}

const X3CInstance& artifact_instance(const ReductionArtifact& a) {
    if (!a.instance.has_value())
        throw PreconditionError("artifact carries no X3C instance");
    return *a.instance;
}

void check_cover(const X3CInstance& inst, const std::vector<int>& cover) {
    if (!is_exact_cover(inst, cover))
        throw InvalidCoverError("not an exact cover of the instance");
}

// pair consecutive vertices of path, skipping the vertex at skip_pos
// (pass -1 to keep the whole path; its length must then be even)
void pair_path_without(const std::vector<int>& path, int skip_pos,
                       std::vector<Edge>& out) {
    std::vector<int> run;
    auto flush = [&]() {
        if (run.size() % 2 != 0)
            throw InternalInvariantError("odd path segment in pairing");
        for (std::size_t i = 0; i + 1 < run.size(); i += 2)
            out.push_back(make_edge(run[i], run[i + 1]));
        run.clear();
    };
    for (int pos = 0; pos < static_cast<int>(path.size()); ++pos) {
        if (pos == skip_pos) {
            flush();
            continue;
        }
        run.push_back(path[pos]);
    }
    flush();
}

}  // namespace

ReductionArtifact build_reduction_diam4(const X3CInstance& inst,
                                        bool add_diameter_vertex) {
    inst.validate();
    Builder b;
    Diam4Layout lay = emit_diam4_base(b, inst);
    std::vector<int> v1 = diam4_side_one(lay, inst);
    if (add_diameter_vertex) {
        int apex = b.vertex("apex");
        for (int v : v1) b.edge(apex, v);
    }
    std::map<std::string, int> meta{
        {"q", inst.q()},
        {"num_triples", static_cast<int>(inst.triples.size())}};
    int nu = static_cast<int>(v1.size());
    return finish_artifact(b, std::move(v1), nu, std::move(meta), inst);
}

Matching witness_matching_diam4(const ReductionArtifact& artifact,
                                const std::vector<int>& cover) {
    const X3CInstance& inst = artifact_instance(artifact);
    check_cover(inst, cover);
    Builder scratch;
    Diam4Layout lay = emit_diam4_base(scratch, inst);

    std::vector<char> in_cover(inst.triples.size(), 0);
    for (int j : cover) in_cover[j] = 1;

    std::vector<Edge> edges;
    edges.push_back(make_edge(lay.b_minus, lay.b_plus));
    edges.push_back(make_edge(lay.t_minus, lay.t_plus));
    std::vector<int> sorted_cover = cover;
    std::sort(sorted_cover.begin(), sorted_cover.end());
    for (std::size_t k = 0; k < sorted_cover.size(); ++k)
        edges.push_back(make_edge(lay.h[sorted_cover[k]], lay.core[k]));
    for (int j = 0; j < static_cast<int>(inst.triples.size()); ++j)
        edges.push_back(make_edge(lay.u[j], in_cover[j] ? lay.u_plus[j] : lay.u_minus[j]));
    for (int i = 0; i < inst.ground_size; ++i) {
        // perfect matching of Y_i minus the covered occurrence w_{i,j(i)}
        std::vector<int> rest;
        for (std::size_t t = 0; t < lay.w_plus[i].size(); ++t)
            if (!in_cover[lay.w_plus_triple[i][t]]) rest.push_back(lay.w_plus[i][t]);
        if (rest.size() != lay.w_minus[i].size())
            throw InternalInvariantError("element not covered exactly once");
        for (std::size_t t = 0; t < rest.size(); ++t)
            edges.push_back(make_edge(rest[t], lay.w_minus[i][t]));
    }

    Matching m(std::move(edges));
    if (static_cast<int>(m.size()) != artifact.predicted_nu)
        throw InternalInvariantError("witness matching has the wrong size");
    MatchingAnalysis an = analyze(artifact.graph, m);
    if (!an.is_disconnected || an.induced_components != 2)
        throw InternalInvariantError("witness matching is not disconnected");
    return m;
}

ReductionArtifact build_reduction_nu_nudi(const X3CInstance& inst, int i) {
    inst.validate();
    if (i < 2) throw PreconditionError("i must be >= 2");
    Builder b;
    Diam4Layout lay = emit_diam4_base(b, inst);
    std::vector<int> v1 = diam4_side_one(lay, inst);
    for (int l = 0; l < i - 2; ++l) {
        int ul = b.vertex("k2u:" + std::to_string(l));
        int vl = b.vertex("k2v:" + std::to_string(l));
        b.edge(ul, vl);
        v1.push_back(vl);
    }
    std::sort(v1.begin(), v1.end());
    int apex = b.vertex("apex");
    for (int v : v1) b.edge(apex, v);
    std::map<std::string, int> meta{
        {"q", inst.q()},
        {"num_triples", static_cast<int>(inst.triples.size())},
        {"i", i}};
    int nu = static_cast<int>(v1.size());
    return finish_artifact(b, std::move(v1), nu, std::move(meta), inst);
}

ReductionArtifact build_reduction_nudi_nudj(const X3CInstance& inst, int i, int j) {
    inst.validate();
    if (i < 2 || j <= i) throw PreconditionError("need 2 <= i < j");
    Builder b;
    Diam4Layout lay = emit_diam4_base(b, inst);
    std::vector<int> v1 = diam4_side_one(lay, inst);
    for (int l = 0; l < j - 2; ++l) {
        int ul = b.vertex("k2u:" + std::to_string(l));
        int vl = b.vertex("k2v:" + std::to_string(l));
        b.edge(ul, vl);
        v1.push_back(vl);
    }
    int apex1 = b.vertex("apex1");  // joined to V1'
    int apex2 = b.vertex("apex2");  // joined to V2'
    b.edge(apex1, apex2);
    for (int v : v1) b.edge(apex1, v);
    std::vector<char> in1(b.n, 0);
    for (int v : v1) in1[v] = 1;
    for (int v = 0; v < b.n; ++v)
        if (!in1[v] && v != apex1 && v != apex2) b.edge(apex2, v);
    v1.push_back(apex2);
    std::sort(v1.begin(), v1.end());
    std::map<std::string, int> meta{
        {"q", inst.q()},
        {"num_triples", static_cast<int>(inst.triples.size())},
        {"i", i},
        {"j", j}};
    int nu = static_cast<int>(v1.size());
    ReductionArtifact a = finish_artifact(b, std::move(v1), nu, std::move(meta), inst);
    auto diam = diameter(a.graph);
    if (!diam.has_value() || *diam != 3)
        throw InternalInvariantError("nudi-nudj gadget should have diameter 3");
    return a;
}

// ---- subcubic family -------------------------------------------------------

namespace {

struct HLayout {
    std::vector<std::vector<int>> qpath;  // q paths of 2m-1 vertices
    std::vector<std::vector<int>> rpath;  // m paths of 2q-1 vertices
    std::vector<int> row_a, row_b, row_c, row_d;
    std::vector<int> cstar;  // cstar[j] = rpath[j][0]
};

HLayout emit_h(Builder& b, int q, int m) {
    HLayout lay;
    lay.qpath.resize(q);
    lay.rpath.resize(m);
    for (int k = 0; k < q; ++k) {
        for (int p = 0; p < 2 * m - 1; ++p) {
            bool row_b_vertex = p % 2 == 0;
            int v = b.vertex(std::string(row_b_vertex ? "hB:" : "hA:") +
                             std::to_string(k) + ":" + std::to_string(p));
            (row_b_vertex ? lay.row_b : lay.row_a).push_back(v);
            lay.qpath[k].push_back(v);
            if (p > 0) b.edge(lay.qpath[k][p - 1], v);
        }
    }
    for (int j = 0; j < m; ++j) {
        for (int p = 0; p < 2 * q - 1; ++p) {
            bool row_c_vertex = p % 2 == 0;
            std::string label = p == 0 ? "c*:" + std::to_string(j)
                                       : std::string(row_c_vertex ? "hC:" : "hD:") +
                                             std::to_string(j) + ":" + std::to_string(p);
            int v = b.vertex(label);
            (row_c_vertex ? lay.row_c : lay.row_d).push_back(v);
            lay.rpath[j].push_back(v);
            if (p > 0) b.edge(lay.rpath[j][p - 1], v);
        }
        lay.cstar.push_back(lay.rpath[j][0]);
    }
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < q; ++k) b.edge(lay.qpath[k][2 * j], lay.rpath[j][2 * k]);
    return lay;
}

// matching of H(q,m) of size m(2q-1) avoiding exactly {c*_j : j in avoid}
std::vector<Edge> h_avoiding_edges(const HLayout& lay, int q, int m,
                                   const std::vector<int>& avoid) {
    std::vector<char> avoided(m, 0);
    for (int j : avoid) avoided[j] = 1;
    std::vector<int> kept;
    for (int j = 0; j < m; ++j)
        if (!avoided[j]) kept.push_back(j);
    if (static_cast<int>(kept.size()) != q)
        throw InternalInvariantError("avoid set leaves the wrong path count");
    std::vector<Edge> edges;
    for (int k = 0; k < q; ++k) {
        int j = kept[k];
        edges.push_back(make_edge(lay.qpath[k][2 * j], lay.rpath[j][2 * k]));
        pair_path_without(lay.qpath[k], 2 * j, edges);
        pair_path_without(lay.rpath[j], 2 * k, edges);
    }
    for (int j : avoid) pair_path_without(lay.rpath[j], 0, edges);
    return edges;
}

struct PiLayout {
    std::vector<std::array<int, 4>> unit;  // unit[l] = {v_{l,1..4}}
};

PiLayout emit_pi(Builder& b, int k, const std::string& label) {
    PiLayout lay;
    for (int l = 0; l < k; ++l) {
        std::array<int, 4> u{};
        for (int idx = 0; idx < 4; ++idx)
            u[idx] = b.vertex(label + ":" + std::to_string(l) + ":" +
                              std::to_string(idx + 1));
        lay.unit.push_back(u);
        b.edge(u[0], u[1]);
        b.edge(u[1], u[2]);
        b.edge(u[2], u[3]);
        if (l > 0) b.edge(lay.unit[l - 1][1], u[0]);
    }
    return lay;
}

struct FLayout {
    HLayout h;
    std::vector<PiLayout> u_pi;              // per triple
    std::vector<int> u_mid, u_plus, u_minus; // per triple
    std::vector<std::vector<int>> ypath;     // per element
    std::vector<std::vector<int>> ypath_triple;  // triple owning each W+ slot
    PiLayout pi_t, pi_b;
    int big_q = 0, big_qp = 0;
};

FLayout emit_f(Builder& b, const X3CInstance& inst) {
    const int m = static_cast<int>(inst.triples.size());
    const int q = inst.q();
    const auto f = inst.occurrence();
    FLayout lay;
    lay.h = emit_h(b, q, m);

    for (int j = 0; j < m; ++j) {
        std::string base = "u" + std::to_string(j);
        lay.u_pi.push_back(emit_pi(b, 4, base));
        int up = b.vertex("u+:" + std::to_string(j));
        int mid = b.vertex("umid:" + std::to_string(j));
        int um = b.vertex("u-:" + std::to_string(j));
        lay.u_plus.push_back(up);
        lay.u_mid.push_back(mid);
        lay.u_minus.push_back(um);
        b.edge(up, mid);
        b.edge(mid, um);
        b.edge(lay.u_pi[j].unit[3][1], mid);      // spine end to the P3 center
        b.edge(lay.u_pi[j].unit[3][2], lay.h.cstar[j]);
    }

    lay.ypath.resize(inst.ground_size);
    lay.ypath_triple.resize(inst.ground_size);
    for (int i = 0; i < inst.ground_size; ++i) {
        std::vector<int> owners;
        for (int j = 0; j < m; ++j) {
            const auto& t = inst.triples[j];
            if (std::find(t.begin(), t.end(), i) != t.end()) owners.push_back(j);
        }
        lay.ypath_triple[i] = owners;
        for (int p = 0; p < 2 * f[i] - 1; ++p) {
            std::string label =
                p % 2 == 0
                    ? "w:" + std::to_string(i) + "," + std::to_string(owners[p / 2])
                    : "w-:" + std::to_string(i) + "," + std::to_string(p / 2);
            int v = b.vertex(label);
            lay.ypath[i].push_back(v);
            if (p > 0) b.edge(lay.ypath[i][p - 1], v);
        }
        // hooks from the owning caterpillar units to this element's W+ slots
        for (std::size_t t = 0; t < owners.size(); ++t) {
            int j = owners[t];
            int slot = 0;
            for (int x : inst.triples[j]) {
                if (x == i) break;
                ++slot;
            }
            b.edge(lay.u_pi[j].unit[slot][2], lay.ypath[i][2 * t]);
        }
    }

    lay.big_q = q * (m - 1) + m;
    lay.big_qp = m;
    for (int i = 0; i < inst.ground_size; ++i) lay.big_qp += std::min(f[i], 2);
    lay.pi_t = emit_pi(b, lay.big_q, "t");
    lay.pi_b = emit_pi(b, lay.big_qp, "b");

    std::vector<int> t_targets = lay.h.row_a;
    for (int j = 0; j < m; ++j) t_targets.push_back(lay.u_plus[j]);
    if (static_cast<int>(t_targets.size()) != lay.big_q)
        throw InternalInvariantError("t-hook target count mismatch");
    for (int l = 0; l < lay.big_q; ++l) b.edge(lay.pi_t.unit[l][2], t_targets[l]);

    std::vector<int> b_targets;
    for (int i = 0; i < inst.ground_size; ++i) {
        b_targets.push_back(lay.ypath[i].front());
        if (f[i] >= 2) b_targets.push_back(lay.ypath[i].back());
    }
    for (int j = 0; j < m; ++j) b_targets.push_back(lay.u_minus[j]);
    if (static_cast<int>(b_targets.size()) != lay.big_qp)
        throw InternalInvariantError("b-hook target count mismatch");
    for (int l = 0; l < lay.big_qp; ++l) b.edge(lay.pi_b.unit[l][2], b_targets[l]);
    return lay;
}

std::vector<int> f_side_one(const FLayout& lay, const X3CInstance& inst) {
    std::vector<int> v1 = lay.h.row_b;
    v1.insert(v1.end(), lay.h.row_d.begin(), lay.h.row_d.end());
    for (std::size_t j = 0; j < lay.u_pi.size(); ++j) {
        for (const auto& unit : lay.u_pi[j].unit) {
            v1.push_back(unit[0]);
            v1.push_back(unit[2]);
        }
        v1.push_back(lay.u_mid[j]);
    }
    for (int i = 0; i < inst.ground_size; ++i)
        for (std::size_t p = 1; p < lay.ypath[i].size(); p += 2)
            v1.push_back(lay.ypath[i][p]);
    for (const auto& unit : lay.pi_t.unit) {
        v1.push_back(unit[0]);
        v1.push_back(unit[2]);
    }
    for (const auto& unit : lay.pi_b.unit) {
        v1.push_back(unit[0]);
        v1.push_back(unit[2]);
    }
    std::sort(v1.begin(), v1.end());
    return v1;
}

}  // namespace

ReductionArtifact build_gadget_H(int q, int m) {
    if (q < 1 || m < 1) throw PreconditionError("H(q,m) needs q, m >= 1");
    Builder b;
    HLayout lay = emit_h(b, q, m);
    std::vector<int> v1 = lay.row_b;
    v1.insert(v1.end(), lay.row_d.begin(), lay.row_d.end());
    std::sort(v1.begin(), v1.end());
    std::map<std::string, int> meta{{"q", q}, {"m", m}};
    // nu = m(2q-1) = |v1| requires m >= q, which every reduction satisfies;
    // the degenerate m < q shapes still build but their nu is smaller.
    ReductionArtifact a =
        finish_artifact(b, std::move(v1), m * (2 * q - 1), std::move(meta),
                        std::nullopt);
    if (m < q) a.predicted_nu = matching_number(a.graph);
    return a;
}

Matching s_avoiding_H_matching(const ReductionArtifact& gadget,
                               const std::vector<int>& avoid) {
    auto qit = gadget.metadata.find("q");
    auto mit = gadget.metadata.find("m");
    if (qit == gadget.metadata.end() || mit == gadget.metadata.end())
        throw PreconditionError("artifact is not an H gadget");
    const int q = qit->second, m = mit->second;
    if (static_cast<int>(avoid.size()) != m - q)
        throw WrongSetSizeError("avoid set must have size m - q = " +
                                std::to_string(m - q));
    std::set<int> distinct(avoid.begin(), avoid.end());
    if (static_cast<int>(distinct.size()) != m - q ||
        (!avoid.empty() && (*distinct.begin() < 0 || *distinct.rbegin() >= m)))
        throw WrongSetSizeError("avoid set must be distinct c* indices");
    Builder scratch;
    HLayout lay = emit_h(scratch, q, m);
    Matching result(h_avoiding_edges(lay, q, m, avoid));
    if (static_cast<int>(result.size()) != m * (2 * q - 1))
        throw InternalInvariantError("avoiding matching has the wrong size");
    std::vector<char> saturated(gadget.graph.vertex_count(), 0);
    for (int v : result.saturated()) saturated[v] = 1;
    for (int j = 0; j < m; ++j) {
        bool avoided = distinct.count(j) > 0;
        if (saturated[lay.cstar[j]] == avoided)
            throw InternalInvariantError("avoiding matching misses its contract");
    }
    return result;
}

Graph build_gadget_Pi(int k, const std::string& label) {
    if (k < 1) throw PreconditionError("Pi(v,k) needs k >= 1");
    Builder b;
    emit_pi(b, k, label);
    return b.build();
}

ReductionArtifact build_subcubic_F(const X3CInstance& inst) {
    inst.validate();
    const int m = static_cast<int>(inst.triples.size());
    const int q = inst.q();
    if (q < 2 || m < q)
        throw PreconditionError("subcubic reduction needs |C| >= q >= 2");
    for (int fi : inst.occurrence())
        if (fi < 1)
            throw PreconditionError("every element must occur in some triple");
    Builder b;
    FLayout lay = emit_f(b, inst);
    std::vector<int> v1 = f_side_one(lay, inst);
    std::map<std::string, int> meta{{"q", q},
                                    {"num_triples", m},
                                    {"Q", lay.big_q},
                                    {"Q'", lay.big_qp}};
    int nu = static_cast<int>(v1.size());
    ReductionArtifact a = finish_artifact(b, std::move(v1), nu, std::move(meta), inst);
    if (a.graph.max_degree() > 3)
        throw InternalInvariantError("subcubic gadget exceeds degree 3");
    return a;
}

Matching witness_matching_F(const ReductionArtifact& artifact,
                            const std::vector<int>& cover) {
    const X3CInstance& inst = artifact_instance(artifact);
    check_cover(inst, cover);
    const int m = static_cast<int>(inst.triples.size());
    Builder scratch;
    FLayout lay = emit_f(scratch, inst);

    std::vector<char> in_cover(m, 0);
    for (int j : cover) in_cover[j] = 1;
    std::vector<int> avoid;
    for (int j = 0; j < m; ++j)
        if (!in_cover[j]) avoid.push_back(j);

    std::vector<Edge> edges = h_avoiding_edges(lay.h, inst.q(), m, avoid);
    for (int j = 0; j < m; ++j) {
        for (const auto& unit : lay.u_pi[j].unit) {
            edges.push_back(make_edge(unit[0], unit[1]));
            edges.push_back(make_edge(unit[2], unit[3]));
        }
        edges.push_back(make_edge(lay.u_mid[j],
                                  in_cover[j] ? lay.u_plus[j] : lay.u_minus[j]));
    }
    for (int i = 0; i < inst.ground_size; ++i) {
        int skip = -1;
        for (std::size_t t = 0; t < lay.ypath_triple[i].size(); ++t)
            if (in_cover[lay.ypath_triple[i][t]]) skip = static_cast<int>(2 * t);
        if (skip < 0) throw InternalInvariantError("element not covered");
        pair_path_without(lay.ypath[i], skip, edges);
    }
    for (const auto& unit : lay.pi_t.unit) {
        edges.push_back(make_edge(unit[0], unit[1]));
        edges.push_back(make_edge(unit[2], unit[3]));
    }
    for (const auto& unit : lay.pi_b.unit) {
        edges.push_back(make_edge(unit[0], unit[1]));
        edges.push_back(make_edge(unit[2], unit[3]));
    }

    Matching result(std::move(edges));
    if (static_cast<int>(result.size()) != artifact.predicted_nu)
        throw InternalInvariantError("F witness has the wrong size");
    MatchingAnalysis an = analyze(artifact.graph, result);
    if (!an.is_disconnected || an.induced_components != 2)
        throw InternalInvariantError("F witness is not disconnected");
    return result;
}

ReductionArtifact build_conp_reduction(const Graph& base, int k) {
    if (base.edge_count() == 0)
        throw NoEdgesError("co-NP reduction needs a base graph with edges");
    auto bip = bipartition_of(base);
    if (!bip.has_value()) throw NotBipartiteError("base graph is not bipartite");
    int bound = 1 + max_residual_matching_number(base);
    if (k <= bound)
        throw KTooSmallError("k must exceed 1 + max residual matching number = " +
                             std::to_string(bound));
    Builder b;
    b.n = base.vertex_count();
    for (const Edge& e : base.edges()) b.edge(e.u, e.v);
    for (const auto& [v, l] : base.labels()) b.labels[v] = l;
    std::vector<int> v1 = bip->side_one;
    for (int l = 0; l < k - 1; ++l) {
        int ul = b.vertex("eu:" + std::to_string(l));
        int vl = b.vertex("ev:" + std::to_string(l));
        b.edge(ul, vl);
        for (int a : bip->side_one) b.edge(vl, a);
        for (int bb : bip->side_two) b.edge(ul, bb);
        v1.push_back(ul);
    }
    std::sort(v1.begin(), v1.end());
    std::map<std::string, int> meta{{"k", k}, {"bound", bound}};
    ReductionArtifact a =
        finish_artifact(b, std::move(v1), 0, std::move(meta), std::nullopt);
    a.predicted_nu = matching_number(a.graph);
    auto diam = diameter(a.graph);
    if (!diam.has_value() || *diam > 3)
        throw InternalInvariantError("co-NP gadget should have diameter at most 3");
    return a;
}

}  // namespace dmatch
