#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dmatch/deciders.hpp"
#include "dmatch/graph_io.hpp"
#include "dmatch/random_graph.hpp"
#include "dmatch/reductions.hpp"
#include "dmatch/sequence.hpp"
#include "dmatch/solver.hpp"

namespace py = pybind11;
using namespace dmatch;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const std::vector<Edge>& edges) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

Matching matching_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) edges.push_back(make_edge(u, v));
    return Matching(std::move(edges));
}

py::dict profile_dict(const MatchingNumbers& p) {
    py::dict d;
    d["nu"] = p.nu;
    d["nu_s"] = p.nu_s;
    d["nu_d"] = p.nu_d;
    d["chain"] = p.chain;
    return d;
}

py::dict analysis_dict(const MatchingAnalysis& a) {
    py::dict d;
    d["saturated"] = a.saturated;
    d["induced_components"] = a.induced_components;
    d["is_induced"] = a.is_induced;
    d["is_disconnected"] = a.is_disconnected;
    return d;
}

py::dict artifact_dict(const ReductionArtifact& a) {
    py::dict d;
    d["graph"] = a.graph;
    d["v1"] = a.v1;
    d["v2"] = a.v2;
    d["predicted_nu"] = a.predicted_nu;
    d["metadata"] = a.metadata;
    return d;
}

X3CInstance instance_from(int ground_size,
                          const std::vector<std::array<int, 3>>& triples) {
    X3CInstance inst{ground_size, triples};
    inst.validate();
    return inst;
}

}  // namespace

PYBIND11_MODULE(_dmatch, m) {
    m.doc() = "Exact solvers, deciders and gadget builders for restricted "
              "matching numbers";

    py::register_exception<Error>(m, "DmatchError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("max_degree", &Graph::max_degree)
        .def("labels", &Graph::labels)
        .def("find_label", &Graph::find_label, py::arg("label"))
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("read_dimacs", &read_dimacs_string, py::arg("text"));
    m.def("write_dimacs", &write_dimacs, py::arg("graph"));
    m.def("read_graph_json", &read_graph_json, py::arg("text"));
    m.def("write_graph_json", &write_graph_json, py::arg("graph"));

    m.def("components", &components, py::arg("graph"));
    m.def("diameter", [](const Graph& g) -> py::object {
        auto d = diameter(g);
        return d ? py::cast(*d) : py::none();
    }, py::arg("graph"));
    m.def("bipartition", [](const Graph& g) -> py::object {
        auto b = bipartition_of(g);
        if (!b) return py::none();
        return py::make_tuple(b->side_one, b->side_two);
    }, py::arg("graph"));
    m.def("induced_subgraph", [](const Graph& g, const std::vector<int>& w) {
        auto sub = induced_subgraph(g, w);
        return py::make_tuple(sub.graph, sub.to_old);
    }, py::arg("graph"), py::arg("vertices"));
    m.def("delete_closed_neighborhood", &delete_closed_neighborhood,
          py::arg("graph"), py::arg("vertices"));

    m.def("maximum_matching", [](const Graph& g) {
        return edge_pairs(maximum_matching(g).edges());
    }, py::arg("graph"));
    m.def("matching_number", &matching_number, py::arg("graph"));
    m.def("analyze_matching",
          [](const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
              return analysis_dict(analyze(g, matching_from_pairs(pairs)));
          },
          py::arg("graph"), py::arg("matching"));
    m.def("is_maximal_matching",
          [](const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
              return is_maximal(g, matching_from_pairs(pairs));
          },
          py::arg("graph"), py::arg("matching"));

    m.def("induced_matching_number",
          [](const Graph& g, std::uint64_t budget) {
              Budget b{budget, 0};
              return induced_matching_number(g, b);
          },
          py::arg("graph"), py::arg("budget") = 10'000'000);
    m.def("c_disconnected_matching_number",
          [](const Graph& g, int c, std::uint64_t budget) {
              Budget b{budget, 0};
              return c_disconnected_matching_number(g, c, b);
          },
          py::arg("graph"), py::arg("c"), py::arg("budget") = 10'000'000);
    m.def("full_profile",
          [](const Graph& g, std::uint64_t budget) {
              Budget b{budget, 0};
              return profile_dict(full_profile(g, b));
          },
          py::arg("graph"), py::arg("budget") = 10'000'000);
    m.def("oracle_enumerate",
          [](const Graph& g, int max_edges) {
              return profile_dict(oracle_enumerate(g, max_edges));
          },
          py::arg("graph"), py::arg("max_edges") = kOracleDefaultEdgeCap);

    m.def("recognize_cameron_walker", [](const Graph& g) -> py::object {
        auto d = recognize_cameron_walker(g);
        if (!d) return py::none();
        py::dict out;
        out["a"] = d->set_a;
        out["b"] = d->set_b;
        out["c"] = d->set_c;
        out["d"] = d->set_d;
        return out;
    }, py::arg("graph"));
    m.def("decide_nu_eq_nus", &decide_nu_eq_nus, py::arg("graph"));
    m.def("decide_nu_eq_nudj", [](const Graph& g, int j) {
        auto r = decide_nu_eq_nudj_small_diameter(g, j);
        py::dict out;
        out["equal"] = r.equal;
        out["witness"] = r.witness ? py::cast(r.witness->vertex) : py::none();
        return out;
    }, py::arg("graph"), py::arg("j"));
    m.def("compute_s_bound", [](const Graph& g) {
        SBoundReport r = compute_s_bound(g);
        py::dict out;
        out["s"] = r.s_value;
        out["argmax_edge"] = py::make_tuple(r.argmax_edge.u, r.argmax_edge.v);
        return out;
    }, py::arg("graph"));
    m.def("decide_nud_eq_nus_bounded_degree",
          [](const Graph& g, std::uint64_t budget) {
              Budget b{budget, 0};
              return decide_nud_eq_nus_bounded_degree(g, b);
          },
          py::arg("graph"), py::arg("budget") = 10'000'000);

    m.def("solve_x3c",
          [](int ground_size, const std::vector<std::array<int, 3>>& triples)
              -> py::object {
              auto cover = solve_x3c(instance_from(ground_size, triples));
              return cover ? py::cast(*cover) : py::none();
          },
          py::arg("ground_size"), py::arg("triples"));
    m.def("build_reduction_diam4",
          [](int ground_size, const std::vector<std::array<int, 3>>& triples,
             bool apex) {
              return artifact_dict(
                  build_reduction_diam4(instance_from(ground_size, triples), apex));
          },
          py::arg("ground_size"), py::arg("triples"), py::arg("apex") = true);
    m.def("build_subcubic_F",
          [](int ground_size, const std::vector<std::array<int, 3>>& triples) {
              return artifact_dict(
                  build_subcubic_F(instance_from(ground_size, triples)));
          },
          py::arg("ground_size"), py::arg("triples"));
    m.def("build_gadget_H", [](int q, int mm) {
        return artifact_dict(build_gadget_H(q, mm));
    }, py::arg("q"), py::arg("m"));
    m.def("build_gadget_Pi", &build_gadget_Pi, py::arg("k"), py::arg("label"));
    m.def("build_conp_reduction", [](const Graph& base, int k) {
        return artifact_dict(build_conp_reduction(base, k));
    }, py::arg("base"), py::arg("k"));

    m.def("construct_sequence_graph", [](const std::vector<int>& betas) {
        return construct_sequence_graph(SequenceSpec{betas});
    }, py::arg("betas"));
    m.def("verify_sequence_graph",
          [](const Graph& g, const std::vector<int>& betas, std::uint64_t budget) {
              Budget b{budget, 0};
              return verify_sequence_graph(g, SequenceSpec{betas}, b);
          },
          py::arg("graph"), py::arg("betas"), py::arg("budget") = 10'000'000);

    m.def("random_graph",
          [](int n, int mm, std::uint64_t seed, bool connected, bool bipartite,
             int max_degree) {
              RandomGraphSpec spec;
              spec.n = n;
              spec.m = mm;
              spec.seed = seed;
              spec.connected = connected;
              spec.bipartite = bipartite;
              spec.max_degree = max_degree;
              return random_graph(spec);
          },
          py::arg("n"), py::arg("m"), py::arg("seed") = 0,
          py::arg("connected") = false, py::arg("bipartite") = false,
          py::arg("max_degree") = -1);
}
