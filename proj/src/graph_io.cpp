#include "dmatch/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace dmatch {

using ordered_json = nlohmann::ordered_json;

Graph read_dimacs(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(ss >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                throw ParseError("dimacs line " + std::to_string(lineno) +
                                 ": bad problem line");
        } else if (tag == "e") {
            int u, v;
            if (!(ss >> u >> v))
                throw ParseError("dimacs line " + std::to_string(lineno) +
                                 ": bad edge line");
            if (n < 0) throw ParseError("dimacs: edge before problem line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("dimacs line " + std::to_string(lineno) +
                                 ": endpoint out of range");
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError("dimacs line " + std::to_string(lineno) +
                             ": unknown tag '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError("dimacs: missing problem line");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("dimacs: header declares " + std::to_string(m) +
                         " edges, found " + std::to_string(edges.size()));
    return Graph(n, edges);
}

Graph read_dimacs_string(const std::string& text) {
    std::istringstream in(text);
    return read_dimacs(in);
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges())
        out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
    return out.str();
}

Graph read_graph_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("json graph: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("json graph: expected object with 'n' and 'edges'");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("json graph: each edge must be a 2-array");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Graph g(n, edges);
    if (j.contains("labels")) {
        for (const auto& [key, value] : j.at("labels").items()) {
            int v;
            try {
                v = std::stoi(key);
            } catch (const std::exception&) {
                throw ParseError("json graph: label key '" + key + "' is not a vertex id");
            }
            g.set_label(v, value.get<std::string>());
        }
    }
    return g;
}

std::string write_graph_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        ordered_json labels = ordered_json::object();
        for (const auto& [v, l] : g.labels()) labels[std::to_string(v)] = l;
        j["labels"] = std::move(labels);
    }
    return j.dump(2) + "\n";
}

GraphFormat sniff_format(const std::string& path) {
    return path.size() >= 5 && path.substr(path.size() - 5) == ".json"
               ? GraphFormat::Json
               : GraphFormat::Dimacs;
}

static std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) {
    return load_graph(path, sniff_format(path));
}

Graph load_graph(const std::string& path, GraphFormat format) {
    std::string text = slurp(path);
    return format == GraphFormat::Json ? read_graph_json(text)
                                       : read_dimacs_string(text);
}

void save_graph(const std::string& path, const Graph& g, GraphFormat format) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << (format == GraphFormat::Json ? write_graph_json(g) : write_dimacs(g));
}

std::string write_matching_json(const Matching& m) {
    ordered_json j = ordered_json::array();
    for (const Edge& e : m.edges()) j.push_back({e.u, e.v});
    return j.dump() + "\n";
}

Matching read_matching_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("json matching: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("json matching: expected an array of pairs");
    std::vector<Edge> edges;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError("json matching: each entry must be a 2-array");
        edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
    }
    return Matching(std::move(edges));
}

}  // namespace dmatch
