#pragma once

#include <iosfwd>
#include <string>

#include "dmatch/graph.hpp"
#include "dmatch/matching.hpp"

namespace dmatch {

// DIMACS-like edge-list format: optional "c" comment lines, one header
// "p edge <n> <m>", then m lines "e <u> <v>" with 1-indexed endpoints.
// The writer emits edges sorted lexicographically; the reader tolerates
// unsorted input. Labels do not round-trip through this format.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_string(const std::string& text);
std::string write_dimacs(const Graph& g);

// JSON graph format: {"n": int, "edges": [[u,v], ...], "labels": {"id": role}}
// with 0-indexed endpoints; "labels" is omitted when empty.
Graph read_graph_json(const std::string& text);
std::string write_graph_json(const Graph& g);

enum class GraphFormat { Dimacs, Json };

// Sniff by extension: ".json" selects JSON, anything else DIMACS.
GraphFormat sniff_format(const std::string& path);
Graph load_graph(const std::string& path);
Graph load_graph(const std::string& path, GraphFormat format);
void save_graph(const std::string& path, const Graph& g, GraphFormat format);

// Matching serialization: JSON array of sorted 0-indexed pairs.
std::string write_matching_json(const Matching& m);
Matching read_matching_json(const std::string& text);

}  // namespace dmatch
