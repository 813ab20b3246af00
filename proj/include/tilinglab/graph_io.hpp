#pragma once

#include <string>

#include <json.hpp>

#include "tilinglab/graph.hpp"

namespace tilinglab {

// graph6 (the canonical interchange format; bit-exact per the format spec).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// {"n": int, "edges": [[u,v], ...]}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Reads a graph from a file; .g6 content and JSON content are both accepted
// (detected from the first non-space byte).
Graph load_graph(const std::string& path);

// Parses an inline graph argument: graph6 string, JSON object, or @path.
Graph parse_graph_arg(const std::string& arg);

}  // namespace tilinglab
