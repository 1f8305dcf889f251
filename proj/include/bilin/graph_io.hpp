#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bilin/graph.hpp"

namespace bilin {

enum class GraphFormat { json, text };

// JSON: {"n": <int>, "edges": [[i, j, a], ...]}, 1-based vertices.
nlohmann::ordered_json graph_to_json(const SignedWeightedGraph& g);
SignedWeightedGraph graph_from_json(const nlohmann::json& j);

// Text edge list: one "i j a" triple per line, '#' starts a comment, blank
// lines are skipped. A leading "# n <count>" comment declares the vertex
// count; without it n is the largest label that appears.
void write_edge_list(std::ostream& os, const SignedWeightedGraph& g);
SignedWeightedGraph read_edge_list(std::istream& is);

/// Shortest decimal that parses back to exactly `value`.
std::string format_double(double value);

SignedWeightedGraph read_graph(std::istream& is);  // sniffs JSON vs text
SignedWeightedGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const SignedWeightedGraph& g, GraphFormat format);
void write_graph(std::ostream& os, const SignedWeightedGraph& g, GraphFormat format);

/// .txt / .edges / .el select the text format, anything else JSON.
GraphFormat format_for_path(const std::filesystem::path& path);

}  // namespace bilin
