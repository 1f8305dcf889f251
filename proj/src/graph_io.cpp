#include "bilin/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bilin {

nlohmann::ordered_json graph_to_json(const SignedWeightedGraph& g) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.i, e.j, e.a});
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

SignedWeightedGraph graph_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
      throw InputError("graph JSON needs \"n\" and \"edges\"");
    }
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& item : j.at("edges")) {
      if (!item.is_array() || item.size() != 3) throw InputError("each edge must be [i, j, a]");
      edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
    }
    return SignedWeightedGraph(n, std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad graph JSON: ") + e.what());
  }
}

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw InvariantError("to_chars failed");
  return std::string(buf, end);
}

void write_edge_list(std::ostream& os, const SignedWeightedGraph& g) {
  os << "# n " << g.n() << '\n';
  for (const Edge& e : g.edges()) os << e.i << ' ' << e.j << ' ' << format_double(e.a) << '\n';
}

namespace {

template <typename T>
T parse_number(std::string_view token, int line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line_no) + ": cannot parse '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

SignedWeightedGraph read_edge_list(std::istream& is) {
  std::vector<Edge> edges;
  int declared_n = 0;
  int max_label = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream comment(line.substr(hash + 1));
      std::string key;
      int value = 0;
      if (comment >> key && key == "n" && comment >> value) declared_n = value;
      line.resize(hash);
    }
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) throw InputError("line " + std::to_string(line_no) + ": expected 'i j a'");
    Edge e{parse_number<int>(tokens[0], line_no), parse_number<int>(tokens[1], line_no),
           parse_number<double>(tokens[2], line_no)};
    max_label = std::max({max_label, e.i, e.j});
    edges.push_back(e);
  }
  const int n = declared_n > 0 ? declared_n : std::max(max_label, 1);
  return SignedWeightedGraph(n, std::move(edges));
}

SignedWeightedGraph read_graph(std::istream& is) {
  is >> std::ws;
  if (is.peek() == '{') {
    try {
      return graph_from_json(nlohmann::json::parse(is));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("bad graph JSON: ") + e.what());
    }
  }
  return read_edge_list(is);
}

SignedWeightedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file " + path.string());
  return read_graph(in);
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return (ext == ".txt" || ext == ".edges" || ext == ".el") ? GraphFormat::text : GraphFormat::json;
}

void write_graph(std::ostream& os, const SignedWeightedGraph& g, GraphFormat format) {
  if (format == GraphFormat::json) {
    os << graph_to_json(g).dump() << '\n';
  } else {
    write_edge_list(os, g);
  }
}

void write_graph_file(const std::filesystem::path& path, const SignedWeightedGraph& g, GraphFormat format) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_graph(out, g, format);
}

}  // namespace bilin
