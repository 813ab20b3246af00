#include "tilinglab/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tilinglab {

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) {
      v <<= 1;
      if (i + b < bits.size() && bits[i + b]) v |= 1;
    }
    out.push_back(static_cast<char>(63 + v));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw std::invalid_argument("graph too large for this graph6 writer");
  }
  std::vector<bool> bits;
  bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
  append_bits(out, bits);
  return out;
}

Graph from_graph6(const std::string& s) {
  size_t pos = 0;
  if (pos < s.size() && s[pos] == '>') {
    // optional ">>graph6<<" header
    const std::string header = ">>graph6<<";
    if (s.compare(0, header.size(), header) != 0)
      throw std::invalid_argument("bad graph6 header");
    pos = header.size();
  }
  auto next_byte = [&]() -> int {
    if (pos >= s.size()) throw std::invalid_argument("truncated graph6 string");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("invalid graph6 byte");
    return c - 63;
  };
  long long n;
  int c0 = next_byte();
  if (c0 < 63) {
    n = c0;
  } else {
    int a = next_byte();
    if (a == 63) {  // '~~': 36-bit order, out of scope here
      throw std::invalid_argument("graph6 order too large");
    }
    int b = next_byte(), c = next_byte();
    n = (static_cast<long long>(a) << 12) | (b << 6) | c;
  }
  Graph g(static_cast<int>(n));
  int have = 0, cur = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (have == 0) {
        cur = next_byte();
        have = 6;
      }
      if (cur & (1 << (have - 1))) g.add_edge(i, j);
      --have;
    }
  }
  return g;
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& e : j.at("edges"))
    pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph::from_edge_list(n, pairs);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string content = ss.str();
  size_t first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw std::invalid_argument("empty graph file: " + path);
  if (content[first] == '{')
    return graph_from_json(nlohmann::json::parse(content));
  size_t end = content.find_first_of("\r\n", first);
  return from_graph6(content.substr(first, end == std::string::npos ? end : end - first));
}

Graph parse_graph_arg(const std::string& arg) {
  if (arg.empty()) throw std::invalid_argument("empty graph argument");
  if (arg[0] == '@') return load_graph(arg.substr(1));
  if (arg[0] == '{') return graph_from_json(nlohmann::json::parse(arg));
  return from_graph6(arg);
}

}  // namespace tilinglab
