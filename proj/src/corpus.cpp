#include "tilinglab/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tilinglab {

namespace {

// Iterated refinement: color by (previous color, sorted neighbor colors)
// until stable. Colors are ranks of sorted signatures, so the partition is
// isomorphism-invariant.
std::vector<int> refine_colors(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      for (int u = g.neighbors(v).next(); u >= 0; u = g.neighbors(v).next(u + 1))
        s.push_back(color[u]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& [s, v] : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    std::vector<int> fresh(n);
    for (const auto& [s, v] : sig) fresh[v] = rank[s];
    if (fresh == color) break;
    color = std::move(fresh);
  }
  return color;
}

uint64_t code_for_order(const Graph& g, const std::vector<int>& order) {
  int n = g.order();
  uint64_t code = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (g.has_edge(order[i], order[j])) code |= (uint64_t{1} << bit);
  return code;
}

void min_over_cells(const Graph& g, std::vector<std::vector<int>>& cells,
                    size_t at, std::vector<int>& order, uint64_t& best) {
  if (at == cells.size()) {
    best = std::min(best, code_for_order(g, order));
    return;
  }
  auto& cell = cells[at];
  std::sort(cell.begin(), cell.end());
  size_t base = order.size();
  do {
    order.insert(order.end(), cell.begin(), cell.end());
    min_over_cells(g, cells, at + 1, order, best);
    order.resize(base);
  } while (std::next_permutation(cell.begin(), cell.end()));
}

}  // namespace

uint64_t canonical_code(const Graph& g) {
  int n = g.order();
  if (n > 11) throw std::invalid_argument("canonical_code limited to n <= 11");
  auto color = refine_colors(g);
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> cells(classes);
  for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
  uint64_t best = ~uint64_t{0};
  std::vector<int> order;
  order.reserve(n);
  min_over_cells(g, cells, 0, order, best);
  return best;
}

static Graph graph_from_code(int n, uint64_t code) {
  Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((code >> bit) & 1) g.add_edge(i, j);
  return g;
}

std::vector<Graph> graphs_up_to_iso(int n, bool connected_only) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::set<uint64_t> level{0};  // the one graph on a single vertex
  for (int k = 2; k <= n; ++k) {
    std::set<uint64_t> next;
    for (uint64_t code : level) {
      Graph base = graph_from_code(k - 1, code);
      for (uint64_t attach = 0; attach < (uint64_t{1} << (k - 1)); ++attach) {
        Graph g(k);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 0; u < k - 1; ++u)
          if ((attach >> u) & 1) g.add_edge(u, k - 1);
        next.insert(canonical_code(g));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (uint64_t code : level) {
    Graph g = graph_from_code(n, code);
    if (!connected_only || g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> graphs_up_to_order(int n, bool connected_only) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    auto level = graphs_up_to_iso(k, connected_only);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace tilinglab
