#include "tilinglab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tilinglab {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  Graph g(n);
  for (auto [u, v] : pairs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g.add_edge(u, v);
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u + 1); v != -1; v = adj_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> comps;
  Bitset seen(n_);
  for (int s = 0; s < n_; ++s) {
    if (seen.test(s)) continue;
    std::vector<int> comp{s};
    seen.set(s);
    for (size_t head = 0; head < comp.size(); ++head) {
      const Bitset& nb = adj_[comp[head]];
      for (int v = nb.next(); v != -1; v = nb.next(v + 1)) {
        if (!seen.test(v)) {
          seen.set(v);
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<int> Graph::component_orders() const {
  std::vector<int> orders;
  for (const auto& c : components()) orders.push_back(static_cast<int>(c.size()));
  std::sort(orders.begin(), orders.end());
  return orders;
}

Graph Graph::blow_up(int t) const {
  if (t < 1) throw std::invalid_argument("blow-up requires t >= 1");
  Graph g(n_ * t);
  for (auto [u, v] : edges())
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) g.add_edge(u * t + i, v * t + j);
  return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph g(n_ + other.n_);
  for (auto [u, v] : edges()) g.add_edge(u, v);
  for (auto [u, v] : other.edges()) g.add_edge(u + n_, v + n_);
  return g;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  return static_cast<int>(components()[0].size()) == n_;
}

Graph complete_multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("class list must be nonempty");
  int n = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("class sizes must be positive");
    n += s;
  }
  Graph g(n);
  int a_start = 0;
  for (size_t a = 0; a < sizes.size(); ++a) {
    int b_start = a_start + sizes[a];
    for (size_t b = a + 1; b < sizes.size(); ++b) {
      for (int u = a_start; u < a_start + sizes[a]; ++u)
        for (int v = b_start; v < b_start + sizes[b]; ++v) g.add_edge(u, v);
      b_start += sizes[b];
    }
    a_start += sizes[a];
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace tilinglab
