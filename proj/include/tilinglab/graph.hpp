#pragma once

#include <utility>
#include <vector>

#include "tilinglab/bitset.hpp"

namespace tilinglab {

// Simple undirected graph on vertices 0..n-1. Adjacency is stored as one
// bitset row per vertex; values are immutable once built, so graphs can be
// shared freely between workers.
class Graph {
 public:
  Graph() : n_(0), edge_count_(0) {}
  explicit Graph(int n) : n_(n), edge_count_(0), adj_(n, Bitset(n)) {}

  // Deduplicates edges; rejects loops and out-of-range endpoints.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

  int order() const { return n_; }
  int size() const { return edge_count_; }

  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  void add_edge(int u, int v);

  std::vector<std::pair<int, int>> edges() const;

  // Sorted nondecreasing degree sequence.
  std::vector<int> degree_sequence() const;

  // Orders of connected components, sorted nondecreasing.
  std::vector<int> component_orders() const;

  // Vertex sets of connected components (each sorted), in order of their
  // smallest vertex.
  std::vector<std::vector<int>> components() const;

  // Each vertex becomes an independent t-class; each edge a complete
  // bipartite graph between the two classes. Vertex v maps to t*v..t*v+t-1.
  Graph blow_up(int t) const;

  // Relabels `other` by offset order().
  Graph disjoint_union(const Graph& other) const;

  bool is_connected() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_;
  int edge_count_;
  std::vector<Bitset> adj_;
};

// Classes are independent, all cross-class pairs are edges. Class i occupies
// a contiguous index range in declaration order.
Graph complete_multipartite(const std::vector<int>& sizes);

inline Graph complete_graph(int n) {
  return complete_multipartite(std::vector<int>(n, 1));
}

Graph cycle_graph(int n);
Graph path_graph(int n);

}  // namespace tilinglab
