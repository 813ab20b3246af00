#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "tilinglab/corpus.hpp"
#include "tilinglab/graph.hpp"
#include "tilinglab/graph_io.hpp"

using namespace tilinglab;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace

TEST_CASE("from_edge_list builds simple graphs and rejects bad input") {
  Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  CHECK(p3.degree_sequence() == std::vector<int>{1, 1, 2});

  Graph k4 = Graph::from_edge_list(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(k4 == complete_graph(4));

  // Duplicate edges collapse.
  Graph dup = Graph::from_edge_list(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.size() == 1);

  CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("degree_sequence is sorted and sums to twice the edge count") {
  CHECK(complete_graph(4).degree_sequence() == std::vector<int>{3, 3, 3, 3});
  CHECK(path_graph(3).degree_sequence() == std::vector<int>{1, 1, 2});
  CHECK(Graph(5).degree_sequence() == std::vector<int>{0, 0, 0, 0, 0});

  for (const Graph& g : graphs_up_to_iso(5)) {
    auto d = g.degree_sequence();
    CHECK(std::is_sorted(d.begin(), d.end()));
    CHECK(std::accumulate(d.begin(), d.end(), 0) == 2 * g.size());
  }
}

TEST_CASE("degree_sequence is invariant under relabeling") {
  std::mt19937 rng(7);
  for (const Graph& g : graphs_up_to_iso(6)) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(relabel(g, perm).degree_sequence() == g.degree_sequence());
  }
}

TEST_CASE("blow_up multiplies orders and edge counts") {
  CHECK(complete_graph(2).blow_up(2) == complete_multipartite({2, 2}));
  CHECK(complete_graph(3).blow_up(2) == complete_multipartite({2, 2, 2}));
  CHECK_THROWS_AS(complete_graph(2).blow_up(0), std::invalid_argument);

  for (const Graph& g : graphs_up_to_iso(5))
    for (int t : {1, 2, 3}) {
      Graph b = g.blow_up(t);
      CHECK(b.order() == t * g.order());
      CHECK(b.size() == t * t * g.size());
    }

  // t = 1 is the identity up to isomorphism.
  for (const Graph& g : graphs_up_to_iso(5))
    CHECK(canonical_code(g.blow_up(1)) == canonical_code(g));
}

TEST_CASE("complete_multipartite layout and sizes") {
  CHECK(canonical_code(complete_multipartite({1, 2})) ==
        canonical_code(path_graph(3)));
  CHECK(complete_multipartite({2, 2, 2}).size() == 12);
  CHECK(complete_multipartite({5}).size() == 0);
  CHECK_THROWS_AS(complete_multipartite({}), std::invalid_argument);

  // Classes occupy contiguous ranges: first class independent, cross edges.
  Graph g = complete_multipartite({2, 3});
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 4));
}

TEST_CASE("component_orders") {
  Graph pk = path_graph(3).disjoint_union(complete_graph(2));
  CHECK(pk.component_orders() == std::vector<int>{2, 3});
  CHECK(complete_graph(4).component_orders() == std::vector<int>{4});
  CHECK(Graph(3).component_orders() == std::vector<int>{1, 1, 1});

  // Disjoint union merges the parts' component multisets.
  Graph a = cycle_graph(4), b = path_graph(2);
  auto got = a.disjoint_union(b).component_orders();
  auto wa = a.component_orders(), wb = b.component_orders();
  wa.insert(wa.end(), wb.begin(), wb.end());
  std::sort(wa.begin(), wa.end());
  CHECK(got == wa);
}

TEST_CASE("graph6 round-trips bit-exactly") {
  for (const Graph& g : graphs_up_to_order(6)) {
    Graph back = from_graph6(to_graph6(g));
    CHECK(back == g);
  }
  // Known encodings.
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(from_graph6("DQc") ==
        Graph::from_edge_list(5, {{0, 2}, {1, 3}, {0, 4}, {3, 4}}));
}

TEST_CASE("JSON graph round-trip") {
  Graph g = cycle_graph(5);
  auto j = graph_to_json(g);
  CHECK(j["n"] == 5);
  CHECK(j["edges"].size() == 5);
  CHECK(graph_from_json(j) == g);
}
