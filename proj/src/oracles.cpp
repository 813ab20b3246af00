#include "tilinglab/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tilinglab {

namespace {

bool proper(const Graph& h, const std::vector<int>& color) {
  for (auto [u, v] : h.edges())
    if (color[u] == color[v]) return false;
  return true;
}

// Walk every assignment in {0..r-1}^n.
template <class F>
void for_each_assignment(int n, int r, F&& fn) {
  std::vector<int> color(n, 0);
  while (true) {
    fn(color);
    int i = 0;
    while (i < n && ++color[i] == r) color[i++] = 0;
    if (i == n) break;
  }
}

// Does the induced block host H as a subgraph under some bijection?
bool block_hosts(const Graph& g, const Graph& h, std::vector<int> block) {
  std::sort(block.begin(), block.end());
  do {
    bool ok = true;
    for (auto [u, v] : h.edges())
      if (!g.has_edge(block[u], block[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(block.begin(), block.end()));
  return false;
}

bool partition_search(const Graph& g, const Graph& h, std::vector<bool>& used) {
  int n = g.order(), hs = h.order();
  int first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) return true;
  used[first] = true;
  // choose hs-1 companions above `first`
  std::vector<int> pick;
  std::vector<int> pool;
  for (int v = first + 1; v < n; ++v)
    if (!used[v]) pool.push_back(v);
  std::vector<int> idx(hs - 1);
  auto rec = [&](auto&& self, int start, int depth) -> bool {
    if (depth == hs - 1) {
      std::vector<int> block{first};
      for (int k = 0; k < hs - 1; ++k) block.push_back(pool[idx[k]]);
      if (!block_hosts(g, h, block)) return false;
      for (int v : block) used[v] = true;
      used[first] = true;
      bool done = partition_search(g, h, used);
      for (int v : block) used[v] = false;
      used[first] = true;
      return done;
    }
    for (int i = start; i < static_cast<int>(pool.size()); ++i) {
      idx[depth] = i;
      if (self(self, i + 1, depth + 1)) return true;
    }
    return false;
  };
  bool found = hs == 1 ? partition_search(g, h, used) : rec(rec, 0, 0);
  used[first] = false;
  return found;
}

}  // namespace

int oracle_chromatic_number(const Graph& h) {
  int n = h.order();
  if (n == 0) throw std::domain_error("empty graph");
  for (int r = 1; r <= n; ++r) {
    bool found = false;
    for_each_assignment(n, r, [&](const std::vector<int>& color) {
      found = found || proper(h, color);
    });
    if (found) return r;
  }
  return n;
}

std::set<ColoringProfile> oracle_profiles(const Graph& h) {
  int n = h.order();
  int r = oracle_chromatic_number(h);
  std::set<ColoringProfile> out;
  for_each_assignment(n, r, [&](const std::vector<int>& color) {
    if (!proper(h, color)) return;
    std::vector<int> sizes(r, 0);
    for (int c : color) ++sizes[c];
    for (int s : sizes)
      if (s == 0) return;  // not surjective
    std::sort(sizes.begin(), sizes.end());
    out.insert(std::move(sizes));
  });
  return out;
}

bool oracle_has_perfect_tiling(const Graph& g, const Graph& h) {
  if (h.order() == 0 || g.order() % h.order() != 0) return false;
  std::vector<bool> used(g.order(), false);
  return partition_search(g, h, used);
}

}  // namespace tilinglab
