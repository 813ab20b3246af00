#include "tilinglab/solver.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace tilinglab {

namespace {

// Image sets live in at most 128 bits; hosts beyond that are out of scope
// for the exact search.
struct Mask128 {
  uint64_t lo = 0, hi = 0;

  void set(int i) { (i < 64 ? lo : hi) |= (uint64_t{1} << (i & 63)); }
  bool intersects(const Mask128& o) const { return (lo & o.lo) | (hi & o.hi); }
  bool operator==(const Mask128& o) const { return lo == o.lo && hi == o.hi; }
};

struct Mask128Hash {
  size_t operator()(const Mask128& m) const {
    return std::hash<uint64_t>{}(m.lo * 0x9e3779b97f4a7c15ULL ^ m.hi);
  }
};

Mask128 mask_of(const std::vector<int>& image) {
  Mask128 m;
  for (int v : image) m.set(v);
  return m;
}

// H-vertex visit order: BFS inside each component so that every vertex after
// the first of its component has an already-placed neighbor. `start` (if
// >= 0) leads the order.
std::vector<int> pattern_order(const Graph& h, int start) {
  int n = h.order();
  std::vector<int> order;
  std::vector<bool> seen(n, false);
  auto bfs = [&](int s) {
    size_t head = order.size();
    order.push_back(s);
    seen[s] = true;
    while (head < order.size()) {
      int u = order[head++];
      for (int v = h.neighbors(u).next(); v != -1; v = h.neighbors(u).next(v + 1))
        if (!seen[v]) {
          seen[v] = true;
          order.push_back(v);
        }
    }
  };
  if (start >= 0) bfs(start);
  while (static_cast<int>(order.size()) < n) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (best == -1 || h.degree(v) > h.degree(best))) best = v;
    bfs(best);
  }
  return order;
}

struct Enumerator {
  const Graph& g;
  const Graph& h;
  const EnumerateOptions& opts;
  Bitset allowed;
  std::vector<int> order;
  std::vector<int> map;       // H vertex -> G vertex, -1 unset
  Bitset used;                // G vertices in the partial image
  std::unordered_set<Mask128, Mask128Hash> seen;
  EnumerateResult out;

  Enumerator(const Graph& g_, const Graph& h_, const EnumerateOptions& o)
      : g(g_), h(h_), opts(o), allowed(g_.order()),
        map(h_.order(), -1), used(g_.order()) {
    if (g.order() > 128)
      throw std::invalid_argument("copy enumeration supports hosts up to 128 vertices");
    if (o.allowed)
      allowed = *o.allowed;
    else
      allowed.set_all();
  }

  bool emit() {
    std::vector<int> image(map);
    Mask128 m = mask_of(image);
    if (!seen.insert(m).second) return true;
    if (static_cast<long long>(seen.size()) > opts.cap) {
      out.truncated = true;
      return false;
    }
    if (opts.visit) return opts.visit(CopyEmbedding{std::move(image)});
    out.copies.push_back(CopyEmbedding{std::move(image)});
    return true;
  }

  bool extend(size_t idx) {
    if (idx == order.size()) return emit();
    int u = order[idx];
    Bitset cand = allowed;
    cand.subtract(used);
    for (int w = h.neighbors(u).next(); w != -1; w = h.neighbors(u).next(w + 1))
      if (map[w] != -1) cand &= g.neighbors(map[w]);
    for (int v = cand.next(); v != -1; v = cand.next(v + 1)) {
      map[u] = v;
      used.set(v);
      bool keep_going = extend(idx + 1);
      used.reset(v);
      map[u] = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  void run() {
    if (h.order() == 0 || h.order() > g.order()) return;
    if (opts.anchor) {
      int a = *opts.anchor;
      if (!allowed.test(a)) return;
      for (int hv = 0; hv < h.order(); ++hv) {
        order = pattern_order(h, hv);
        map.assign(h.order(), -1);
        map[hv] = a;
        used = Bitset(g.order());
        used.set(a);
        if (!extend(1)) return;
      }
    } else {
      order = pattern_order(h, -1);
      if (!extend(0)) return;
    }
  }
};

struct Deadline {
  std::chrono::steady_clock::time_point end;
  bool enabled = false;

  explicit Deadline(long long ms) {
    if (ms > 0) {
      enabled = true;
      end = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
    }
  }
  bool expired() const {
    return enabled && std::chrono::steady_clock::now() > end;
  }
};

// Materialized (vertex, copy) incidence for the exact searches.
struct CopyTable {
  std::vector<CopyEmbedding> copies;
  std::vector<Mask128> masks;
  std::vector<std::vector<int>> incident;  // per G-vertex copy indices

  CopyTable(const Graph& g, const Graph& h) {
    EnumerateOptions opts;
    auto res = enumerate_copies(g, h, opts);
    if (res.truncated)
      throw std::runtime_error(
          "copy enumeration cap exceeded; exact search would be unsound");
    copies = std::move(res.copies);
    masks.reserve(copies.size());
    incident.assign(g.order(), {});
    for (size_t c = 0; c < copies.size(); ++c) {
      masks.push_back(mask_of(copies[c].image));
      for (int v : copies[c].image) incident[v].push_back(static_cast<int>(c));
    }
  }
};

// Exact cover driven by the twin quotient of the host. Vertices with the
// same neighborhood (ignoring each other) are interchangeable: within-class
// permutations are host automorphisms, each class induces a clique or an
// independent set, and adjacency between two classes is uniform. A copy of
// the pattern is therefore determined up to automorphism by how many
// vertices it takes from each class, so the search branches over those count
// profiles and materializes one canonical copy (lowest remaining vertices)
// per profile. Complete, since any perfect tiling must cover the lowest
// uncovered vertex and every copy through it is automorphic to a canonical
// one. On hosts with only trivial classes this degenerates to plain anchored
// copy enumeration.
struct LazyCoverSearch {
  const Graph& g;
  const Graph& h;
  Bitset remaining;
  std::vector<CopyEmbedding> chosen;
  std::vector<int> twin;                  // host vertex -> class id
  std::vector<std::vector<int>> members;  // class -> host vertices, ascending
  std::vector<char> clique;               // class induces a clique
  std::vector<Bitset> cadj;               // class-level adjacency
  std::vector<int> avail;                 // remaining vertices per class
  std::vector<int> horder;                // pattern visit order
  int nclasses = 0;
  long long nodes = 0;
  const SearchBudget& budget;
  Deadline deadline;

  LazyCoverSearch(const Graph& g_, const Graph& h_, const SearchBudget& b)
      : g(g_), h(h_), remaining(g_.order()), budget(b),
        deadline(b.time_limit_ms) {
    remaining.set_all();
    // Classes are built greedily against a representative; transpositions
    // with the representative generate all within-class permutations.
    int n = g.order();
    twin.assign(n, -1);
    for (int u = 0; u < n; ++u) {
      if (twin[u] != -1) continue;
      twin[u] = nclasses;
      members.push_back({u});
      Bitset nu = g.neighbors(u);
      for (int w = u + 1; w < n; ++w) {
        if (twin[w] != -1) continue;
        Bitset a = nu, bw = g.neighbors(w);
        a.reset(w);
        bw.reset(u);
        if (a == bw) {
          twin[w] = nclasses;
          members[nclasses].push_back(w);
        }
      }
      ++nclasses;
    }
    clique.assign(nclasses, 0);
    avail.assign(nclasses, 0);
    cadj.assign(nclasses, Bitset(nclasses));
    for (int c = 0; c < nclasses; ++c) {
      avail[c] = static_cast<int>(members[c].size());
      if (members[c].size() >= 2 &&
          g.neighbors(members[c][0]).test(members[c][1]))
        clique[c] = 1;
      for (int d = c + 1; d < nclasses; ++d)
        if (g.neighbors(members[c][0]).test(members[d][0])) {
          cadj[c].set(d);
          cadj[d].set(c);
        }
    }
    horder = pattern_order(h, -1);
  }

  struct Profile {
    std::vector<int> counts;  // vertices taken per class
    std::vector<int> assign;  // H vertex -> class, one witness
  };

  // All placeable count profiles inside the remaining set, in deterministic
  // discovery order.
  std::vector<Profile> profiles() const {
    std::vector<Profile> out;
    std::set<std::vector<int>> seen;
    std::vector<int> assign(h.order(), -1);
    std::vector<int> counts(nclasses, 0);
    auto dfs = [&](auto&& self, size_t idx) -> void {
      if (idx == horder.size()) {
        if (seen.insert(counts).second) out.push_back({counts, assign});
        return;
      }
      int u = horder[idx];
      for (int c = 0; c < nclasses; ++c) {
        if (counts[c] >= avail[c]) continue;
        bool ok = true;
        for (int w = h.neighbors(u).next(); w != -1;
             w = h.neighbors(u).next(w + 1)) {
          int d = assign[w];
          if (d == -1) continue;
          if (d == c ? !clique[c] : !cadj[c].test(d)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        assign[u] = c;
        ++counts[c];
        self(self, idx + 1);
        --counts[c];
        assign[u] = -1;
      }
    };
    dfs(dfs, 0);
    return out;
  }

  // Canonical copy for a profile: the lowest remaining vertices of each
  // class, with `v` forced into the image. Pattern edges hold by class-level
  // adjacency, re-checked later by certificate verification.
  CopyEmbedding materialize(const Profile& p, int v) const {
    std::vector<std::vector<int>> picks(nclasses);
    for (int c = 0; c < nclasses; ++c) {
      int need = p.counts[c];
      if (c == twin[v] && need > 0) {
        picks[c].push_back(v);
        --need;
      }
      for (int u : members[c]) {
        if (need == 0) break;
        if (u != v && remaining.test(u)) {
          picks[c].push_back(u);
          --need;
        }
      }
    }
    CopyEmbedding copy;
    copy.image.resize(h.order());
    std::vector<int> cursor(nclasses, 0);
    for (int i = 0; i < h.order(); ++i)
      copy.image[i] = picks[p.assign[i]][cursor[p.assign[i]]++];
    return copy;
  }

  bool solve() {
    if (++nodes > budget.node_limit || deadline.expired())
      throw std::runtime_error("perfect_tiling: search budget exhausted");
    int v = remaining.next();
    if (v == -1) return true;
    auto profs = profiles();
    // Every remaining class must still be usable by some copy; one that is
    // not kills the whole subtree.
    for (int c = 0; c < nclasses; ++c) {
      if (avail[c] == 0) continue;
      bool coverable = false;
      for (const Profile& p : profs)
        if (p.counts[c] > 0) {
          coverable = true;
          break;
        }
      if (!coverable) return false;
    }
    int vc = twin[v];
    for (const Profile& p : profs) {
      if (p.counts[vc] == 0) continue;
      CopyEmbedding copy = materialize(p, v);
      for (int w : copy.image) {
        remaining.reset(w);
        --avail[twin[w]];
      }
      chosen.push_back(copy);
      if (solve()) return true;
      chosen.pop_back();
      for (int w : copy.image) {
        remaining.set(w);
        ++avail[twin[w]];
      }
    }
    return false;
  }
};

struct MaxPackingSearch {
  const CopyTable& table;
  int n, h;
  Mask128 used;
  int covered_count = 0;
  int wasted = 0;
  std::vector<int> chosen;
  std::vector<int> best;
  bool exhausted = true;
  long long nodes = 0;
  const SearchBudget& budget;
  Deadline deadline;

  MaxPackingSearch(const CopyTable& t, int n_, int h_, const SearchBudget& b)
      : table(t), n(n_), h(h_), budget(b), deadline(b.time_limit_ms) {}

  bool over_budget() {
    if (++nodes > budget.node_limit || deadline.expired()) {
      exhausted = false;
      return true;
    }
    return false;
  }

  // Branch on the lowest undecided vertex: cover it with each valid copy, or
  // waste it. `decided` marks vertices that are covered or wasted.
  void solve(int from, Bitset& decided) {
    if (over_budget()) return;
    if (chosen.size() > best.size()) best = chosen;
    // relaxation bound: every extra copy needs h undecided vertices
    int undecided = n - covered_count - wasted;
    if (static_cast<int>(chosen.size()) + undecided / h <=
        static_cast<int>(best.size()))
      return;
    int v = from;
    while (v < n && decided.test(v)) ++v;
    if (v == n) return;
    for (int ci : table.incident[v]) {
      if (table.masks[ci].intersects(used)) continue;
      used.lo |= table.masks[ci].lo;
      used.hi |= table.masks[ci].hi;
      for (int w : table.copies[ci].image) decided.set(w);
      covered_count += h;
      chosen.push_back(ci);
      solve(v + 1, decided);
      chosen.pop_back();
      covered_count -= h;
      for (int w : table.copies[ci].image) decided.reset(w);
      used.lo &= ~table.masks[ci].lo;
      used.hi &= ~table.masks[ci].hi;
    }
    decided.set(v);
    Mask128 vbit;
    vbit.set(v);
    used.lo |= vbit.lo;  // a wasted vertex may not be covered later
    used.hi |= vbit.hi;
    ++wasted;
    solve(v + 1, decided);
    --wasted;
    used.lo &= ~vbit.lo;
    used.hi &= ~vbit.hi;
    decided.reset(v);
  }
};

}  // namespace

std::vector<int> CopyEmbedding::sorted_image() const {
  std::vector<int> s(image);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> TilingCertificate::covered() const {
  std::vector<int> out;
  for (const auto& c : copies)
    out.insert(out.end(), c.image.begin(), c.image.end());
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json TilingCertificate::to_json() const {
  nlohmann::json j;
  j["num_copies"] = copies.size();
  auto arr = nlohmann::json::array();
  for (const auto& c : copies) arr.push_back(c.image);
  j["copies"] = arr;
  j["covered"] = covered();
  return j;
}

EnumerateResult enumerate_copies(const Graph& g, const Graph& h,
                                 const EnumerateOptions& opts) {
  Enumerator e(g, h, opts);
  e.run();
  // Deterministic order regardless of hash-set iteration.
  std::sort(e.out.copies.begin(), e.out.copies.end(),
            [](const CopyEmbedding& a, const CopyEmbedding& b) {
              return a.sorted_image() < b.sorted_image();
            });
  return std::move(e.out);
}

std::optional<TilingCertificate> perfect_tiling(const Graph& g, const Graph& h,
                                                const SearchBudget& budget) {
  if (h.order() == 0) throw std::invalid_argument("pattern graph is empty");
  if (g.order() % h.order() != 0) return std::nullopt;
  if (g.order() == 0) return TilingCertificate{};
  TilingCertificate cert;
  LazyCoverSearch search(g, h, budget);
  if (!search.solve()) return std::nullopt;
  cert.copies = std::move(search.chosen);
  if (!verify_certificate(g, h, cert) || !is_perfect(g, cert))
    throw std::logic_error("perfect_tiling produced an invalid certificate");
  return cert;
}

MaxTilingResult max_tiling(const Graph& g, const Graph& h,
                           const SearchBudget& budget) {
  if (h.order() == 0) throw std::invalid_argument("pattern graph is empty");
  MaxTilingResult result;
  if (g.order() < h.order()) {
    result.optimal = true;
    return result;
  }
  CopyTable table(g, h);
  MaxPackingSearch search(table, g.order(), h.order(), budget);
  Bitset decided(g.order());
  search.solve(0, decided);
  for (int ci : search.best) result.tiling.copies.push_back(table.copies[ci]);
  result.optimal = search.exhausted;
  if (!verify_certificate(g, h, result.tiling))
    throw std::logic_error("max_tiling produced an invalid certificate");
  return result;
}

bool verify_certificate(const Graph& g, const Graph& h,
                        const TilingCertificate& cert) {
  std::vector<bool> used(g.order(), false);
  for (const auto& copy : cert.copies) {
    if (static_cast<int>(copy.image.size()) != h.order()) return false;
    for (int v : copy.image) {
      if (v < 0 || v >= g.order()) return false;
      if (used[v]) return false;
      used[v] = true;
    }
    for (auto [a, b] : h.edges())
      if (!g.has_edge(copy.image[a], copy.image[b])) return false;
  }
  return true;
}

bool is_perfect(const Graph& g, const TilingCertificate& cert) {
  return static_cast<int>(cert.covered().size()) == g.order();
}

}  // namespace tilinglab
