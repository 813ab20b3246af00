#include "tilinglab/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tilinglab {

namespace {

// Vertices in degeneracy order (repeatedly remove a minimum-degree vertex),
// reversed so the search colors the dense core first.
std::vector<int> coloring_order(const Graph& g) {
  int n = g.order();
  std::vector<int> deg(n), order;
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    removed[best] = true;
    order.push_back(best);
    for (int u = g.neighbors(best).next(); u != -1; u = g.neighbors(best).next(u + 1))
      if (!removed[u]) --deg[u];
  }
  std::reverse(order.begin(), order.end());
  return order;
}

bool colorable_with(const Graph& g, int k, const std::vector<int>& order,
                    std::vector<int>& color, size_t idx, int used) {
  if (idx == order.size()) return true;
  int v = order[idx];
  int limit = std::min(used + 1, k);  // first use of each color is fixed
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int u = g.neighbors(v).next(); u != -1; u = g.neighbors(v).next(u + 1)) {
      if (color[u] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    if (colorable_with(g, k, order, color, idx + 1, std::max(used, c + 1))) return true;
    color[v] = -1;
  }
  return false;
}

int greedy_clique_lower_bound(const Graph& g) {
  // Greedy clique from each vertex; cheap and exact enough as a lower bound.
  int best = g.order() > 0 ? 1 : 0;
  for (int s = 0; s < g.order(); ++s) {
    Bitset cand = g.neighbors(s);
    int size = 1;
    for (int v = cand.next(); v != -1; v = cand.next(v + 1)) {
      ++size;
      cand &= g.neighbors(v);
    }
    best = std::max(best, size);
  }
  return best;
}

void enumerate_profiles(const Graph& g, int r, const std::vector<int>& order,
                        std::vector<int>& color, size_t idx, int used,
                        std::set<ColoringProfile>& out) {
  int n = g.order();
  if (idx == order.size()) {
    if (used != r) return;
    ColoringProfile sizes(r, 0);
    for (int v = 0; v < n; ++v) ++sizes[color[v]];
    std::sort(sizes.begin(), sizes.end());
    out.insert(std::move(sizes));
    return;
  }
  if (used + static_cast<int>(order.size() - idx) < r) return;  // cannot reach r colors
  int v = order[idx];
  int limit = std::min(used + 1, r);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int u = g.neighbors(v).next(); u != -1; u = g.neighbors(v).next(u + 1)) {
      if (color[u] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v] = c;
    enumerate_profiles(g, r, order, color, idx + 1, std::max(used, c + 1), out);
    color[v] = -1;
  }
}

int gcd_ignoring_zeros(const std::vector<int>& values) {
  int g = 0;
  for (int v : values) g = std::gcd(g, v);
  return g;
}

}  // namespace

int chromatic_number(const Graph& h) {
  int n = h.order();
  if (n == 0) throw std::domain_error("chromatic number of the empty graph");
  if (h.size() == 0) return 1;
  auto order = coloring_order(h);
  for (int k = greedy_clique_lower_bound(h); k <= n; ++k) {
    std::vector<int> color(n, -1);
    if (colorable_with(h, k, order, color, 0, 0)) return k;
  }
  return n;  // unreachable
}

std::set<ColoringProfile> optimal_profiles(const Graph& h) {
  int n = h.order();
  if (n == 0) return {};
  int r = chromatic_number(h);
  auto order = coloring_order(h);
  std::vector<int> color(n, -1);
  std::set<ColoringProfile> out;
  enumerate_profiles(h, r, order, color, 0, 0, out);
  return out;
}

int sigma_min(const Graph& h) {
  auto profiles = optimal_profiles(h);
  if (profiles.empty()) throw std::domain_error("sigma of the empty graph");
  int best = h.order();
  for (const auto& p : profiles) best = std::min(best, p.front());
  return best;
}

Rat omega_of(const Graph& h) {
  int r = chromatic_number(h);
  if (r < 2) throw std::domain_error("omega requires chi(H) >= 2");
  return Rat(h.order() - sigma_min(h), r - 1);
}

Rat chi_critical(const Graph& h) {
  if (h.size() == 0) throw std::domain_error("chi_cr requires at least one edge");
  int r = chromatic_number(h);
  int sigma = sigma_min(h);
  return Rat(static_cast<long long>(r - 1) * h.order(), h.order() - sigma);
}

Rat omega_param(const Graph& h, const Rat& sigma) {
  int r = chromatic_number(h);
  if (r < 2) throw std::domain_error("omega requires chi(H) >= 2");
  int hh = h.order();
  Rat lo(sigma_min(h));
  Rat hi(hh, r);
  if (sigma < lo)
    throw std::domain_error("sigma below sigma(H) = " + lo.str());
  if (!(sigma < hi))
    throw std::domain_error("sigma not below h/r = " + hi.str());
  return (Rat(hh) - sigma) / Rat(r - 1);
}

HcfReport hcf_report(const Graph& h) {
  if (h.size() == 0) throw std::domain_error("hcf report requires at least one edge");
  HcfReport rep;
  rep.chi = chromatic_number(h);
  auto profiles = optimal_profiles(h);
  std::set<int> diffs;
  int sigma = h.order();
  for (const auto& p : profiles) {
    sigma = std::min(sigma, p.front());
    for (size_t i = 0; i + 1 < p.size(); ++i) diffs.insert(p[i + 1] - p[i]);
  }
  rep.sigma = sigma;
  rep.chi_cr = Rat(static_cast<long long>(rep.chi - 1) * h.order(), h.order() - sigma);
  rep.D.assign(diffs.begin(), diffs.end());
  int g = gcd_ignoring_zeros(rep.D);
  if (g == 0)
    rep.hcf_chi = std::nullopt;  // D(H) = {0}: hcf_chi is infinite
  else
    rep.hcf_chi = g;
  rep.hcf_c = gcd_ignoring_zeros(h.component_orders());
  if (rep.chi >= 3)
    rep.hcf_is_one = rep.hcf_chi.has_value() && *rep.hcf_chi == 1;
  else
    rep.hcf_is_one =
        rep.hcf_c == 1 && rep.hcf_chi.has_value() && *rep.hcf_chi <= 2;
  rep.chi_star = rep.hcf_is_one ? rep.chi_cr : Rat(rep.chi);
  return rep;
}

nlohmann::json HcfReport::to_json() const {
  nlohmann::json j;
  j["chi"] = chi;
  j["sigma"] = sigma;
  j["chi_cr"] = chi_cr.str();
  j["D"] = D;
  if (hcf_chi.has_value())
    j["hcf_chi"] = *hcf_chi;
  else
    j["hcf_chi"] = "inf";
  j["hcf_c"] = hcf_c;
  j["hcf_is_one"] = hcf_is_one;
  j["chi_star"] = chi_star.str();
  return j;
}

}  // namespace tilinglab
