#include "tilinglab/balancer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tilinglab {

namespace {

// gcd(a, b) with x*a + y*b = g.
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

long long mod_norm(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

// Greedy partition of a multiplicity vector (1-based class indices) into
// `rounds` subsets of `p` distinct indices each: always draw from the p
// classes with the largest remaining multiplicity. Feasible whenever
// max multiplicity <= rounds and the total is rounds*p.
std::vector<PSubset> partition_into_p_subsets(const ColoringProfile& profile,
                                              std::vector<int> mult, int p,
                                              int rounds) {
  int r = static_cast<int>(profile.size());
  std::vector<PSubset> parts;
  parts.reserve(rounds);
  for (int round = 0; round < rounds; ++round) {
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return mult[a] > mult[b]; });
    PSubset s;
    for (int k = 0; k < p; ++k) {
      int i = idx[k];
      if (mult[i] <= 0)
        throw std::logic_error("p-subset partition ran out of elements");
      --mult[i];
      s.indices.push_back(i + 1);
    }
    std::sort(s.indices.begin(), s.indices.end());
    for (int i : s.indices) {
      s.values.push_back(profile[i - 1]);
      s.sum += profile[i - 1];
    }
    parts.push_back(std::move(s));
  }
  for (int m : mult)
    if (m != 0) throw std::logic_error("p-subset partition left elements over");
  return parts;
}

}  // namespace

BezoutResult bezout(const std::vector<long long>& values) {
  bool any_nonzero = false;
  for (long long v : values) any_nonzero |= (v != 0);
  if (values.empty() || !any_nonzero)
    throw std::domain_error("bezout requires at least one nonzero value");
  BezoutResult out;
  out.coefficients.assign(values.size(), 0);
  long long g = 0;
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) continue;
    if (g == 0) {
      g = values[i] >= 0 ? values[i] : -values[i];
      out.coefficients[i] = values[i] >= 0 ? 1 : -1;
      continue;
    }
    long long x, y;
    long long g2 = ext_gcd(g, values[i], x, y);
    for (size_t j = 0; j < i; ++j) out.coefficients[j] *= x;
    out.coefficients[i] = y;
    g = g2;
    if (g == 1) break;  // remaining values keep coefficient 0
  }
  out.hcf = g;
  return out;
}

std::vector<PSubset> p_subsets(const ColoringProfile& profile, int p) {
  int r = static_cast<int>(profile.size());
  if (p < 1 || p > r - 1)
    throw std::invalid_argument("p must lie in 1..r-1");
  std::vector<PSubset> out;
  std::vector<int> idx(p);
  // lexicographic combinations of 1..r
  for (int i = 0; i < p; ++i) idx[i] = i + 1;
  while (true) {
    PSubset s;
    s.indices = idx;
    for (int i : idx) {
      s.values.push_back(profile[i - 1]);
      s.sum += profile[i - 1];
    }
    out.push_back(std::move(s));
    int k = p - 1;
    while (k >= 0 && idx[k] == r - (p - 1 - k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

ZPartition z_partition(const ColoringProfile& profile, int p, int J, int L) {
  int r = static_cast<int>(profile.size());
  if (p < 1 || p > r - 1) throw std::invalid_argument("p must lie in 1..r-1");
  if (J < 1 || J > r || L < 1 || L > r)
    throw std::invalid_argument("class index out of range");
  std::vector<int> mult(r, p);
  ++mult[J - 1];
  --mult[L - 1];  // the singleton {x_L}
  ZPartition out;
  out.singleton_index = L;
  out.singleton_value = profile[L - 1];
  out.parts = partition_into_p_subsets(profile, std::move(mult), p, r);
  return out;
}

BalancerSolution balance_bipartite(const std::vector<int>& component_orders, int h) {
  if (component_orders.empty())
    throw std::invalid_argument("component order list must be nonempty");
  long long total = std::accumulate(component_orders.begin(),
                                    component_orders.end(), 0LL);
  if (total != h)
    throw std::invalid_argument("component orders must sum to h");
  std::vector<long long> t(component_orders.begin(), component_orders.end());
  BezoutResult bz = bezout(t);
  if (bz.hcf != 1) throw std::domain_error("hcf_c(H) != 1");
  long long shift = 0;  // minimal a-hat making all coefficients nonnegative
  for (long long c : bz.coefficients) shift = std::max(shift, -c);
  BalancerSolution sol;
  sol.mode = BalancerSolution::Mode::bipartite;
  sol.modulus = h;
  sol.component_orders = component_orders;
  sol.bezout_coefficients = bz.coefficients;
  long long check = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    long long a = bz.coefficients[i] + shift;
    sol.component_coefficients.push_back(a);
    sol.a_bar = std::max(sol.a_bar, a);
    check += a * t[i];
  }
  if (mod_norm(check, h) != 1)
    throw std::logic_error("bipartite balancer congruence failed");
  return sol;
}

BalancerSolution balance_multipartite(const std::set<ColoringProfile>& profile_set,
                                      int p, int h) {
  if (profile_set.empty()) throw std::invalid_argument("no profiles given");
  std::vector<ColoringProfile> profiles(profile_set.begin(), profile_set.end());
  int r = static_cast<int>(profiles[0].size());
  if (r < 3) throw std::invalid_argument("multipartite balancing requires r >= 3");
  if (p < 1 || p > r - 1) throw std::invalid_argument("p must lie in 1..r-1");
  for (const auto& prof : profiles) {
    if (static_cast<int>(prof.size()) != r)
      throw std::invalid_argument("profiles of mixed length");
    if (std::accumulate(prof.begin(), prof.end(), 0) != h)
      throw std::invalid_argument("profile does not sum to h");
  }

  // D*(H): all consecutive differences, one block of r-1 per profile.
  std::vector<long long> diffs;
  for (const auto& prof : profiles)
    for (int j = 0; j + 1 < r; ++j) diffs.push_back(prof[j + 1] - prof[j]);
  bool any = false;
  for (long long d : diffs) any |= (d != 0);
  if (!any) throw std::domain_error("hcf_chi(H) != 1 (all profiles balanced)");
  BezoutResult bz = bezout(diffs);
  if (bz.hcf != 1) throw std::domain_error("hcf_chi(H) != 1");

  BalancerSolution sol;
  sol.mode = BalancerSolution::Mode::multipartite;
  sol.modulus = h;
  sol.p = p;
  sol.profiles = profiles;
  sol.bezout_coefficients = bz.coefficients;

  for (size_t ci = 0; ci < profiles.size(); ++ci) {
    const ColoringProfile& prof = profiles[ci];
    auto subsets = p_subsets(prof, p);
    std::map<std::vector<int>, int> subset_pos;
    for (size_t i = 0; i < subsets.size(); ++i)
      subset_pos[subsets[i].indices] = static_cast<int>(i);
    std::vector<long long> coeff(subsets.size(), 0);

    const long long* b = &sol.bezout_coefficients[ci * (r - 1)];
    long long maxabs = std::max(std::abs(b[0]), std::abs(b[r - 2]));
    for (int j = 0; j + 1 < r - 1; ++j)
      maxabs = std::max(maxabs, std::abs(b[j] - b[j + 1]));
    long long tc = (maxabs + p - 1) / p;  // smallest t with p*t >= maxabs
    sol.t_c.push_back(tc);

    // Y_c multiplicities.
    std::vector<long long> mult(r);
    mult[0] = p * tc - b[0];
    for (int j = 1; j + 1 < r; ++j) mult[j] = p * tc + b[j - 1] - b[j];
    mult[r - 1] = p * tc + b[r - 2];
    long long total = std::accumulate(mult.begin(), mult.end(), 0LL);
    if (total != static_cast<long long>(r) * p * tc)
      throw std::logic_error("Y_c multiplicities do not telescope");
    for (long long m : mult)
      if (m < 0) throw std::logic_error("negative Y_c multiplicity");

    // Balancing loop: strictly decreases the total imbalance, so the step
    // ceiling derived from the initial imbalance is a hard bound.
    long long mean = p * tc;
    long long imbalance = 0;
    for (long long m : mult) imbalance += std::abs(m - mean);
    long long step_ceiling = imbalance / 2 + 1;
    long long steps = 0;
    while (true) {
      bool balanced = true;
      for (long long m : mult) balanced &= (m == mean);
      if (balanced) break;
      if (++steps > step_ceiling)
        throw std::logic_error("balancing did not terminate within its ceiling");
      int J = static_cast<int>(std::max_element(mult.begin(), mult.end()) -
                               mult.begin());
      int L = static_cast<int>(std::min_element(mult.begin(), mult.end()) -
                               mult.begin());
      sol.steps.push_back(BalanceStep{static_cast<int>(ci), J + 1, L + 1});
      ZPartition zp = z_partition(prof, p, J + 1, L + 1);
      for (const auto& s : zp.parts) ++coeff[subset_pos.at(s.indices)];
      --mult[J];
      ++mult[L];
    }
    long long t_hat = tc + steps;
    sol.t_hat_c.push_back(t_hat);

    // Q_{Y_c}: the now-balanced Y_c splits into r*t_c p-subsets.
    if (tc > 0) {
      std::vector<int> final_mult(r, static_cast<int>(p * tc));
      auto q_yc = partition_into_p_subsets(prof, std::move(final_mult), p,
                                           static_cast<int>(r * tc));
      for (const auto& s : q_yc) ++coeff[subset_pos.at(s.indices)];
    }

    for (long long a : coeff) sol.a_bar = std::max(sol.a_bar, a);
    sol.coefficients.push_back(std::move(coeff));
  }

  // Congruence re-check against the p-subset sums.
  long long acc = 0;
  for (size_t ci = 0; ci < profiles.size(); ++ci) {
    auto subsets = p_subsets(profiles[ci], p);
    for (size_t i = 0; i < subsets.size(); ++i)
      acc = mod_norm(acc + sol.coefficients[ci][i] * subsets[i].sum, h);
  }
  if (acc != 1)
    throw std::logic_error("multipartite balancer congruence failed");
  return sol;
}

BalancerSolution balance_for(const Graph& h, int p) {
  HcfReport rep = hcf_report(h);
  if (!rep.hcf_is_one) throw std::domain_error("hcf(H) != 1");
  if (rep.chi == 2) return balance_bipartite(h.component_orders(), h.order());
  return balance_multipartite(optimal_profiles(h), p, h.order());
}

bool verify_solution(const BalancerSolution& sol) {
  int h = sol.modulus;
  if (h <= 0) return false;
  if (sol.mode == BalancerSolution::Mode::bipartite) {
    if (sol.component_coefficients.size() != sol.component_orders.size())
      return false;
    long long acc = 0;
    for (size_t i = 0; i < sol.component_orders.size(); ++i) {
      long long a = sol.component_coefficients[i];
      if (a < 0 || a > sol.a_bar) return false;
      acc = mod_norm(acc + a * sol.component_orders[i], h);
    }
    return acc == 1;
  }
  if (sol.coefficients.size() != sol.profiles.size()) return false;
  int r = sol.profiles.empty() ? 0 : static_cast<int>(sol.profiles[0].size());
  if (r < 3 || sol.p < 1 || sol.p > r - 1) return false;
  long long acc = 0;
  for (size_t ci = 0; ci < sol.profiles.size(); ++ci) {
    auto subsets = p_subsets(sol.profiles[ci], sol.p);
    if (subsets.size() != sol.coefficients[ci].size()) return false;
    // Per-class multiplicity implied by the coefficients must reproduce the
    // final table: p * t_hat_c shifted by the Bezout coefficients.
    std::vector<long long> mult(r, 0);
    for (size_t i = 0; i < subsets.size(); ++i) {
      long long a = sol.coefficients[ci][i];
      if (a < 0 || a > sol.a_bar) return false;
      acc = mod_norm(acc + a * subsets[i].sum, h);
      for (int idx : subsets[i].indices) mult[idx - 1] += a;
    }
    if (sol.t_hat_c.size() == sol.profiles.size() &&
        sol.bezout_coefficients.size() == sol.profiles.size() * (r - 1)) {
      const long long* b = &sol.bezout_coefficients[ci * (r - 1)];
      long long pt = static_cast<long long>(sol.p) * sol.t_hat_c[ci];
      std::vector<long long> expect(r);
      expect[0] = pt - b[0];
      for (int j = 1; j + 1 < r; ++j) expect[j] = pt + b[j - 1] - b[j];
      expect[r - 1] = pt + b[r - 2];
      if (mult != expect) return false;
    }
  }
  return acc == 1;
}

nlohmann::json BalancerSolution::to_json() const {
  nlohmann::json j;
  j["mode"] = mode == Mode::bipartite ? "bipartite" : "multipartite";
  j["h"] = modulus;
  j["a_bar"] = a_bar;
  if (mode == Mode::bipartite) {
    j["component_orders"] = component_orders;
    j["coefficients"] = component_coefficients;
  } else {
    j["p"] = p;
    j["profiles"] = profiles;
    j["coefficients"] = coefficients;
  }
  nlohmann::json trace;
  trace["bezout"] = bezout_coefficients;
  trace["t_c"] = t_c;
  trace["t_hat_c"] = t_hat_c;
  auto steps_json = nlohmann::json::array();
  for (const auto& s : steps)
    steps_json.push_back({{"profile", s.profile}, {"J", s.J}, {"L", s.L}});
  trace["steps"] = steps_json;
  j["trace"] = trace;
  j["congruence_check"] = verify_solution(*this);
  return j;
}

}  // namespace tilinglab
