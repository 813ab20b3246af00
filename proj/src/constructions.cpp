#include "tilinglab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tilinglab/invariants.hpp"

namespace tilinglab {

namespace {

long long isqrt_ll(long long n) {
  long long s = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

long long require_integer(const Rat& v, const std::string& what) {
  if (!v.is_integer())
    throw std::invalid_argument(what + " = " + v.str() + " is not an integer");
  return v.as_integer();
}

void add_check(ConstructionCertificate& cert, std::string name, bool passed,
               std::string detail = {}) {
  cert.checks.push_back({std::move(name), passed, std::move(detail)});
}

// Does the induced subgraph on [begin, end) contain a path on 4 vertices?
bool has_p4_within(const Graph& g, int begin, int end) {
  for (int a = begin; a < end; ++a) {
    for (int b = g.neighbors(a).next(begin); b >= 0 && b < end;
         b = g.neighbors(a).next(b + 1)) {
      if (b <= a) continue;
      for (int a2 = g.neighbors(a).next(begin); a2 >= 0 && a2 < end;
           a2 = g.neighbors(a).next(a2 + 1)) {
        if (a2 == b) continue;
        for (int b2 = g.neighbors(b).next(begin); b2 >= 0 && b2 < end;
             b2 = g.neighbors(b).next(b2 + 1)) {
          if (b2 != a && b2 != a2) return true;  // a2 - a - b - b2
        }
      }
    }
  }
  return false;
}

}  // namespace

bool ConstructionCertificate::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::pair<int, int> ConstructionCertificate::class_range(
    const std::string& name) const {
  for (const auto& [cls, range] : layout)
    if (cls == name) return range;
  throw std::invalid_argument("no class named " + name + " in layout");
}

nlohmann::json ConstructionCertificate::to_json() const {
  nlohmann::json j;
  j["all_passed"] = all_passed();
  auto checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks_json.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks_json);
  auto layout_json = nlohmann::json::array();
  for (const auto& [cls, range] : layout)
    layout_json.push_back(
        {{"class", cls}, {"begin", range.first}, {"end", range.second}});
  j["layout"] = std::move(layout_json);
  return j;
}

Graph bottle_graph(const BottleSpec& spec) {
  if (spec.r < 2) throw std::invalid_argument("bottle needs r >= 2");
  if (spec.neck < 1) throw std::invalid_argument("neck must be positive");
  if (spec.neck >= spec.width)
    throw std::invalid_argument("neck must be smaller than width");
  std::vector<int> sizes{spec.neck};
  sizes.insert(sizes.end(), spec.r - 1, spec.width);
  return complete_multipartite(sizes);
}

BottleSpec base_bottle(const Graph& h, const Rat& sigma) {
  HcfReport rep = hcf_report(h);
  if (!rep.hcf_is_one) throw std::domain_error("hcf(H) != 1");
  int order = h.order();
  int r = rep.chi;
  if (Rat(rep.sigma) > sigma || !(sigma < Rat(order, r)))
    throw std::domain_error("sigma must lie in [sigma(H), h/r)");
  Rat omega_h = omega_of(h);
  if (omega_h == Rat(rep.sigma))
    throw std::domain_error("c-hat = 0: H only has balanced colorings");
  // c = b(r-1)(omega(H) - sigma(H)) = b(h - r sigma(H)), always integral.
  long long c =
      (Rat(sigma.den()) * Rat(r - 1) * (omega_h - Rat(rep.sigma))).as_integer();
  Rat omega = (Rat(order) - sigma) / Rat(r - 1);
  for (int k = 1; k <= r - 1; ++k) {
    Rat neck = sigma * Rat(c * k);
    Rat width = omega * Rat(c * k);
    if (neck.is_integer() && width.is_integer()) {
      BottleSpec spec;
      spec.r = r;
      spec.neck = static_cast<int>(neck.as_integer());
      spec.width = static_cast<int>(width.as_integer());
      return spec;
    }
  }
  throw std::logic_error("no integral scaling of c-hat up to r-1");
}

BottleSpec modified_bottle(int h, int r, const Rat& sigma, const Rat& lambda,
                           int s) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (s < 1) throw std::invalid_argument("s must be positive");
  Rat omega = (Rat(h) - sigma) / Rat(r - 1);
  Rat ratio = sigma * (Rat(1) + lambda) / omega;  // neck = ratio * s
  if (!(ratio > Rat(0)) || !(ratio < Rat(1)))
    throw std::domain_error("sigma(1+lambda)/omega must lie in (0, 1)");
  Rat neck = ratio * Rat(s);
  if (!neck.is_integer()) {
    long long d = ratio.den();
    long long s_next = (s / d + 1) * d;
    throw std::invalid_argument("neck " + neck.str() +
                                " is not an integer; smallest workable s is " +
                                std::to_string(s_next));
  }
  BottleSpec spec;
  spec.r = r;
  spec.neck = static_cast<int>(neck.as_integer());
  spec.width = s;
  return spec;
}

std::pair<Graph, ConstructionCertificate> prop22_graph(
    const std::vector<int>& t_sizes, const Rat& sigma, int n,
    std::optional<Rat> scale_override) {
  int r = static_cast<int>(t_sizes.size());
  if (r < 3) throw std::invalid_argument("requires r >= 3 classes");
  int h = 0;
  int min_t = t_sizes[0];
  for (int t : t_sizes) {
    if (t < 2) throw std::invalid_argument("every class size must be >= 2");
    h += t;
    min_t = std::min(min_t, t);
  }
  // sigma(K_{t_1..t_r}) is the smallest class size.
  if (Rat(min_t) > sigma || !(sigma < Rat(h, r)))
    throw std::domain_error("sigma must lie in [sigma(H), h/r)");
  Rat omega = (Rat(h) - sigma) / Rat(r - 1);

  Rat c;
  long long stars;
  if (scale_override) {
    c = *scale_override;
    if (c < Rat(0)) throw std::invalid_argument("C must be nonnegative");
    stars = std::max(1LL, isqrt_ll(n) / 2);
  } else {
    long long root = isqrt_ll(n);
    long long unit = 6LL * h * h;
    if (root * root != n || root % unit != 0) {
      long long required = unit * unit;  // smallest n with sqrt(n) = 6h^2
      throw std::invalid_argument(
          "default mode needs sqrt(n) to be an integer divisible by " +
          std::to_string(unit) + "; smallest such n is " +
          std::to_string(required));
    }
    c = Rat(root, 3LL * h * h);
    stars = root / 2;
  }

  std::vector<long long> sizes(r);
  sizes[0] = 1;
  sizes[1] = require_integer(omega * Rat(n, h) + Rat(1) + c * Rat(r), "|V_2|");
  sizes[2] = require_integer((sigma + omega) * Rat(n, h) - Rat(2) - Rat(3) * c,
                             "|V_3|");
  for (int i = 3; i < r; ++i)
    sizes[i] = require_integer(omega * Rat(n, h) - c,
                               "|V_" + std::to_string(i + 1) + "|");
  long long total = 0;
  for (int i = 0; i < r; ++i) {
    if (sizes[i] < 1)
      throw std::invalid_argument("class V_" + std::to_string(i + 1) +
                                  " would be empty at n = " + std::to_string(n));
    total += sizes[i];
  }
  if (total != n)
    throw std::invalid_argument("class sizes sum to " + std::to_string(total) +
                                ", not n");

  std::vector<int> begin(r + 1, 0);
  for (int i = 0; i < r; ++i) begin[i + 1] = begin[i] + static_cast<int>(sizes[i]);

  Graph g(n);
  auto cls = [&](int v) {
    return static_cast<int>(std::upper_bound(begin.begin(), begin.end(), v) -
                            begin.begin()) - 1;
  };
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      int cu = cls(u), cw = cls(w);
      bool edge = false;
      if ((cu == 2 && cw != 0) || (cw == 2 && cu != 0)) edge = true;  // V_3
      if (cu == 1 || cw == 1) edge = (cu != cw);                     // V_2
      if (cu >= 3 || cw >= 3) edge = edge || (cu != cw);             // V_4..V_r
      if (edge) g.add_edge(u, w);
    }
  }
  // Star forest covering V_2: `stars` stars, remainder spread one vertex at
  // a time so sizes differ by at most one.
  {
    long long v2 = sizes[1];
    stars = std::min(stars, v2);
    long long base = v2 / stars, extra = v2 % stars;
    int at = begin[1];
    for (long long s = 0; s < stars; ++s) {
      long long size = base + (s < extra ? 1 : 0);
      int center = at;
      for (long long leaf = 1; leaf < size; ++leaf)
        g.add_edge(center, at + static_cast<int>(leaf));
      at += static_cast<int>(size);
    }
  }

  ConstructionCertificate cert;
  for (int i = 0; i < r; ++i)
    cert.layout.emplace_back("V_" + std::to_string(i + 1),
                             std::make_pair(begin[i], begin[i + 1]));
  int v = begin[0];
  int hit = g.neighbors(v).next(begin[2]);
  add_check(cert, "v_no_neighbor_in_V3", hit < 0 || hit >= begin[3]);
  add_check(cert, "V2_star_forest_no_P4", !has_p4_within(g, begin[1], begin[2]));
  add_check(cert, "class_sizes_sum_to_n", total == n);
  add_check(cert, "v_degree_formula",
            g.degree(v) == n - 1 - static_cast<int>(sizes[2]),
            "expected n - 1 - |V_3|");
  return {std::move(g), std::move(cert)};
}

std::pair<Graph, ConstructionCertificate> prop23_graph(const BottleSpec& b,
                                                       const Rat& eta, int k,
                                                       int n) {
  int r = b.r;
  long long sg = b.neck, om = b.width;
  long long bsize = sg + (r - 1) * om;
  if (bsize < 2 || sg < 1 || om <= sg)
    throw std::invalid_argument("invalid bottle spec");

  auto feasible = [&](long long m, long long kk) {
    if (m % bsize != 0) return false;
    Rat en_r = eta * Rat(m);
    if (!en_r.is_integer()) return false;
    long long en = en_r.as_integer();
    if (en < 1) return false;
    if (!(Rat(kk) < Rat(om * m, bsize) - Rat(r * bsize + 1) * Rat(en)))
      return false;
    if ((r - 1) * (en + 1) - 1 < 1) return false;       // V_{r+1}
    if (om * m / bsize - (en + 1) < 1) return false;    // V_3..V_r
    return true;
  };
  if (k < 1 || !feasible(n, k)) {
    long long step = std::lcm(bsize, static_cast<long long>(eta.den()));
    long long suggestion = 0;
    for (long long m = step; m <= step * 4096; m += step)
      if (feasible(m, 1)) {
        suggestion = m;
        break;
      }
    std::string msg = "infeasible (n, eta, k)";
    if (suggestion)
      msg += "; smallest feasible n for this eta is " +
             std::to_string(suggestion) + " (with k = 1)";
    throw std::invalid_argument(msg);
  }

  long long en = (eta * Rat(n)).as_integer();
  long long window = static_cast<long long>(r) * bsize * en;  // r b eta n
  std::vector<long long> sizes(r + 1);
  sizes[0] = sg * n / bsize;
  sizes[1] = om * n / bsize - en;
  for (int i = 2; i < r; ++i) sizes[i] = om * n / bsize - (en + 1);
  sizes[r] = (r - 1) * (en + 1) - 1;

  std::vector<int> begin(r + 2, 0);
  for (int i = 0; i <= r; ++i)
    begin[i + 1] = begin[i] + static_cast<int>(sizes[i]);
  if (begin[r + 1] != n) throw std::logic_error("class sizes do not sum to n");

  auto a_vertex = [&](long long j) { return begin[0] + static_cast<int>(j) - 1; };
  auto c_vertex = [&](long long i) { return begin[1] + static_cast<int>(i) - 1; };
  auto ceil_div = [](long long num, long long den) {
    return (num + den - 1) / den;
  };

  Graph g(n);
  auto cls = [&](int v) {
    return static_cast<int>(std::upper_bound(begin.begin(), begin.end(), v) -
                            begin.begin()) - 1;
  };
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      int cu = cls(u), cw = cls(w);
      bool edge = false;
      if (cu == 0 && cw == 0) edge = true;                    // G[V_1] complete
      if ((cu == 0) != (cw == 0)) edge = (cu != 1 && cw != 1);  // V_1 - V\V_2
      if (cu != 0 && cw != 0 && cu != cw) edge = true;
      if (cu == r && cw == r) edge = true;                    // G[V_{r+1}] complete
      if (edge) g.add_edge(u, w);
    }
  }
  // c_i a_j edges under the ceiling rule, minus the deletion window.
  long long jk = ceil_div(sg * k, om);
  long long jtop = ceil_div(sg * (k + window), om);
  for (long long i = 1; i <= sizes[1]; ++i) {
    long long jmax = std::min(ceil_div(sg * i, om), sizes[0]);
    for (long long j = 1; j <= jmax; ++j) {
      bool deleted = (i >= k && i <= k + window && j >= jk + 1 && j <= jtop);
      if (!deleted) g.add_edge(c_vertex(i), a_vertex(j));
    }
  }

  ConstructionCertificate cert;
  for (int i = 0; i <= r; ++i)
    cert.layout.emplace_back("V_" + std::to_string(i + 1),
                             std::make_pair(begin[i], begin[i + 1]));
  // C = {c_1 .. c_{k + r b eta n}}, A = {a_1 .. a_{ceil(sigma k / omega)}}
  bool c_independent = true;
  for (long long i = 1; i <= k + window && c_independent; ++i)
    for (long long i2 = i + 1; i2 <= k + window; ++i2)
      if (g.has_edge(c_vertex(i), c_vertex(i2))) {
        c_independent = false;
        break;
      }
  add_check(cert, "C_independent", c_independent);
  bool no_c_to_v1_minus_a = true;
  for (long long i = 1; i <= k + window && no_c_to_v1_minus_a; ++i)
    for (long long j = jk + 1; j <= sizes[0]; ++j)
      if (g.has_edge(c_vertex(i), a_vertex(j))) {
        no_c_to_v1_minus_a = false;
        break;
      }
  add_check(cert, "no_edges_C_to_V1_minus_A", no_c_to_v1_minus_a);

  auto dseq = g.degree_sequence();
  Rat intercept = (Rat(1) - Rat(om + sg, bsize)) * Rat(n) + Rat(en);
  bool plateau_ok = true, ramp_ok = true;
  Rat plateau = intercept + Rat(jk);
  for (long long i = k; i <= k + window; ++i)
    plateau_ok &= (Rat(dseq[i - 1]) == plateau);
  for (long long i = 1; i <= om * n / bsize; ++i) {
    if (i >= k && i <= k + window) continue;
    ramp_ok &= (Rat(dseq[i - 1]) >= intercept + Rat(sg, om) * Rat(i));
  }
  add_check(cert, "degree_plateau_exact", plateau_ok,
            "d_i = (1-(omega+sigma)/b)n + ceil(sigma k/omega) + eta n on the window");
  add_check(cert, "degree_ramp_bound", ramp_ok);
  add_check(cert, "class_sizes_sum_to_n", begin[r + 1] == n);
  return {std::move(g), std::move(cert)};
}

std::pair<Graph, ConstructionCertificate> prop24_graph(int h, int r,
                                                       int sigma_h,
                                                       const Rat& eta, int n) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (sigma_h < 1 || sigma_h * r >= h)
    throw std::invalid_argument("need 0 < sigma(H) < h/r");
  Rat omega = Rat(h - sigma_h, r - 1);
  auto sizes_for = [&](int m) -> std::optional<std::vector<int>> {
    Rat s1 = Rat(sigma_h) * Rat(m, h) - eta * Rat(m);
    Rat s2 = omega * Rat(m, h) + Rat(r - 1) * eta * Rat(m);
    Rat si = omega * Rat(m, h) - eta * Rat(m);
    if (!s1.is_integer() || !s2.is_integer() || !si.is_integer()) return {};
    if (s1.as_integer() < 1 || si.as_integer() < 1) return {};
    std::vector<int> sizes{static_cast<int>(s1.as_integer()),
                           static_cast<int>(s2.as_integer())};
    sizes.insert(sizes.end(), r - 2, static_cast<int>(si.as_integer()));
    return sizes;
  };
  auto sizes = sizes_for(n);
  if (!sizes) {
    for (int d = 1; d <= 8 * h * static_cast<int>(eta.den()); ++d) {
      if (n - d > 0 && sizes_for(n - d)) {
        throw std::invalid_argument("class sizes not integral at n = " +
                                    std::to_string(n) +
                                    "; nearest feasible n is " +
                                    std::to_string(n - d));
      }
      if (sizes_for(n + d))
        throw std::invalid_argument("class sizes not integral at n = " +
                                    std::to_string(n) +
                                    "; nearest feasible n is " +
                                    std::to_string(n + d));
    }
    throw std::invalid_argument("class sizes not integral at n = " +
                                std::to_string(n) +
                                " and no feasible n found nearby");
  }

  Graph g = complete_multipartite(*sizes);
  ConstructionCertificate cert;
  int at = 0;
  for (int i = 0; i < r; ++i) {
    cert.layout.emplace_back("V_" + std::to_string(i + 1),
                             std::make_pair(at, at + (*sizes)[i]));
    at += (*sizes)[i];
  }
  add_check(cert, "class_sizes_sum_to_n", at == n);
  // |V_1| h / sigma < n - eta n: the coverage cap behind the non-tiling claim.
  add_check(cert, "coverage_bound",
            Rat((*sizes)[0]) * Rat(h, sigma_h) < Rat(n) - eta * Rat(n),
            "|V_1| h / sigma < (1 - eta) n");
  auto dseq = g.degree_sequence();
  Rat low = (Rat(1) - omega / Rat(h) - Rat(r - 1) * eta) * Rat(n);
  Rat high = (Rat(1) - omega / Rat(h) + eta) * Rat(n);
  Rat cutoff = (omega / Rat(h) + Rat(r - 1) * eta) * Rat(n);
  bool low_ok = true, high_ok = true;
  for (int i = 1; i <= n; ++i) {
    if (Rat(i) <= cutoff)
      low_ok &= (Rat(dseq[i - 1]) == low);
    else
      high_ok &= (Rat(dseq[i - 1]) >= high);
  }
  add_check(cert, "degree_low_plateau_exact", low_ok);
  add_check(cert, "degree_high_bound", high_ok);
  return {std::move(g), std::move(cert)};
}

}  // namespace tilinglab
