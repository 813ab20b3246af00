#pragma once

#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "tilinglab/graph.hpp"
#include "tilinglab/rational.hpp"

namespace tilinglab {

// Sorted class-size vector (x_1 <= ... <= x_r) of one optimal coloring.
using ColoringProfile = std::vector<int>;

// Exact chromatic number (branch and bound over color counts, backtracking
// with color-symmetry breaking). Throws on the empty graph.
int chromatic_number(const Graph& h);

// All distinct sorted class-size vectors over proper colorings with exactly
// chromatic_number(h) colors. Exhaustive.
std::set<ColoringProfile> optimal_profiles(const Graph& h);

// sigma(H): minimum class size over all optimal colorings.
int sigma_min(const Graph& h);

// omega(H) = (|H| - sigma(H)) / (chi(H) - 1), exact.
Rat omega_of(const Graph& h);

// chi_cr(H) = (chi(H)-1) |H| / (|H| - sigma(H)). Requires an edge.
Rat chi_critical(const Graph& h);

// omega for a chosen sigma in [sigma(H), h/r): (h - sigma)/(r - 1).
// Throws std::domain_error naming the violated bound otherwise.
Rat omega_param(const Graph& h, const Rat& sigma);

struct HcfReport {
  int chi = 0;
  int sigma = 0;
  Rat chi_cr;
  std::vector<int> D;           // sorted set D(H)
  std::optional<int> hcf_chi;   // nullopt encodes infinity (D = {0})
  int hcf_c = 0;
  bool hcf_is_one = false;
  Rat chi_star;

  nlohmann::json to_json() const;
};

// Computes D(H), hcf_chi, hcf_c, hcf(H) and chi*(H). gcd over a set with
// zeros ignores the zeros unless the set is {0}, in which case hcf_chi is
// infinite. Requires at least one edge.
HcfReport hcf_report(const Graph& h);

inline bool hcf_is_one(const Graph& h) { return hcf_report(h).hcf_is_one; }

}  // namespace tilinglab
