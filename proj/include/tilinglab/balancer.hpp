#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "tilinglab/invariants.hpp"

namespace tilinglab {

// Extended Euclid over a list: coefficients y with sum(y_i * values_i) equal
// to the (positive) gcd. Zeros get coefficient 0; all-zero input is an error.
struct BezoutResult {
  std::vector<long long> coefficients;
  long long hcf = 0;
};
BezoutResult bezout(const std::vector<long long>& values);

// One size-p multiset of class sizes drawn at distinct class indices.
struct PSubset {
  std::vector<int> indices;  // 1-based class indices, strictly increasing
  std::vector<int> values;   // profile entries at those indices
  int sum = 0;
};

// All C(r, p) p-subsets of a profile, lexicographic on index sets.
std::vector<PSubset> p_subsets(const ColoringProfile& profile, int p);

// Constructive partition of Z_{p,c,J} (multiplicity p everywhere, p+1 at J)
// into the singleton {x_L} and exactly r p-subsets. Verified before return.
struct ZPartition {
  int singleton_index = 0;  // L (1-based)
  int singleton_value = 0;
  std::vector<PSubset> parts;
};
ZPartition z_partition(const ColoringProfile& profile, int p, int J, int L);

struct BalanceStep {
  int profile = 0;  // index into the profile list
  int J = 0, L = 0;  // 1-based class indices rebalanced at this step
};

struct BalancerSolution {
  enum class Mode { bipartite, multipartite };
  Mode mode = Mode::bipartite;
  int modulus = 0;  // h
  int p = 0;        // multipartite only

  // bipartite: a_i per component order; multipartite: a_{p,c,i} flattened as
  // coefficients[profile][subset index].
  std::vector<long long> component_coefficients;
  std::vector<int> component_orders;
  std::vector<std::vector<long long>> coefficients;
  std::vector<ColoringProfile> profiles;

  long long a_bar = 0;

  // Trace of the constructive proof.
  std::vector<long long> bezout_coefficients;  // flattened b_{c,j}
  std::vector<long long> t_c;
  std::vector<long long> t_hat_c;
  std::vector<BalanceStep> steps;

  nlohmann::json to_json() const;
};

// r = 2 case: nonnegative a_i with sum a_i t_i = 1 (mod h) from Bezout
// coefficients shifted by the minimal a-hat.
BalancerSolution balance_bipartite(const std::vector<int>& component_orders, int h);

// r >= 3 case: executes the constructive balancing argument over the
// deduplicated optimal profiles. Requires gcd of all consecutive profile
// differences to be 1.
BalancerSolution balance_multipartite(const std::set<ColoringProfile>& profiles,
                                      int p, int h);

// Dispatches on chi(H): bipartite route for r = 2, multipartite otherwise.
// Requires hcf(H) = 1.
BalancerSolution balance_for(const Graph& h, int p);

// Re-checks nonnegativity, the a-bar bound and the mod-h congruence from
// scratch; for the multipartite mode also replays the trace and re-derives
// the coefficient counts.
bool verify_solution(const BalancerSolution& sol);

}  // namespace tilinglab
