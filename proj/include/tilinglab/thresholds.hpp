#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tilinglab/graph.hpp"
#include "tilinglab/rational.hpp"

namespace tilinglab {

// Nondecreasing degree sequence d_1 <= ... <= d_n (1-based in the checkers).
using DegreeSequence = std::vector<int>;

struct Violation {
  int index = 0;  // 1-based
  Rat required;
  int actual = 0;
};

struct ThresholdVerdict {
  bool passes = true;
  std::optional<Violation> first_violation;
  std::string condition_id;

  nlohmann::json to_json() const;
};

// d_i >= (1 - (omega+sigma)/h) n + (sigma/omega) i + eta n for
// 1 <= i <= floor(omega n / h), with omega = (h - sigma)/(r - 1).
ThresholdVerdict check_main(const DegreeSequence& dseq, int h, int r,
                            const Rat& sigma, const Rat& eta);

// d_i >= (r-2)n/r + i + eta n for all i < n/r.
ThresholdVerdict check_ay_degseq(const DegreeSequence& dseq, int r, const Rat& eta);

// hcf(H) = 1: main condition at sigma = sigma(H); otherwise the (r-2)n/r + i
// condition. The verdict's condition_id records which branch ran.
ThresholdVerdict check_kothm_dispatch(const DegreeSequence& dseq, const Graph& h,
                                      const Rat& eta);

// d_1 >= bound * n.
ThresholdVerdict check_min_degree(const DegreeSequence& dseq, const Rat& bound);

// For all i < n/2: d_i >= i+1 or d_{n-i} >= n-i; requires n >= 3 to pass.
ThresholdVerdict check_chvatal(const DegreeSequence& dseq);

// (alpha) d_i >= (r-2)n/r + i for all i < n/r, and
// (beta)  d_{n/r+1} >= (r-1)n/r. Requires r | n.
ThresholdVerdict check_bkt_conjecture(const DegreeSequence& dseq, int r);

// The piecewise-linear lower bound evaluated at 1..n: the ramp up to
// floor(omega n / h), then the constant (1 - omega/h + eta) n.
std::vector<std::pair<int, Rat>> threshold_curve(int h, int r, const Rat& sigma,
                                                 const Rat& eta, int n);

// sigma range validation shared by check_main and threshold_curve; returns
// omega. sigma(H) is not known here, only sigma < h/r and sigma > 0 are
// enforceable from the raw parameters.
Rat omega_from_params(int h, int r, const Rat& sigma);

}  // namespace tilinglab
