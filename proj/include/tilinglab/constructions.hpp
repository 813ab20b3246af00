#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tilinglab/graph.hpp"
#include "tilinglab/rational.hpp"

namespace tilinglab {

// Complete r-partite graph with one neck-class and r-1 width-classes.
struct BottleSpec {
  int r = 0;
  int neck = 0;
  int width = 0;

  int order() const { return neck + (r - 1) * width; }
};

Graph bottle_graph(const BottleSpec& spec);

// The base bottle B for H at a chosen sigma = a/b: neck sigma*c, width
// omega*c with c = b(r-1)(omega(H) - sigma(H)), scaled up by the smallest
// integer factor making both class sizes integral.
BottleSpec base_bottle(const Graph& h, const Rat& sigma);

// The modified bottle B-hat: neck sigma(1+lambda)s/omega, width s. Throws
// when the neck is non-integral, naming the smallest workable s' > s.
BottleSpec modified_bottle(int h, int r, const Rat& sigma, const Rat& lambda,
                           int s);

struct CertCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Structural assertions re-checked against the emitted graph, plus the
// contiguous vertex range [begin, end) of each named class.
struct ConstructionCertificate {
  std::vector<CertCheck> checks;
  std::vector<std::pair<std::string, std::pair<int, int>>> layout;

  bool all_passed() const;
  std::pair<int, int> class_range(const std::string& name) const;
  nlohmann::json to_json() const;
};

// Host without a perfect K_{t_1..t_r}-tiling: one special vertex v, a star
// forest inside V_2 and no v-V_3 edges. Default mode enforces the stated
// divisibility of sqrt(n); scale_override supplies a small C instead so the
// structure can be built (and solver-checked) at desk scale.
std::pair<Graph, ConstructionCertificate> prop22_graph(
    const std::vector<int>& t_sizes, const Rat& sigma, int n,
    std::optional<Rat> scale_override = std::nullopt);

// Host without an almost-perfect B-tiling: r+1 classes, ceiling-indexed
// c_i a_j edges and the deletion window [k, k + r b eta n].
std::pair<Graph, ConstructionCertificate> prop23_graph(const BottleSpec& b,
                                                       const Rat& eta, int k,
                                                       int n);

// Complete r-partite host whose undersized first class caps every H-tiling
// below (1 - eta) n coverage.
std::pair<Graph, ConstructionCertificate> prop24_graph(int h, int r,
                                                       int sigma_h,
                                                       const Rat& eta, int n);

}  // namespace tilinglab
