#pragma once

#include <set>
#include <vector>

#include "tilinglab/graph.hpp"
#include "tilinglab/invariants.hpp"

namespace tilinglab {

// Independent brute-force references used to validate the fast paths. They
// deliberately share no code with the production implementations: colorings
// are enumerated as raw assignment vectors, tilings as vertex partitions.

// Smallest r admitting a proper coloring, by trying every assignment in
// {0..r-1}^n for r = 1, 2, ...
int oracle_chromatic_number(const Graph& h);

// All sorted class-size vectors over proper surjective r-colorings,
// r = oracle_chromatic_number(h).
std::set<ColoringProfile> oracle_profiles(const Graph& h);

// Does G partition into |G|/|H| blocks, each containing H as a subgraph?
// Blocks are checked by trying every bijection block -> V(H).
bool oracle_has_perfect_tiling(const Graph& g, const Graph& h);

}  // namespace tilinglab
