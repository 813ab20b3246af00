#pragma once

#include <cstdint>
#include <vector>

#include "tilinglab/graph.hpp"

namespace tilinglab {

// Canonical 64-bit code of a graph on at most 11 vertices: the minimum
// packed upper-triangle bitstring over all vertex orderings compatible with
// iterated degree refinement. Equal codes <=> isomorphic graphs.
uint64_t canonical_code(const Graph& g);

// All graphs on exactly n vertices up to isomorphism, built by vertex
// augmentation from the (n-1)-corpus. Deterministic order (by code).
std::vector<Graph> graphs_up_to_iso(int n, bool connected_only = false);

// Union of graphs_up_to_iso(k) for 1 <= k <= n.
std::vector<Graph> graphs_up_to_order(int n, bool connected_only = false);

}  // namespace tilinglab
