#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "tilinglab/graph.hpp"

namespace tilinglab {

// One embedded copy of H in G: image[i] is the G-vertex hosting H-vertex i.
// Copies are subgraph embeddings, not necessarily induced.
struct CopyEmbedding {
  std::vector<int> image;

  std::vector<int> sorted_image() const;
};

struct TilingCertificate {
  std::vector<CopyEmbedding> copies;

  std::vector<int> covered() const;
  nlohmann::json to_json() const;
};

struct CopyEmbedding;

struct EnumerateOptions {
  std::optional<int> anchor;        // only copies whose image contains this vertex
  const Bitset* allowed = nullptr;  // restrict images to this vertex set
  long long cap = 1'000'000;        // distinct image sets before giving up
  // Streaming mode: called once per distinct image set, in discovery order;
  // return false to stop. When set, no copies are collected.
  std::function<bool(const CopyEmbedding&)> visit;
};

struct EnumerateResult {
  std::vector<CopyEmbedding> copies;  // one witness per distinct image set
  bool truncated = false;             // cap reached
};

// All copies of H in G, deduplicated by image vertex set (one witness map
// each), in deterministic order.
EnumerateResult enumerate_copies(const Graph& g, const Graph& h,
                                 const EnumerateOptions& opts = {});

struct SearchBudget {
  long long node_limit = 200'000'000;
  long long time_limit_ms = 0;  // 0 = no time limit
};

// Exhaustive exact-cover search for a perfect H-tiling. Returns a verified
// certificate or nullopt meaning a definitive NONE. Throws if the search
// cannot be completed exhaustively within the budget.
std::optional<TilingCertificate> perfect_tiling(const Graph& g, const Graph& h,
                                                const SearchBudget& budget = {});

struct MaxTilingResult {
  TilingCertificate tiling;
  bool optimal = false;
};

// Branch-and-bound set packing: largest H-tiling found; optimal only when
// the search space was exhausted within the budget.
MaxTilingResult max_tiling(const Graph& g, const Graph& h,
                           const SearchBudget& budget = {});

// Re-checks embeddings, pairwise disjointness and cover consistency.
bool verify_certificate(const Graph& g, const Graph& h, const TilingCertificate& cert);

bool is_perfect(const Graph& g, const TilingCertificate& cert);

}  // namespace tilinglab
