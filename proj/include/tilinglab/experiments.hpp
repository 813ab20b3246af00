#pragma once

#include <map>
#include <random>
#include <string>

#include <json.hpp>

#include "tilinglab/graph.hpp"
#include "tilinglab/rational.hpp"

namespace tilinglab {

struct ExperimentSpec {
  std::string id;
  std::map<std::string, std::string> params;  // free-form, parsed per id
  long long seed = 0;
  long long budget_ms = 0;  // 0 = unlimited
  int threads = 0;          // 0 = library default; 1 forces the serial path
};

struct Report {
  nlohmann::json body;           // schema 1: assertions, certificates, timings
  bool all_passed = false;
  bool infeasible = false;       // exit code 3
  bool budget_exhausted = false; // exit code 4

  int exit_code() const;
  std::string csv() const;  // one line per assertion
};

// Known ids: invariant-corpus | balancer-corpus | prop24 | prop23-structural
// | prop22-structural | bottle-tiling | hs-random | kolem-spotcheck.
// Deterministic given (spec, seed), independent of thread count.
Report run_experiment(const ExperimentSpec& spec);

// Full invariant bundle for one graph (chi, sigma, omega, chi_cr, D, hcf
// family, chi*, the valid sigma range).
nlohmann::json describe(const Graph& h);

// Erdos-Renyi G(n, p) from a seeded generator.
Graph random_graph(int n, const Rat& p, std::mt19937_64& rng);

// G(n, p) conditioned on minimum degree >= floor, by rejection.
Graph random_graph_min_degree(int n, const Rat& p, int floor,
                              std::mt19937_64& rng, int max_tries = 10000);

}  // namespace tilinglab
