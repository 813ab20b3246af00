#include <doctest.h>

#include <random>
#include <stdexcept>

#include "tilinglab/experiments.hpp"
#include "tilinglab/graph.hpp"

using namespace tilinglab;

TEST_CASE("describe bundles the invariants") {
  auto c5 = describe(cycle_graph(5));
  CHECK(c5["chi"] == 3);
  CHECK(c5["sigma"] == 1);
  CHECK(c5["chi_cr"] == "5/2");
  CHECK(c5["hcf_is_one"] == true);
  CHECK(c5["sigma_range"]["min"] == "1");
  CHECK(c5["sigma_range"]["max_exclusive"] == "5/3");

  auto k3 = describe(complete_graph(3));
  CHECK(k3["hcf_chi"] == "inf");
  CHECK(k3["chi_star"] == "3");

  auto k33 = describe(complete_multipartite({3, 3}));
  CHECK(k33["chi"] == 2);
  CHECK(k33["hcf_c"] == 6);
  CHECK(k33["hcf_is_one"] == false);

  CHECK_THROWS_AS(describe(Graph(0)), std::invalid_argument);
}

TEST_CASE("experiment reports are deterministic and carry exit codes") {
  ExperimentSpec spec;
  spec.id = "prop24";
  Report a = run_experiment(spec);
  Report b = run_experiment(spec);
  CHECK(a.all_passed);
  CHECK(a.exit_code() == 0);
  // Byte-identical bodies modulo the timing field.
  auto strip = [](nlohmann::json j) {
    j.erase("elapsed_ms");
    return j;
  };
  CHECK(strip(a.body) == strip(b.body));
  CHECK(a.csv() == b.csv());
  CHECK(a.csv().find("assertion,passed,detail") == 0);

  ExperimentSpec bogus;
  bogus.id = "no-such-experiment";
  Report r = run_experiment(bogus);
  CHECK(r.infeasible);
  CHECK(r.exit_code() == 3);
}

TEST_CASE("small experiment runs pass end to end") {
  for (const char* id : {"invariant-corpus", "balancer-corpus", "prop24",
                         "prop23-structural", "bottle-tiling"}) {
    ExperimentSpec spec;
    spec.id = id;
    spec.params["n"] = spec.id == "prop24" ? "20" : "5";
    if (spec.id == "prop23-structural") spec.params["n"] = "15";
    Report r = run_experiment(spec);
    CHECK(r.exit_code() == 0);
    CHECK(r.all_passed);
    CHECK(r.body["assertions"].size() > 0);
  }
}

TEST_CASE("hs-random with a reduced seed count") {
  ExperimentSpec spec;
  spec.id = "hs-random";
  spec.params["count"] = "25";
  spec.seed = 42;
  Report r = run_experiment(spec);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("serial and parallel corpus scans agree") {
  for (int threads : {1, 0}) {
    ExperimentSpec spec;
    spec.id = "invariant-corpus";
    spec.params["n"] = "6";
    spec.threads = threads;
    Report r = run_experiment(spec);
    CHECK(r.all_passed);
  }
}

TEST_CASE("random graph generation is seed-deterministic") {
  std::mt19937_64 a(7), b(7), c(8);
  Graph ga = random_graph(10, Rat(1, 2), a);
  Graph gb = random_graph(10, Rat(1, 2), b);
  CHECK(ga == gb);

  Graph floor6 = random_graph_min_degree(9, Rat(3, 4), 6, c);
  CHECK(floor6.degree_sequence().front() >= 6);
}
