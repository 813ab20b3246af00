#include <doctest.h>

#include <stdexcept>

#include "tilinglab/constructions.hpp"
#include "tilinglab/corpus.hpp"
#include "tilinglab/invariants.hpp"
#include "tilinglab/solver.hpp"
#include "tilinglab/thresholds.hpp"

using namespace tilinglab;

TEST_CASE("bottle_graph") {
  CHECK(canonical_code(bottle_graph({2, 1, 2})) ==
        canonical_code(path_graph(3)));
  CHECK(bottle_graph({3, 1, 2}).order() == 5);
  CHECK(bottle_graph({3, 2, 4}) == complete_multipartite({2, 4, 4}));
  CHECK_THROWS_AS(bottle_graph({3, 4, 2}), std::invalid_argument);
}

TEST_CASE("base_bottle formula values") {
  auto spec = base_bottle(cycle_graph(5), Rat(1));
  CHECK(spec.r == 3);
  CHECK(spec.neck == 2);
  CHECK(spec.width == 4);

  auto half = base_bottle(cycle_graph(5), Rat(3, 2));
  CHECK(half.neck == 6);
  CHECK(half.width == 7);

  CHECK_THROWS_AS(base_bottle(complete_multipartite({2, 2, 2}), Rat(2)),
                  std::domain_error);
}

TEST_CASE("base_bottle keeps the neck/width ratio equal to sigma/omega") {
  for (const Graph& h : graphs_up_to_order(6)) {
    if (h.size() == 0 || !hcf_is_one(h)) continue;
    Rat sh(sigma_min(h));
    if (!(omega_of(h) > sh)) continue;
    Rat omega = omega_param(h, sh);
    auto spec = base_bottle(h, sh);
    CHECK(Rat(spec.neck, spec.width) == sh / omega);
    CHECK(spec.neck < spec.width);
  }
}

TEST_CASE("modified_bottle") {
  auto same = modified_bottle(5, 3, Rat(1), Rat(0), 4);
  CHECK(same.neck == 2);
  CHECK(same.width == 4);

  auto wider = modified_bottle(5, 3, Rat(1), Rat(1, 2), 4);
  CHECK(wider.neck == 3);
  CHECK(wider.width == 4);

  // Non-integral neck names the smallest workable width.
  try {
    modified_bottle(5, 3, Rat(1), Rat(1, 3), 5);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("6") != std::string::npos);
  }
}

TEST_CASE("prop22 certificate holds at desk scale") {
  auto [g, cert] = prop22_graph({2, 2, 3}, Rat(2), 112, Rat(1));
  CHECK(cert.all_passed());

  // The special vertex is alone in V_1 and has no neighbor in V_3.
  auto v1 = cert.class_range("V_1");
  CHECK(v1.second - v1.first == 1);
  auto v3 = cert.class_range("V_3");
  int v = v1.first;
  CHECK(g.degree(v) == g.order() - 1 - (v3.second - v3.first));

  // No copy of the pattern goes through v.
  Graph pattern = complete_multipartite({2, 2, 3});
  EnumerateOptions opts;
  opts.anchor = v;
  CHECK(enumerate_copies(g, pattern, opts).copies.empty());

  // Default mode enforces the stated divisibility of sqrt(n).
  CHECK_THROWS_AS(prop22_graph({2, 2, 3}, Rat(2), 112), std::invalid_argument);
}

TEST_CASE("prop23 certificate holds at the smallest feasible instance") {
  BottleSpec b{2, 1, 2};

  // Infeasible parameters name a workable order in the error message.
  try {
    prop23_graph(b, Rat(1, 15), 1, 3);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("15") != std::string::npos);
  }

  auto [g, cert] = prop23_graph(b, Rat(1, 15), 1, 15);
  CHECK(g.order() == 15);
  CHECK(cert.all_passed());
  for (const auto& check : cert.checks) CHECK(check.passed);
}

TEST_CASE("prop24 sizes, certificate and degree split") {
  auto [g, cert] = prop24_graph(5, 3, 1, Rat(1, 10), 20);
  CHECK(cert.all_passed());
  auto v1 = cert.class_range("V_1");
  auto v2 = cert.class_range("V_2");
  auto v3 = cert.class_range("V_3");
  CHECK(v1.second - v1.first == 2);
  CHECK(v2.second - v2.first == 12);
  CHECK(v3.second - v3.first == 6);
  CHECK(g.order() == 20);

  // Complete multipartite: degree = n - own class size.
  auto dseq = g.degree_sequence();
  CHECK(dseq.front() == 8);
  CHECK(dseq.back() == 18);

  // The largest pattern tiling leaves more than eta n vertices uncovered.
  auto best = max_tiling(g, cycle_graph(5));
  CHECK(best.optimal);
  CHECK(best.tiling.copies.size() == 2);

  // Non-integral class sizes are refused with a feasible suggestion.
  CHECK_THROWS_AS(prop24_graph(5, 3, 1, Rat(1, 10), 21), std::invalid_argument);
}

TEST_CASE("prop24 degree sequence splits the main threshold exactly") {
  auto [g, cert] = prop24_graph(5, 3, 1, Rat(1, 10), 20);
  auto verdict = check_main(g.degree_sequence(), 5, 3, Rat(1), Rat(1, 10));
  CHECK_FALSE(verdict.passes);
  // Everything from the high-degree classes onward satisfies the bound; the
  // low plateau fails from its first index.
  CHECK(verdict.first_violation->index == 1);
}
