#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "tilinglab/corpus.hpp"
#include "tilinglab/invariants.hpp"
#include "tilinglab/oracles.hpp"

using namespace tilinglab;

TEST_CASE("chromatic_number on known graphs") {
  CHECK(chromatic_number(complete_graph(4)) == 4);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(complete_multipartite({3, 3})) == 2);
  CHECK(chromatic_number(Graph(3)) == 1);
}

TEST_CASE("optimal_profiles on known graphs") {
  CHECK(optimal_profiles(cycle_graph(5)) ==
        std::set<ColoringProfile>{{1, 2, 2}});
  CHECK(optimal_profiles(path_graph(3)) == std::set<ColoringProfile>{{1, 2}});
  CHECK(optimal_profiles(complete_graph(4)) ==
        std::set<ColoringProfile>{{1, 1, 1, 1}});
}

TEST_CASE("sigma_min on known graphs") {
  CHECK(sigma_min(cycle_graph(5)) == 1);
  CHECK(sigma_min(complete_multipartite({3, 3})) == 3);
  CHECK(sigma_min(complete_graph(4)) == 1);
}

TEST_CASE("chi_critical values and domain") {
  for (int r = 2; r <= 5; ++r) CHECK(chi_critical(complete_graph(r)) == Rat(r));
  CHECK(chi_critical(cycle_graph(5)) == Rat(5, 2));
  CHECK(chi_critical(path_graph(3)) == Rat(3, 2));
  CHECK_THROWS_AS(chi_critical(Graph(3)), std::domain_error);
}

TEST_CASE("omega_param range checks") {
  Graph c5 = cycle_graph(5);
  CHECK(omega_param(c5, Rat(1)) == Rat(2));
  CHECK(omega_param(c5, Rat(3, 2)) == Rat(7, 4));
  // sigma below sigma(H) or at h/r is rejected.
  CHECK_THROWS_AS(omega_param(c5, Rat(1, 2)), std::domain_error);
  CHECK_THROWS_AS(omega_param(c5, Rat(5, 3)), std::domain_error);
  // K_{2,2,2} has sigma = 2 = h/r: empty range.
  CHECK_THROWS_AS(omega_param(complete_multipartite({2, 2, 2}), Rat(2)),
                  std::domain_error);
}

TEST_CASE("hcf_report on known graphs") {
  HcfReport k3 = hcf_report(complete_graph(3));
  CHECK(k3.D == std::vector<int>{0});
  CHECK_FALSE(k3.hcf_chi.has_value());  // infinity
  CHECK_FALSE(k3.hcf_is_one);
  CHECK(k3.chi_star == Rat(3));

  HcfReport c5 = hcf_report(cycle_graph(5));
  CHECK(c5.D == std::vector<int>{0, 1});
  CHECK(c5.hcf_chi == 1);
  CHECK(c5.hcf_is_one);
  CHECK(c5.chi_star == Rat(5, 2));

  HcfReport pk = hcf_report(path_graph(3).disjoint_union(complete_graph(2)));
  CHECK(pk.hcf_c == 1);  // gcd(3, 2)
  CHECK(pk.D == std::vector<int>{1});
  CHECK(pk.hcf_chi == 1);
  CHECK(pk.hcf_is_one);

  HcfReport k33 = hcf_report(complete_multipartite({3, 3}));
  CHECK(k33.hcf_c == 6);
  CHECK(k33.D == std::vector<int>{0});
  CHECK_FALSE(k33.hcf_is_one);

  CHECK_THROWS_AS(hcf_report(Graph(2)), std::domain_error);
}

TEST_CASE("chromatic invariants agree with the brute-force oracle up to 6 vertices") {
  for (const Graph& h : graphs_up_to_order(6)) {
    CHECK(chromatic_number(h) == oracle_chromatic_number(h));
    CHECK(optimal_profiles(h) == oracle_profiles(h));
  }
}

TEST_CASE("invariant identities across the small corpus") {
  for (const Graph& h : graphs_up_to_order(6)) {
    if (h.size() == 0) continue;
    HcfReport rep = hcf_report(h);
    int chi = rep.chi;
    // chi - 1 < chi_cr <= chi.
    CHECK(Rat(chi - 1) < rep.chi_cr);
    CHECK(rep.chi_cr <= Rat(chi));
    // sigma is the minimum entry over profiles.
    int min_entry = h.order();
    bool balanced = true;
    for (const auto& prof : optimal_profiles(h)) {
      min_entry = std::min(min_entry, prof.front());
      balanced = balanced && prof.front() == prof.back();
    }
    CHECK(rep.sigma == min_entry);
    // chi_cr = chi exactly when every profile is balanced.
    CHECK((rep.chi_cr == Rat(chi)) == balanced);
    // hcf_c divides |H|.
    CHECK(h.order() % rep.hcf_c == 0);
    // hcf_chi is infinite exactly when D = {0}.
    CHECK(rep.hcf_chi.has_value() == (rep.D != std::vector<int>{0}));
  }
}
