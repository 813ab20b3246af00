#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tilinglab/balancer.hpp"
#include "tilinglab/corpus.hpp"
#include "tilinglab/invariants.hpp"

using namespace tilinglab;

TEST_CASE("bezout identities") {
  auto r = bezout({3, 2});
  CHECK(r.hcf == 1);
  CHECK(r.coefficients[0] * 3 + r.coefficients[1] * 2 == 1);

  auto even = bezout({4, 6});
  CHECK(even.hcf == 2);
  CHECK(even.coefficients[0] * 4 + even.coefficients[1] * 6 == 2);

  auto single = bezout({5});
  CHECK(single.hcf == 5);
  CHECK(single.coefficients == std::vector<long long>{1});

  auto with_zero = bezout({0, 7, 0});
  CHECK(with_zero.hcf == 7);
  CHECK(with_zero.coefficients[0] == 0);
  CHECK(with_zero.coefficients[2] == 0);

  CHECK_THROWS_AS(bezout({0, 0}), std::domain_error);
}

TEST_CASE("bezout identity holds on random tuples") {
  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<long long> val(-50, 50);
  std::uniform_int_distribution<int> len(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<long long> vals(len(rng));
    bool nonzero = false;
    for (auto& v : vals) {
      v = val(rng);
      nonzero = nonzero || v != 0;
    }
    if (!nonzero) vals[0] = 1;
    auto r = bezout(vals);
    CHECK(r.hcf > 0);
    long long sum = 0;
    for (size_t i = 0; i < vals.size(); ++i)
      sum += r.coefficients[i] * vals[i];
    CHECK(sum == r.hcf);
    for (auto v : vals) CHECK((v == 0 || v % r.hcf == 0));
  }
}

TEST_CASE("p_subsets enumerates all index choices in order") {
  auto two = p_subsets({1, 2, 2}, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].indices == std::vector<int>{1, 2});
  CHECK(two[0].sum == 3);
  CHECK(two[1].sum == 3);
  CHECK(two[2].sum == 4);

  auto one = p_subsets({1, 2, 2}, 1);
  REQUIRE(one.size() == 3);
  CHECK(one[0].sum == 1);
  CHECK(one[1].sum == 2);
  CHECK(one[2].sum == 2);

  auto three = p_subsets({1, 1, 1, 1}, 3);
  REQUIRE(three.size() == 4);
  for (const auto& s : three) CHECK(s.sum == 3);

  CHECK_THROWS_AS(p_subsets({1, 2, 2}, 3), std::invalid_argument);
  CHECK_THROWS_AS(p_subsets({1, 2, 2}, 0), std::invalid_argument);
}

namespace {

// Multiset of class indices used by a partition, for round-trip checks.
std::vector<int> index_multiset(const ZPartition& z) {
  std::vector<int> out{z.singleton_index};
  for (const auto& part : z.parts)
    out.insert(out.end(), part.indices.begin(), part.indices.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("z_partition on known inputs") {
  auto z = z_partition({1, 2, 2}, 2, 1, 2);
  CHECK(z.singleton_index == 2);
  CHECK(z.singleton_value == 2);
  CHECK(z.parts.size() == 3);

  auto tiny = z_partition({1, 1}, 1, 1, 1);
  CHECK(tiny.singleton_index == 1);
  CHECK(tiny.parts.size() == 2);
}

TEST_CASE("z_partition round-trips for every profile of small graphs") {
  for (const Graph& h : graphs_up_to_order(6)) {
    if (h.size() == 0) continue;
    for (const auto& prof : optimal_profiles(h)) {
      int r = static_cast<int>(prof.size());
      if (r < 2) continue;
      for (int p = 1; p <= r - 1; ++p)
        for (int J = 1; J <= r; ++J)
          for (int L = 1; L <= r; ++L) {
            auto z = z_partition(prof, p, J, L);
            // Removing the partition reproduces the source multiset: the
            // index J appears p+1 times, every other index p times.
            std::vector<int> expect;
            for (int i = 1; i <= r; ++i)
              for (int m = 0; m < p + (i == J ? 1 : 0); ++m)
                expect.push_back(i);
            CHECK(index_multiset(z) == expect);
            CHECK(static_cast<int>(z.parts.size()) == r);
            for (const auto& part : z.parts)
              CHECK(static_cast<int>(part.indices.size()) == p);
          }
    }
  }
}

TEST_CASE("balance_bipartite") {
  auto pk = balance_bipartite({2, 3}, 5);
  CHECK(verify_solution(pk));
  long long sum = 0;
  for (size_t i = 0; i < pk.component_orders.size(); ++i)
    sum += pk.component_coefficients[i] * pk.component_orders[i];
  CHECK(sum % 5 == 1);

  auto unit = balance_bipartite({1, 4}, 5);
  CHECK(verify_solution(unit));

  auto triple = balance_bipartite({2, 3, 4}, 9);
  CHECK(verify_solution(triple));

  CHECK_THROWS_AS(balance_bipartite({2, 4}, 6), std::domain_error);
}

TEST_CASE("balance_multipartite on known profiles") {
  std::set<ColoringProfile> c5{{1, 2, 2}};
  for (int p : {1, 2}) {
    auto sol = balance_multipartite(c5, p, 5);
    CHECK(verify_solution(sol));
    long long total = 0;
    auto subs = p_subsets({1, 2, 2}, p);
    for (size_t i = 0; i < subs.size(); ++i)
      total += sol.coefficients[0][i] * subs[i].sum;
    CHECK(((total % 5) + 5) % 5 == 1);
  }

  std::set<ColoringProfile> k4e{{1, 1, 2}};  // K_4 minus an edge
  auto sol = balance_multipartite(k4e, 1, 4);
  CHECK(verify_solution(sol));

  // gcd of consecutive differences must be 1.
  std::set<ColoringProfile> balanced{{2, 2, 2}};
  CHECK_THROWS_AS(balance_multipartite(balanced, 1, 6), std::domain_error);
}

TEST_CASE("verify_solution rejects tampered solutions") {
  auto sol = balance_for(cycle_graph(5), 2);
  CHECK(verify_solution(sol));

  auto negative = sol;
  bool made_negative = false;
  for (auto& row : negative.coefficients)
    for (auto& c : row)
      if (!made_negative) {
        c = -1;
        made_negative = true;
      }
  CHECK_FALSE(verify_solution(negative));

  // Bump a coefficient on a sum not divisible by h: congruence breaks.
  auto bumped = sol;
  auto subs = p_subsets(bumped.profiles[0], bumped.p);
  for (size_t i = 0; i < subs.size(); ++i)
    if (subs[i].sum % bumped.modulus != 0) {
      bumped.coefficients[0][i] += 1;
      break;
    }
  bumped.a_bar += 1;
  CHECK_FALSE(verify_solution(bumped));
}

TEST_CASE("balance_for succeeds across the small divisibility-free corpus") {
  for (const Graph& h : graphs_up_to_order(6)) {
    if (h.size() == 0 || !hcf_is_one(h)) continue;
    int r = chromatic_number(h);
    if (r == 2) {
      auto sol = balance_for(h, 1);
      CHECK(verify_solution(sol));
    } else {
      for (int p = 1; p <= r - 1; ++p) CHECK(verify_solution(balance_for(h, p)));
    }
  }
}
