#include "doctest.h"
#include "territoire/oracles.hpp"
#include "territoire/pointcount.hpp"

using namespace territoire;

TEST_CASE("enumeration tests exactly the subspaces containing the unit") {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    auto alg = make_truncated_product(ConductanceVector({2, 1, 1}), f);
    for (std::size_t delta = 1; delta < 4; ++delta) {
      auto r = enumerate_subalgebras(alg, delta);
      CHECK(r.candidates == gaussian_binomial(3, 3 - delta, p));
    }
  }
}

TEST_CASE("enumeration edge cases") {
  PrimeField f(3);
  auto alg = make_truncated_product(ConductanceVector({2, 1}), f);
  CHECK(enumerate_subalgebras(alg, 0).points.size() == 1);
  CHECK(enumerate_subalgebras(alg, 3).points.empty());
  Budgets tight;
  tight.enumeration_candidates = 5;
  CHECK_THROWS_AS(enumerate_subalgebras(make_truncated_product(ConductanceVector({2, 2, 2}), f), 3, tight), BudgetError);
}

TEST_CASE("thread count does not change results") {
  PrimeField f(3);
  auto alg = make_truncated_product(ConductanceVector({2, 2, 1}), f);
  for (std::size_t delta = 1; delta <= 3; ++delta) {
    auto one = enumerate_subalgebras(alg, delta, {}, 1);
    auto three = enumerate_subalgebras(alg, delta, {}, 3);
    CHECK(one.points == three.points);
    CHECK(one.candidates == three.candidates);
  }
}

TEST_CASE("set partitions are counted by Bell numbers") {
  const std::vector<std::size_t> bell = {1, 1, 2, 5, 15, 52, 203};
  for (std::size_t m = 0; m < bell.size(); ++m) CHECK(set_partitions(m).size() == bell[m]);
  auto parts = set_partitions(3);
  CHECK(parts.front() == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
}

TEST_CASE("F_p^m has one subalgebra per set partition") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    for (unsigned m = 2; m <= 4; ++m) {
      ConductanceVector c(std::vector<int>(m, 1));
      auto alg = make_truncated_product(c, f);
      for (unsigned delta = 1; delta < m; ++delta) {
        CHECK(enumerate_subalgebras(alg, delta).points.size() == oracles::stirling2(m, m - delta));
      }
    }
  }
}

TEST_CASE("buckets group points by their invariants") {
  PrimeField f(3);
  ConductanceVector c({4});
  auto pts = enumerate_subalgebras(make_truncated_product(c, f), 2).points;
  auto buckets = bucketize(pts, c);
  REQUIRE(buckets.size() == 2);
  std::size_t total = 0;
  for (const auto& b : buckets) {
    total += b.points.size();
    for (const auto& x : b.points) CHECK(delta_prime(x) == b.key.delta_prime);
  }
  CHECK(total == pts.size());
  CHECK(bucketize(pts).front().key.profile == std::nullopt);
}

TEST_CASE("decomposition identity") {
  struct Row {
    std::vector<int> c;
    int delta, delta_prime;
  };
  for (const auto& r : std::vector<Row>{{{2, 2}, 2, 2}, {{2, 2, 2}, 3, 3}, {{3, 2}, 3, 2}, {{1, 1, 1, 1}, 2, 2}}) {
    for (std::uint32_t p : {2u, 3u}) {
      auto rep = verify_decomposition(ConductanceVector(r.c), r.delta, r.delta_prime, p);
      INFO(ConductanceVector(r.c).to_string() << " over F_" << p);
      CHECK(rep.ok);
      CHECK(rep.predicted_total == rep.observed_total);
      CHECK(rep.unexplained.empty());
    }
  }
  auto rep = verify_decomposition(ConductanceVector({2, 2, 2}), 3, 3, 5);
  CHECK(rep.observed_total == 29);
  CHECK_THROWS_AS(verify_decomposition(ConductanceVector({2, 2}), 2, 1, 3), PreconditionError);
}

TEST_CASE("automorphism groups") {
  for (std::uint32_t p : {2u, 3u}) {
    for (const auto& c : {ConductanceVector({2, 2}), ConductanceVector({3, 1}), ConductanceVector({1, 1, 1}),
                          ConductanceVector({2, 1, 1})}) {
      auto elems = aut_elements(c, p);
      CHECK(elems.size() == aut_group_order(c, p));
      CHECK(oracles::aut_group_closed(c, p));
      auto id = aut_matrix(c, elems.front(), PrimeField(p));
      for (std::size_t i = 0; i < id.rows(); ++i)
        for (std::size_t j = 0; j < id.cols(); ++j) CHECK(id(i, j) == (i == j ? 1u : 0u));
    }
  }
  CHECK(aut_group_order(ConductanceVector({2, 2}), 5) == 32);
  CHECK(aut_group_order(ConductanceVector({3}), 3) == 6);
  CHECK(aut_group_order(ConductanceVector({1, 1, 1}), 7) == 6);
  Budgets tight;
  tight.group_order = 4;
  CHECK_THROWS_AS(aut_elements(ConductanceVector({2, 2}), 5, tight), BudgetError);
}

TEST_CASE("automorphisms preserve invariants and orbits satisfy orbit-stabilizer") {
  const std::uint32_t p = 3;
  PrimeField f(p);
  ConductanceVector c({2, 2, 1});
  auto pts = enumerate_subalgebras(make_truncated_product(c, f), 2).points;
  auto group = aut_elements(c, p);
  for (const auto& b : pts) {
    for (const auto& g : group) {
      auto image = act(g, c, b);
      CHECK(delta_prime(image) == delta_prime(b));
      CHECK(gluing_profile(c, image).delta() == gluing_profile(c, b).delta());
    }
  }
  auto rep = orbits(pts, c, group);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
    covered += rep.orbits[i].size();
    CHECK(rep.orbits[i].size() * rep.stabilizer_orders[i] == rep.group_order);
    const auto key = bucketize({pts[rep.orbits[i][0]]}, c).front().key;
    for (auto idx : rep.orbits[i]) CHECK(bucketize({pts[idx]}, c).front().key.delta_prime == key.delta_prime);
  }
  CHECK(covered == pts.size());
}

TEST_CASE("orbits reject sets that are not invariant") {
  const std::uint32_t p = 5;
  ConductanceVector c({2, 2});
  auto pts = singularity_territory_points(1, c, p);
  pts.pop_back();
  CHECK_THROWS_AS(orbits(pts, c, aut_elements(c, p)), PreconditionError);
}
