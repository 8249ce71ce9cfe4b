#include "doctest.h"
#include "territoire/invariants.hpp"
#include "territoire/oracles.hpp"
#include "territoire/pointcount.hpp"

using namespace territoire;

namespace {

template <class F>
Subalgebra<F> span_of(const AlgebraPtr<F>& a, const std::vector<std::vector<long long>>& rows) {
  Matrix<F> m(a->field(), 0, a->dim());
  for (const auto& r : rows) {
    Vec<F> v;
    for (auto x : r) v.push_back(a->field().from_int(x));
    m.append_row(v);
  }
  return Subalgebra<F>::from_span(a, m);
}

}  // namespace

TEST_CASE_TEMPLATE("small singularities have the expected invariants", F, Rationals, PrimeField) {
  F f = [] {
    if constexpr (std::is_same_v<F, PrimeField>) {
      return PrimeField(5);
    } else {
      return Rationals{};
    }
  }();
  struct Row {
    std::vector<int> c;
    std::vector<std::vector<long long>> basis;
    int delta, delta_prime, genus;
  };
  const std::vector<Row> rows = {
      {{1, 1}, {{1, 1}}, 1, 1, 0},
      {{2}, {{1, 0}}, 1, 1, 1},
      {{2, 2}, {{1, 0, 1, 0}, {0, 1, 0, 1}}, 2, 2, 1},
      {{4}, {{1, 0, 0, 0}, {0, 0, 1, 0}}, 2, 2, 2},
      {{1, 1, 1}, {{1, 1, 1}}, 2, 1, 0},
      {{2, 2}, {{1, 0, 1, 0}, {0, 1, 0, 0}}, 2, 1, 1},
  };
  for (const auto& r : rows) {
    ConductanceVector c(r.c);
    auto b = span_of(make_truncated_product(c, f), r.basis);
    auto rec = full_record(b, c);
    INFO("c = " << c.to_string());
    CHECK(rec.delta == r.delta);
    CHECK(rec.delta_prime == r.delta_prime);
    CHECK(rec.gorenstein == (r.delta == r.delta_prime));
    REQUIRE(rec.genus);
    CHECK(*rec.genus == r.genus);
    CHECK(*rec.branches == static_cast<int>(c.size()));
  }
}

TEST_CASE("the cusp with a transverse line has conductances (2,1) and one gluing part") {
  PrimeField f(3);
  ConductanceVector c({2, 2});
  auto b = span_of(make_truncated_product(c, f), {{1, 0, 1, 0}, {0, 1, 0, 0}});
  auto rec = full_record(b, c);
  CHECK(*rec.branch_conductances == std::vector<int>{2, 1});
  CHECK(rec.profile->partition == std::vector<std::vector<std::size_t>>{{0, 1}});
  CHECK(rec.conductor.rows() == 1);
}

TEST_CASE("the whole algebra is reported with the delta = 0 convention") {
  PrimeField f(2);
  ConductanceVector c({2, 1});
  auto rec = full_record(whole_algebra(make_truncated_product(c, f)), c);
  CHECK(rec.delta == 0);
  CHECK(rec.delta_prime == 0);
  CHECK(rec.gorenstein);
  CHECK(rec.trivial_convention);
  CHECK_FALSE(rec.genus);
}

TEST_CASE("invariant identities hold on every small subalgebra") {
  for (std::uint32_t p : {2u, 3u}) {
    for (const auto& [name, alg] : oracles::truncated_products(p, 5)) {
      const auto& c = *alg->truncated_product_shape();
      for (std::size_t delta = 1; delta < alg->dim() && delta <= 3; ++delta) {
        for (const auto& b : enumerate_subalgebras(alg, delta).points) {
          INFO(name << " over F_" << p);
          auto rec = full_record(b, c);
          CHECK(rec.delta == static_cast<int>(delta));
          CHECK(1 <= rec.delta_prime);
          CHECK(rec.delta_prime <= rec.delta);
          CHECK(static_cast<int>(alg->dim() - rec.conductor.rows()) == rec.delta + rec.delta_prime);
          int sum = 0;
          for (int x : *rec.branch_conductances) sum += x;
          CHECK(sum == rec.delta + rec.delta_prime);
          CHECK(rec.profile->delta() == rec.delta);
          CHECK(row_space_contains(b.basis(), rec.conductor));
          auto [cond, piv] = rref(rec.conductor);
          CHECK_FALSE(ideal_violation(*alg, cond, piv));
        }
      }
    }
  }
}

TEST_CASE("conductor is the largest ideal over F_2 on non-reduced and non-split algebras") {
  for (const auto& [name, alg] : oracles::test_battery(2)) {
    for (std::size_t delta = 1; delta < alg->dim(); ++delta) {
      for (const auto& b : enumerate_subalgebras(alg, delta).points) {
        INFO(name);
        CHECK(conductor_is_largest_ideal(b));
      }
    }
  }
}

TEST_CASE("conductance-aware invariants need a truncated product ambient") {
  PrimeField f(2);
  auto alg = make_monomial_algebra<PrimeField>({{0, 0}, {1, 0}, {0, 1}}, f);
  auto b = whole_algebra(alg);
  auto rec = full_record(b);
  CHECK_FALSE(rec.branch_conductances);
  CHECK_THROWS_AS(gluing_profile(ConductanceVector({2, 1}), b), PreconditionError);
}
