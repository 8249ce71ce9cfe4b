#include "doctest.h"
#include "territoire/algebra.hpp"
#include "territoire/oracles.hpp"
#include "territoire/subspaces.hpp"

using namespace territoire;

TEST_CASE("prime field arithmetic agrees with integer arithmetic") {
  for (std::uint32_t p : {2u, 3u, 7u, 101u}) {
    PrimeField f(p);
    for (std::uint32_t a = 1; a < std::min(p, 40u); ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      for (std::uint32_t b = 0; b < std::min(p, 20u); ++b) {
        CHECK(f.add(a, b) == (a + b) % p);
        CHECK(f.mul(a, b) == (std::uint64_t{a} * b) % p);
        CHECK(f.add(f.sub(a, b), b) == a);
      }
    }
  }
  CHECK_THROWS_AS(FieldSpec::prime(1), InputError);
  CHECK_THROWS_AS(FieldSpec::prime(9), InputError);
  CHECK(FieldSpec::prime(2147483647).characteristic == 2147483647u);
}

TEST_CASE("rational RREF is canonical for the row space") {
  Rationals q;
  auto row = [&](std::initializer_list<long long> xs) {
    Vec<Rationals> v;
    for (auto x : xs) v.push_back(q.from_int(x));
    return v;
  };
  auto a = Matrix<Rationals>::from_rows(q, 3, {row({1, 2, 3}), row({2, 4, 7})});
  auto b = Matrix<Rationals>::from_rows(q, 3, {row({3, 6, 10}), row({0, 0, 5})});
  auto [ra, pa] = rref(a);
  auto [rb, pb] = rref(b);
  CHECK(ra == rb);
  CHECK(pa == std::vector<std::size_t>{0, 2});
  CHECK(rank(Matrix<Rationals>::from_rows(q, 3, {row({1, 1, 1}), row({2, 2, 2})})) == 1);
}

TEST_CASE("subspace enumeration matches Gaussian binomials and explicit spans") {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (std::size_t m = 1; m <= 4; ++m) {
      for (std::size_t k = 0; k <= m; ++k) {
        std::uint64_t count = 0;
        for_each_subspace(f, m, k, [&](const Matrix<PrimeField>&) { ++count; });
        CHECK(count == gaussian_binomial(m, k, p));
        if (k >= 1 && m <= 3) CHECK(count == oracles::subspace_count_by_spans(m, k, p));
      }
    }
  }
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(5, 2, 3) == 1210);
}

TEST_CASE("conductance vectors reject malformed input") {
  CHECK_THROWS_AS(ConductanceVector({}), InputError);
  CHECK_THROWS_AS(ConductanceVector({2, 3}), InputError);
  CHECK_THROWS_AS(ConductanceVector({0}), InputError);
  ConductanceVector c({3, 2, 2});
  CHECK(c.sum() == 7);
  CHECK(c.offset(2) == 5);
}

TEST_CASE("every algebra in the battery is commutative, associative and unital") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (const auto& [name, alg] : oracles::test_battery(p)) {
      INFO(name << " over F_" << p);
      CHECK(validate_algebra(*alg).empty());
    }
  }
  Rationals q;
  CHECK(validate_algebra(*make_truncated_product(ConductanceVector({3, 1}), q)).empty());
}

TEST_CASE("truncated product multiplication") {
  PrimeField f(7);
  auto a = make_truncated_product(ConductanceVector({3, 1}), f);
  REQUIRE(a->dim() == 4);
  // (t, 0) squared is (t^2, 0); cubed is 0.
  auto t = a->basis_vector(1);
  auto t2 = a->multiply(t, t);
  CHECK(t2 == a->basis_vector(2));
  CHECK(a->multiply(t2, t) == Vec<PrimeField>(4, 0));
  CHECK(a->unit() == Vec<PrimeField>{1, 0, 0, 1});
  CHECK(a->truncated_product_shape() == ConductanceVector({3, 1}));
}

TEST_CASE("subalgebra construction validates closure and the unit") {
  PrimeField f(5);
  auto a = make_truncated_product(ConductanceVector({4}), f);
  auto ok = Matrix<PrimeField>::from_rows(f, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}});
  CHECK(Subalgebra<PrimeField>::from_span(a, ok).dim() == 2);
  auto not_closed = Matrix<PrimeField>::from_rows(f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK_THROWS_AS(Subalgebra<PrimeField>::from_span(a, not_closed), InputError);
  auto no_unit = Matrix<PrimeField>::from_rows(f, 4, {{0, 0, 1, 0}});
  CHECK_THROWS_AS(Subalgebra<PrimeField>::from_span(a, no_unit), InputError);
  auto gen = subalgebra_from_generators<PrimeField>(a, {a->basis_vector(2)});
  CHECK(gen == Subalgebra<PrimeField>::from_span(a, ok));
}

TEST_CASE("A+ is the subalgebra k + radical") {
  PrimeField f(3);
  ConductanceVector c({2, 2, 1});
  auto plus = make_plus_subalgebra(c, f);
  CHECK(plus.dim() == 3);
  CHECK(plus.ambient().dim() == 5);
}

TEST_CASE("reduction mod p and integer structure") {
  Rationals q;
  auto a = make_monomial_algebra<Rationals>({{0, 0}, {1, 0}, {0, 1}, {1, 1}}, q);
  auto r = reduce_mod_p(*a, 3);
  CHECK(validate_algebra(*r).empty());
  auto ints = integer_structure(*a);
  auto ints_p = integer_structure(*r);
  CHECK(ints.dim == ints_p.dim);
  CHECK(ints.table == ints_p.table);
}
