#include "doctest.h"
#include "territoire/oracles.hpp"
#include "territoire/pointcount.hpp"
#include "territoire/territory.hpp"

using namespace territoire;

namespace {

// All assignments of `vars` variables over F_p, in lexicographic order.
std::vector<ChartPoint> all_assignments(std::size_t vars, std::uint32_t p) {
  std::vector<ChartPoint> out;
  ChartPoint x(vars, 0);
  while (true) {
    out.push_back(x);
    std::size_t i = vars;
    while (i > 0 && ++x[i - 1] == p) x[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

bool satisfies(const PolynomialSystem& s, const ChartPoint& x, std::uint32_t p) {
  for (const auto& e : s.closed) {
    if (e.evaluate_mod(x, p) != 0) return false;
  }
  if (!s.open_required) return true;
  for (const auto& e : s.open) {
    if (e.evaluate_mod(x, p) != 0) return true;
  }
  return false;
}

std::optional<Subalgebra<PrimeField>> as_subalgebra(const AlgebraPtr<PrimeField>& alg, const Matrix<PrimeField>& m) {
  try {
    return Subalgebra<PrimeField>::from_span(alg, m);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("polynomial arithmetic and determinants") {
  auto x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  auto one = Polynomial::constant(2, 1);
  auto p = (x + one) * (x - one);
  CHECK(p == x * x - one);
  CHECK(p.total_degree() == 2);
  CHECK(determinant({{x, y}, {y, x}}) == x * x - y * y);
  CHECK(p.evaluate_mod({3, 0}, 5) == 3);
  CHECK((x - x).is_zero());
}

TEST_CASE("charts cover the Grassmannian") {
  CHECK(all_charts(5, 2).size() == 10);
  Chart ch(4, {0, 2});
  CHECK(ch.nonpivots() == std::vector<std::size_t>{1, 3});
  CHECK(ch.variable_names() == std::vector<std::string>{"a_{1,1}", "a_{1,2}", "a_{2,1}", "a_{2,2}"});
  CHECK_THROWS_AS(Chart(3, {2, 1}), PreconditionError);
  CHECK_THROWS_AS(Chart(3, {3}), PreconditionError);
}

TEST_CASE("closure equations vanish exactly at subalgebras") {
  const std::uint32_t p = 2;
  for (const auto& [name, alg] : oracles::test_battery(p)) {
    if (alg->dim() > 4) continue;
    auto ints = integer_structure(*alg);
    for (std::size_t delta = 1; delta < alg->dim(); ++delta) {
      for (const auto& ch : all_charts(alg->dim(), delta)) {
        auto sys = chart_equations(ints, delta, ch);
        for (const auto& x : all_assignments(ch.num_variables(), p)) {
          INFO(name << " chart " << ch.to_string());
          auto space = chart_point_to_subspace(ch, x, alg->field());
          CHECK(satisfies(sys, x, p) == as_subalgebra(alg, space).has_value());
        }
      }
    }
  }
}

TEST_CASE("rank conditions select the requested delta'") {
  const std::uint32_t p = 3;
  PrimeField f(p);
  for (const auto& c : {ConductanceVector({2, 2}), ConductanceVector({3, 1}), ConductanceVector({1, 1, 1, 1})}) {
    auto alg = make_truncated_product(c, f);
    auto ints = integer_structure(*alg);
    const std::size_t delta = 2;
    for (std::size_t dp = 1; dp <= delta; ++dp) {
      for (const auto& ch : all_charts(alg->dim(), delta)) {
        auto sys = chart_equations(ints, delta, ch);
        sys.merge(fitting_rank_conditions(ints, delta, dp, ch));
        for (const auto& x : all_assignments(ch.num_variables(), p)) {
          auto b = as_subalgebra(alg, chart_point_to_subspace(ch, x, f));
          const bool expected = b && delta_prime(*b) == static_cast<int>(dp);
          INFO("c = " << c.to_string() << " delta' = " << dp);
          CHECK(satisfies(sys, x, p) == expected);
        }
      }
    }
  }
}

TEST_CASE("containment equations cut out subspaces of A+") {
  const std::uint32_t p = 3;
  PrimeField f(p);
  ConductanceVector c({2, 2});
  auto alg = make_truncated_product(c, f);
  auto plus = make_plus_subalgebra(c, Rationals{});
  auto ann = integer_annihilators(plus.basis(), plus.pivots());
  auto plus_p = make_plus_subalgebra(c, f);
  auto ints = integer_structure(*alg);
  for (const auto& ch : all_charts(4, 2)) {
    PolynomialSystem sys;
    sys.variables = ch.variable_names();
    sys.merge(containment_equations(ints, ch, ann));
    for (const auto& x : all_assignments(ch.num_variables(), p)) {
      auto space = chart_point_to_subspace(ch, x, f);
      CHECK(satisfies(sys, x, p) == row_space_contains(plus_p.basis(), space));
    }
  }
}

TEST_CASE("chart solutions agree with brute force on every battery algebra") {
  for (std::uint32_t p : {2u, 3u}) {
    for (const auto& [name, alg] : oracles::test_battery(p)) {
      auto ints = integer_structure(*alg);
      for (std::size_t delta = 1; delta <= 2 && delta < alg->dim(); ++delta) {
        auto solved = solve_on_all_charts(alg->dim(), delta, p,
                                          [&](const Chart& ch) { return chart_equations(ints, delta, ch); });
        auto brute = enumerate_subalgebras(alg, delta).points;
        REQUIRE(solved.size() == brute.size());
        for (std::size_t i = 0; i < brute.size(); ++i) {
          INFO(name << " over F_" << p);
          CHECK(std::find(solved.begin(), solved.end(), brute[i].basis()) != solved.end());
        }
      }
    }
  }
}

TEST_CASE("singularity territory counts") {
  struct Row {
    int g;
    std::vector<int> c;
    std::uint32_t p;
    std::size_t count;
  };
  const std::vector<Row> rows = {
      {1, {2}, 5, 1},         {1, {2, 2}, 5, 4},     {1, {2, 2, 2}, 3, 4}, {1, {2, 2, 2}, 5, 16},
      {2, {4}, 5, 5},         {0, {1, 1}, 7, 1},     {2, {2, 2, 2}, 3, 10}, {2, {2, 2, 2}, 2, 4},
      {0, {1, 1, 1}, 3, 1},
  };
  for (const auto& r : rows) {
    ConductanceVector c(r.c);
    INFO("Ter_S(" << r.g << ", " << c.to_string() << ") over F_" << r.p);
    auto pts = singularity_territory_points(r.g, c, r.p);
    CHECK(pts.size() == r.count);
    for (const auto& b : pts) {
      CHECK(conductor(b).rows() == 0);
      CHECK(delta(b) == r.g + static_cast<int>(c.size()) - 1);
    }
  }
}

TEST_CASE("singularity types outside the admissible range are rejected by name") {
  CHECK_THROWS_WITH_AS(check_singularity_type(1, ConductanceVector({3, 2})), doctest::Contains("sum c <= 2(g + m - 1)"),
                       PreconditionError);
  CHECK_THROWS_WITH_AS(check_singularity_type(1, ConductanceVector({1})), doctest::Contains("g + m - 1 < sum c"),
                       PreconditionError);
  CHECK_NOTHROW(check_singularity_type(2, ConductanceVector({3, 2})));
}

TEST_CASE("solver budgets fail closed") {
  Budgets tight;
  tight.solve_assignments = 10;
  Chart ch(4, {0, 1});
  auto sys = singularity_territory_system(1, ConductanceVector({2, 2}), ch);
  CHECK_THROWS_AS(solve_over_prime_field(sys, 5, tight), BudgetError);
}

TEST_CASE("systems print with provenance tags") {
  Chart ch(4, {0, 1});
  auto sys = singularity_territory_system(1, ConductanceVector({2, 2}), ch);
  auto text = sys.to_string();
  CHECK(text.find("[closure]") != std::string::npos);
  CHECK(text.find("[containment]") != std::string::npos);
  CHECK(text.find("[fitting-rank]") != std::string::npos);
  CHECK(sys.open_required);
}
