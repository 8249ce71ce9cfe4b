#include "territoire/territory.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "territoire/subspaces.hpp"

namespace territoire {

Chart::Chart(std::size_t ambient_dim, std::vector<std::size_t> pivots) : n_(ambient_dim), pivots_(std::move(pivots)) {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (pivots_[i] >= n_) throw PreconditionError("chart pivot " + std::to_string(pivots_[i]) + " out of range");
    if (i > 0 && pivots_[i] <= pivots_[i - 1]) throw PreconditionError("chart pivots must be strictly increasing");
  }
  std::size_t next = 0;
  for (std::size_t c = 0; c < n_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
    } else {
      nonpivots_.push_back(c);
    }
  }
}

std::vector<std::string> Chart::variable_names() const {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < codim(); ++k) {
    for (std::size_t j = 0; j < subspace_dim(); ++j) {
      out.push_back("a_{" + std::to_string(k + 1) + "," + std::to_string(j + 1) + "}");
    }
  }
  return out;
}

std::string Chart::to_string() const {
  std::string s = "pivots {";
  for (std::size_t i = 0; i < pivots_.size(); ++i) s += (i ? "," : "") + std::to_string(pivots_[i]);
  return s + "} in dimension " + std::to_string(n_);
}

std::vector<Chart> all_charts(std::size_t n, std::size_t delta) {
  if (delta > n) throw PreconditionError("codimension exceeds ambient dimension");
  std::vector<Chart> out;
  for (auto& pivots : combinations(n, n - delta)) out.emplace_back(n, std::move(pivots));
  return out;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::closure: return "closure";
    case Provenance::unit: return "unit";
    case Provenance::containment: return "containment";
    case Provenance::fitting_rank: return "fitting-rank";
  }
  return "?";
}

void PolynomialSystem::add_closed(Polynomial p, Provenance tag) {
  if (p.num_vars() != variables.size()) throw PreconditionError("polynomial over the wrong variable set");
  if (p.is_zero()) return;
  closed.push_back(std::move(p));
  closed_provenance.push_back(tag);
}

void PolynomialSystem::add_open(Polynomial p, Provenance tag) {
  if (p.num_vars() != variables.size()) throw PreconditionError("polynomial over the wrong variable set");
  open_required = true;
  if (p.is_zero()) return;
  open.push_back(std::move(p));
  open_provenance.push_back(tag);
}

void PolynomialSystem::merge(const PolynomialSystem& other) {
  if (variables.empty() && closed.empty() && open.empty() && !open_required) variables = other.variables;
  if (other.variables != variables) throw PreconditionError("merging systems over different charts");
  for (std::size_t i = 0; i < other.closed.size(); ++i) add_closed(other.closed[i], other.closed_provenance[i]);
  if (other.open_required) {
    if (open_required) {
      // Two disjunctions combine into their pairwise products.
      std::vector<Polynomial> prod;
      std::vector<Provenance> tags;
      for (std::size_t i = 0; i < open.size(); ++i) {
        for (std::size_t j = 0; j < other.open.size(); ++j) {
          auto q = open[i] * other.open[j];
          if (q.is_zero()) continue;
          prod.push_back(std::move(q));
          tags.push_back(other.open_provenance[j]);
        }
      }
      open = std::move(prod);
      open_provenance = std::move(tags);
    } else {
      open = other.open;
      open_provenance = other.open_provenance;
      open_required = true;
    }
  }
}

std::string PolynomialSystem::to_string() const {
  std::string s = "variables:";
  for (const auto& v : variables) s += " " + v;
  s += "\nclosed (" + std::to_string(closed.size()) + "):\n";
  for (std::size_t i = 0; i < closed.size(); ++i) {
    s += "  [" + territoire::to_string(closed_provenance[i]) + "] " + closed[i].to_string(variables) + " = 0\n";
  }
  if (open_required) {
    s += "open, at least one nonzero (" + std::to_string(open.size()) + "):\n";
    for (std::size_t i = 0; i < open.size(); ++i) {
      s += "  [" + territoire::to_string(open_provenance[i]) + "] " + open[i].to_string(variables) + "\n";
    }
  }
  return s;
}

namespace {

using PolyVec = std::vector<Polynomial>;

void check_chart(std::size_t n, std::size_t delta, const Chart& chart) {
  if (chart.ambient_dim() != n) throw PreconditionError("chart ambient dimension does not match the algebra");
  if (delta < 1 || delta >= n) throw PreconditionError("codimension must satisfy 1 <= delta < dim A");
  if (chart.codim() != delta) throw PreconditionError("chart has codimension " + std::to_string(chart.codim()) +
                                                      ", expected " + std::to_string(delta));
}

PolynomialSystem empty_system(const Chart& chart) {
  PolynomialSystem s;
  s.variables = chart.variable_names();
  return s;
}

// Column j of the generic chart basis, as a vector of polynomials.
PolyVec basis_column(const Chart& chart, std::size_t j) {
  const std::size_t nv = chart.num_variables();
  PolyVec v(chart.ambient_dim(), Polynomial(nv));
  v[chart.pivots()[j]] = Polynomial::constant(nv, 1);
  for (std::size_t k = 0; k < chart.codim(); ++k) v[chart.nonpivots()[k]] = Polynomial::variable(nv, chart.variable(k, j));
  return v;
}

PolyVec constant_vector(std::size_t nv, const std::vector<long long>& x) {
  PolyVec v;
  for (auto c : x) v.push_back(Polynomial::constant(nv, c));
  return v;
}

PolyVec multiply(const IntegerAlgebra& alg, const PolyVec& x, const PolyVec& y) {
  const std::size_t n = alg.dim;
  PolyVec out(n, Polynomial(x[0].num_vars()));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Polynomial xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        long long c = alg.constant(i, j, k);
        if (c != 0) out[k] += xy.scaled(c);
      }
    }
  }
  return out;
}

// Coordinate k of x in A / span(chart basis), in the basis e_{N_k}.
Polynomial residual(const Chart& chart, const PolyVec& x, std::size_t k) {
  Polynomial r = x[chart.nonpivots()[k]];
  for (std::size_t j = 0; j < chart.subspace_dim(); ++j) {
    const auto& xp = x[chart.pivots()[j]];
    if (!xp.is_zero()) r -= xp * Polynomial::variable(chart.num_variables(), chart.variable(k, j));
  }
  return r;
}

void for_each_combination(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  for (const auto& c : combinations(n, k)) f(c);
}

std::vector<Polynomial> minors(const std::vector<PolyVec>& m, std::size_t size) {
  std::vector<Polynomial> out;
  if (m.empty() || size == 0 || size > m.size() || size > m[0].size()) return out;
  for_each_combination(m.size(), size, [&](const std::vector<std::size_t>& rows) {
    for_each_combination(m[0].size(), size, [&](const std::vector<std::size_t>& cols) {
      std::vector<PolyVec> sub;
      for (auto r : rows) {
        PolyVec row;
        for (auto c : cols) row.push_back(m[r][c]);
        sub.push_back(std::move(row));
      }
      auto d = determinant(sub);
      if (!d.is_zero()) out.push_back(std::move(d));
    });
  });
  return out;
}

}  // namespace

PolynomialSystem chart_equations(const IntegerAlgebra& alg, std::size_t delta, const Chart& chart) {
  check_chart(alg.dim, delta, chart);
  auto sys = empty_system(chart);
  const std::size_t d = chart.subspace_dim();
  std::vector<PolyVec> cols;
  for (std::size_t j = 0; j < d; ++j) cols.push_back(basis_column(chart, j));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      auto prod = multiply(alg, cols[i], cols[j]);
      for (std::size_t k = 0; k < delta; ++k) sys.add_closed(residual(chart, prod, k), Provenance::closure);
    }
  }
  auto unit = constant_vector(chart.num_variables(), alg.unit);
  for (std::size_t k = 0; k < delta; ++k) sys.add_closed(residual(chart, unit, k), Provenance::unit);
  return sys;
}

PolynomialSystem containment_equations(const IntegerAlgebra& alg, const Chart& chart,
                                       const std::vector<std::vector<long long>>& annihilators) {
  if (chart.ambient_dim() != alg.dim) throw PreconditionError("chart ambient dimension does not match the algebra");
  auto sys = empty_system(chart);
  const std::size_t nv = chart.num_variables();
  for (const auto& phi : annihilators) {
    if (phi.size() != alg.dim) throw PreconditionError("annihilator has wrong length");
    for (std::size_t j = 0; j < chart.subspace_dim(); ++j) {
      auto eq = Polynomial::constant(nv, phi[chart.pivots()[j]]);
      for (std::size_t k = 0; k < chart.codim(); ++k) {
        eq += Polynomial::variable(nv, chart.variable(k, j)).scaled(phi[chart.nonpivots()[k]]);
      }
      sys.add_closed(std::move(eq), Provenance::containment);
    }
  }
  return sys;
}

PolynomialSystem fitting_rank_conditions(const IntegerAlgebra& alg, std::size_t delta, std::size_t delta_prime,
                                         const Chart& chart) {
  check_chart(alg.dim, delta, chart);
  if (delta_prime < 1 || delta_prime > delta) throw PreconditionError("delta' must satisfy 1 <= delta' <= delta");
  auto sys = empty_system(chart);
  const std::size_t nv = chart.num_variables();
  const std::size_t d = chart.subspace_dim();
  // Row (k, l): coordinate k of b_j * e_{N_l} in A / U; column j.
  std::vector<PolyVec> m(delta * delta, PolyVec(d, Polynomial(nv)));
  for (std::size_t j = 0; j < d; ++j) {
    auto col = basis_column(chart, j);
    for (std::size_t l = 0; l < delta; ++l) {
      PolyVec e(alg.dim, Polynomial(nv));
      e[chart.nonpivots()[l]] = Polynomial::constant(nv, 1);
      auto prod = multiply(alg, col, e);
      for (std::size_t k = 0; k < delta; ++k) m[k * delta + l][j] = residual(chart, prod, k);
    }
  }
  for (auto& p : minors(m, delta_prime + 1)) sys.add_closed(std::move(p), Provenance::fitting_rank);
  sys.open_required = true;
  for (auto& p : minors(m, delta_prime)) sys.add_open(std::move(p), Provenance::fitting_rank);
  return sys;
}

void check_singularity_type(int g, const ConductanceVector& c) {
  const int m = static_cast<int>(c.size());
  const int delta = g + m - 1;
  if (g < 0) throw PreconditionError("genus must be nonnegative");
  if (!(delta < c.sum())) {
    throw PreconditionError("invalid singularity type: g + m - 1 < sum c fails (" + std::to_string(delta) +
                            " < " + std::to_string(c.sum()) + ")");
  }
  if (!(c.sum() <= 2 * delta)) {
    throw PreconditionError("invalid singularity type: sum c <= 2(g + m - 1) fails (" + std::to_string(c.sum()) +
                            " <= " + std::to_string(2 * delta) + ")");
  }
}

PolynomialSystem singularity_territory_system(int g, const ConductanceVector& c, const Chart& chart) {
  check_singularity_type(g, c);
  const std::size_t delta = static_cast<std::size_t>(g) + c.size() - 1;
  const std::size_t delta_prime = static_cast<std::size_t>(c.sum()) - delta;
  Rationals q;
  auto plus = make_plus_subalgebra(c, q);
  auto alg = integer_structure(plus.ambient());
  auto sys = chart_equations(alg, delta, chart);
  sys.merge(containment_equations(alg, chart, integer_annihilators(plus.basis(), plus.pivots())));
  sys.merge(fitting_rank_conditions(alg, delta, delta_prime, chart));
  return sys;
}

namespace {

// A polynomial reduced mod p in a form cheap to evaluate.
struct CompiledPoly {
  struct Term {
    std::uint32_t coeff;
    std::vector<std::pair<std::size_t, std::uint16_t>> powers;
  };
  std::vector<Term> terms;

  CompiledPoly() = default;
  CompiledPoly(const Polynomial& poly, std::uint32_t p) {
    PrimeField f(p);
    for (const auto& [e, c] : poly.terms()) {
      Term t{f.from_int(c), {}};
      if (t.coeff == 0) continue;
      for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v]) t.powers.emplace_back(v, e[v]);
      }
      terms.push_back(std::move(t));
    }
  }

  std::uint32_t eval(const std::vector<std::uint32_t>& x, std::uint32_t p) const {
    std::uint64_t acc = 0;
    for (const auto& t : terms) {
      std::uint64_t v = t.coeff;
      for (auto [var, e] : t.powers) {
        for (std::uint16_t i = 0; i < e; ++i) v = v * x[var] % p;
      }
      acc += v;
    }
    return static_cast<std::uint32_t>(acc % p);
  }
};

// Equations becoming fully determined once variable v is set; those linear
// in v also carry their split a * v + b for solving v directly.
struct Level {
  std::vector<CompiledPoly> checks;
  std::vector<std::pair<CompiledPoly, CompiledPoly>> linear;
};

}  // namespace

std::vector<ChartPoint> solve_over_prime_field(const PolynomialSystem& system, std::uint32_t p,
                                               const Budgets& budgets) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  const std::size_t nv = system.variables.size();
  const std::uint64_t space = saturating_pow(p, nv);
  if (space > budgets.solve_assignments) {
    throw BudgetError("solving needs " + std::to_string(p) + "^" + std::to_string(nv) +
                      " assignments, above the cap " + std::to_string(budgets.solve_assignments));
  }
  PrimeField f(p);
  std::vector<ChartPoint> out;
  if (system.open_required && system.open.empty()) return out;

  std::vector<Level> levels(nv);
  for (const auto& poly : system.closed) {
    auto top = poly.max_variable();
    CompiledPoly compiled(poly, p);
    if (!top) {
      if (!compiled.terms.empty()) return out;  // nonzero constant
      continue;
    }
    auto& level = levels[*top];
    level.checks.push_back(compiled);
    if (poly.degree_in(*top) == 1) {
      Polynomial a(nv), b(nv);
      for (const auto& [e, c] : poly.terms()) {
        if (e[*top] == 1) {
          auto e2 = e;
          e2[*top] = 0;
          a.add_term(e2, c);
        } else {
          b.add_term(e, c);
        }
      }
      level.linear.emplace_back(CompiledPoly(a, p), CompiledPoly(b, p));
    }
  }
  std::vector<CompiledPoly> open;
  for (const auto& poly : system.open) open.emplace_back(poly, p);

  std::vector<std::uint32_t> x(nv, 0);
  auto accept_leaf = [&] {
    if (!system.open_required) return true;
    for (const auto& o : open) {
      if (o.eval(x, p) != 0) return true;
    }
    return false;
  };

  std::function<void(std::size_t)> search = [&](std::size_t v) {
    if (v == nv) {
      if (accept_leaf()) out.push_back(x);
      return;
    }
    const auto& level = levels[v];
    std::optional<std::uint32_t> forced;
    for (const auto& [a, b] : level.linear) {
      auto av = a.eval(x, p);
      if (av == 0) continue;
      auto value = f.mul(f.neg(b.eval(x, p)), f.inv(av));
      if (forced && *forced != value) return;
      forced = value;
    }
    auto try_value = [&](std::uint32_t value) {
      x[v] = value;
      for (const auto& c : level.checks) {
        if (c.eval(x, p) != 0) return;
      }
      search(v + 1);
    };
    if (forced) {
      try_value(*forced);
    } else {
      for (std::uint32_t value = 0; value < p; ++value) try_value(value);
    }
    x[v] = 0;
  };
  search(0);
  return out;
}

Matrix<PrimeField> chart_point_to_subspace(const Chart& chart, const ChartPoint& point, const PrimeField& f) {
  if (point.size() != chart.num_variables()) throw PreconditionError("chart point has wrong length");
  Matrix<PrimeField> m(f, chart.subspace_dim(), chart.ambient_dim());
  for (std::size_t j = 0; j < chart.subspace_dim(); ++j) {
    m(j, chart.pivots()[j]) = 1;
    for (std::size_t k = 0; k < chart.codim(); ++k) m(j, chart.nonpivots()[k]) = f.from_int(point[chart.variable(k, j)]);
  }
  rref_in_place(m);
  return m;
}

std::vector<Matrix<PrimeField>> solve_on_all_charts(std::size_t n, std::size_t delta, std::uint32_t p,
                                                    const std::function<PolynomialSystem(const Chart&)>& build,
                                                    const Budgets& budgets) {
  PrimeField f(p);
  std::map<std::vector<std::uint32_t>, Matrix<PrimeField>> found;
  for (const auto& chart : all_charts(n, delta)) {
    auto sys = build(chart);
    for (const auto& point : solve_over_prime_field(sys, p, budgets)) {
      auto m = chart_point_to_subspace(chart, point, f);
      found.emplace(m.data(), std::move(m));
    }
  }
  std::vector<Matrix<PrimeField>> out;
  for (auto& [key, m] : found) out.push_back(std::move(m));
  return out;
}

std::vector<Subalgebra<PrimeField>> singularity_territory_points(int g, const ConductanceVector& c, std::uint32_t p,
                                                                 const Budgets& budgets) {
  check_singularity_type(g, c);
  PrimeField f(p);
  auto alg = make_truncated_product(c, f, budgets);
  const std::size_t delta = static_cast<std::size_t>(g) + c.size() - 1;
  auto spaces = solve_on_all_charts(alg->dim(), delta, p,
                                    [&](const Chart& chart) { return singularity_territory_system(g, c, chart); },
                                    budgets);
  std::vector<Subalgebra<PrimeField>> out;
  for (auto& m : spaces) {
    auto pivots = rref_in_place(m);
    out.push_back(Subalgebra<PrimeField>::from_canonical(alg, std::move(m), std::move(pivots)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace territoire
