#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "territoire/config.hpp"
#include "territoire/matrix.hpp"

namespace territoire {

/// Weakly decreasing list of positive branch conductances c_1 >= ... >= c_m.
class ConductanceVector {
 public:
  /// Throws InputError unless the list is non-empty, positive and weakly
  /// decreasing.
  explicit ConductanceVector(std::vector<int> c);

  const std::vector<int>& values() const { return c_; }
  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int sum() const;
  /// Coordinate of (factor i, t_i^0) in A_c.
  std::size_t offset(std::size_t i) const;
  std::string to_string() const;

  bool operator==(const ConductanceVector&) const = default;
  auto operator<=>(const ConductanceVector&) const = default;

 private:
  std::vector<int> c_;
};

/// Commutative unital algebra of finite dimension, given by dense structure
/// constants e_i e_j = sum_k table(i, j, k) e_k.
template <class F>
class FiniteAlgebra {
 public:
  using value_type = typename F::value_type;

  FiniteAlgebra(F field, std::vector<std::string> labels, Vec<F> unit, std::vector<value_type> table)
      : field_(std::move(field)),
        dim_(labels.size()),
        labels_(std::move(labels)),
        unit_(std::move(unit)),
        table_(std::move(table)) {
    if (dim_ == 0) throw InputError("algebra dimension must be at least 1");
    if (unit_.size() != dim_) throw InputError("unit vector has wrong length");
    if (table_.size() != dim_ * dim_ * dim_) throw InputError("structure table has wrong size");
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec<F>& unit() const { return unit_; }
  const value_type& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<value_type>& table() const { return table_; }

  /// Set only for algebras built as A_c, so conductance-aware invariants can
  /// check their precondition.
  const std::optional<ConductanceVector>& truncated_product_shape() const { return shape_; }
  void set_truncated_product_shape(ConductanceVector c) { shape_ = std::move(c); }

  Vec<F> basis_vector(std::size_t i) const {
    Vec<F> v(dim_, field_.zero());
    v[i] = field_.one();
    return v;
  }

  Vec<F> multiply(std::span<const value_type> x, std::span<const value_type> y) const {
    Vec<F> out(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (field_.is_zero(y[j])) continue;
        auto xy = field_.mul(x[i], y[j]);
        const value_type* row = &table_[(i * dim_ + j) * dim_];
        for (std::size_t k = 0; k < dim_; ++k) {
          if (!field_.is_zero(row[k])) out[k] = field_.add(out[k], field_.mul(xy, row[k]));
        }
      }
    }
    return out;
  }
  Vec<F> multiply(const Vec<F>& x, const Vec<F>& y) const {
    return multiply(std::span<const value_type>(x), std::span<const value_type>(y));
  }

 private:
  F field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  Vec<F> unit_;
  std::vector<value_type> table_;
  std::optional<ConductanceVector> shape_;
};

template <class F>
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra<F>>;

struct AlgebraViolation {
  enum class Kind { commutativity, associativity, unit };
  Kind kind;
  std::vector<std::size_t> indices;

  std::string describe() const;
  bool operator==(const AlgebraViolation&) const = default;
};

/// Checks commutativity and associativity on all basis pairs and triples and
/// the unit axiom on every basis vector.  Violations are data, not errors.
template <class F>
std::vector<AlgebraViolation> validate_algebra(const FiniteAlgebra<F>& alg) {
  const F& f = alg.field();
  const std::size_t n = alg.dim();
  std::vector<AlgebraViolation> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!f.equal(alg.constant(i, j, k), alg.constant(j, i, k))) {
          out.push_back({AlgebraViolation::Kind::commutativity, {i, j}});
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto ei = alg.basis_vector(i);
    for (std::size_t j = 0; j < n; ++j) {
      auto eij = alg.multiply(ei, alg.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k) {
        auto ejk = alg.multiply(alg.basis_vector(j), alg.basis_vector(k));
        if (alg.multiply(eij, alg.basis_vector(k)) != alg.multiply(ei, ejk)) {
          out.push_back({AlgebraViolation::Kind::associativity, {i, j, k}});
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto ei = alg.basis_vector(i);
    if (alg.multiply(alg.unit(), ei) != ei) out.push_back({AlgebraViolation::Kind::unit, {i}});
  }
  return out;
}

/// Unital, multiplicatively closed subspace stored by its canonical RREF
/// basis; two subalgebras are equal iff their bases are equal.
template <class F>
class Subalgebra {
 public:
  using value_type = typename F::value_type;

  /// Validating constructor: the rows may be any spanning set.  Throws
  /// InputError when the span misses the unit or is not closed.
  static Subalgebra from_span(AlgebraPtr<F> ambient, Matrix<F> rows);

  /// For callers that already hold a canonical, validated basis.
  static Subalgebra from_canonical(AlgebraPtr<F> ambient, Matrix<F> rref_basis,
                                   std::vector<std::size_t> pivots) {
    return Subalgebra(std::move(ambient), std::move(rref_basis), std::move(pivots));
  }

  const FiniteAlgebra<F>& ambient() const { return *ambient_; }
  const AlgebraPtr<F>& ambient_ptr() const { return ambient_; }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t dim() const { return basis_.rows(); }

  bool operator==(const Subalgebra& o) const { return basis_ == o.basis_; }
  bool operator<(const Subalgebra& o) const {
    if (basis_.rows() != o.basis_.rows()) return basis_.rows() > o.basis_.rows();
    return basis_.data() < o.basis_.data();
  }

 private:
  Subalgebra(AlgebraPtr<F> ambient, Matrix<F> basis, std::vector<std::size_t> pivots)
      : ambient_(std::move(ambient)), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  AlgebraPtr<F> ambient_;
  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// First pair (i, j) of RREF rows whose product escapes the row space.
template <class F>
std::optional<std::pair<std::size_t, std::size_t>> closure_violation(
    const FiniteAlgebra<F>& alg, const Matrix<F>& rref_basis, const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < rref_basis.rows(); ++i) {
    for (std::size_t j = i; j < rref_basis.rows(); ++j) {
      auto prod = alg.multiply(rref_basis.row(i), rref_basis.row(j));
      if (!in_row_space(rref_basis, pivots, prod)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

template <class F>
bool contains_unit(const FiniteAlgebra<F>& alg, const Matrix<F>& rref_basis,
                   const std::vector<std::size_t>& pivots) {
  return in_row_space(rref_basis, pivots, alg.unit());
}

template <class F>
Subalgebra<F> Subalgebra<F>::from_span(AlgebraPtr<F> ambient, Matrix<F> rows) {
  if (rows.cols() != ambient->dim()) throw InputError("subalgebra basis has wrong ambient dimension");
  auto pivots = rref_in_place(rows);
  if (!contains_unit(*ambient, rows, pivots)) throw InputError("subspace does not contain the unit");
  if (auto bad = closure_violation(*ambient, rows, pivots)) {
    throw InputError("subspace is not closed under multiplication (rows " +
                     std::to_string(bad->first) + ", " + std::to_string(bad->second) + ")");
  }
  return Subalgebra(std::move(ambient), std::move(rows), std::move(pivots));
}

/// Smallest unital subalgebra containing `gens`, by span-and-multiply to a
/// fixed point.
template <class F>
Subalgebra<F> subalgebra_from_generators(AlgebraPtr<F> alg, const std::vector<Vec<F>>& gens) {
  const F& f = alg->field();
  Matrix<F> span(f, 0, alg->dim());
  span.append_row(alg->unit());
  for (const auto& g : gens) {
    if (g.size() != alg->dim()) throw InputError("generator has wrong ambient dimension");
    span.append_row(g);
  }
  auto pivots = rref_in_place(span);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t d = span.rows();
    for (std::size_t i = 0; i < d && !grew; ++i) {
      for (std::size_t j = i; j < d; ++j) {
        auto prod = reduce(span, pivots, alg->multiply(span.row(i), span.row(j)));
        if (!is_zero_vector(f, std::span<const typename F::value_type>(prod))) {
          span.append_row(prod);
          pivots = rref_in_place(span);
          grew = true;
          break;
        }
      }
    }
  }
  return Subalgebra<F>::from_canonical(std::move(alg), std::move(span), std::move(pivots));
}

/// The whole algebra as a subalgebra of itself.
template <class F>
Subalgebra<F> whole_algebra(AlgebraPtr<F> alg) {
  auto m = identity(alg->field(), alg->dim());
  std::vector<std::size_t> pivots(alg->dim());
  for (std::size_t i = 0; i < pivots.size(); ++i) pivots[i] = i;
  return Subalgebra<F>::from_canonical(std::move(alg), std::move(m), std::move(pivots));
}

/// prod_i k[t_i]/(t_i^{c_i}) with basis (i, t_i^j), 0 <= j < c_i.
template <class F>
AlgebraPtr<F> make_truncated_product(const ConductanceVector& c, const F& field,
                                     const Budgets& budgets = {}) {
  const std::size_t n = static_cast<std::size_t>(c.sum());
  if (n > budgets.construction_dim) {
    throw BudgetError("A_c has dimension " + std::to_string(n) + ", above the construction cap " +
                      std::to_string(budgets.construction_dim));
  }
  std::vector<std::string> labels;
  Vec<F> unit(n, field.zero());
  std::vector<typename F::value_type> table(n * n * n, field.zero());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t off = c.offset(i);
    unit[off] = field.one();
    for (int a = 0; a < c[i]; ++a) {
      labels.push_back("(" + std::to_string(i + 1) + ",t^" + std::to_string(a) + ")");
      for (int b = 0; b < c[i]; ++b) {
        if (a + b < c[i]) table[((off + a) * n + off + b) * n + off + a + b] = field.one();
      }
    }
  }
  auto alg = std::make_shared<FiniteAlgebra<F>>(field, std::move(labels), std::move(unit), std::move(table));
  alg->set_truncated_product_shape(c);
  return alg;
}

/// A+_c: the diagonal unit plus every (i, t_i^j) with j >= 1.
template <class F>
Subalgebra<F> make_plus_subalgebra(const ConductanceVector& c, const F& field, const Budgets& budgets = {}) {
  auto alg = make_truncated_product(c, field, budgets);
  Matrix<F> rows(field, 0, alg->dim());
  rows.append_row(alg->unit());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (int a = 1; a < c[i]; ++a) rows.append_row(alg->basis_vector(c.offset(i) + a));
  }
  return Subalgebra<F>::from_span(std::move(alg), std::move(rows));
}

/// The m factor indicators of A_c; pairwise orthogonal, summing to 1.
template <class F>
std::vector<Vec<F>> block_idempotents(const ConductanceVector& c, const F& field) {
  const std::size_t n = static_cast<std::size_t>(c.sum());
  std::vector<Vec<F>> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vec<F> e(n, field.zero());
    e[c.offset(i)] = field.one();
    out.push_back(std::move(e));
  }
  return out;
}

/// Carries the offending product when a subspace fails to be an ideal.
class NotAnIdealError : public InputError {
 public:
  NotAnIdealError(std::size_t ideal_row, std::size_t basis_index, const std::string& what)
      : InputError(what), ideal_row_(ideal_row), basis_index_(basis_index) {}
  std::size_t ideal_row() const { return ideal_row_; }
  std::size_t basis_index() const { return basis_index_; }

 private:
  std::size_t ideal_row_;
  std::size_t basis_index_;
};

template <class F>
struct QuotientAlgebra {
  AlgebraPtr<F> algebra;
  /// (dim A/I) x (dim A) matrix sending ambient coordinates to quotient ones.
  Matrix<F> projection;
  /// Ambient coordinates kept as the quotient basis.
  std::vector<std::size_t> kept;
};

/// First (ideal row, basis index) whose product leaves the span, if any.
template <class F>
std::optional<std::pair<std::size_t, std::size_t>> ideal_violation(
    const FiniteAlgebra<F>& alg, const Matrix<F>& rref_basis, const std::vector<std::size_t>& pivots) {
  for (std::size_t r = 0; r < rref_basis.rows(); ++r) {
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      auto prod = alg.multiply(rref_basis.row_vector(r), alg.basis_vector(i));
      if (!in_row_space(rref_basis, pivots, prod)) return std::make_pair(r, i);
    }
  }
  return std::nullopt;
}

template <class F>
QuotientAlgebra<F> quotient_by_ideal(const FiniteAlgebra<F>& alg, Matrix<F> ideal_basis) {
  const F& f = alg.field();
  const std::size_t n = alg.dim();
  if (ideal_basis.cols() != n) throw InputError("ideal basis has wrong ambient dimension");
  auto pivots = rref_in_place(ideal_basis);
  if (auto bad = ideal_violation(alg, ideal_basis, pivots)) {
    throw NotAnIdealError(bad->first, bad->second,
                          "not an ideal: row " + std::to_string(bad->first) + " times " +
                              alg.labels()[bad->second] + " leaves the span");
  }
  if (in_row_space(ideal_basis, pivots, alg.unit())) {
    throw NotAnIdealError(0, 0, "ideal contains the unit; the quotient would be zero-dimensional");
  }
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) kept.push_back(j);
  }
  const std::size_t q = kept.size();
  auto project = [&](Vec<F> x) {
    x = reduce(ideal_basis, pivots, std::move(x));
    Vec<F> out(q);
    for (std::size_t a = 0; a < q; ++a) out[a] = x[kept[a]];
    return out;
  };
  Matrix<F> projection(f, q, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = project(alg.basis_vector(j));
    for (std::size_t a = 0; a < q; ++a) projection(a, j) = col[a];
  }
  std::vector<std::string> labels;
  std::vector<typename F::value_type> table(q * q * q, f.zero());
  for (std::size_t a = 0; a < q; ++a) {
    labels.push_back(alg.labels()[kept[a]]);
    for (std::size_t b = 0; b < q; ++b) {
      auto prod = project(alg.multiply(alg.basis_vector(kept[a]), alg.basis_vector(kept[b])));
      for (std::size_t k = 0; k < q; ++k) table[(a * q + b) * q + k] = prod[k];
    }
  }
  auto quotient = std::make_shared<FiniteAlgebra<F>>(f, std::move(labels), project(alg.unit()), std::move(table));
  return {std::move(quotient), std::move(projection), std::move(kept)};
}

/// Preimage in A of a subalgebra of A/I: lifts the basis through the kept
/// coordinates and adds the ideal back.
template <class F>
Subalgebra<F> pull_back(AlgebraPtr<F> ambient, const QuotientAlgebra<F>& q, const Matrix<F>& ideal_basis,
                        const Subalgebra<F>& sub) {
  const F& f = ambient->field();
  Matrix<F> rows = ideal_basis;
  for (std::size_t r = 0; r < sub.dim(); ++r) {
    Vec<F> lifted(ambient->dim(), f.zero());
    for (std::size_t a = 0; a < q.kept.size(); ++a) lifted[q.kept[a]] = sub.basis()(r, a);
    rows.append_row(lifted);
  }
  return Subalgebra<F>::from_span(std::move(ambient), std::move(rows));
}

/// Image of a subalgebra containing I in A/I.
template <class F>
Subalgebra<F> push_forward(const QuotientAlgebra<F>& q, const Subalgebra<F>& sub) {
  Matrix<F> rows(q.algebra->field(), 0, q.algebra->dim());
  for (std::size_t r = 0; r < sub.dim(); ++r) rows.append_row(apply(q.projection, sub.basis().row_vector(r)));
  return Subalgebra<F>::from_span(q.algebra, std::move(rows));
}

/// k[x_1..x_r] modulo the monomials outside `standard`, an order ideal of
/// exponent vectors (closed under lowering any exponent).
template <class F>
AlgebraPtr<F> make_monomial_algebra(const std::vector<std::vector<int>>& standard, const F& field);

/// k[x]/(f) for a monic f given by coefficients of 1, x, ..., x^{d-1}
/// (so f = x^d + sum coeffs[i] x^i).
template <class F>
AlgebraPtr<F> make_polynomial_quotient(const std::vector<long long>& coeffs, const F& field);

/// Direct product A x B with componentwise multiplication.
template <class F>
AlgebraPtr<F> make_product(const FiniteAlgebra<F>& a, const FiniteAlgebra<F>& b);

/// Reduces an algebra with p-integral structure constants modulo p.
AlgebraPtr<PrimeField> reduce_mod_p(const FiniteAlgebra<Rationals>& alg, std::uint32_t p);

/// Integer structure constants of an algebra: exact integers over Q, the
/// representatives in [0, p) over F_p.  Throws InputError for
/// non-integral rational constants.
struct IntegerAlgebra {
  std::size_t dim = 0;
  std::vector<long long> unit;
  std::vector<long long> table;
  std::vector<std::string> labels;

  long long constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table[(i * dim + j) * dim + k];
  }
};

template <class F>
IntegerAlgebra integer_structure(const FiniteAlgebra<F>& alg) {
  const F& f = alg.field();
  IntegerAlgebra out;
  out.dim = alg.dim();
  out.labels = alg.labels();
  auto conv = [&](const typename F::value_type& v) {
    auto i = f.to_integer(v);
    if (!i) throw InputError("structure constant " + f.to_string(v) + " is not an integer");
    return *i;
  };
  for (const auto& u : alg.unit()) out.unit.push_back(conv(u));
  for (const auto& c : alg.table()) out.table.push_back(conv(c));
  return out;
}

extern template AlgebraPtr<Rationals> make_monomial_algebra(const std::vector<std::vector<int>>&, const Rationals&);
extern template AlgebraPtr<PrimeField> make_monomial_algebra(const std::vector<std::vector<int>>&, const PrimeField&);
extern template AlgebraPtr<Rationals> make_polynomial_quotient(const std::vector<long long>&, const Rationals&);
extern template AlgebraPtr<PrimeField> make_polynomial_quotient(const std::vector<long long>&, const PrimeField&);
extern template AlgebraPtr<Rationals> make_product(const FiniteAlgebra<Rationals>&, const FiniteAlgebra<Rationals>&);
extern template AlgebraPtr<PrimeField> make_product(const FiniteAlgebra<PrimeField>&, const FiniteAlgebra<PrimeField>&);

}  // namespace territoire
