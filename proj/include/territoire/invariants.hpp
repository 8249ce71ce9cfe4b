#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "territoire/algebra.hpp"
#include "territoire/subspaces.hpp"

namespace territoire {

/// Blocks of factor indices whose constant terms a subalgebra of A_c
/// identifies, with the genus contributed by each block.
struct GluingProfile {
  std::vector<std::vector<std::size_t>> partition;  // 0-based factor indices, parts sorted
  std::vector<int> genera;                          // parallel to partition

  int delta() const {
    int d = 0;
    for (std::size_t i = 0; i < partition.size(); ++i) d += genera[i] + static_cast<int>(partition[i].size()) - 1;
    return d;
  }
  bool operator==(const GluingProfile&) const = default;
  auto operator<=>(const GluingProfile&) const = default;
  std::string to_string() const;
};

template <class F>
struct InvariantRecord {
  int delta = 0;
  int delta_prime = 0;
  Matrix<F> conductor;
  std::optional<std::vector<int>> branch_conductances;  // weakly decreasing
  std::optional<int> genus;
  std::optional<int> branches;  // m, the number of factors of A_c
  std::optional<GluingProfile> profile;
  bool gorenstein = true;
  /// Set when delta == 0 and delta_prime / gorenstein are conventions.
  bool trivial_convention = false;
};

template <class F>
int delta(const Subalgebra<F>& b) {
  return static_cast<int>(b.ambient().dim() - b.dim());
}

/// Kernel of B -> Hom(A/B, A/B), b |-> multiplication by b.  A/B is
/// coordinatised by the non-pivot columns of the RREF basis of B.
template <class F>
Matrix<F> conductor(const Subalgebra<F>& b) {
  const auto& alg = b.ambient();
  const F& f = alg.field();
  const std::size_t n = alg.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : b.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free_cols.push_back(j);
  }
  const std::size_t d = free_cols.size();
  // Column r of `action` is the flattened d x d matrix of b_r acting on A/B.
  Matrix<F> action(f, d * d, b.dim());
  for (std::size_t r = 0; r < b.dim(); ++r) {
    for (std::size_t l = 0; l < d; ++l) {
      auto e = alg.basis_vector(free_cols[l]);
      auto image = reduce(b.basis(), b.pivots(),
                          alg.multiply(b.basis().row(r), std::span<const typename F::value_type>(e)));
      for (std::size_t k = 0; k < d; ++k) action(k * d + l, r) = image[free_cols[k]];
    }
  }
  auto coeffs = kernel(action);
  Matrix<F> out(f, 0, n);
  for (std::size_t i = 0; i < coeffs.rows(); ++i) {
    Vec<F> x(n, f.zero());
    for (std::size_t r = 0; r < b.dim(); ++r) {
      if (f.is_zero(coeffs(i, r))) continue;
      for (std::size_t j = 0; j < n; ++j) x[j] = f.add(x[j], f.mul(coeffs(i, r), b.basis()(r, j)));
    }
    out.append_row(x);
  }
  rref_in_place(out);
  return out;
}

template <class F>
int delta_prime(const Subalgebra<F>& b) {
  return static_cast<int>(b.dim() - conductor(b).rows());
}

/// Brute-force check that every ideal of the ambient algebra lying inside B
/// is contained in conductor(B).  Enumerates every subspace of B, so it is
/// restricted to F_p and small dimension.
bool conductor_is_largest_ideal(const Subalgebra<PrimeField>& b, const Budgets& budgets = {});

/// Largest ideal of the ambient algebra inside B, found by exhaustive search
/// over subspaces of B (independent of the kernel route).
Matrix<PrimeField> largest_ideal_by_search(const Subalgebra<PrimeField>& b, const Budgets& budgets = {});

template <class F>
void require_truncated_product(const Subalgebra<F>& b, const ConductanceVector& c) {
  const auto& shape = b.ambient().truncated_product_shape();
  if (!shape || *shape != c) {
    throw PreconditionError("ambient algebra is not the truncated product A_" + c.to_string());
  }
}

/// dim e_i (A/Cond) per factor i, in factor order.
template <class F>
std::vector<int> conductance_per_factor(const ConductanceVector& c, const Subalgebra<F>& b) {
  require_truncated_product(b, c);
  auto cond = conductor(b);
  std::vector<int> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t off = c.offset(i);
    Matrix<F> block(cond.field(), cond.rows(), static_cast<std::size_t>(c[i]));
    for (std::size_t r = 0; r < cond.rows(); ++r)
      for (int a = 0; a < c[i]; ++a) block(r, static_cast<std::size_t>(a)) = cond(r, off + static_cast<std::size_t>(a));
    out.push_back(c[i] - static_cast<int>(rank(std::move(block))));
  }
  return out;
}

/// Branch conductances as a weakly decreasing multiset.
template <class F>
std::vector<int> branch_conductances(const ConductanceVector& c, const Subalgebra<F>& b) {
  auto out = conductance_per_factor(c, b);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

template <class F>
GluingProfile gluing_profile(const ConductanceVector& c, const Subalgebra<F>& b) {
  require_truncated_product(b, c);
  const F& f = b.ambient().field();
  const std::size_t m = c.size();
  Matrix<F> constants(f, b.dim(), m);
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t i = 0; i < m; ++i) constants(r, i) = b.basis()(r, c.offset(i));
  rref_in_place(constants);

  GluingProfile profile;
  std::vector<bool> seen(m, false);
  for (std::size_t r = 0; r < constants.rows(); ++r) {
    std::vector<std::size_t> part;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& v = constants(r, i);
      if (f.is_zero(v)) continue;
      if (!f.equal(v, f.one()) || seen[i]) {
        throw InputError("constant-term image of the subalgebra is not an identification algebra");
      }
      seen[i] = true;
      part.push_back(i);
    }
    profile.partition.push_back(std::move(part));
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) {
    throw InputError("constant-term image of the subalgebra misses a factor");
  }
  std::sort(profile.partition.begin(), profile.partition.end());

  for (const auto& part : profile.partition) {
    // dim e_P A+ = sum c_i - (|P| - 1); dim e_P B = rank of B restricted to the blocks of P.
    int plus_dim = 1;
    std::vector<std::size_t> cols;
    for (auto i : part) {
      plus_dim += c[i] - 1;
      for (int a = 0; a < c[i]; ++a) cols.push_back(c.offset(i) + static_cast<std::size_t>(a));
    }
    Matrix<F> restricted(f, b.dim(), cols.size());
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t k = 0; k < cols.size(); ++k) restricted(r, k) = b.basis()(r, cols[k]);
    profile.genera.push_back(plus_dim - static_cast<int>(rank(std::move(restricted))));
  }
  return profile;
}

/// Every invariant at once.  Conductance-dependent fields are only filled
/// when `c` is given; delta == 0 reports delta' = 0, Gorenstein, flagged as
/// a convention, and leaves genus and branch count empty.
template <class F>
InvariantRecord<F> full_record(const Subalgebra<F>& b, const std::optional<ConductanceVector>& c = std::nullopt) {
  InvariantRecord<F> rec{delta(b), 0, conductor(b), {}, {}, {}, {}, true, false};
  rec.delta_prime = static_cast<int>(b.dim() - rec.conductor.rows());
  rec.gorenstein = rec.delta_prime == rec.delta;
  rec.trivial_convention = rec.delta == 0;
  if (c) {
    rec.branch_conductances = branch_conductances(*c, b);
    rec.profile = gluing_profile(*c, b);
    if (rec.delta > 0) {
      rec.branches = static_cast<int>(c->size());
      rec.genus = rec.delta - (*rec.branches - 1);
    }
  }
  return rec;
}

}  // namespace territoire
