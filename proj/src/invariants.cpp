#include "territoire/invariants.hpp"

namespace territoire {

std::string GluingProfile::to_string() const {
  std::string s = "{";
  for (std::size_t p = 0; p < partition.size(); ++p) {
    if (p) s += ",";
    s += "{";
    for (std::size_t i = 0; i < partition[p].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(partition[p][i] + 1);
    }
    s += "}:g" + std::to_string(genera[p]);
  }
  return s + "}";
}

Matrix<PrimeField> largest_ideal_by_search(const Subalgebra<PrimeField>& b, const Budgets& budgets) {
  const auto& alg = b.ambient();
  const PrimeField& f = alg.field();
  const std::size_t d = b.dim();
  if (alg.dim() > budgets.exhaustive_dim) {
    throw BudgetError("ideal search needs ambient dimension <= " + std::to_string(budgets.exhaustive_dim));
  }
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= d; ++k) total = saturating_add(total, gaussian_binomial(d, k, f.characteristic()));
  if (total > budgets.enumeration_candidates) {
    throw BudgetError("ideal search would visit " + std::to_string(total) + " subspaces");
  }

  Matrix<PrimeField> found(f, 0, alg.dim());
  for (std::size_t k = 1; k <= d; ++k) {
    for_each_subspace(f, d, k, [&](const Matrix<PrimeField>& coeffs) {
      Matrix<PrimeField> w(f, 0, alg.dim());
      for (std::size_t r = 0; r < coeffs.rows(); ++r) {
        Vec<PrimeField> x(alg.dim(), 0);
        for (std::size_t s = 0; s < d; ++s) {
          if (coeffs(r, s) == 0) continue;
          for (std::size_t j = 0; j < alg.dim(); ++j) x[j] = f.add(x[j], f.mul(coeffs(r, s), b.basis()(s, j)));
        }
        w.append_row(x);
      }
      auto pivots = rref_in_place(w);
      if (!ideal_violation(alg, w, pivots)) found = span_union(found, w);
    });
  }
  return found;
}

bool conductor_is_largest_ideal(const Subalgebra<PrimeField>& b, const Budgets& budgets) {
  return largest_ideal_by_search(b, budgets) == conductor(b);
}

}  // namespace territoire
