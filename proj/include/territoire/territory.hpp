#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "territoire/algebra.hpp"
#include "territoire/polynomial.hpp"

namespace territoire {

/// Standard affine chart of Gr(n - delta, n): subspaces whose basis, written
/// as columns b_j = e_{P_j} + sum_k a_{k,j} e_{N_k}, is the identity on the
/// pivot coordinates P.  N lists the remaining coordinates in order.
class Chart {
 public:
  /// Throws PreconditionError unless pivots are strictly increasing and < n.
  Chart(std::size_t ambient_dim, std::vector<std::size_t> pivots);

  std::size_t ambient_dim() const { return n_; }
  std::size_t subspace_dim() const { return pivots_.size(); }
  std::size_t codim() const { return nonpivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::size_t>& nonpivots() const { return nonpivots_; }

  std::size_t num_variables() const { return codim() * subspace_dim(); }
  /// Index of a_{k,j}: k-th non-pivot coordinate of basis column j.
  std::size_t variable(std::size_t k, std::size_t j) const { return k * subspace_dim() + j; }
  std::vector<std::string> variable_names() const;

  std::string to_string() const;
  bool operator==(const Chart&) const = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> nonpivots_;
};

/// Every chart of Gr(n - delta, n), pivot sets in lexicographic order.
std::vector<Chart> all_charts(std::size_t n, std::size_t delta);

enum class Provenance { closure, unit, containment, fitting_rank };
std::string to_string(Provenance p);

/// Closed equations plus an optional disjunctive open condition: when
/// `open_required` is set, a point must make at least one certificate
/// nonzero (an empty certificate list is then unsatisfiable).
struct PolynomialSystem {
  std::vector<std::string> variables;
  std::vector<Polynomial> closed;
  std::vector<Provenance> closed_provenance;
  std::vector<Polynomial> open;
  std::vector<Provenance> open_provenance;
  bool open_required = false;

  void add_closed(Polynomial p, Provenance tag);
  void add_open(Polynomial p, Provenance tag);
  /// Union of the equations of two systems over the same chart.
  void merge(const PolynomialSystem& other);
  std::string to_string() const;
};

/// Multiplicative closure (delta equations per basis pair) and unit
/// membership for corank-delta subspaces on `chart`.
PolynomialSystem chart_equations(const IntegerAlgebra& alg, std::size_t delta, const Chart& chart);

/// Integer linear functionals whose common kernel is the given subspace:
/// one per non-pivot column of its RREF, scaled to clear denominators.
template <class F>
std::vector<std::vector<long long>> integer_annihilators(const Matrix<F>& rref_basis,
                                                         const std::vector<std::size_t>& pivots);

/// Linear equations forcing every chart basis column into B0, given by the
/// annihilating functionals of B0.
PolynomialSystem containment_equations(const IntegerAlgebra& alg, const Chart& chart,
                                       const std::vector<std::vector<long long>>& annihilators);

/// Rank exactly delta' for the map U -> Hom(A/U, A/U): all
/// (delta'+1)-minors vanish and some delta'-minor does not.
PolynomialSystem fitting_rank_conditions(const IntegerAlgebra& alg, std::size_t delta, std::size_t delta_prime,
                                         const Chart& chart);

/// Throws PreconditionError naming the failed inequality of
/// g + m - 1 < sum c <= 2 (g + m - 1).
void check_singularity_type(int g, const ConductanceVector& c);

/// Ter_S(g, c) on a chart of Gr(sum c - delta, A_c): closure and unit for
/// delta = g + m - 1, containment in A+_c, and delta' = sum c - delta.
PolynomialSystem singularity_territory_system(int g, const ConductanceVector& c, const Chart& chart);

using ChartPoint = std::vector<std::uint32_t>;

/// Every F_p assignment satisfying all closed equations and the open
/// condition, in lexicographic order.  The nominal search space p^#vars must
/// stay within budgets.solve_assignments; the search itself backtracks over
/// variables and solves linear occurrences directly.
std::vector<ChartPoint> solve_over_prime_field(const PolynomialSystem& system, std::uint32_t p,
                                               const Budgets& budgets = {});

/// The subspace spanned by the chart basis at `point`, in RREF.
Matrix<PrimeField> chart_point_to_subspace(const Chart& chart, const ChartPoint& point, const PrimeField& f);

/// Solves `build(chart)` on every chart of Gr(n - delta, n) and returns the
/// distinct subspaces found, sorted.
std::vector<Matrix<PrimeField>> solve_on_all_charts(std::size_t n, std::size_t delta, std::uint32_t p,
                                                    const std::function<PolynomialSystem(const Chart&)>& build,
                                                    const Budgets& budgets = {});

/// Ter_S(g, c)(F_p) as subalgebras of A_c over F_p, via the chart systems.
std::vector<Subalgebra<PrimeField>> singularity_territory_points(int g, const ConductanceVector& c, std::uint32_t p,
                                                                 const Budgets& budgets = {});

template <class F>
std::vector<std::vector<long long>> integer_annihilators(const Matrix<F>& rref_basis,
                                                         const std::vector<std::size_t>& pivots) {
  const F& f = rref_basis.field();
  const std::size_t n = rref_basis.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<long long>> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    // x_j - sum_r x_{pivot_r} B(r, j) vanishes exactly on the row space.
    Vec<F> coeffs(n, f.zero());
    coeffs[j] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = f.neg(rref_basis(r, j));
    std::vector<long long> row(n, 0);
    if constexpr (std::is_same_v<F, Rationals>) {
      mpz_class lcm = 1;
      for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
      for (std::size_t i = 0; i < n; ++i) {
        mpq_class scaled = coeffs[i] * lcm;
        if (!scaled.get_num().fits_slong_p()) throw ArithmeticError("annihilator coefficient too large");
        row[i] = scaled.get_num().get_si();
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<long long>(*f.to_integer(coeffs[i]));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace territoire
