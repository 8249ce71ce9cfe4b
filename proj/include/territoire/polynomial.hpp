#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace territoire {

using Exponents = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial with 64-bit integer coefficients over a
/// fixed number of variables.  Coefficient overflow throws ArithmeticError;
/// the emitted systems stay far below that range.
class Polynomial {
 public:
  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, long long c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return num_vars_; }
  const std::map<Exponents, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  int degree_in(std::size_t var) const;
  /// Highest variable index that occurs, or nullopt for constants.
  std::optional<std::size_t> max_variable() const;

  void add_term(const Exponents& e, long long c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(long long c) const;

  bool operator==(const Polynomial&) const = default;

  /// Value in F_p at a full assignment.
  std::uint32_t evaluate_mod(const std::vector<std::uint32_t>& values, std::uint32_t p) const;

  /// Human-readable form such as "a_{1,1}^2 - a_{1,1}".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t num_vars_;
  std::map<Exponents, long long> terms_;
};

/// Determinant by cofactor expansion; inputs are at most a few rows wide.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

}  // namespace territoire
