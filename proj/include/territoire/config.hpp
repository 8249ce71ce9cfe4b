#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace territoire {

/// Size caps shared by every exhaustive routine.  All of them fail closed
/// with BudgetError (or SizeError) instead of running unbounded.
struct Budgets {
  std::size_t construction_dim = 24;
  std::size_t exhaustive_dim = 12;
  std::uint64_t enumeration_candidates = 10'000'000;
  std::uint64_t solve_assignments = 10'000'000;
  std::uint64_t group_order = 100'000;
  std::size_t print_cap = 50;

  /// Defaults overridden by the TERRITOIRE_BUDGET environment variable, which
  /// holds either one integer (applied to the three count caps) or a list
  /// such as "candidates=1000000,assignments=500000,group=1000,dim=20".
  static Budgets from_environment();
  static Budgets parse(const std::string& text);
};

/// Saturating helpers for candidate counts that may overflow 64 bits.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

/// Gaussian binomial [n choose k]_q, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);

}  // namespace territoire
