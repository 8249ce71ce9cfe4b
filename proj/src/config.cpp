#include "territoire/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <vector>

#include "territoire/errors.hpp"

namespace territoire {

namespace {

std::uint64_t parse_count(const std::string& s) {
  std::size_t used = 0;
  unsigned long long v = 0;
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("TERRITOIRE_BUDGET: not a count: '" + s + "'");
  }
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw InputError("TERRITOIRE_BUDGET: not a count: '" + s + "'");
  }
  if (used != s.size() || v == 0) throw InputError("TERRITOIRE_BUDGET: caps must be positive: '" + s + "'");
  return v;
}

}  // namespace

Budgets Budgets::parse(const std::string& text) {
  Budgets b;
  if (text.empty()) return b;
  if (text.find('=') == std::string::npos) {
    auto v = parse_count(text);
    b.enumeration_candidates = b.solve_assignments = b.group_order = v;
    return b;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("TERRITOIRE_BUDGET: expected key=value, got '" + item + "'");
    auto key = item.substr(0, eq);
    auto v = parse_count(item.substr(eq + 1));
    if (key == "candidates") b.enumeration_candidates = v;
    else if (key == "assignments") b.solve_assignments = v;
    else if (key == "group") b.group_order = v;
    else if (key == "dim") b.construction_dim = v;
    else if (key == "exhaustive-dim") b.exhaustive_dim = v;
    else if (key == "print") b.print_cap = v;
    else throw InputError("TERRITOIRE_BUDGET: unknown key '" + key + "'");
  }
  return b;
}

Budgets Budgets::from_environment() {
  const char* env = std::getenv("TERRITOIRE_BUDGET");
  return env ? parse(env) : Budgets{};
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
  return out;
}

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  // Pascal-style recurrence [n,k] = [n-1,k-1] + q^k [n-1,k] keeps everything
  // integral and lets saturation propagate.
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    for (std::uint64_t j = std::min(m, k); j >= 1; --j) {
      row[j] = saturating_add(row[j - 1], saturating_mul(saturating_pow(q, j), row[j]));
    }
  }
  return row[k];
}

}  // namespace territoire
