#include "territoire/polynomial.hpp"

#include <algorithm>

#include "territoire/errors.hpp"

namespace territoire {

namespace {

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out)) throw ArithmeticError("polynomial coefficient overflow");
  return out;
}

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) throw ArithmeticError("polynomial coefficient overflow");
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t num_vars, long long c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw PreconditionError("variable index out of range");
  Polynomial p(num_vars);
  Exponents e(num_vars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int Polynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

std::optional<std::size_t> Polynomial::max_variable() const {
  std::optional<std::size_t> out;
  for (const auto& [e, c] : terms_) {
    for (std::size_t v = num_vars_; v > 0; --v) {
      if (e[v - 1] != 0) {
        if (!out || v - 1 > *out) out = v - 1;
        break;
      }
    }
  }
  return out;
}

void Polynomial::add_term(const Exponents& e, long long c) {
  if (e.size() != num_vars_) throw PreconditionError("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw PreconditionError("polynomials over different variable sets");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.num_vars_ != num_vars_) throw PreconditionError("polynomials over different variable sets");
  for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(long long c) const {
  Polynomial out(num_vars_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, checked_mul(k, c));
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw PreconditionError("polynomials over different variable sets");
  Polynomial out(a.num_vars_);
  Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<std::uint16_t>(ea[v] + eb[v]);
      out.add_term(e, checked_mul(ca, cb));
    }
  }
  return out;
}

std::uint32_t Polynomial::evaluate_mod(const std::vector<std::uint32_t>& values, std::uint32_t p) const {
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    long long r = c % static_cast<long long>(p);
    if (r < 0) r += p;
    std::uint64_t term = static_cast<std::uint64_t>(r);
    for (std::size_t v = 0; v < e.size() && term != 0; ++v) {
      for (std::uint16_t k = 0; k < e[v]; ++k) term = term * values[v] % p;
    }
    acc = (acc + term) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest total degree first, then reverse exponent order, for readability.
  std::vector<std::pair<Exponents, long long>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (auto v : x.first) dx += v;
    for (auto v : y.first) dy += v;
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  bool first = true;
  for (const auto& [e, c] : items) {
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += v < names.size() ? names[v] : "x" + std::to_string(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mono.empty()) {
      s += std::to_string(mag);
    } else {
      if (mag != 1) s += std::to_string(mag) + "*";
      s += mono;
    }
    first = false;
  }
  return s;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw PreconditionError("determinant of an empty matrix");
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Polynomial out(m[0][0].num_vars());
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    auto term = m[0][col] * determinant(minor);
    if (col % 2 == 0) out += term;
    else out -= term;
  }
  return out;
}

}  // namespace territoire
