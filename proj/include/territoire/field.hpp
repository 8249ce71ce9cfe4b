#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "territoire/errors.hpp"

namespace territoire {

enum class FieldKind { rationals, prime };

/// Identifies the base field of a computation: exact rationals or F_p.
struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws InputError unless 2 <= p < 2^31 and p is prime.
  static FieldSpec prime(std::int64_t p);

  bool operator==(const FieldSpec&) const = default;
  std::string to_string() const;
};

bool is_prime(std::uint64_t n);

/// Exact arithmetic over Q backed by GMP rationals.
class Rationals {
 public:
  using value_type = mpq_class;

  FieldSpec spec() const { return FieldSpec::rationals(); }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long v) const { return value_type(static_cast<long>(v)); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw ArithmeticError("division by zero in Q");
    return value_type(1) / a;
  }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  /// Canonical text form, "num/den" or "num" when the denominator is 1.
  std::string to_string(const value_type& a) const { return a.get_str(); }
  value_type parse(const std::string& text) const;

  /// The value as a machine integer, if it is one.
  std::optional<long long> to_integer(const value_type& a) const;
};

/// Arithmetic in Z/pZ with canonical representatives in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec{FieldKind::prime, p_}; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} * b) % p_);
  }
  value_type inv(value_type a) const;
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }

  std::string to_string(value_type a) const { return std::to_string(a); }
  value_type parse(const std::string& text) const;
  std::optional<long long> to_integer(value_type a) const { return static_cast<long long>(a); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

inline bool operator==(const Rationals&, const Rationals&) { return true; }

}  // namespace territoire
