#include "territoire/field.hpp"

#include <limits>

namespace territoire {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
    throw InputError("characteristic " + std::to_string(p) + " is not a prime in [2, 2^31)");
  }
  return FieldSpec{FieldKind::prime, static_cast<std::uint32_t>(p)};
}

std::string FieldSpec::to_string() const {
  if (kind == FieldKind::rationals) return "Q";
  return "F_" + std::to_string(characteristic);
}

Rationals::value_type Rationals::parse(const std::string& text) const {
  value_type v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw InputError("not a rational number: '" + text + "'");
  }
  if (sgn(v.get_den()) == 0) throw InputError("zero denominator: '" + text + "'");
  v.canonicalize();
  return v;
}

std::optional<long long> Rationals::to_integer(const value_type& a) const {
  if (a.get_den() != 1) return std::nullopt;
  const mpz_class& num = a.get_num();
  if (!num.fits_slong_p()) return std::nullopt;
  return num.get_si();
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  (void)FieldSpec::prime(p);
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw ArithmeticError("division by zero in F_" + std::to_string(p_));
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<value_type>(t);
}

PrimeField::value_type PrimeField::parse(const std::string& text) const {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InputError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw InputError("not an integer: '" + text + "'");
  return from_int(v);
}

}  // namespace territoire
