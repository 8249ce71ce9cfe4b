#include "territoire/algebra.hpp"

#include <map>
#include <numeric>

namespace territoire {

ConductanceVector::ConductanceVector(std::vector<int> c) : c_(std::move(c)) {
  if (c_.empty()) throw InputError("conductance vector must have at least one entry");
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] < 1) throw InputError("conductances must be positive");
    if (i > 0 && c_[i] > c_[i - 1]) throw InputError("conductances must be weakly decreasing");
  }
}

int ConductanceVector::sum() const { return std::accumulate(c_.begin(), c_.end(), 0); }

std::size_t ConductanceVector::offset(std::size_t i) const {
  return static_cast<std::size_t>(std::accumulate(c_.begin(), c_.begin() + static_cast<long>(i), 0));
}

std::string ConductanceVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

std::string AlgebraViolation::describe() const {
  std::string idx;
  for (std::size_t i = 0; i < indices.size(); ++i) idx += (i ? "," : "") + std::to_string(indices[i]);
  switch (kind) {
    case Kind::commutativity: return "commutativity violation at (" + idx + ")";
    case Kind::associativity: return "associativity violation at (" + idx + ")";
    case Kind::unit: return "unit violation at (" + idx + ")";
  }
  return "violation";
}

template <class F>
AlgebraPtr<F> make_monomial_algebra(const std::vector<std::vector<int>>& standard, const F& field) {
  if (standard.empty()) throw InputError("monomial algebra needs at least the monomial 1");
  const std::size_t vars = standard.front().size();
  std::map<std::vector<int>, std::size_t> index;
  for (const auto& m : standard) {
    if (m.size() != vars) throw InputError("exponent vectors have inconsistent length");
    index.emplace(m, index.size());
  }
  if (index.size() != standard.size()) throw InputError("repeated standard monomial");
  for (const auto& m : standard) {
    for (std::size_t v = 0; v < vars; ++v) {
      if (m[v] == 0) continue;
      auto lower = m;
      --lower[v];
      if (!index.count(lower)) throw InputError("standard monomials must form an order ideal");
    }
  }
  const std::size_t n = standard.size();
  std::vector<std::string> labels;
  for (const auto& m : standard) {
    std::string s;
    for (std::size_t v = 0; v < vars; ++v) {
      if (m[v] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(v + 1);
      if (m[v] > 1) s += "^" + std::to_string(m[v]);
    }
    labels.push_back(s.empty() ? "1" : s);
  }
  std::vector<typename F::value_type> table(n * n * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> prod(vars);
      for (std::size_t v = 0; v < vars; ++v) prod[v] = standard[i][v] + standard[j][v];
      auto it = index.find(prod);
      if (it != index.end()) table[(i * n + j) * n + it->second] = field.one();
    }
  }
  Vec<F> unit(n, field.zero());
  unit[index.at(std::vector<int>(vars, 0))] = field.one();
  return std::make_shared<FiniteAlgebra<F>>(field, std::move(labels), std::move(unit), std::move(table));
}

template <class F>
AlgebraPtr<F> make_polynomial_quotient(const std::vector<long long>& coeffs, const F& field) {
  const std::size_t d = coeffs.size();
  if (d == 0) throw InputError("k[x]/(f) needs deg f >= 1");
  // Reduction of x^e for e < 2d - 1 as a vector over 1, x, ..., x^{d-1}.
  std::vector<Vec<F>> powers;
  for (std::size_t e = 0; e < 2 * d - 1; ++e) {
    Vec<F> v(d, field.zero());
    if (e < d) {
      v[e] = field.one();
    } else {
      // x^e = x * x^{e-1}; shift and replace x^d by -sum coeffs[i] x^i.
      const auto& prev = powers[e - 1];
      auto top = prev[d - 1];
      for (std::size_t i = d - 1; i > 0; --i) v[i] = prev[i - 1];
      v[0] = field.zero();
      for (std::size_t i = 0; i < d; ++i) {
        v[i] = field.sub(v[i], field.mul(top, field.from_int(coeffs[i])));
      }
    }
    powers.push_back(std::move(v));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
  std::vector<typename F::value_type> table(d * d * d, field.zero());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) table[(i * d + j) * d + k] = powers[i + j][k];
    }
  }
  Vec<F> unit(d, field.zero());
  unit[0] = field.one();
  return std::make_shared<FiniteAlgebra<F>>(field, std::move(labels), std::move(unit), std::move(table));
}

template <class F>
AlgebraPtr<F> make_product(const FiniteAlgebra<F>& a, const FiniteAlgebra<F>& b) {
  const F& f = a.field();
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("L:" + l);
  for (const auto& l : b.labels()) labels.push_back("R:" + l);
  std::vector<typename F::value_type> table(n * n * n, f.zero());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) table[(i * n + j) * n + k] = a.constant(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) table[((na + i) * n + na + j) * n + na + k] = b.constant(i, j, k);
  Vec<F> unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return std::make_shared<FiniteAlgebra<F>>(f, std::move(labels), std::move(unit), std::move(table));
}

AlgebraPtr<PrimeField> reduce_mod_p(const FiniteAlgebra<Rationals>& alg, std::uint32_t p) {
  PrimeField fp(p);
  auto conv = [&](const mpq_class& q) {
    mpz_class den = q.get_den();
    if (den % p == 0) throw InputError("structure constant " + q.get_str() + " is not p-integral");
    mpz_class num = q.get_num() % p;
    mpz_class d = den % p;
    auto nv = fp.from_int(num.get_si());
    auto dv = fp.from_int(d.get_si());
    return fp.mul(nv, fp.inv(dv));
  };
  Vec<PrimeField> unit;
  for (const auto& u : alg.unit()) unit.push_back(conv(u));
  std::vector<std::uint32_t> table;
  table.reserve(alg.table().size());
  for (const auto& c : alg.table()) table.push_back(conv(c));
  auto out = std::make_shared<FiniteAlgebra<PrimeField>>(fp, alg.labels(), std::move(unit), std::move(table));
  if (alg.truncated_product_shape()) out->set_truncated_product_shape(*alg.truncated_product_shape());
  return out;
}

template AlgebraPtr<Rationals> make_monomial_algebra(const std::vector<std::vector<int>>&, const Rationals&);
template AlgebraPtr<PrimeField> make_monomial_algebra(const std::vector<std::vector<int>>&, const PrimeField&);
template AlgebraPtr<Rationals> make_polynomial_quotient(const std::vector<long long>&, const Rationals&);
template AlgebraPtr<PrimeField> make_polynomial_quotient(const std::vector<long long>&, const PrimeField&);
template AlgebraPtr<Rationals> make_product(const FiniteAlgebra<Rationals>&, const FiniteAlgebra<Rationals>&);
template AlgebraPtr<PrimeField> make_product(const FiniteAlgebra<PrimeField>&, const FiniteAlgebra<PrimeField>&);

}  // namespace territoire
