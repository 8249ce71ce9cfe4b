#include "territoire/oracles.hpp"

#include <algorithm>
#include <set>

namespace territoire::oracles {

std::uint64_t stirling2(unsigned n, unsigned k) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  }
  return k <= n ? s[n][k] : 0;
}

namespace {

// Vectors of F_p^m are encoded as integers in base p.
using Code = std::uint32_t;

std::vector<std::uint32_t> decode(Code x, unsigned m, std::uint32_t p) {
  std::vector<std::uint32_t> v(m);
  for (unsigned i = 0; i < m; ++i) {
    v[i] = x % p;
    x /= p;
  }
  return v;
}

Code encode(const std::vector<std::uint32_t>& v, std::uint32_t p) {
  Code x = 0;
  for (unsigned i = static_cast<unsigned>(v.size()); i > 0; --i) x = x * p + v[i - 1];
  return x;
}

// All distinct spans of k-tuples whose span has exactly p^k elements.
std::set<std::vector<Code>> spans(unsigned m, unsigned k, std::uint32_t p) {
  Code total = 1;
  for (unsigned i = 0; i < m; ++i) total *= p;
  std::uint64_t target = 1;
  for (unsigned i = 0; i < k; ++i) target *= p;
  std::set<std::vector<Code>> out;
  std::vector<Code> tuple(k, 0);
  while (true) {
    std::set<Code> span;
    std::vector<std::uint32_t> coeff(k, 0);
    while (true) {
      std::vector<std::uint32_t> acc(m, 0);
      for (unsigned a = 0; a < k; ++a) {
        auto v = decode(tuple[a], m, p);
        for (unsigned i = 0; i < m; ++i) acc[i] = static_cast<std::uint32_t>((acc[i] + std::uint64_t{coeff[a]} * v[i]) % p);
      }
      span.insert(encode(acc, p));
      unsigned a = 0;
      while (a < k && ++coeff[a] == p) coeff[a++] = 0;
      if (a == k) break;
    }
    if (span.size() == target) out.emplace(span.begin(), span.end());
    unsigned a = 0;
    while (a < k && ++tuple[a] == total) tuple[a++] = 0;
    if (a == k) break;
  }
  return out;
}

}  // namespace

std::uint64_t subspace_count_by_spans(unsigned m, unsigned k, std::uint32_t p) { return spans(m, k, p).size(); }

std::uint64_t axis_avoiding_subspaces(unsigned m, unsigned k, std::uint32_t p) {
  std::uint64_t count = 0;
  for (const auto& span : spans(m, k, p)) {
    bool avoids = true;
    for (unsigned i = 0; i < m && avoids; ++i) {
      std::vector<std::uint32_t> axis(m, 0);
      axis[i] = 1;
      avoids = !std::binary_search(span.begin(), span.end(), encode(axis, p));
    }
    count += avoids;
  }
  return count;
}

bool aut_group_closed(const ConductanceVector& c, std::uint32_t p) {
  PrimeField f(p);
  std::set<std::vector<std::uint32_t>> mats;
  std::vector<Matrix<PrimeField>> list;
  for (const auto& e : aut_elements(c, p)) {
    auto m = aut_matrix(c, e, f);
    if (!mats.insert(m.data()).second) return false;
    list.push_back(std::move(m));
  }
  const std::size_t n = static_cast<std::size_t>(c.sum());
  for (const auto& a : list) {
    for (const auto& b : list) {
      Matrix<PrimeField> ab(f, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) ab(i, k) = f.add(ab(i, k), f.mul(a(i, j), b(j, k)));
      if (!mats.count(ab.data())) return false;
    }
  }
  return true;
}

namespace {

void partitions(int total, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int x = std::min(total, max_part); x >= 1; --x) {
    cur.push_back(x);
    partitions(total - x, x, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<NamedAlgebra> truncated_products(std::uint32_t p, std::size_t max_dim) {
  PrimeField f(p);
  std::vector<NamedAlgebra> out;
  for (int n = 1; n <= static_cast<int>(max_dim); ++n) {
    std::vector<int> cur;
    std::vector<std::vector<int>> parts;
    partitions(n, n, cur, parts);
    for (auto& c : parts) {
      ConductanceVector cv(c);
      out.push_back({"A_" + cv.to_string(), make_truncated_product(cv, f)});
    }
  }
  return out;
}

std::vector<NamedAlgebra> test_battery(std::uint32_t p) {
  PrimeField f(p);
  auto out = truncated_products(p, 5);
  auto k = make_truncated_product(ConductanceVector({1}), f);
  auto mono = [&](const std::string& name, const std::vector<std::vector<int>>& standard) {
    auto a = make_monomial_algebra(standard, f);
    out.push_back({name, a});
    return a;
  };
  auto xy_m2 = mono("k[x,y]/(x,y)^2", {{0, 0}, {1, 0}, {0, 1}});
  auto xy_sq = mono("k[x,y]/(x^2,y^2)", {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  mono("k[x,y,z]/(x,y,z)^2", {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  mono("k[x,y]/(x^2,xy,y^3)", {{0, 0}, {1, 0}, {0, 1}, {0, 2}});
  mono("k[x,y,z,w]/(x,y,z,w)^2", {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  mono("k[x,y]/(x^3,xy,y^2)", {{0, 0}, {1, 0}, {2, 0}, {0, 1}});
  out.push_back({"k[x,y]/(x,y)^2 x k", make_product(*xy_m2, *k)});
  out.push_back({"k[x,y]/(x^2,y^2) x k", make_product(*xy_sq, *k)});
  // x^2 + x + 1 is irreducible over F_2 (giving F_4); over other p it may split.
  auto quad = make_polynomial_quotient({1, 1}, f);
  out.push_back({"k[x]/(x^2+x+1)", quad});
  out.push_back({"k[x]/(x^2+x+1) x k", make_product(*quad, *k)});
  out.push_back({"k[x]/(x^2+x+1) x k^2", make_product(*make_product(*quad, *k), *k)});
  out.push_back({"k[x]/(x^2+x+1) x k[t]/(t^2)", make_product(*quad, *make_truncated_product(ConductanceVector({2}), f))});
  return out;
}

}  // namespace territoire::oracles
