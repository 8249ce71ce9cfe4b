#include "territoire/subspaces.hpp"

namespace territoire {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

void for_each_rref_with_pivots(const PrimeField& f, std::size_t m, const std::vector<std::size_t>& pivots,
                               const std::function<void(const Matrix<PrimeField>&)>& visit) {
  const std::size_t k = pivots.size();
  Matrix<PrimeField> mat(f, k, m);
  std::vector<bool> is_pivot(m, false);
  for (auto p : pivots) is_pivot[p] = true;
  // Free slots: row r, columns after its pivot that are not pivots themselves.
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t r = 0; r < k; ++r) {
    mat(r, pivots[r]) = 1;
    for (std::size_t c = pivots[r] + 1; c < m; ++c) {
      if (!is_pivot[c]) free.emplace_back(r, c);
    }
  }
  const std::uint32_t p = f.characteristic();
  while (true) {
    visit(mat);
    // Odometer over the free entries, last slot fastest.
    std::size_t i = free.size();
    while (i > 0) {
      auto [r, c] = free[i - 1];
      if (++mat(r, c) < p) break;
      mat(r, c) = 0;
      --i;
    }
    if (i == 0) break;
  }
}

void for_each_subspace(const PrimeField& f, std::size_t m, std::size_t k,
                       const std::function<void(const Matrix<PrimeField>&)>& visit) {
  for (const auto& pivots : combinations(m, k)) for_each_rref_with_pivots(f, m, pivots, visit);
}

}  // namespace territoire
