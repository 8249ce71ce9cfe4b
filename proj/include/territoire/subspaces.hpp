#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "territoire/matrix.hpp"

namespace territoire {

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// Visits every k x m RREF matrix over F_p whose pivot columns are exactly
/// `pivots`, in lexicographic order of the free entries.  The matrix passed
/// to `visit` is reused between calls.
void for_each_rref_with_pivots(const PrimeField& f, std::size_t m, const std::vector<std::size_t>& pivots,
                               const std::function<void(const Matrix<PrimeField>&)>& visit);

/// Visits every k-dimensional subspace of F_p^m once, as its RREF basis.
void for_each_subspace(const PrimeField& f, std::size_t m, std::size_t k,
                       const std::function<void(const Matrix<PrimeField>&)>& visit);

}  // namespace territoire
