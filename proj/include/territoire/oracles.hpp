#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "territoire/algebra.hpp"
#include "territoire/pointcount.hpp"

namespace territoire::oracles {

/// Stirling number of the second kind S(n, k), by the usual recurrence.
std::uint64_t stirling2(unsigned n, unsigned k);

/// Number of k-dimensional subspaces of F_p^m that contain no coordinate
/// axis.  Spans are formed as explicit vector sets from every k-tuple of
/// vectors, so nothing here shares code with the RREF routines.
std::uint64_t axis_avoiding_subspaces(unsigned m, unsigned k, std::uint32_t p);

/// Number of k-dimensional subspaces of F_p^m counted the same way.
std::uint64_t subspace_count_by_spans(unsigned m, unsigned k, std::uint32_t p);

/// True when the materialized automorphism matrices are pairwise distinct
/// and closed under composition.
bool aut_group_closed(const ConductanceVector& c, std::uint32_t p);

struct NamedAlgebra {
  std::string name;
  AlgebraPtr<PrimeField> algebra;
};

/// Every A_c with sum c <= max_dim over F_p.
std::vector<NamedAlgebra> truncated_products(std::uint32_t p, std::size_t max_dim);

/// The algebras of dimension <= 5 used for exhaustive checks: every A_c,
/// local monomial algebras in two to four variables, a quadratic field
/// extension or its split/ramified analogue, and products with k.
std::vector<NamedAlgebra> test_battery(std::uint32_t p);

}  // namespace territoire::oracles
