#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "territoire/invariants.hpp"
#include "territoire/territory.hpp"

namespace territoire {

struct EnumerationResult {
  std::vector<Subalgebra<PrimeField>> points;  // canonical, sorted
  std::uint64_t candidates = 0;                // subspaces containing 1 that were tested
};

/// All corank-delta subalgebras of `alg`, by running through the RREF
/// subspaces of a complement of the unit line and keeping the closed ones.
/// Work is split over pivot patterns across `threads` workers.
EnumerationResult enumerate_subalgebras(const AlgebraPtr<PrimeField>& alg, std::size_t delta,
                                        const Budgets& budgets = {}, unsigned threads = 1);

struct BucketKey {
  int delta = 0;
  int delta_prime = 0;
  std::optional<GluingProfile> profile;
  std::optional<std::vector<int>> conductances;

  auto operator<=>(const BucketKey&) const = default;
  bool operator==(const BucketKey&) const = default;
  std::string to_string() const;
};

struct EnumerationBucket {
  BucketKey key;
  std::vector<Subalgebra<PrimeField>> points;
};

/// Groups points by their invariants; profile and conductances are part of
/// the key only when `c` is given.
std::vector<EnumerationBucket> bucketize(const std::vector<Subalgebra<PrimeField>>& points,
                                         const std::optional<ConductanceVector>& c = std::nullopt);

/// Set partitions of {0..m-1}, parts sorted, in restricted-growth order.
std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t m);

struct DecompositionTerm {
  GluingProfile profile;
  std::vector<std::uint64_t> factor_counts;  // |Ter_S(g_P, c_P)(F_p)| per part
  std::uint64_t predicted = 0;               // product of factor_counts
  std::uint64_t observed = 0;                // size of the matching brute-force bucket
};

struct DecompositionReport {
  ConductanceVector c;
  int delta = 0;
  int delta_prime = 0;
  std::uint32_t p = 0;
  std::vector<DecompositionTerm> terms;
  std::uint64_t predicted_total = 0;
  std::uint64_t observed_total = 0;
  /// Brute-force buckets whose profile matches no admissible term.
  std::vector<EnumerationBucket> unexplained;
  /// Points of the first mismatching bucket, up to the print cap.
  std::vector<Subalgebra<PrimeField>> witnesses;
  std::uint64_t candidates = 0;
  bool ok = false;
};

/// Sums prod_P |Ter_S(g_P, c_P)(F_p)| over admissible (partition, genera)
/// and compares each term with the brute-force bucket of Ter^{delta,delta'}
/// of A_c.  Throws PreconditionError unless sum c = delta + delta'.
DecompositionReport verify_decomposition(const ConductanceVector& c, int delta, int delta_prime, std::uint32_t p,
                                         const Budgets& budgets = {}, unsigned threads = 1);

/// An automorphism of A_c: factor i is sent to factor permutation[i] by
/// t |-> scalings[i][0] t + scalings[i][1] t^2 + ...
struct AutElement {
  std::vector<std::vector<std::uint32_t>> scalings;  // length c_i - 1 each
  std::vector<std::size_t> permutation;

  bool operator==(const AutElement&) const = default;
};

/// |S_c| * prod over c_i >= 2 of (p-1) p^(c_i - 2), saturating.
std::uint64_t aut_group_order(const ConductanceVector& c, std::uint32_t p);

/// The whole group, identity first.  Throws BudgetError above the group cap.
std::vector<AutElement> aut_elements(const ConductanceVector& c, std::uint32_t p, const Budgets& budgets = {});

/// Matrix of the automorphism acting on coordinates: row j is the image of
/// basis vector j.
Matrix<PrimeField> aut_matrix(const ConductanceVector& c, const AutElement& e, const PrimeField& f);

Subalgebra<PrimeField> act(const AutElement& e, const ConductanceVector& c, const Subalgebra<PrimeField>& b);

struct OrbitReport {
  std::uint64_t group_order = 0;
  std::vector<std::vector<std::size_t>> orbits;  // indices into the point list, sorted
  std::vector<std::uint64_t> stabilizer_orders;  // of each orbit's first point
};

/// Orbit partition of an invariant point set.  Throws PreconditionError if
/// some group element maps a point outside the set.
OrbitReport orbits(const std::vector<Subalgebra<PrimeField>>& points, const ConductanceVector& c,
                   const std::vector<AutElement>& group);

/// Orbits are taken over F_p; they need not coincide with the geometric
/// orbits over an algebraic closure.
inline constexpr const char* kOrbitCaveat =
    "orbits computed for the F_p-points of Aut(A_c) acting on F_p-points; geometric orbits over the algebraic "
    "closure may merge several of them";

}  // namespace territoire
