#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "territoire/config.hpp"
#include "territoire/errors.hpp"

namespace territoire {

/// Where marking i lies: a distinguished point or a branch.
struct Marking {
  enum class Kind { point, branch };
  Kind kind = Kind::point;
  std::size_t target = 0;  // index into distinguished points or branches

  bool operator==(const Marking&) const = default;
};

/// Dual-graph data of an equinormalized curve.  Vertices are singularities
/// and components; every branch is an edge from sigma(b) to tau(b).
/// Markings are numbered 1..n by position in `markings`.
struct CombinatorialType {
  std::vector<std::string> sing_ids;
  std::vector<int> sing_genus;
  std::vector<std::string> comp_ids;
  std::vector<int> comp_genus;
  std::vector<std::string> branch_ids;
  std::vector<std::size_t> branch_sing;  // sigma
  std::vector<std::size_t> branch_comp;  // tau
  std::vector<int> branch_conductance;
  std::vector<std::string> dist_ids;
  std::vector<std::size_t> dist_comp;  // epsilon
  std::vector<Marking> markings;       // mu

  std::size_t num_singularities() const { return sing_ids.size(); }
  std::size_t num_components() const { return comp_ids.size(); }
  std::size_t num_branches() const { return branch_ids.size(); }

  int valence(std::size_t s) const;
  int conductance_sum(std::size_t s) const;
  /// g(s) + val(s) - 1.
  int local_delta(std::size_t s) const;
  /// Conductances of the branches at s, weakly decreasing.
  std::vector<int> local_conductances(std::size_t s) const;

  bool operator==(const CombinatorialType&) const = default;
};

/// Every broken invariant, in a fixed order; empty iff the type is valid.
std::vector<std::string> validate_type(const CombinatorialType& t);

struct TypeInvariants {
  int genus = 0;
  int delta = 0;
  int delta_prime = 0;
  int components = 0;
  bool operator==(const TypeInvariants&) const = default;
};

/// Throws InputError listing the violations of an invalid type.
TypeInvariants type_invariants(const CombinatorialType& t);

/// Relabelling-invariant encoding that fixes the marking indices: equal iff
/// the types are isomorphic.  Also returns the type relabelled into the
/// canonical order with ids s1.., k1.., b1.., d1..
struct CanonicalResult {
  std::string form;
  CombinatorialType type;
};
CanonicalResult canonicalize(const CombinatorialType& t);
std::string canonical_form(const CombinatorialType& t);

/// The same type with S, K, B and D shuffled and renamed.
CombinatorialType random_relabel(const CombinatorialType& t, std::mt19937_64& rng);

/// Connected n-marked types with the given invariants, one per isomorphism
/// class, sorted by canonical form.
std::vector<CombinatorialType> enumerate_types(int g, int n, int delta, int delta_prime,
                                               const Budgets& budgets = {});

struct BaseFactor {
  std::size_t component = 0;
  int genus = 0;
  int points = 0;  // n(v) + m(v)
  int dimension = 0;  // 3g - 3 + n(v) + m(v)
  bool unstable = false;  // 2g - 2 + n(v) + m(v) <= 0
};

struct FiberFactor {
  std::size_t singularity = 0;
  int genus = 0;
  std::vector<int> conductances;
  std::optional<int> dimension;  // absent when not in the known catalog
};

struct StratumReport {
  std::vector<BaseFactor> base;
  int base_dimension = 0;
  std::uint64_t symmetry_order = 1;
  std::vector<FiberFactor> fiber;
  /// Base plus known fiber dimensions; a lower bound when some fiber
  /// dimension is unknown.
  int total_dimension = 0;
  bool total_is_exact = true;
};

/// Known dimensions of Ter_S(g, c), or nullopt.
std::optional<int> known_fiber_dimension(int g, const std::vector<int>& c);

StratumReport stratum_report(const CombinatorialType& t);

/// Graphviz description: circles for components, squares for
/// singularities, edges labelled by conductance, plain nodes for
/// distinguished points carrying their marking indices.
std::string to_dot(const CombinatorialType& t);

/// A sample curve type: components of genus 1, 0, 0;
/// an A5 singularity, a self-node, a cusp meeting a smooth branch and a
/// cusp; markings 1 and 2,3 on the genus-1 component.
CombinatorialType example_figure_type();

}  // namespace territoire
