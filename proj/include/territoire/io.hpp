#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "territoire/combtypes.hpp"
#include "territoire/invariants.hpp"
#include "territoire/pointcount.hpp"
#include "territoire/territory.hpp"

namespace territoire {

using json = nlohmann::ordered_json;

/// Reads and parses a JSON file; parse failures become SchemaError at "/".
json load_json_file(const std::filesystem::path& path);

FieldSpec field_from_json(const json& j, const std::string& path);
json field_to_json(const FieldSpec& f);

/// An algebra read from JSON, held over whichever field it names.
struct AlgebraDocument {
  FieldSpec field;
  AlgebraPtr<Rationals> over_q;
  AlgebraPtr<PrimeField> over_p;

  std::size_t dim() const { return over_q ? over_q->dim() : over_p->dim(); }
  const std::optional<ConductanceVector>& shape() const {
    return over_q ? over_q->truncated_product_shape() : over_p->truncated_product_shape();
  }
  IntegerAlgebra integer() const { return over_q ? integer_structure(*over_q) : integer_structure(*over_p); }
  /// The algebra over F_p, reducing rational structure constants if needed.
  AlgebraPtr<PrimeField> mod_p(std::uint32_t p) const;
};

/// {"field": ..., "spec": {"kind": "truncated_product" | "structure_constants", ...}}.
/// A string is taken as a path to such a document, relative to `base`.
AlgebraDocument algebra_from_json(const json& j, const std::string& path, const Budgets& budgets = {},
                                  const std::filesystem::path& base = {});
json conductances_to_json(const ConductanceVector& c);

template <class F>
typename F::value_type scalar_from_json(const F& f, const json& j, const std::string& path);
template <class F>
json scalar_to_json(const F& f, const typename F::value_type& v);

template <>
Rationals::value_type scalar_from_json(const Rationals& f, const json& j, const std::string& path);
template <>
PrimeField::value_type scalar_from_json(const PrimeField& f, const json& j, const std::string& path);
template <>
json scalar_to_json(const Rationals& f, const mpq_class& v);
template <>
json scalar_to_json(const PrimeField& f, const std::uint32_t& v);

template <class F>
Matrix<F> matrix_from_json(const F& f, const json& j, std::size_t cols, const std::string& path);
template <class F>
json matrix_to_json(const Matrix<F>& m);

template <class F>
json algebra_to_json(const FiniteAlgebra<F>& alg);

/// A subalgebra document {"algebra": <algebra or path>, "basis": [[...], ...]}.
/// When `ambient` is given it takes the place of the embedded algebra.
struct SubalgebraDocument {
  AlgebraDocument algebra;
  std::optional<Subalgebra<Rationals>> over_q;
  std::optional<Subalgebra<PrimeField>> over_p;
};
SubalgebraDocument subalgebra_from_json(const json& j, const std::optional<AlgebraDocument>& ambient,
                                        const Budgets& budgets = {}, const std::filesystem::path& base = {});

template <class F>
json invariant_record_to_json(const InvariantRecord<F>& rec);
json gluing_profile_to_json(const GluingProfile& g);

json polynomial_to_json(const Polynomial& p);
json system_to_json(const PolynomialSystem& s, const Chart& chart);

json subalgebra_to_json(const Subalgebra<PrimeField>& b);
json bucket_key_to_json(const BucketKey& k);
json decomposition_to_json(const DecompositionReport& r);
json orbits_to_json(const OrbitReport& r, const std::vector<Subalgebra<PrimeField>>& points, std::size_t print_cap);

CombinatorialType type_from_json(const json& j);
json type_to_json(const CombinatorialType& t);
json stratum_to_json(const StratumReport& r, const CombinatorialType& t);

}  // namespace territoire
