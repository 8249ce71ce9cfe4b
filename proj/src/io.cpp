#include "territoire/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace territoire {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path.empty() ? "/" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at(path, key), "missing required field");
  return *it;
}

const json& require_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

long long require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  return j.get<long long>();
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

ConductanceVector conductances_from_json(const json& j, const std::string& path) {
  require_array(j, path);
  std::vector<int> c;
  for (std::size_t i = 0; i < j.size(); ++i) c.push_back(static_cast<int>(require_int(j[i], at(path, i))));
  try {
    return ConductanceVector(c);
  } catch (const InputError& e) {
    throw SchemaError(path, e.what());
  }
}

template <class F>
AlgebraPtr<F> structure_constants_from_json(const F& f, const json& spec, const std::string& path) {
  const auto n = require_int(require(spec, "dim", path), at(path, "dim"));
  if (n < 1) throw SchemaError(at(path, "dim"), "dimension must be at least 1");
  const std::size_t dim = static_cast<std::size_t>(n);
  Vec<F> unit;
  const auto& ju = require_array(require(spec, "unit", path), at(path, "unit"));
  if (ju.size() != dim) throw SchemaError(at(path, "unit"), "expected " + std::to_string(dim) + " entries");
  for (std::size_t i = 0; i < dim; ++i) unit.push_back(scalar_from_json(f, ju[i], at(at(path, "unit"), i)));
  std::vector<std::string> labels;
  if (spec.contains("labels")) {
    const auto& jl = require_array(spec["labels"], at(path, "labels"));
    if (jl.size() != dim) throw SchemaError(at(path, "labels"), "expected " + std::to_string(dim) + " labels");
    for (std::size_t i = 0; i < dim; ++i) labels.push_back(require_string(jl[i], at(at(path, "labels"), i)));
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  const std::string tpath = at(path, "table");
  const auto& jt = require_array(require(spec, "table", path), tpath);
  if (jt.size() != dim) throw SchemaError(tpath, "expected " + std::to_string(dim) + " rows");
  std::vector<typename F::value_type> table(dim * dim * dim, f.zero());
  for (std::size_t i = 0; i < dim; ++i) {
    const auto pi = at(tpath, i);
    const auto& ji = require_array(jt[i], pi);
    if (ji.size() != dim) throw SchemaError(pi, "expected " + std::to_string(dim) + " entries");
    for (std::size_t jx = 0; jx < dim; ++jx) {
      const auto pj = at(pi, jx);
      const auto& jj = require_array(ji[jx], pj);
      if (jj.size() != dim) throw SchemaError(pj, "expected " + std::to_string(dim) + " entries");
      for (std::size_t k = 0; k < dim; ++k) table[(i * dim + jx) * dim + k] = scalar_from_json(f, jj[k], at(pj, k));
    }
  }
  auto alg = std::make_shared<FiniteAlgebra<F>>(f, std::move(labels), std::move(unit), std::move(table));
  auto bad = validate_algebra(*alg);
  if (!bad.empty()) throw SchemaError(tpath, "not a commutative unital algebra: " + bad.front().describe());
  return alg;
}

}  // namespace

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("/", path.string() + ": invalid JSON: " + e.what());
  }
}

FieldSpec field_from_json(const json& j, const std::string& path) {
  auto kind = require_string(require(j, "kind", path), at(path, "kind"));
  if (kind == "rationals") return FieldSpec::rationals();
  if (kind == "prime") {
    auto p = require_int(require(j, "p", path), at(path, "p"));
    try {
      return FieldSpec::prime(p);
    } catch (const InputError& e) {
      throw SchemaError(at(path, "p"), e.what());
    }
  }
  throw SchemaError(at(path, "kind"), "expected \"rationals\" or \"prime\"");
}

json field_to_json(const FieldSpec& f) {
  if (f.kind == FieldKind::rationals) return json{{"kind", "rationals"}};
  return json{{"kind", "prime"}, {"p", f.characteristic}};
}

AlgebraPtr<PrimeField> AlgebraDocument::mod_p(std::uint32_t p) const {
  if (over_q) return reduce_mod_p(*over_q, p);
  if (over_p->field().characteristic() != p) {
    throw InputError("algebra is over F_" + std::to_string(over_p->field().characteristic()) + ", not F_" +
                     std::to_string(p));
  }
  return over_p;
}

AlgebraDocument algebra_from_json(const json& j, const std::string& path, const Budgets& budgets,
                                  const std::filesystem::path& base) {
  if (j.is_string()) {
    std::filesystem::path file = j.get<std::string>();
    if (file.is_relative()) file = base / file;
    return algebra_from_json(load_json_file(file), "", budgets, file.parent_path());
  }
  AlgebraDocument doc;
  doc.field = field_from_json(require(j, "field", path), at(path, "field"));
  const std::string spath = at(path, "spec");
  const auto& spec = require(j, "spec", path);
  auto kind = require_string(require(spec, "kind", spath), at(spath, "kind"));
  if (kind == "truncated_product") {
    auto c = conductances_from_json(require(spec, "conductances", spath), at(spath, "conductances"));
    if (doc.field.kind == FieldKind::rationals) {
      doc.over_q = make_truncated_product(c, Rationals{}, budgets);
    } else {
      doc.over_p = make_truncated_product(c, PrimeField(doc.field.characteristic), budgets);
    }
  } else if (kind == "structure_constants") {
    if (doc.field.kind == FieldKind::rationals) {
      doc.over_q = structure_constants_from_json(Rationals{}, spec, spath);
    } else {
      doc.over_p = structure_constants_from_json(PrimeField(doc.field.characteristic), spec, spath);
    }
  } else {
    throw SchemaError(at(spath, "kind"), "expected \"truncated_product\" or \"structure_constants\"");
  }
  return doc;
}

json conductances_to_json(const ConductanceVector& c) { return json(c.values()); }

template <>
Rationals::value_type scalar_from_json(const Rationals& f, const json& j, const std::string& path) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (!j.is_string()) throw SchemaError(path, "expected a rational as \"num/den\" or an integer");
  try {
    return f.parse(j.get<std::string>());
  } catch (const InputError& e) {
    throw SchemaError(path, e.what());
  }
}

template <>
PrimeField::value_type scalar_from_json(const PrimeField& f, const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer in [0, p)");
  auto v = j.get<long long>();
  if (v < 0 || v >= static_cast<long long>(f.characteristic())) {
    throw SchemaError(path, "expected an integer in [0, " + std::to_string(f.characteristic()) + ")");
  }
  return static_cast<PrimeField::value_type>(v);
}

template <>
json scalar_to_json(const Rationals& f, const mpq_class& v) {
  return f.to_string(v);
}

template <>
json scalar_to_json(const PrimeField&, const std::uint32_t& v) {
  return v;
}

template <class F>
Matrix<F> matrix_from_json(const F& f, const json& j, std::size_t cols, const std::string& path) {
  require_array(j, path);
  Matrix<F> m(f, 0, cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto pr = at(path, r);
    const auto& row = require_array(j[r], pr);
    if (row.size() != cols) throw SchemaError(pr, "expected " + std::to_string(cols) + " entries");
    Vec<F> v;
    for (std::size_t c = 0; c < cols; ++c) v.push_back(scalar_from_json(f, row[c], at(pr, c)));
    m.append_row(v);
  }
  return m;
}

template <class F>
json matrix_to_json(const Matrix<F>& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.field(), m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class F>
json algebra_to_json(const FiniteAlgebra<F>& alg) {
  json out;
  out["field"] = field_to_json(alg.field().spec());
  if (alg.truncated_product_shape()) {
    out["spec"] = {{"kind", "truncated_product"}, {"conductances", conductances_to_json(*alg.truncated_product_shape())}};
    return out;
  }
  const std::size_t n = alg.dim();
  json unit = json::array();
  for (const auto& u : alg.unit()) unit.push_back(scalar_to_json(alg.field(), u));
  json table = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json ti = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      json tj = json::array();
      for (std::size_t k = 0; k < n; ++k) tj.push_back(scalar_to_json(alg.field(), alg.constant(i, j, k)));
      ti.push_back(std::move(tj));
    }
    table.push_back(std::move(ti));
  }
  out["spec"] = {{"kind", "structure_constants"}, {"dim", n}, {"unit", unit}, {"labels", alg.labels()}, {"table", table}};
  return out;
}

SubalgebraDocument subalgebra_from_json(const json& j, const std::optional<AlgebraDocument>& ambient,
                                        const Budgets& budgets, const std::filesystem::path& base) {
  SubalgebraDocument doc;
  if (ambient) {
    doc.algebra = *ambient;
  } else {
    doc.algebra = algebra_from_json(require(j, "algebra", ""), "/algebra", budgets, base);
  }
  const auto& jb = require(j, "basis", "");
  try {
    if (doc.algebra.over_q) {
      auto m = matrix_from_json(Rationals{}, jb, doc.algebra.dim(), "/basis");
      doc.over_q = Subalgebra<Rationals>::from_span(doc.algebra.over_q, std::move(m));
    } else {
      auto m = matrix_from_json(doc.algebra.over_p->field(), jb, doc.algebra.dim(), "/basis");
      doc.over_p = Subalgebra<PrimeField>::from_span(doc.algebra.over_p, std::move(m));
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const InputError& e) {
    throw SchemaError("/basis", e.what());
  }
  return doc;
}

json gluing_profile_to_json(const GluingProfile& g) {
  json parts = json::array();
  for (std::size_t i = 0; i < g.partition.size(); ++i) {
    json members = json::array();
    for (auto x : g.partition[i]) members.push_back(x + 1);
    parts.push_back({{"factors", members}, {"genus", g.genera[i]}});
  }
  return parts;
}

template <class F>
json invariant_record_to_json(const InvariantRecord<F>& rec) {
  json out;
  out["delta"] = rec.delta;
  out["delta_prime"] = rec.delta_prime;
  out["gorenstein"] = rec.gorenstein;
  out["conductor"] = matrix_to_json(rec.conductor);
  out["branch_conductances"] = rec.branch_conductances ? json(*rec.branch_conductances) : json(nullptr);
  out["genus"] = rec.genus ? json(*rec.genus) : json(nullptr);
  out["branches"] = rec.branches ? json(*rec.branches) : json(nullptr);
  out["gluing_profile"] = rec.profile ? gluing_profile_to_json(*rec.profile) : json(nullptr);
  out["trivial_convention"] = rec.trivial_convention;
  return out;
}

json polynomial_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"coeff", c}, {"exponents", e}});
  return terms;
}

json system_to_json(const PolynomialSystem& s, const Chart& chart) {
  json out;
  out["chart"] = {{"ambient_dim", chart.ambient_dim()}, {"pivots", chart.pivots()}};
  out["variables"] = s.variables;
  json closed = json::array(), open = json::array(), pc = json::array(), po = json::array();
  for (std::size_t i = 0; i < s.closed.size(); ++i) {
    closed.push_back(polynomial_to_json(s.closed[i]));
    pc.push_back(to_string(s.closed_provenance[i]));
  }
  for (std::size_t i = 0; i < s.open.size(); ++i) {
    open.push_back(polynomial_to_json(s.open[i]));
    po.push_back(to_string(s.open_provenance[i]));
  }
  out["closed"] = closed;
  out["open"] = open;
  out["open_required"] = s.open_required;
  out["provenance"] = {{"closed", pc}, {"open", po}};
  return out;
}

json subalgebra_to_json(const Subalgebra<PrimeField>& b) { return matrix_to_json(b.basis()); }

json bucket_key_to_json(const BucketKey& k) {
  json out{{"delta", k.delta}, {"delta_prime", k.delta_prime}};
  out["gluing_profile"] = k.profile ? gluing_profile_to_json(*k.profile) : json(nullptr);
  out["branch_conductances"] = k.conductances ? json(*k.conductances) : json(nullptr);
  return out;
}

json decomposition_to_json(const DecompositionReport& r) {
  json out;
  out["conductances"] = conductances_to_json(r.c);
  out["delta"] = r.delta;
  out["delta_prime"] = r.delta_prime;
  out["p"] = r.p;
  json terms = json::array();
  for (const auto& t : r.terms) {
    terms.push_back({{"gluing_profile", gluing_profile_to_json(t.profile)},
                     {"factor_counts", t.factor_counts},
                     {"predicted", t.predicted},
                     {"observed", t.observed}});
  }
  out["terms"] = terms;
  out["predicted_total"] = r.predicted_total;
  out["observed_total"] = r.observed_total;
  json unexplained = json::array();
  for (const auto& b : r.unexplained) unexplained.push_back({{"key", bucket_key_to_json(b.key)}, {"size", b.points.size()}});
  out["unexplained_buckets"] = unexplained;
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(subalgebra_to_json(w));
  out["witnesses"] = witnesses;
  out["ok"] = r.ok;
  return out;
}

json orbits_to_json(const OrbitReport& r, const std::vector<Subalgebra<PrimeField>>& points, std::size_t print_cap) {
  json out;
  out["group_order"] = r.group_order;
  json orbits = json::array();
  for (std::size_t i = 0; i < r.orbits.size(); ++i) {
    json members = json::array();
    for (std::size_t k = 0; k < r.orbits[i].size() && k < print_cap; ++k) members.push_back(subalgebra_to_json(points[r.orbits[i][k]]));
    orbits.push_back({{"size", r.orbits[i].size()}, {"stabilizer_order", r.stabilizer_orders[i]}, {"members", members}});
  }
  out["orbits"] = orbits;
  out["caveat"] = kOrbitCaveat;
  return out;
}

CombinatorialType type_from_json(const json& j) {
  CombinatorialType t;
  std::map<std::string, std::size_t> sing, comp, branch, dist;
  auto read_vertices = [&](const char* key, std::vector<std::string>& ids, std::vector<int>& genus,
                           std::map<std::string, std::size_t>& index) {
    const std::string path = std::string("/") + key;
    if (!j.contains(key)) return;
    const auto& arr = require_array(j[key], path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = at(path, i);
      auto id = require_string(require(arr[i], "id", p), at(p, "id"));
      if (!index.emplace(id, i).second) throw SchemaError(at(p, "id"), "duplicate id " + id);
      ids.push_back(id);
      genus.push_back(static_cast<int>(require_int(require(arr[i], "genus", p), at(p, "genus"))));
    }
  };
  if (!j.is_object()) throw SchemaError("/", "expected an object");
  read_vertices("singularities", t.sing_ids, t.sing_genus, sing);
  read_vertices("components", t.comp_ids, t.comp_genus, comp);
  auto lookup = [](const std::map<std::string, std::size_t>& index, const std::string& id, const std::string& path) {
    auto it = index.find(id);
    if (it == index.end()) throw SchemaError(path, "unknown id " + id);
    return it->second;
  };
  if (j.contains("branches")) {
    const auto& arr = require_array(j["branches"], "/branches");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = at("/branches", i);
      auto id = require_string(require(arr[i], "id", p), at(p, "id"));
      if (!branch.emplace(id, i).second) throw SchemaError(at(p, "id"), "duplicate id " + id);
      t.branch_ids.push_back(id);
      t.branch_sing.push_back(lookup(sing, require_string(require(arr[i], "sing", p), at(p, "sing")), at(p, "sing")));
      t.branch_comp.push_back(lookup(comp, require_string(require(arr[i], "comp", p), at(p, "comp")), at(p, "comp")));
      t.branch_conductance.push_back(static_cast<int>(require_int(require(arr[i], "conductance", p), at(p, "conductance"))));
    }
  }
  if (j.contains("distinguished")) {
    const auto& arr = require_array(j["distinguished"], "/distinguished");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = at("/distinguished", i);
      auto id = require_string(require(arr[i], "id", p), at(p, "id"));
      if (!dist.emplace(id, i).second) throw SchemaError(at(p, "id"), "duplicate id " + id);
      t.dist_ids.push_back(id);
      t.dist_comp.push_back(lookup(comp, require_string(require(arr[i], "comp", p), at(p, "comp")), at(p, "comp")));
    }
  }
  if (j.contains("markings")) {
    const auto& arr = require_array(j["markings"], "/markings");
    std::vector<std::optional<Marking>> slots(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto p = at("/markings", i);
      auto index = require_int(require(arr[i], "index", p), at(p, "index"));
      if (index < 1 || static_cast<std::size_t>(index) > arr.size() || slots[static_cast<std::size_t>(index - 1)]) {
        throw SchemaError(at(p, "index"), "marking indices must be exactly 1.." + std::to_string(arr.size()));
      }
      auto where = require_string(require(arr[i], "at", p), at(p, "at"));
      Marking mk;
      if (where.rfind("branch:", 0) == 0) {
        mk = {Marking::Kind::branch, lookup(branch, where.substr(7), at(p, "at"))};
      } else if (where.rfind("point:", 0) == 0) {
        mk = {Marking::Kind::point, lookup(dist, where.substr(6), at(p, "at"))};
      } else {
        throw SchemaError(at(p, "at"), "expected \"branch:<id>\" or \"point:<id>\"");
      }
      slots[static_cast<std::size_t>(index - 1)] = mk;
    }
    for (auto& s : slots) t.markings.push_back(*s);
  }
  return t;
}

json type_to_json(const CombinatorialType& t) {
  json out;
  json s = json::array(), k = json::array(), b = json::array(), d = json::array(), m = json::array();
  for (std::size_t i = 0; i < t.num_singularities(); ++i) s.push_back({{"id", t.sing_ids[i]}, {"genus", t.sing_genus[i]}});
  for (std::size_t i = 0; i < t.num_components(); ++i) k.push_back({{"id", t.comp_ids[i]}, {"genus", t.comp_genus[i]}});
  for (std::size_t i = 0; i < t.num_branches(); ++i) {
    b.push_back({{"id", t.branch_ids[i]},
                 {"sing", t.sing_ids[t.branch_sing[i]]},
                 {"comp", t.comp_ids[t.branch_comp[i]]},
                 {"conductance", t.branch_conductance[i]}});
  }
  for (std::size_t i = 0; i < t.dist_ids.size(); ++i) d.push_back({{"id", t.dist_ids[i]}, {"comp", t.comp_ids[t.dist_comp[i]]}});
  for (std::size_t i = 0; i < t.markings.size(); ++i) {
    const auto& mk = t.markings[i];
    std::string where = mk.kind == Marking::Kind::branch ? "branch:" + t.branch_ids[mk.target] : "point:" + t.dist_ids[mk.target];
    m.push_back({{"index", i + 1}, {"at", where}});
  }
  out["singularities"] = s;
  out["components"] = k;
  out["branches"] = b;
  out["distinguished"] = d;
  out["markings"] = m;
  return out;
}

json stratum_to_json(const StratumReport& r, const CombinatorialType& t) {
  json out;
  json base = json::array();
  for (const auto& f : r.base) {
    base.push_back({{"component", t.comp_ids[f.component]},
                    {"genus", f.genus},
                    {"points", f.points},
                    {"dimension", f.dimension},
                    {"unstable", f.unstable}});
  }
  json fiber = json::array();
  for (const auto& f : r.fiber) {
    fiber.push_back({{"singularity", t.sing_ids[f.singularity]},
                     {"genus", f.genus},
                     {"conductances", f.conductances},
                     {"dimension", f.dimension ? json(*f.dimension) : json("equations emitted")}});
  }
  out["base_factors"] = base;
  out["base_dimension"] = r.base_dimension;
  out["symmetry_order"] = r.symmetry_order;
  out["fiber_factors"] = fiber;
  out[r.total_is_exact ? "total_dimension" : "total_dimension_lower_bound"] = r.total_dimension;
  return out;
}

template Matrix<Rationals> matrix_from_json(const Rationals&, const json&, std::size_t, const std::string&);
template Matrix<PrimeField> matrix_from_json(const PrimeField&, const json&, std::size_t, const std::string&);
template json matrix_to_json(const Matrix<Rationals>&);
template json matrix_to_json(const Matrix<PrimeField>&);
template json algebra_to_json(const FiniteAlgebra<Rationals>&);
template json algebra_to_json(const FiniteAlgebra<PrimeField>&);
template json invariant_record_to_json(const InvariantRecord<Rationals>&);
template json invariant_record_to_json(const InvariantRecord<PrimeField>&);

}  // namespace territoire
