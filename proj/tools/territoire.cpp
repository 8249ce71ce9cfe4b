#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "territoire/combtypes.hpp"
#include "territoire/io.hpp"
#include "territoire/pointcount.hpp"
#include "territoire/selfcheck.hpp"
#include "territoire/territory.hpp"

using namespace territoire;

namespace {

struct Options {
  unsigned threads = 1;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "text";
  std::string json_path;
  Budgets budgets;
};

// Everything a subcommand produces; printed as text or as a JSON report.
struct Outcome {
  json results = json::object();
  std::string text;
  std::vector<Verdict> verdicts;
  std::uint64_t candidates = 0;
  bool raw_text = false;  // print `text` verbatim, without the report frame
};

json budgets_to_json(const Budgets& b) {
  return {{"construction_dim", b.construction_dim}, {"exhaustive_dim", b.exhaustive_dim},
          {"enumeration_candidates", b.enumeration_candidates}, {"solve_assignments", b.solve_assignments},
          {"group_order", b.group_order}, {"print_cap", b.print_cap}};
}

std::string rows_text(const json& rows) {
  std::string out;
  for (const auto& r : rows) out += "    " + r.dump() + "\n";
  return out;
}

ConductanceVector parse_conductances(const std::vector<int>& v) {
  if (v.empty()) throw InputError("--conductances needs at least one entry");
  return ConductanceVector(v);
}

std::uint32_t checked_prime(long long p) { return FieldSpec::prime(p).characteristic; }

// ---- invariants -------------------------------------------------------------

struct InvariantsArgs {
  std::string algebra, subalgebra;
  std::vector<int> conductances;
};

template <class F>
Outcome invariants_for(const Subalgebra<F>& b, const std::optional<ConductanceVector>& c) {
  Outcome out;
  auto rec = full_record(b, c);
  out.results = invariant_record_to_json(rec);
  std::ostringstream t;
  t << "delta               " << rec.delta << "\n";
  t << "delta'              " << rec.delta_prime << (rec.trivial_convention ? "  (convention for delta = 0)" : "") << "\n";
  t << "gorenstein          " << (rec.gorenstein ? "yes" : "no") << "\n";
  t << "conductor dim       " << rec.conductor.rows() << "\n";
  if (rec.branch_conductances) {
    t << "branches            " << *rec.branches << "\n";
    t << "branch conductances " << json(*rec.branch_conductances).dump() << "\n";
    if (rec.genus) t << "genus               " << *rec.genus << "\n";
    t << "gluing profile      " << rec.profile->to_string() << "\n";
  } else {
    t << "branch data         absent (ambient is not a truncated product)\n";
  }
  out.text = t.str();

  const int n = static_cast<int>(b.ambient().dim());
  const int cond = static_cast<int>(rec.conductor.rows());
  if (rec.delta > 0) {
    out.verdicts.push_back({1, "1 <= delta' <= delta", 1 <= rec.delta_prime && rec.delta_prime <= rec.delta,
                            std::to_string(rec.delta_prime) + " vs " + std::to_string(rec.delta)});
  }
  out.verdicts.push_back({2, "dim A - dim conductor = delta + delta'", n - cond == rec.delta + rec.delta_prime,
                          std::to_string(n - cond)});
  if (rec.branch_conductances) {
    int sum = 0;
    for (int x : *rec.branch_conductances) sum += x;
    out.verdicts.push_back({3, "sum of branch conductances = delta + delta'", sum == rec.delta + rec.delta_prime,
                            std::to_string(sum)});
    out.verdicts.push_back({4, "gluing profile delta = delta", rec.profile->delta() == rec.delta,
                            std::to_string(rec.profile->delta())});
  }
  return out;
}

Outcome run_invariants(const InvariantsArgs& a, const Options& o) {
  std::optional<AlgebraDocument> ambient;
  if (!a.algebra.empty()) ambient = algebra_from_json(json(a.algebra), "", o.budgets, std::filesystem::current_path());
  const std::filesystem::path sub_path = a.subalgebra;
  auto doc = subalgebra_from_json(load_json_file(sub_path), ambient, o.budgets, sub_path.parent_path());
  std::optional<ConductanceVector> c = doc.algebra.shape();
  if (!a.conductances.empty()) c = parse_conductances(a.conductances);
  return doc.over_q ? invariants_for(*doc.over_q, c) : invariants_for(*doc.over_p, c);
}

// ---- territory --------------------------------------------------------------

struct TerritoryArgs {
  std::string algebra, inside, chart;
  std::optional<std::size_t> delta, delta_prime;
  std::optional<long long> solve_mod;
  std::optional<int> genus;
  std::vector<int> conductances;
};

std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw InputError("--chart expects comma-separated non-negative indices, got \"" + s + "\"");
    }
  }
  return out;
}

Outcome run_territory(const TerritoryArgs& a, const Options& o) {
  Outcome out;
  std::size_t n = 0, delta = 0;
  std::function<PolynomialSystem(const Chart&)> build;
  std::optional<std::uint32_t> native_p;
  json setup;

  if (a.genus) {
    if (a.conductances.empty()) throw InputError("--genus needs --conductances");
    if (!a.algebra.empty() || a.delta || a.delta_prime || !a.inside.empty()) {
      throw InputError("--genus/--conductances cannot be combined with --algebra, --delta, --delta-prime or --inside");
    }
    const int g = *a.genus;
    const ConductanceVector c = parse_conductances(a.conductances);
    check_singularity_type(g, c);
    n = static_cast<std::size_t>(c.sum());
    delta = static_cast<std::size_t>(g) + c.size() - 1;
    setup = {{"mode", "singularity"}, {"genus", g}, {"conductances", conductances_to_json(c)}, {"delta", delta},
             {"delta_prime", n - delta}};
    build = [g, c](const Chart& ch) { return singularity_territory_system(g, c, ch); };
  } else {
    if (a.algebra.empty() || !a.delta) throw InputError("territory needs --algebra and --delta (or --genus and --conductances)");
    auto doc = algebra_from_json(json(a.algebra), "", o.budgets, std::filesystem::current_path());
    if (doc.over_p) native_p = doc.over_p->field().characteristic();
    n = doc.dim();
    delta = *a.delta;
    if (delta < 1 || delta >= n) throw InputError("--delta must satisfy 1 <= delta < dim A = " + std::to_string(n));
    auto ints = std::make_shared<IntegerAlgebra>(doc.integer());
    std::vector<std::vector<long long>> ann;
    if (a.inside == "plus") {
      if (!doc.shape()) throw InputError("--inside plus needs a truncated product algebra");
      auto plus = make_plus_subalgebra(*doc.shape(), Rationals{}, o.budgets);
      ann = integer_annihilators(plus.basis(), plus.pivots());
    } else if (!a.inside.empty()) {
      const std::filesystem::path p = a.inside;
      auto b0 = subalgebra_from_json(load_json_file(p), doc, o.budgets, p.parent_path());
      ann = b0.over_q ? integer_annihilators(b0.over_q->basis(), b0.over_q->pivots())
                      : integer_annihilators(b0.over_p->basis(), b0.over_p->pivots());
    }
    auto dp = a.delta_prime;
    if (dp && (*dp < 1 || *dp > delta)) throw InputError("--delta-prime must satisfy 1 <= delta' <= delta");
    setup = {{"mode", "algebra"}, {"algebra", {{"file", a.algebra}, {"field", field_to_json(doc.field)}, {"dim", n}}}, {"delta", delta},
             {"delta_prime", dp ? json(*dp) : json(nullptr)}, {"inside", a.inside.empty() ? json(nullptr) : json(a.inside)}};
    build = [ints, delta, dp, ann](const Chart& ch) {
      auto sys = chart_equations(*ints, delta, ch);
      if (!ann.empty()) sys.merge(containment_equations(*ints, ch, ann));
      if (dp) sys.merge(fitting_rank_conditions(*ints, delta, *dp, ch));
      return sys;
    };
  }

  std::vector<Chart> charts;
  if (!a.chart.empty()) {
    Chart ch(n, parse_index_list(a.chart));
    if (ch.codim() != delta) {
      throw InputError("--chart needs " + std::to_string(n - delta) + " pivots for corank " + std::to_string(delta));
    }
    charts.push_back(ch);
  } else {
    charts = all_charts(n, delta);
  }

  out.results["setup"] = setup;
  json systems = json::array();
  std::ostringstream t;
  for (const auto& ch : charts) {
    auto sys = build(ch);
    systems.push_back(system_to_json(sys, ch));
    t << "chart " << ch.to_string() << "\n" << sys.to_string() << "\n";
  }
  out.results["charts"] = charts.size();
  out.results["systems"] = systems;

  if (a.solve_mod) {
    const std::uint32_t p = checked_prime(*a.solve_mod);
    if (native_p && *native_p != p) {
      throw InputError("algebra is over F_" + std::to_string(*native_p) + "; --solve-mod must match");
    }
    std::vector<Matrix<PrimeField>> spaces;
    if (charts.size() == 1) {
      PrimeField f(p);
      for (const auto& pt : solve_over_prime_field(build(charts[0]), p, o.budgets)) {
        spaces.push_back(chart_point_to_subspace(charts[0], pt, f));
      }
    } else {
      spaces = solve_on_all_charts(n, delta, p, build, o.budgets);
    }
    json pts = json::array();
    for (std::size_t i = 0; i < spaces.size() && i < o.budgets.print_cap; ++i) pts.push_back(matrix_to_json(spaces[i]));
    out.results["solution"] = {{"p", p}, {"count", spaces.size()}, {"points", pts}};
    t << "points over F_" << p << ": " << spaces.size() << "\n";
    for (const auto& m : pts) t << "  basis\n" << rows_text(m);
  }
  out.text = t.str();
  return out;
}

// ---- count ------------------------------------------------------------------

struct CountArgs {
  std::string algebra;
  std::vector<int> conductances;
  std::size_t delta = 0;
  std::optional<int> delta_prime;
  long long p = 0;
  bool decompose = false, orbits = false;
};

Outcome run_count(const CountArgs& a, const Options& o) {
  Outcome out;
  const std::uint32_t p = checked_prime(a.p);
  PrimeField f(p);
  AlgebraPtr<PrimeField> alg;
  std::optional<ConductanceVector> c;
  if (!a.conductances.empty() == !a.algebra.empty()) throw InputError("count needs exactly one of --conductances, --algebra");
  if (!a.conductances.empty()) {
    c = parse_conductances(a.conductances);
    alg = make_truncated_product(*c, f, o.budgets);
  } else {
    auto doc = algebra_from_json(json(a.algebra), "", o.budgets, std::filesystem::current_path());
    alg = doc.mod_p(p);
    c = doc.shape();
  }
  if ((a.decompose || a.orbits) && !c) throw InputError("--decompose and --orbits need a truncated product algebra");

  auto enumeration = enumerate_subalgebras(alg, a.delta, o.budgets, o.threads);
  out.candidates = enumeration.candidates;
  std::vector<Subalgebra<PrimeField>> points;
  for (auto& b : enumeration.points) {
    if (!a.delta_prime || delta_prime(b) == *a.delta_prime) points.push_back(std::move(b));
  }

  std::ostringstream t;
  t << "algebra dim " << alg->dim() << " over F_" << p << ", delta " << a.delta;
  if (a.delta_prime) t << ", delta' " << *a.delta_prime;
  t << "\ncount: " << points.size() << "  (" << enumeration.candidates << " candidate subspaces)\n";
  out.results["p"] = p;
  out.results["conductances"] = c ? conductances_to_json(*c) : json(nullptr);
  out.results["delta"] = a.delta;
  out.results["delta_prime"] = a.delta_prime ? json(*a.delta_prime) : json(nullptr);
  out.results["count"] = points.size();

  json buckets = json::array();
  bool bounds_ok = true;
  for (const auto& bucket : bucketize(points, c)) {
    json wit = json::array();
    for (std::size_t i = 0; i < bucket.points.size() && i < o.budgets.print_cap; ++i) {
      wit.push_back(subalgebra_to_json(bucket.points[i]));
    }
    buckets.push_back({{"key", bucket_key_to_json(bucket.key)}, {"size", bucket.points.size()}, {"witnesses", wit}});
    t << "  " << bucket.key.to_string() << ": " << bucket.points.size() << "\n";
    if (bucket.key.delta >= 1 && (bucket.key.delta_prime < 1 || bucket.key.delta_prime > bucket.key.delta)) bounds_ok = false;
  }
  out.results["buckets"] = buckets;
  if (a.delta >= 1) out.verdicts.push_back({1, "1 <= delta' <= delta on every point", bounds_ok, ""});

  if (a.decompose) {
    if (!a.delta_prime) throw InputError("--decompose needs --delta-prime");
    auto rep = verify_decomposition(*c, static_cast<int>(a.delta), *a.delta_prime, p, o.budgets, o.threads);
    out.results["decomposition"] = decomposition_to_json(rep);
    t << "decomposition: predicted " << rep.predicted_total << ", observed " << rep.observed_total << "\n";
    for (const auto& term : rep.terms) {
      t << "  " << term.profile.to_string() << "  " << json(term.factor_counts).dump() << " -> " << term.predicted
        << " (observed " << term.observed << ")\n";
    }
    out.verdicts.push_back({2, "decomposition into singularity territories", rep.ok,
                            std::to_string(rep.predicted_total) + " predicted, " + std::to_string(rep.observed_total) +
                                " observed"});
  }
  if (a.orbits) {
    auto rep = orbits(points, *c, aut_elements(*c, p, o.budgets));
    out.results["orbits"] = orbits_to_json(rep, points, o.budgets.print_cap);
    bool ok = true;
    for (std::size_t i = 0; i < rep.orbits.size(); ++i) ok = ok && rep.orbits[i].size() * rep.stabilizer_orders[i] == rep.group_order;
    t << "orbits under Aut(A_c) of order " << rep.group_order << ": " << rep.orbits.size() << "\n";
    for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
      t << "  size " << rep.orbits[i].size() << ", stabilizer " << rep.stabilizer_orders[i] << "\n";
    }
    t << "note: " << kOrbitCaveat << "\n";
    out.verdicts.push_back({3, "orbit size times stabilizer order equals group order", ok, ""});
  }
  out.text = t.str();
  return out;
}

// ---- types ------------------------------------------------------------------

struct TypesArgs {
  int genus = 0, markings = 0, delta = 1, delta_prime = 1;
  std::string file;
  bool dot = false;
};

CombinatorialType load_type(const std::string& file) { return type_from_json(load_json_file(file)); }

Outcome run_types_enumerate(const TypesArgs& a, const Options& o) {
  Outcome out;
  auto types = enumerate_types(a.genus, a.markings, a.delta, a.delta_prime, o.budgets);
  json list = json::array();
  std::ostringstream t;
  t << types.size() << " types with (g, n, delta, delta') = (" << a.genus << ", " << a.markings << ", " << a.delta
    << ", " << a.delta_prime << ")\n";
  for (const auto& ty : types) {
    list.push_back({{"canonical_form", canonical_form(ty)}, {"type", type_to_json(ty)}});
    t << "  " << canonical_form(ty) << "\n";
  }
  out.results = {{"genus", a.genus}, {"markings", a.markings}, {"delta", a.delta}, {"delta_prime", a.delta_prime},
                 {"count", types.size()}, {"types", list}};
  out.candidates = types.size();
  out.text = t.str();
  return out;
}

Outcome run_types_validate(const TypesArgs& a, const Options&) {
  Outcome out;
  auto ty = load_type(a.file);
  auto violations = validate_type(ty);
  out.results["violations"] = violations;
  std::ostringstream t;
  if (violations.empty()) {
    auto inv = type_invariants(ty);
    out.results["invariants"] = {{"genus", inv.genus}, {"delta", inv.delta}, {"delta_prime", inv.delta_prime},
                                 {"components", inv.components}};
    out.results["canonical_form"] = canonical_form(ty);
    t << "valid: genus " << inv.genus << ", delta " << inv.delta << ", delta' " << inv.delta_prime << ", "
      << inv.components << " components\n";
  } else {
    for (const auto& v : violations) t << "violation: " << v << "\n";
  }
  out.verdicts.push_back({1, "type is valid", violations.empty(), std::to_string(violations.size()) + " violations"});
  out.text = t.str();
  return out;
}

Outcome run_types_stratum(const TypesArgs& a, const Options&) {
  Outcome out;
  auto ty = load_type(a.file);
  auto rep = stratum_report(ty);
  out.results = stratum_to_json(rep, ty);
  std::ostringstream t;
  t << "base (dimension " << rep.base_dimension << ")\n";
  for (const auto& b : rep.base) {
    t << "  M_{" << b.genus << "," << b.points << "} for " << ty.comp_ids[b.component] << ": dim " << b.dimension
      << (b.unstable ? " (unstable)" : "") << "\n";
  }
  t << "symmetry group order " << rep.symmetry_order << "\n";
  t << "fiber\n";
  for (const auto& fb : rep.fiber) {
    t << "  Ter_S(" << fb.genus << ", " << json(fb.conductances).dump() << ") for " << ty.sing_ids[fb.singularity]
      << ": " << (fb.dimension ? "dim " + std::to_string(*fb.dimension) : std::string("equations emitted")) << "\n";
  }
  t << "total dimension " << (rep.total_is_exact ? "" : ">= ") << rep.total_dimension << "\n";
  out.text = t.str();
  return out;
}

Outcome run_types_draw(const TypesArgs& a, const Options&) {
  Outcome out;
  auto dot = to_dot(load_type(a.file));
  out.results["dot"] = dot;
  out.text = dot;
  out.raw_text = true;
  return out;
}

// ---- selfcheck --------------------------------------------------------------

Outcome run_selfcheck_cmd(int only, const Options& o) {
  Outcome out;
  out.verdicts = run_selfcheck(o.budgets, o.seed, o.threads, only);
  out.results["criteria"] = out.verdicts.size();
  return out;
}

// ---- report -----------------------------------------------------------------

json verdicts_to_json(const std::vector<Verdict>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"id", v.id}, {"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  return out;
}

void emit(const std::string& command, const std::vector<std::string>& args, const Options& o, const Outcome& r,
          double elapsed_ms) {
  json report;
  report["command"] = {{"name", command}, {"args", args}};
  report["config"] = {{"budgets", budgets_to_json(o.budgets)}, {"format", o.format}, {"threads", o.threads},
                      {"seed", o.seed}};
  report["results"] = r.results;
  report["counters"] = {{"candidates", r.candidates}, {"elapsed_ms", elapsed_ms}};
  report["verdicts"] = verdicts_to_json(r.verdicts);

  if (!o.json_path.empty()) {
    std::ofstream f(o.json_path);
    if (!f) throw InputError("cannot write " + o.json_path);
    f << report.dump(2) << "\n";
  }
  if (o.format == "json") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  if (r.raw_text) {
    std::cout << r.text;
    return;
  }
  std::cout << r.text;
  for (const auto& v : r.verdicts) {
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << v.id << " " << v.name;
    if (!v.detail.empty()) std::cout << ": " << v.detail;
    std::cout << "\n";
  }
  if (r.candidates) std::cout << "candidates examined: " << r.candidates << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Territories of curve singularities: invariants, equations, point counts and combinatorial types"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "Worker threads (results do not depend on it)")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--json", o.json_path, "Also write the JSON report to this path");

  InvariantsArgs ia;
  auto* inv = app.add_subcommand("invariants", "Singularity invariants of a subalgebra");
  inv->add_option("--algebra", ia.algebra, "Ambient algebra JSON (overrides the one inside the subalgebra file)");
  inv->add_option("--subalgebra", ia.subalgebra, "Subalgebra JSON")->required();
  inv->add_option("--conductances", ia.conductances, "Truncated product shape for a structure-constant ambient")
      ->delimiter(',');

  TerritoryArgs ta;
  auto* ter = app.add_subcommand("territory", "Polynomial systems of territories on Grassmannian charts");
  ter->add_option("--algebra", ta.algebra, "Ambient algebra JSON");
  ter->add_option("--delta", ta.delta, "Corank delta");
  ter->add_option("--delta-prime", ta.delta_prime, "Require delta' exactly");
  ter->add_option("--inside", ta.inside, "Containment in A+ (\"plus\") or in the subalgebra of a JSON file");
  ter->add_option("--chart", ta.chart, "Pivot coordinates of one chart, 0-based, comma-separated");
  ter->add_option("--solve-mod", ta.solve_mod, "Solve the systems over F_p");
  ter->add_option("--genus", ta.genus, "Singularity territory mode: genus g");
  ter->add_option("--conductances", ta.conductances, "Singularity territory mode: branch conductances")->delimiter(',');

  CountArgs ca;
  auto* cnt = app.add_subcommand("count", "Brute-force point counts over F_p");
  cnt->add_option("--conductances", ca.conductances, "Use A_c for these conductances")->delimiter(',');
  cnt->add_option("--algebra", ca.algebra, "Ambient algebra JSON");
  cnt->add_option("--delta", ca.delta, "Corank delta")->required();
  cnt->add_option("--delta-prime", ca.delta_prime, "Keep only points with this delta'");
  cnt->add_option("-p", ca.p, "Prime")->required();
  cnt->add_flag("--decompose", ca.decompose, "Compare with the product of singularity territory counts");
  cnt->add_flag("--orbits", ca.orbits, "Aut(A_c) orbits on the counted points");

  TypesArgs tya;
  auto* types = app.add_subcommand("types", "Combinatorial types of singular curves");
  types->require_subcommand(1);
  auto* ten = types->add_subcommand("enumerate", "All types for (g, n, delta, delta')");
  ten->add_option("--genus", tya.genus)->required();
  ten->add_option("--markings", tya.markings)->default_val(0);
  ten->add_option("--delta", tya.delta)->required();
  ten->add_option("--delta-prime", tya.delta_prime)->required();
  auto* tval = types->add_subcommand("validate", "Check a type file");
  tval->add_option("file", tya.file)->required();
  auto* tstr = types->add_subcommand("stratum", "Base, symmetry and fiber of a type's stratum");
  tstr->add_option("file", tya.file)->required();
  auto* tdraw = types->add_subcommand("draw", "Graphviz drawing of a type");
  tdraw->add_option("file", tya.file)->required();
  tdraw->add_flag("--dot", tya.dot, "Emit Graphviz DOT (the only drawing format)");

  int only = 0;
  auto* sc = app.add_subcommand("selfcheck", "Run the acceptance checks");
  sc->add_option("--only", only, "Run a single criterion")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    o.budgets = Budgets::from_environment();
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    std::string name;
    if (*inv) {
      name = "invariants";
      r = run_invariants(ia, o);
    } else if (*ter) {
      name = "territory";
      r = run_territory(ta, o);
    } else if (*cnt) {
      name = "count";
      r = run_count(ca, o);
    } else if (*ten) {
      name = "types enumerate";
      r = run_types_enumerate(tya, o);
    } else if (*tval) {
      name = "types validate";
      r = run_types_validate(tya, o);
    } else if (*tstr) {
      name = "types stratum";
      r = run_types_stratum(tya, o);
    } else if (*tdraw) {
      name = "types draw";
      r = run_types_draw(tya, o);
    } else {
      name = "selfcheck";
      r = run_selfcheck_cmd(only, o);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(name, args, o, r, ms);
    for (const auto& v : r.verdicts) {
      if (!v.pass) return 2;
    }
    return 0;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
