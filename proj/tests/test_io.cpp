#include "doctest.h"
#include "territoire/io.hpp"

using namespace territoire;

namespace {

std::string schema_path(const std::function<void()>& f) {
  try {
    f();
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<no schema error>";
}

const json kA22 = json::parse(R"({"field": {"kind": "rationals"}, "spec": {"kind": "truncated_product", "conductances": [2, 2]}})");

}  // namespace

TEST_CASE("algebra documents") {
  auto doc = algebra_from_json(kA22, "");
  CHECK(doc.dim() == 4);
  CHECK(doc.shape() == ConductanceVector({2, 2}));
  CHECK(doc.mod_p(5)->dim() == 4);

  auto fp = json::parse(R"({"field": {"kind": "prime", "p": 3},
    "spec": {"kind": "structure_constants", "dim": 2, "unit": [1, 0],
             "table": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]}})");
  auto d2 = algebra_from_json(fp, "");
  REQUIRE(d2.over_p);
  CHECK_THROWS_AS(d2.mod_p(5), InputError);
  // round trip through the structure constant form
  auto again = algebra_from_json(json{{"field", field_to_json(d2.field)}, {"spec", algebra_to_json(*d2.over_p)["spec"]}}, "");
  CHECK(again.over_p->table() == d2.over_p->table());
}

TEST_CASE("schema errors name the offending location") {
  CHECK(schema_path([] { algebra_from_json(json::parse(R"({"spec": {}})"), ""); }) == "/field");
  CHECK(schema_path([] { algebra_from_json(json::parse(R"({"field": {"kind": "reals"}, "spec": {}})"), ""); }) ==
        "/field/kind");
  CHECK(schema_path([] { algebra_from_json(json::parse(R"({"field": {"kind": "prime", "p": 6}, "spec": {}})"), ""); }) ==
        "/field/p");
  CHECK(schema_path([] {
          algebra_from_json(json::parse(R"({"field": {"kind": "rationals"}, "spec": {"kind": "lie"}})"), "");
        }) == "/spec/kind");
  CHECK(schema_path([] {
          algebra_from_json(json::parse(R"({"field": {"kind": "rationals"},
            "spec": {"kind": "truncated_product", "conductances": [1, 2]}})"), "");
        }) == "/spec/conductances");
  CHECK(schema_path([] {
          algebra_from_json(json::parse(R"({"field": {"kind": "rationals"}, "spec": {"kind": "structure_constants",
            "dim": 2, "unit": [1, 0], "table": [[[1, 0], [0, 1]], [[0, 1], [0, "x"]]]}})"), "");
        }) == "/spec/table/1/1/1");
  // x * x = 1 + x with x * 1 = 0 is not unital
  CHECK(schema_path([] {
          algebra_from_json(json::parse(R"({"field": {"kind": "rationals"}, "spec": {"kind": "structure_constants",
            "dim": 2, "unit": [1, 0], "table": [[[1, 0], [0, 0]], [[0, 0], [1, 1]]]}})"), "");
        }) == "/spec/table");
  CHECK(schema_path([] {
          subalgebra_from_json(json{{"algebra", kA22}, {"basis", json::parse("[[1, 0, 0, 0]]")}}, std::nullopt);
        }) == "/basis");
  CHECK(schema_path([] {
          subalgebra_from_json(json{{"algebra", kA22}, {"basis", json::parse("[[1, 0, 1]]")}}, std::nullopt);
        }).rfind("/basis", 0) == 0);
  CHECK(schema_path([] { subalgebra_from_json(json{{"algebra", kA22}}, std::nullopt); }) == "/basis");
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("rational scalars accept integers and fraction strings") {
  Rationals q;
  CHECK(scalar_from_json(q, json(3), "") == mpq_class(3));
  CHECK(scalar_from_json(q, json("-2/6"), "") == mpq_class(-1, 3));
  CHECK(scalar_to_json(q, mpq_class(1, 2)) == json("1/2"));
  PrimeField f(7);
  CHECK(scalar_from_json(f, json(6), "") == 6u);
  CHECK_THROWS_AS(scalar_from_json(f, json(-1), "/x"), SchemaError);
}

TEST_CASE("invariant records serialize with 1-based gluing factors") {
  auto doc = subalgebra_from_json(json{{"algebra", kA22}, {"basis", json::parse("[[1, 0, 1, 0], [0, 1, 0, 1]]")}},
                                  std::nullopt);
  REQUIRE(doc.over_q);
  auto j = invariant_record_to_json(full_record(*doc.over_q, ConductanceVector({2, 2})));
  CHECK(j["delta"] == 2);
  CHECK(j["delta_prime"] == 2);
  CHECK(j["gorenstein"] == true);
  CHECK(j["gluing_profile"][0]["factors"] == json::parse("[1, 2]"));
  CHECK(j["conductor"] == json::array());
}

TEST_CASE("polynomial systems serialize coefficients and exponents") {
  Chart ch(4, {0, 1});
  auto sys = singularity_territory_system(1, ConductanceVector({2, 2}), ch);
  auto j = system_to_json(sys, ch);
  CHECK(j["variables"].size() == 4);
  CHECK(j["closed"].size() == sys.closed.size());
  CHECK(j["provenance"]["closed"].size() == sys.closed.size());
  for (const auto& poly : j["closed"]) {
    for (const auto& term : poly) {
      CHECK(term.contains("coeff"));
      CHECK(term["exponents"].size() == 4);
    }
  }
}

TEST_CASE("combinatorial types round trip through JSON") {
  auto t = example_figure_type();
  auto j = type_to_json(t);
  auto u = type_from_json(j);
  CHECK(u == t);
  CHECK(j["markings"][0]["at"] == "point:d1");
}

TEST_CASE("type schema errors") {
  auto base = type_to_json(example_figure_type());
  auto with = [&](const std::function<void(json&)>& edit) {
    json j = base;
    edit(j);
    return schema_path([&] { type_from_json(j); });
  };
  CHECK(with([](json& j) { j["branches"][0]["sing"] = "nope"; }) == "/branches/0/sing");
  CHECK(with([](json& j) { j["components"][1]["id"] = "k1"; }) == "/components/1/id");
  CHECK(with([](json& j) { j["markings"][0]["at"] = "vertex:k1"; }) == "/markings/0/at");
  CHECK(with([](json& j) { j["markings"][0]["index"] = 7; }) == "/markings/0/index");
  CHECK(with([](json& j) { j["singularities"][0].erase("genus"); }) == "/singularities/0/genus");
  CHECK(with([](json& j) { j = json::array(); }) == "/");
}

TEST_CASE("stratum report JSON marks unknown fiber dimensions") {
  auto t = example_figure_type();
  auto j = stratum_to_json(stratum_report(t), t);
  CHECK(j.contains("total_dimension_lower_bound"));
  CHECK(j["fiber_factors"][0]["dimension"] == "equations emitted");
  CHECK(j["symmetry_order"] == 2);
}

TEST_CASE("budget strings") {
  auto b = Budgets::parse("candidates=100,assignments=7,group=3");
  CHECK(b.enumeration_candidates == 100);
  CHECK(b.solve_assignments == 7);
  CHECK(b.group_order == 3);
  CHECK(Budgets::parse("42").solve_assignments == 42);
  CHECK_THROWS_AS(Budgets::parse("speed=9"), InputError);
  CHECK_THROWS_AS(Budgets::parse("candidates=-3"), InputError);
  CHECK_THROWS_AS(Budgets::parse("0"), InputError);
}
