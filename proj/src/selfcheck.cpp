#include "territoire/selfcheck.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "territoire/combtypes.hpp"
#include "territoire/oracles.hpp"
#include "territoire/pointcount.hpp"

namespace territoire {

namespace {

// Collects mismatches; the first few are kept as the verdict detail.
struct Tally {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  Verdict verdict(int id, const std::string& name) const {
    Verdict v{id, name, failures.empty(), {}};
    if (failures.empty()) {
      v.detail = std::to_string(checks) + " checks passed";
    } else {
      v.detail = std::to_string(failures.size()) + " of " + std::to_string(checks) + " checks failed: " + failures.front();
      for (std::size_t i = 1; i < failures.size() && i < 3; ++i) v.detail += "; " + failures[i];
    }
    return v;
  }
};

std::string eq(std::uint64_t got, std::uint64_t want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

Verdict projective_line(const Budgets& budgets, unsigned threads) {
  Tally t;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    PrimeField f(p);
    auto alg = make_truncated_product(ConductanceVector({4}), f, budgets);
    auto pts = enumerate_subalgebras(alg, 2, budgets, threads).points;
    std::uint64_t gor = 0, non = 0;
    for (const auto& b : bucketize(pts)) (b.key.delta_prime == 2 ? gor : non) += b.points.size();
    const std::string at = "p=" + std::to_string(p) + ": ";
    t.expect(pts.size() == p + 1, at + "total " + eq(pts.size(), p + 1));
    t.expect(gor == p, at + "delta'=2 " + eq(gor, p));
    t.expect(non == 1, at + "delta'=1 " + eq(non, 1));
  }
  return t.verdict(1, "corank-2 subalgebras of F_p[t]/(t^4) form P^1 = A^1 + point");
}

Verdict tacnode_family(const Budgets& budgets, unsigned threads) {
  Tally t;
  const ConductanceVector c({2, 2});
  for (std::uint32_t p : {3u, 5u, 7u}) {
    PrimeField f(p);
    const std::string at = "p=" + std::to_string(p) + ": ";
    auto ter = singularity_territory_points(1, c, p, budgets);
    t.expect(ter.size() == p - 1, at + "Ter_S(1,(2,2)) " + eq(ter.size(), p - 1));
    auto plus = make_plus_subalgebra(c, f, budgets);
    std::vector<Subalgebra<PrimeField>> inside;
    for (auto& b : enumerate_subalgebras(plus.ambient_ptr(), 2, budgets, threads).points) {
      if (row_space_contains(plus.basis(), b.basis())) inside.push_back(std::move(b));
    }
    std::size_t non_gorenstein = 0;
    std::vector<Subalgebra<PrimeField>> gorenstein;
    for (const auto& b : inside) {
      if (delta_prime(b) != delta(b)) {
        ++non_gorenstein;
      } else {
        gorenstein.push_back(b);
      }
    }
    t.expect(inside.size() == p + 1, at + "corank-1 locus of A+ " + eq(inside.size(), p + 1));
    t.expect(non_gorenstein == 2, at + "non-Gorenstein points " + eq(non_gorenstein, 2));
    t.expect(gorenstein == ter, at + "chart points differ from the Gorenstein points of the corank-1 locus");
  }
  return t.verdict(2, "Ter_S(1,(2,2)) has p-1 points inside P^1 with two non-Gorenstein points");
}

Verdict partition_count(const Budgets& budgets, unsigned threads) {
  Tally t;
  std::vector<std::pair<unsigned, unsigned>> cases = {{4, 2}, {5, 2}, {5, 3}};
  for (unsigned k = 2; k <= 5; ++k) cases.emplace_back(k, k - 1);
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    for (auto [m, delta] : cases) {
      const std::string at = "p=" + std::to_string(p) + " m=" + std::to_string(m) + " delta=" + std::to_string(delta) + ": ";
      ConductanceVector c(std::vector<int>(m, 1));
      auto alg = make_truncated_product(c, f, budgets);
      auto buckets = bucketize(enumerate_subalgebras(alg, delta, budgets, threads).points, c);
      const auto want = oracles::stirling2(m, m - delta);
      t.expect(buckets.size() == want, at + "profiles " + eq(buckets.size(), want));
      for (const auto& b : buckets) {
        t.expect(b.points.size() == 1, at + "profile " + b.key.profile->to_string() + " has " +
                                            std::to_string(b.points.size()) + " points");
        t.expect(b.key.profile->delta() == static_cast<int>(delta), at + "profile delta mismatch");
      }
    }
  }
  return t.verdict(3, "corank-delta subalgebras of F_p^m are one point per set partition");
}

Verdict decomposition(const Budgets& budgets, unsigned threads) {
  Tally t;
  struct Case {
    std::vector<int> c;
    int delta, delta_prime;
  };
  const std::vector<Case> cases = {{{2, 2}, 2, 2}, {{1, 1, 1, 1}, 2, 2}, {{2, 1, 1}, 2, 2}, {{2, 2, 2}, 3, 3}};
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (const auto& k : cases) {
      ConductanceVector c(k.c);
      auto rep = verify_decomposition(c, k.delta, k.delta_prime, p, budgets, threads);
      t.expect(rep.ok, "c=" + c.to_string() + " p=" + std::to_string(p) + ": predicted " +
                           std::to_string(rep.predicted_total) + ", observed " + std::to_string(rep.observed_total));
    }
  }
  return t.verdict(4, "decomposition of Ter^{delta,delta'}(A_c) into singularity territories");
}

Verdict chart_cover(const Budgets& budgets, unsigned threads) {
  Tally t;
  for (std::uint32_t p : {2u, 3u}) {
    for (const auto& [name, alg] : oracles::test_battery(p)) {
      auto ints = integer_structure(*alg);
      for (std::size_t delta = 1; delta <= 2 && delta < alg->dim(); ++delta) {
        auto solved = solve_on_all_charts(alg->dim(), delta, p,
                                          [&](const Chart& ch) { return chart_equations(ints, delta, ch); }, budgets);
        auto brute = enumerate_subalgebras(alg, delta, budgets, threads).points;
        std::set<std::vector<std::uint32_t>> a, b;
        for (const auto& m : solved) a.insert(m.data());
        for (const auto& s : brute) b.insert(s.basis().data());
        t.expect(a == b, name + " p=" + std::to_string(p) + " delta=" + std::to_string(delta) + ": charts give " +
                             std::to_string(a.size()) + " points, enumeration " + std::to_string(b.size()));
      }
    }
  }
  return t.verdict(5, "union of chart solutions equals brute-force enumeration");
}

Verdict gorenstein_catalog() {
  Tally t;
  struct Entry {
    std::string name;
    std::vector<int> c;
    std::vector<std::vector<long long>> rows;
    int delta, delta_prime;
  };
  // Rows are coordinates in the (i, t^j) basis of A_c.
  const std::vector<Entry> catalog = {
      {"node", {1, 1}, {{1, 1}}, 1, 1},
      {"cusp", {2}, {{1, 0}}, 1, 1},
      {"tacnode", {2, 2}, {{1, 0, 1, 0}, {0, 1, 0, 1}}, 2, 2},
      {"ramphoid cusp", {4}, {{1, 0, 0, 0}, {0, 0, 1, 0}}, 2, 2},
      {"rational triple point", {1, 1, 1}, {{1, 1, 1}}, 2, 1},
      {"cusp with transverse line", {2, 2}, {{1, 0, 1, 0}, {0, 1, 0, 0}}, 2, 1},
  };
  auto run = [&](const auto& field, const std::string& label) {
    using F = std::decay_t<decltype(field)>;
    for (const auto& e : catalog) {
      ConductanceVector c(e.c);
      auto alg = make_truncated_product(c, field);
      Matrix<F> rows(field, 0, alg->dim());
      for (const auto& r : e.rows) {
        Vec<F> v;
        for (auto x : r) v.push_back(field.from_int(x));
        rows.append_row(v);
      }
      auto rec = full_record(Subalgebra<F>::from_span(alg, rows), c);
      t.expect(rec.delta == e.delta && rec.delta_prime == e.delta_prime,
               e.name + " over " + label + ": (delta, delta') = (" + std::to_string(rec.delta) + "," +
                   std::to_string(rec.delta_prime) + ")");
      t.expect(rec.gorenstein == (e.delta == e.delta_prime), e.name + " over " + label + ": Gorenstein flag");
    }
  };
  run(Rationals{}, "Q");
  for (std::uint32_t p : {5u, 7u}) run(PrimeField(p), "F_" + std::to_string(p));
  return t.verdict(6, "Gorenstein catalog of small singularities");
}

Verdict conductor_maximality(const Budgets& budgets, unsigned threads) {
  Tally t;
  for (const auto& [name, alg] : oracles::test_battery(2)) {
    for (std::size_t delta = 0; delta < alg->dim(); ++delta) {
      for (const auto& b : enumerate_subalgebras(alg, delta, budgets, threads).points) {
        t.expect(largest_ideal_by_search(b, budgets) == conductor(b), name + ": conductor is not the largest ideal");
      }
    }
  }
  return t.verdict(7, "conductor equals the largest ideal inside B (exhaustive over F_2)");
}

Verdict crimping_orbits(const Budgets& budgets) {
  Tally t;
  auto check_products = [&](const OrbitReport& rep, const std::string& at) {
    for (std::size_t i = 0; i < rep.orbits.size(); ++i) {
      t.expect(rep.orbits[i].size() * rep.stabilizer_orders[i] == rep.group_order,
               at + ": orbit x stabilizer differs from the group order");
    }
  };
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const std::string at = "p=" + std::to_string(p);
    const ConductanceVector tac({2, 2}), cusp({2});
    auto rep = orbits(singularity_territory_points(1, tac, p, budgets), tac, aut_elements(tac, p, budgets));
    t.expect(rep.orbits.size() == 1, at + ": tacnode orbits " + eq(rep.orbits.size(), 1));
    t.expect(rep.group_order == aut_group_order(tac, p), at + ": Aut(A_(2,2)) order");
    check_products(rep, at + " tacnode");
    auto crep = orbits(singularity_territory_points(1, cusp, p, budgets), cusp, aut_elements(cusp, p, budgets));
    t.expect(crep.orbits.size() == 1 && crep.orbits[0].size() == 1, at + ": cusp is not a single fixed point");
    check_products(crep, at + " cusp");
  }
  for (auto [g, c, p] : std::vector<std::tuple<int, std::vector<int>, std::uint32_t>>{
           {1, {2, 2, 2}, 3}, {2, {4}, 5}, {2, {2, 2, 2}, 3}, {2, {3, 3}, 3}}) {
    ConductanceVector cv(c);
    auto rep = orbits(singularity_territory_points(g, cv, p, budgets), cv, aut_elements(cv, p, budgets));
    check_products(rep, "Ter_S(" + std::to_string(g) + "," + cv.to_string() + ") p=" + std::to_string(p));
  }
  t.expect(oracles::aut_group_closed(ConductanceVector({2, 2}), 3), "Aut(A_(2,2)) over F_3 is not closed");
  t.expect(oracles::aut_group_closed(ConductanceVector({3}), 3), "Aut(A_(3)) over F_3 is not closed");
  return t.verdict(8, "strict crimping classes are Aut(A_c)-orbits");
}

Verdict axis_planes(const Budgets& budgets) {
  Tally t;
  for (std::uint32_t p : {3u, 5u}) {
    auto got = singularity_territory_points(1, ConductanceVector({2, 2, 2}), p, budgets).size();
    auto oracle = oracles::axis_avoiding_subspaces(3, 2, p);
    const std::string at = "p=" + std::to_string(p) + ": ";
    t.expect(oracle == (p - 1) * (p - 1), at + "oracle " + eq(oracle, (p - 1) * (p - 1)));
    t.expect(got == oracle, at + "Ter_S(1,(2,2,2)) " + eq(got, oracle));
  }
  return t.verdict(9, "Ter_S(1,(2,2,2)) counts planes of F_p^3 avoiding the axes");
}

Verdict type_enumeration(const Budgets& budgets, std::uint64_t seed) {
  Tally t;
  auto base = enumerate_types(1, 0, 1, 1, budgets);
  t.expect(base.size() == 3, "(1,0,1,1) " + eq(base.size(), 3));
  std::vector<CombinatorialType> pool;
  for (int g = 0; g <= 3; ++g) {
    for (int n = 0; n <= 1; ++n) {
      for (int delta = 1; delta <= 3; ++delta) {
        for (int dp = 1; dp <= delta; ++dp) {
          const std::string at = "(" + std::to_string(g) + "," + std::to_string(n) + "," + std::to_string(delta) + "," +
                                 std::to_string(dp) + ")";
          std::set<std::string> forms;
          for (auto& ty : enumerate_types(g, n, delta, dp, budgets)) {
            t.expect(validate_type(ty).empty(), at + ": enumerated type does not validate");
            auto inv = type_invariants(ty);
            t.expect(inv.genus == g && inv.delta == delta && inv.delta_prime == dp, at + ": invariants differ");
            t.expect(inv.components <= 1 + delta, at + ": too many components");
            t.expect(static_cast<int>(ty.markings.size()) == n, at + ": wrong marking count");
            t.expect(forms.insert(canonical_form(ty)).second, at + ": duplicate canonical form");
            pool.push_back(std::move(ty));
          }
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 1000 && !pool.empty(); ++i) {
    const auto& ty = pool[rng() % pool.size()];
    t.expect(canonical_form(random_relabel(ty, rng)) == canonical_form(ty), "relabelling changed a canonical form");
  }
  return t.verdict(10, "combinatorial type enumeration and canonical forms");
}

}  // namespace

std::vector<Verdict> run_selfcheck(const Budgets& budgets, std::uint64_t seed, unsigned threads, int only) {
  const std::vector<std::pair<int, std::function<Verdict()>>> checks = {
      {1, [&] { return projective_line(budgets, threads); }},
      {2, [&] { return tacnode_family(budgets, threads); }},
      {3, [&] { return partition_count(budgets, threads); }},
      {4, [&] { return decomposition(budgets, threads); }},
      {5, [&] { return chart_cover(budgets, threads); }},
      {6, [&] { return gorenstein_catalog(); }},
      {7, [&] { return conductor_maximality(budgets, threads); }},
      {8, [&] { return crimping_orbits(budgets); }},
      {9, [&] { return axis_planes(budgets); }},
      {10, [&] { return type_enumeration(budgets, seed); }},
  };
  std::vector<Verdict> out;
  for (const auto& [id, run] : checks) {
    if (only != 0 && only != id) continue;
    try {
      out.push_back(run());
    } catch (const std::exception& e) {
      out.push_back({id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what()});
    }
  }
  return out;
}

}  // namespace territoire
