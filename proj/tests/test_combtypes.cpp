#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "territoire/combtypes.hpp"

using namespace territoire;

namespace {

using Perm = std::vector<std::size_t>;

std::vector<Perm> permutations(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> markings_on(const CombinatorialType& t, Marking::Kind kind, std::size_t target) {
  std::vector<int> out;
  for (std::size_t i = 0; i < t.markings.size(); ++i) {
    if (t.markings[i].kind == kind && t.markings[i].target == target) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

// Isomorphism fixing marking indices, by trying every bijection of
// singularities and components; branches and distinguished points are then
// matched as multisets of their images.
bool isomorphic(const CombinatorialType& a, const CombinatorialType& b) {
  if (a.num_singularities() != b.num_singularities() || a.num_components() != b.num_components() ||
      a.num_branches() != b.num_branches() || a.dist_ids.size() != b.dist_ids.size() ||
      a.markings.size() != b.markings.size()) {
    return false;
  }
  using Edge = std::tuple<std::size_t, std::size_t, int, std::vector<int>>;
  using Point = std::pair<std::size_t, std::vector<int>>;
  std::multiset<Edge> eb;
  std::multiset<Point> db;
  for (std::size_t i = 0; i < b.num_branches(); ++i) {
    eb.insert({b.branch_sing[i], b.branch_comp[i], b.branch_conductance[i], markings_on(b, Marking::Kind::branch, i)});
  }
  for (std::size_t i = 0; i < b.dist_ids.size(); ++i) db.insert({b.dist_comp[i], markings_on(b, Marking::Kind::point, i)});
  for (const auto& ps : permutations(a.num_singularities())) {
    bool ok = true;
    for (std::size_t s = 0; s < ps.size() && ok; ++s) ok = a.sing_genus[s] == b.sing_genus[ps[s]];
    if (!ok) continue;
    for (const auto& pk : permutations(a.num_components())) {
      bool gk = true;
      for (std::size_t k = 0; k < pk.size() && gk; ++k) gk = a.comp_genus[k] == b.comp_genus[pk[k]];
      if (!gk) continue;
      std::multiset<Edge> ea;
      std::multiset<Point> da;
      for (std::size_t i = 0; i < a.num_branches(); ++i) {
        ea.insert({ps[a.branch_sing[i]], pk[a.branch_comp[i]], a.branch_conductance[i],
                   markings_on(a, Marking::Kind::branch, i)});
      }
      for (std::size_t i = 0; i < a.dist_ids.size(); ++i) da.insert({pk[a.dist_comp[i]], markings_on(a, Marking::Kind::point, i)});
      if (ea == eb && da == db) return true;
    }
  }
  return false;
}

bool connected(const CombinatorialType& t) {
  const std::size_t s = t.num_singularities(), n = s + t.num_components();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t i = 0; i < t.num_branches(); ++i) parent[find(t.branch_sing[i])] = find(s + t.branch_comp[i]);
  for (std::size_t v = 0; v < n; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

// Calls `visit` for every vector in [lo, hi]^len.
void for_each_tuple(std::size_t len, int lo, int hi, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> x(len, lo);
  while (true) {
    visit(x);
    std::size_t i = 0;
    while (i < len && ++x[i] > hi) x[i++] = lo;
    if (i == len) return;
  }
}

// Labelled types with n <= 1 built from scratch, reduced to isomorphism
// classes with the brute-force test above.
std::vector<CombinatorialType> brute_force_types(int g, int n, int delta, int delta_prime) {
  std::vector<CombinatorialType> classes;
  auto keep = [&](const CombinatorialType& t) {
    for (const auto& c : classes) {
      if (isomorphic(c, t)) return;
    }
    classes.push_back(t);
  };
  for (int S = 1; S <= delta; ++S) {
    // local (genus, valence) per singularity with g_s + v_s - 1 >= 1, summing to delta
    for_each_tuple(2 * S, 0, delta + 1, [&](const std::vector<int>& gv) {
      int total = 0, branches = 0;
      for (int s = 0; s < S; ++s) {
        const int gs = gv[2 * s], vs = gv[2 * s + 1];
        if (vs < 1 || gs + vs - 1 < 1) return;
        total += gs + vs - 1;
        branches += vs;
      }
      if (total != delta) return;
      std::vector<std::size_t> sing_of;
      for (int s = 0; s < S; ++s)
        for (int k = 0; k < gv[2 * s + 1]; ++k) sing_of.push_back(static_cast<std::size_t>(s));
      for (int K = 1; K <= 1 + delta; ++K) {
        const int genus_left = g - delta + K - 1;
        if (genus_left < 0) continue;
        for_each_tuple(static_cast<std::size_t>(branches), 0, K - 1, [&](const std::vector<int>& comp) {
          for_each_tuple(static_cast<std::size_t>(branches), 1, 2 * delta, [&](const std::vector<int>& cond) {
            int csum = 0;
            for (int x : cond) csum += x;
            if (csum != delta + delta_prime) return;
            for (int s = 0; s < S; ++s) {
              int local = 0;
              for (int b = 0; b < branches; ++b)
                if (sing_of[b] == static_cast<std::size_t>(s)) local += cond[b];
              const int ds = gv[2 * s] + gv[2 * s + 1] - 1;
              if (local <= ds || local > 2 * ds) return;
            }
            for_each_tuple(static_cast<std::size_t>(K), 0, genus_left, [&](const std::vector<int>& kg) {
              if (std::accumulate(kg.begin(), kg.end(), 0) != genus_left) return;
              CombinatorialType t;
              for (int s = 0; s < S; ++s) {
                t.sing_ids.push_back("s" + std::to_string(s + 1));
                t.sing_genus.push_back(gv[2 * s]);
              }
              for (int k = 0; k < K; ++k) {
                t.comp_ids.push_back("k" + std::to_string(k + 1));
                t.comp_genus.push_back(kg[k]);
              }
              for (int b = 0; b < branches; ++b) {
                t.branch_ids.push_back("b" + std::to_string(b + 1));
                t.branch_sing.push_back(sing_of[b]);
                t.branch_comp.push_back(static_cast<std::size_t>(comp[b]));
                t.branch_conductance.push_back(cond[b]);
              }
              if (!connected(t)) return;
              if (n == 0) {
                keep(t);
                return;
              }
              for (int k = 0; k < K; ++k) {
                auto u = t;
                u.dist_ids.push_back("d1");
                u.dist_comp.push_back(static_cast<std::size_t>(k));
                u.markings.push_back({Marking::Kind::point, 0});
                keep(u);
              }
              for (int b = 0; b < branches; ++b) {
                auto u = t;
                u.markings.push_back({Marking::Kind::branch, static_cast<std::size_t>(b)});
                keep(u);
              }
            });
          });
        });
      }
    });
  }
  return classes;
}

}  // namespace

TEST_CASE("genus one curves with one node or cusp") {
  auto types = enumerate_types(1, 0, 1, 1);
  REQUIRE(types.size() == 3);
  std::set<std::string> forms;
  for (const auto& t : types) forms.insert(canonical_form(t));
  // cuspidal rational curve, nodal rational curve, elliptic curve with a rational tail at a node
  CHECK(forms.count("S[1]K[0]B[s1k1c2]D[]M[]"));
  CHECK(forms.count("S[0]K[0]B[s1k1c1,s1k1c1]D[]M[]"));
  CHECK(forms.count("S[0]K[0,1]B[s1k1c1,s1k2c1]D[]M[]"));
}

TEST_CASE("enumeration matches brute force up to isomorphism") {
  for (int g = 0; g <= 2; ++g) {
    for (int n = 0; n <= 1; ++n) {
      for (int delta = 1; delta <= 2; ++delta) {
        for (int dp = 1; dp <= delta; ++dp) {
          INFO("(g, n, delta, delta') = (" << g << ", " << n << ", " << delta << ", " << dp << ")");
          auto fast = enumerate_types(g, n, delta, dp);
          auto slow = brute_force_types(g, n, delta, dp);
          CHECK(fast.size() == slow.size());
          for (const auto& t : slow) {
            CHECK(validate_type(t).empty());
            bool found = false;
            for (const auto& u : fast) found = found || canonical_form(u) == canonical_form(t);
            CHECK(found);
          }
          for (std::size_t i = 0; i < fast.size(); ++i)
            for (std::size_t j = i + 1; j < fast.size(); ++j) CHECK_FALSE(isomorphic(fast[i], fast[j]));
        }
      }
    }
  }
}

TEST_CASE("canonical forms are invariant under relabelling and separate non-isomorphic types") {
  std::mt19937_64 rng(7);
  std::vector<CombinatorialType> pool = enumerate_types(2, 2, 2, 2);
  auto more = enumerate_types(1, 1, 3, 2);
  pool.insert(pool.end(), more.begin(), more.end());
  pool.push_back(example_figure_type());
  for (const auto& t : pool) {
    for (int i = 0; i < 5; ++i) {
      auto u = random_relabel(t, rng);
      CHECK(isomorphic(t, u));
      CHECK(canonical_form(u) == canonical_form(t));
      CHECK(canonicalize(u).type == canonicalize(t).type);
    }
  }
  for (std::size_t i = 0; i < 40 && i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < 40 && j < pool.size(); ++j) {
      CHECK((canonical_form(pool[i]) == canonical_form(pool[j])) == isomorphic(pool[i], pool[j]));
    }
  }
}

TEST_CASE("swapping marking indices can change the type") {
  CombinatorialType t;
  t.sing_ids = {"s"};
  t.sing_genus = {0};
  t.comp_ids = {"a", "b"};
  t.comp_genus = {0, 1};
  t.branch_ids = {"x", "y"};
  t.branch_sing = {0, 0};
  t.branch_comp = {0, 1};
  t.branch_conductance = {1, 1};
  t.dist_ids = {"p", "q"};
  t.dist_comp = {0, 1};
  t.markings = {{Marking::Kind::point, 0}, {Marking::Kind::point, 1}};
  auto u = t;
  std::swap(u.markings[0], u.markings[1]);
  CHECK(validate_type(t).empty());
  CHECK(canonical_form(t) != canonical_form(u));
  CHECK_FALSE(isomorphic(t, u));
}

TEST_CASE("the sample figure type") {
  auto t = example_figure_type();
  CHECK(validate_type(t).empty());
  auto inv = type_invariants(t);
  CHECK(inv.genus == 6);
  CHECK(inv.delta == 7);
  CHECK(inv.delta_prime == 6);
  CHECK(inv.components == 3);
  auto rep = stratum_report(t);
  CHECK(rep.base_dimension == 4);
  CHECK(rep.symmetry_order == 2);
  CHECK_FALSE(rep.total_is_exact);
  CHECK(rep.total_dimension == 4);
  auto dot = to_dot(t);
  CHECK(dot.find("shape=circle") != std::string::npos);
  CHECK(dot.find("shape=square") != std::string::npos);
}

TEST_CASE("validation reports each broken invariant") {
  auto t = example_figure_type();
  SUBCASE("negative genus") {
    t.comp_genus[0] = -1;
    CHECK_FALSE(validate_type(t).empty());
  }
  SUBCASE("zero conductance") {
    t.branch_conductance[0] = 0;
    CHECK_FALSE(validate_type(t).empty());
  }
  SUBCASE("smooth singularity") {
    CombinatorialType u;
    u.sing_ids = {"s"};
    u.sing_genus = {0};
    u.comp_ids = {"k"};
    u.comp_genus = {0};
    u.branch_ids = {"b"};
    u.branch_sing = {0};
    u.branch_comp = {0};
    u.branch_conductance = {1};
    CHECK_FALSE(validate_type(u).empty());
    CHECK_THROWS_AS(type_invariants(u), InputError);
  }
  SUBCASE("disconnected") {
    t.comp_ids.push_back("k9");
    t.comp_genus.push_back(0);
    auto v = validate_type(t);
    CHECK(std::find(v.begin(), v.end(), std::string("dual graph is disconnected")) != v.end());
  }
}

TEST_CASE("known fiber dimensions") {
  CHECK(known_fiber_dimension(0, {1, 1}) == 0);
  CHECK(known_fiber_dimension(1, {2}) == 0);
  CHECK(known_fiber_dimension(1, {2, 2}) == 1);
  CHECK(known_fiber_dimension(2, {4}) == 1);
}

TEST_CASE("type enumeration honours the work budget") {
  Budgets tight;
  tight.enumeration_candidates = 10;
  CHECK_THROWS_AS(enumerate_types(2, 2, 3, 3, tight), BudgetError);
}
