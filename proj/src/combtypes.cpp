#include "territoire/combtypes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "territoire/errors.hpp"

namespace territoire {

int CombinatorialType::valence(std::size_t s) const {
  return static_cast<int>(std::count(branch_sing.begin(), branch_sing.end(), s));
}

int CombinatorialType::conductance_sum(std::size_t s) const {
  int sum = 0;
  for (std::size_t b = 0; b < num_branches(); ++b) {
    if (branch_sing[b] == s) sum += branch_conductance[b];
  }
  return sum;
}

int CombinatorialType::local_delta(std::size_t s) const { return sing_genus[s] + valence(s) - 1; }

std::vector<int> CombinatorialType::local_conductances(std::size_t s) const {
  std::vector<int> out;
  for (std::size_t b = 0; b < num_branches(); ++b) {
    if (branch_sing[b] == s) out.push_back(branch_conductance[b]);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<std::string> validate_type(const CombinatorialType& t) {
  std::vector<std::string> v;
  const std::size_t ns = t.num_singularities(), nk = t.num_components(), nb = t.num_branches();
  const std::size_t nd = t.dist_ids.size();
  if (t.sing_genus.size() != ns) v.push_back("singularity genus list has wrong length");
  if (t.comp_genus.size() != nk) v.push_back("component genus list has wrong length");
  if (t.branch_sing.size() != nb || t.branch_comp.size() != nb || t.branch_conductance.size() != nb) {
    v.push_back("branch data lists have inconsistent lengths");
  }
  if (t.dist_comp.size() != nd) v.push_back("distinguished point list has wrong length");
  if (!v.empty()) return v;

  std::set<std::string> ids;
  auto check_ids = [&](const std::vector<std::string>& list) {
    for (const auto& id : list) {
      if (!ids.insert(id).second) v.push_back("duplicate id " + id);
    }
  };
  check_ids(t.sing_ids);
  check_ids(t.comp_ids);
  check_ids(t.branch_ids);
  check_ids(t.dist_ids);

  if (nk == 0) v.push_back("no components");
  for (std::size_t s = 0; s < ns; ++s) {
    if (t.sing_genus[s] < 0) v.push_back("singularity " + t.sing_ids[s] + " has negative genus");
  }
  for (std::size_t k = 0; k < nk; ++k) {
    if (t.comp_genus[k] < 0) v.push_back("component " + t.comp_ids[k] + " has negative genus");
  }
  bool indices_ok = true;
  for (std::size_t b = 0; b < nb; ++b) {
    if (t.branch_sing[b] >= ns) v.push_back("branch " + t.branch_ids[b] + " has no valid singularity"), indices_ok = false;
    if (t.branch_comp[b] >= nk) v.push_back("branch " + t.branch_ids[b] + " has no valid component"), indices_ok = false;
    if (t.branch_conductance[b] < 1) v.push_back("branch " + t.branch_ids[b] + " has conductance below 1");
  }
  for (std::size_t d = 0; d < nd; ++d) {
    if (t.dist_comp[d] >= nk) v.push_back("distinguished point " + t.dist_ids[d] + " has no valid component"), indices_ok = false;
  }
  std::vector<bool> used(nd, false);
  for (std::size_t i = 0; i < t.markings.size(); ++i) {
    const auto& mk = t.markings[i];
    const std::size_t limit = mk.kind == Marking::Kind::point ? nd : nb;
    if (mk.target >= limit) {
      v.push_back("marking " + std::to_string(i + 1) + " points nowhere");
      continue;
    }
    if (mk.kind == Marking::Kind::point) used[mk.target] = true;
  }
  for (std::size_t d = 0; d < nd; ++d) {
    if (!used[d]) v.push_back("distinguished point " + t.dist_ids[d] + " carries no marking");
  }
  if (!indices_ok) return v;

  for (std::size_t s = 0; s < ns; ++s) {
    const int val = t.valence(s);
    if (val == 0) {
      v.push_back("singularity " + t.sing_ids[s] + " has no branches");
      continue;
    }
    const int d = t.local_delta(s), sum = t.conductance_sum(s);
    if (d < 1) v.push_back("singularity " + t.sing_ids[s] + " has delta " + std::to_string(d) + " (smooth point)");
    if (!(d < sum)) {
      v.push_back("singularity " + t.sing_ids[s] + ": delta " + std::to_string(d) + " < conductance sum " +
                  std::to_string(sum) + " fails");
    }
    if (!(sum <= 2 * d)) {
      v.push_back("singularity " + t.sing_ids[s] + ": conductance sum " + std::to_string(sum) + " <= 2 delta " +
                  std::to_string(2 * d) + " fails");
    }
  }

  if (nk > 0) {
    // Union-find over S then K.
    std::vector<std::size_t> parent(ns + nk);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t b = 0; b < nb; ++b) parent[find(t.branch_sing[b])] = find(ns + t.branch_comp[b]);
    const std::size_t root = find(ns);
    for (std::size_t x = 0; x < ns + nk; ++x) {
      if (find(x) != root) {
        v.push_back("dual graph is disconnected");
        break;
      }
    }
  }
  return v;
}

TypeInvariants type_invariants(const CombinatorialType& t) {
  auto bad = validate_type(t);
  if (!bad.empty()) {
    std::string msg = "invalid combinatorial type:";
    for (const auto& b : bad) msg += " " + b + ";";
    throw InputError(msg);
  }
  TypeInvariants inv;
  int genus_sum = 0;
  for (auto g : t.sing_genus) genus_sum += g;
  for (auto g : t.comp_genus) genus_sum += g;
  const int vertices = static_cast<int>(t.num_singularities() + t.num_components());
  inv.genus = genus_sum + static_cast<int>(t.num_branches()) - vertices + 1;
  for (std::size_t s = 0; s < t.num_singularities(); ++s) {
    inv.delta += t.local_delta(s);
    inv.delta_prime += t.conductance_sum(s) - t.local_delta(s);
  }
  inv.components = static_cast<int>(t.num_components());
  return inv;
}

namespace {

// Vertex layout for canonical labelling: S, K, B, D, then one vertex per marking.
struct LabelledGraph {
  std::vector<std::pair<int, int>> labels;  // (kind, value)
  std::vector<std::vector<std::size_t>> adj;
  std::size_t ns, nk, nb, nd;
};

LabelledGraph build_graph(const CombinatorialType& t) {
  LabelledGraph g;
  g.ns = t.num_singularities();
  g.nk = t.num_components();
  g.nb = t.num_branches();
  g.nd = t.dist_ids.size();
  const std::size_t kb = g.ns + g.nk, db = kb + g.nb, mb = db + g.nd;
  const std::size_t total = mb + t.markings.size();
  g.labels.resize(total);
  g.adj.resize(total);
  for (std::size_t s = 0; s < g.ns; ++s) g.labels[s] = {0, t.sing_genus[s]};
  for (std::size_t k = 0; k < g.nk; ++k) g.labels[g.ns + k] = {1, t.comp_genus[k]};
  for (std::size_t b = 0; b < g.nb; ++b) g.labels[kb + b] = {2, t.branch_conductance[b]};
  for (std::size_t d = 0; d < g.nd; ++d) g.labels[db + d] = {3, 0};
  for (std::size_t i = 0; i < t.markings.size(); ++i) g.labels[mb + i] = {4, static_cast<int>(i)};
  auto link = [&](std::size_t a, std::size_t b) {
    g.adj[a].push_back(b);
    g.adj[b].push_back(a);
  };
  for (std::size_t b = 0; b < g.nb; ++b) {
    link(kb + b, t.branch_sing[b]);
    link(kb + b, g.ns + t.branch_comp[b]);
  }
  for (std::size_t d = 0; d < g.nd; ++d) link(db + d, g.ns + t.dist_comp[d]);
  for (std::size_t i = 0; i < t.markings.size(); ++i) {
    const auto& mk = t.markings[i];
    link(mb + i, mk.kind == Marking::Kind::point ? db + mk.target : kb + mk.target);
  }
  return g;
}

template <class Key>
std::vector<int> rank_by(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  }
  return out;
}

std::vector<int> refine(const LabelledGraph& g, std::vector<int> colors) {
  std::size_t count = std::set<int>(colors.begin(), colors.end()).size();
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(colors.size());
    for (std::size_t v = 0; v < colors.size(); ++v) {
      sig[v].first = colors[v];
      for (auto w : g.adj[v]) sig[v].second.push_back(colors[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    colors = rank_by(sig);
    std::size_t next = std::set<int>(colors.begin(), colors.end()).size();
    if (next == count) return colors;
    count = next;
  }
}

std::vector<int> encode(const LabelledGraph& g, const std::vector<int>& pos) {
  std::vector<std::size_t> at(pos.size());
  for (std::size_t v = 0; v < pos.size(); ++v) at[static_cast<std::size_t>(pos[v])] = v;
  std::vector<int> code;
  for (auto v : at) {
    code.push_back(g.labels[v].first);
    code.push_back(g.labels[v].second);
    std::vector<int> nbrs;
    for (auto w : g.adj[v]) nbrs.push_back(pos[w]);
    std::sort(nbrs.begin(), nbrs.end());
    code.insert(code.end(), nbrs.begin(), nbrs.end());
    code.push_back(-1);
  }
  return code;
}

void search(const LabelledGraph& g, const std::vector<int>& colors, std::vector<int>& best_code,
            std::vector<int>& best_pos) {
  const std::size_t n = colors.size();
  std::vector<std::size_t> cell_size(n, 0);
  for (auto c : colors) ++cell_size[static_cast<std::size_t>(c)];
  int target = -1;
  for (std::size_t c = 0; c < n; ++c) {
    if (cell_size[c] > 1) {
      target = static_cast<int>(c);
      break;
    }
  }
  if (target < 0) {
    auto code = encode(g, colors);
    if (best_code.empty() || code < best_code) {
      best_code = std::move(code);
      best_pos = colors;
    }
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    std::vector<int> split(n);
    for (std::size_t w = 0; w < n; ++w) split[w] = 2 * colors[w] + (colors[w] == target && w != v ? 1 : 0);
    search(g, refine(g, rank_by(split)), best_code, best_pos);
  }
}

std::string serialize(const CombinatorialType& t) {
  std::string s = "S[";
  for (std::size_t i = 0; i < t.num_singularities(); ++i) s += (i ? "," : "") + std::to_string(t.sing_genus[i]);
  s += "]K[";
  for (std::size_t i = 0; i < t.num_components(); ++i) s += (i ? "," : "") + std::to_string(t.comp_genus[i]);
  s += "]B[";
  for (std::size_t b = 0; b < t.num_branches(); ++b) {
    s += (b ? "," : "") + std::string("s") + std::to_string(t.branch_sing[b] + 1) + "k" +
         std::to_string(t.branch_comp[b] + 1) + "c" + std::to_string(t.branch_conductance[b]);
  }
  s += "]D[";
  for (std::size_t d = 0; d < t.dist_ids.size(); ++d) s += (d ? "," : "") + std::string("k") + std::to_string(t.dist_comp[d] + 1);
  s += "]M[";
  for (std::size_t i = 0; i < t.markings.size(); ++i) {
    const auto& mk = t.markings[i];
    s += (i ? "," : "") + std::string(mk.kind == Marking::Kind::point ? "d" : "b") + std::to_string(mk.target + 1);
  }
  return s + "]";
}

}  // namespace

CanonicalResult canonicalize(const CombinatorialType& t) {
  auto bad = validate_type(t);
  if (!bad.empty()) throw InputError("cannot canonicalize an invalid type: " + bad.front());
  auto g = build_graph(t);
  std::vector<int> best_code, best_pos;
  search(g, refine(g, rank_by(g.labels)), best_code, best_pos);

  // Cells keep the S, K, B, D, M block order, so positions stay within blocks.
  const std::size_t kb = g.ns + g.nk, db = kb + g.nb, mb = db + g.nd;
  auto local = [&](std::size_t v, std::size_t base) { return static_cast<std::size_t>(best_pos[v]) - base; };
  CombinatorialType c;
  c.sing_ids.resize(g.ns);
  c.sing_genus.resize(g.ns);
  c.comp_ids.resize(g.nk);
  c.comp_genus.resize(g.nk);
  c.branch_ids.resize(g.nb);
  c.branch_sing.resize(g.nb);
  c.branch_comp.resize(g.nb);
  c.branch_conductance.resize(g.nb);
  c.dist_ids.resize(g.nd);
  c.dist_comp.resize(g.nd);
  for (std::size_t s = 0; s < g.ns; ++s) {
    auto i = local(s, 0);
    c.sing_ids[i] = "s" + std::to_string(i + 1);
    c.sing_genus[i] = t.sing_genus[s];
  }
  for (std::size_t k = 0; k < g.nk; ++k) {
    auto i = local(g.ns + k, g.ns);
    c.comp_ids[i] = "k" + std::to_string(i + 1);
    c.comp_genus[i] = t.comp_genus[k];
  }
  for (std::size_t b = 0; b < g.nb; ++b) {
    auto i = local(kb + b, kb);
    c.branch_ids[i] = "b" + std::to_string(i + 1);
    c.branch_sing[i] = local(t.branch_sing[b], 0);
    c.branch_comp[i] = local(g.ns + t.branch_comp[b], g.ns);
    c.branch_conductance[i] = t.branch_conductance[b];
  }
  for (std::size_t d = 0; d < g.nd; ++d) {
    auto i = local(db + d, db);
    c.dist_ids[i] = "d" + std::to_string(i + 1);
    c.dist_comp[i] = local(g.ns + t.dist_comp[d], g.ns);
  }
  for (const auto& mk : t.markings) {
    c.markings.push_back({mk.kind, mk.kind == Marking::Kind::point ? local(db + mk.target, db)
                                                                    : local(kb + mk.target, kb)});
  }
  (void)mb;
  return {serialize(c), std::move(c)};
}

std::string canonical_form(const CombinatorialType& t) { return canonicalize(t).form; }

CombinatorialType random_relabel(const CombinatorialType& t, std::mt19937_64& rng) {
  auto shuffled = [&](std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;  // old index i moves to perm[i]
  };
  auto ps = shuffled(t.num_singularities()), pk = shuffled(t.num_components());
  auto pb = shuffled(t.num_branches()), pd = shuffled(t.dist_ids.size());
  const std::uint64_t tag = rng() % 1000;
  auto name = [&](const char* prefix, std::size_t i) {
    return std::string(prefix) + std::to_string(tag) + "_" + std::to_string(i);
  };
  CombinatorialType r = t;
  for (std::size_t s = 0; s < ps.size(); ++s) {
    r.sing_ids[ps[s]] = name("sing", ps[s]);
    r.sing_genus[ps[s]] = t.sing_genus[s];
  }
  for (std::size_t k = 0; k < pk.size(); ++k) {
    r.comp_ids[pk[k]] = name("comp", pk[k]);
    r.comp_genus[pk[k]] = t.comp_genus[k];
  }
  for (std::size_t b = 0; b < pb.size(); ++b) {
    r.branch_ids[pb[b]] = name("br", pb[b]);
    r.branch_sing[pb[b]] = ps[t.branch_sing[b]];
    r.branch_comp[pb[b]] = pk[t.branch_comp[b]];
    r.branch_conductance[pb[b]] = t.branch_conductance[b];
  }
  for (std::size_t d = 0; d < pd.size(); ++d) {
    r.dist_ids[pd[d]] = name("pt", pd[d]);
    r.dist_comp[pd[d]] = pk[t.dist_comp[d]];
  }
  for (auto& mk : r.markings) mk.target = mk.kind == Marking::Kind::point ? pd[mk.target] : pb[mk.target];
  return r;
}

namespace {

struct LocalType {
  int genus;
  std::vector<int> conductances;  // weakly decreasing
  int delta() const { return genus + static_cast<int>(conductances.size()) - 1; }
  int delta_prime() const {
    return std::accumulate(conductances.begin(), conductances.end(), 0) - delta();
  }
};

// Weakly decreasing sequences of `parts` positive integers summing to `total`.
void partitions_into(int total, int parts, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int x = std::min(total - parts + 1, max_part); x >= 1; --x) {
    cur.push_back(x);
    partitions_into(total - x, parts - 1, x, cur, out);
    cur.pop_back();
  }
}

std::vector<LocalType> local_types(int max_delta) {
  std::vector<LocalType> out;
  for (int d = 1; d <= max_delta; ++d) {
    for (int val = 1; val <= d + 1; ++val) {
      const int genus = d - val + 1;
      for (int sum = d + 1; sum <= 2 * d; ++sum) {
        std::vector<int> cur;
        std::vector<std::vector<int>> parts;
        partitions_into(sum, val, sum, cur, parts);
        for (auto& p : parts) out.push_back({genus, std::move(p)});
      }
    }
  }
  return out;
}

void decreasing_vectors(int total, int len, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (len == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int x = std::min(total, max_part); x >= 0; --x) {
    cur.push_back(x);
    decreasing_vectors(total - x, len - 1, x, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CombinatorialType> enumerate_types(int g, int n, int delta, int delta_prime, const Budgets& budgets) {
  if (g < 0 || n < 0 || delta < 0 || delta_prime < 0) throw PreconditionError("type invariants must be nonnegative");
  std::map<std::string, CombinatorialType> found;
  if ((delta == 0) != (delta_prime == 0) || delta_prime > delta) return {};
  std::uint64_t work = 0;
  auto charge = [&](std::uint64_t amount) {
    work = saturating_add(work, amount);
    if (work > budgets.enumeration_candidates) {
      throw BudgetError("type enumeration exceeded " + std::to_string(budgets.enumeration_candidates) + " candidates");
    }
  };

  const auto locals = local_types(delta);
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int, int)> pick_singularities = [&](std::size_t from, int d, int dp) {
    if (d == delta && dp == delta_prime) {
      CombinatorialType base;
      for (std::size_t s = 0; s < chosen.size(); ++s) {
        const auto& lt = locals[chosen[s]];
        base.sing_ids.push_back("s" + std::to_string(s + 1));
        base.sing_genus.push_back(lt.genus);
        for (int c : lt.conductances) {
          base.branch_ids.push_back("b" + std::to_string(base.branch_ids.size() + 1));
          base.branch_sing.push_back(s);
          base.branch_comp.push_back(0);
          base.branch_conductance.push_back(c);
        }
      }
      const std::size_t nb = base.num_branches();
      const int k_min = std::max(1, delta - g + 1);
      for (int nk = k_min; nk <= 1 + delta; ++nk) {
        const int genus_total = g - delta + nk - 1;
        std::vector<int> cur;
        std::vector<std::vector<int>> genera;
        decreasing_vectors(genus_total, nk, genus_total, cur, genera);
        charge(saturating_mul(genera.size(), saturating_pow(static_cast<std::uint64_t>(nk), nb)));
        for (const auto& gv : genera) {
          CombinatorialType t = base;
          t.comp_genus = gv;
          t.comp_ids.clear();
          for (int k = 0; k < nk; ++k) t.comp_ids.push_back("k" + std::to_string(k + 1));
          // Every map tau: B -> K, as an odometer.
          std::vector<std::size_t> tau(nb, 0);
          while (true) {
            t.branch_comp = tau;
            t.dist_ids.clear();
            t.dist_comp.clear();
            t.markings.clear();
            if (validate_type(t).empty()) {
              std::function<void(int)> place = [&](int i) {
                if (i == n) {
                  charge(1);
                  auto c = canonicalize(t);
                  found.emplace(c.form, std::move(c.type));
                  return;
                }
                for (std::size_t b = 0; b < nb; ++b) {
                  t.markings.push_back({Marking::Kind::branch, b});
                  place(i + 1);
                  t.markings.pop_back();
                }
                for (std::size_t d = 0; d < t.dist_ids.size(); ++d) {
                  t.markings.push_back({Marking::Kind::point, d});
                  place(i + 1);
                  t.markings.pop_back();
                }
                for (int k = 0; k < nk; ++k) {
                  t.dist_ids.push_back("d" + std::to_string(t.dist_ids.size() + 1));
                  t.dist_comp.push_back(static_cast<std::size_t>(k));
                  t.markings.push_back({Marking::Kind::point, t.dist_ids.size() - 1});
                  place(i + 1);
                  t.markings.pop_back();
                  t.dist_ids.pop_back();
                  t.dist_comp.pop_back();
                }
              };
              place(0);
            }
            std::size_t i = 0;
            while (i < nb && ++tau[i] == static_cast<std::size_t>(nk)) tau[i++] = 0;
            if (i == nb) break;
          }
        }
      }
      return;
    }
    for (std::size_t i = from; i < locals.size(); ++i) {
      const auto& lt = locals[i];
      if (d + lt.delta() > delta || dp + lt.delta_prime() > delta_prime) continue;
      chosen.push_back(i);
      pick_singularities(i, d + lt.delta(), dp + lt.delta_prime());
      chosen.pop_back();
    }
  };
  pick_singularities(0, 0, 0);

  std::vector<CombinatorialType> out;
  for (auto& [form, t] : found) out.push_back(std::move(t));
  return out;
}

std::optional<int> known_fiber_dimension(int g, const std::vector<int>& c) {
  const int m = static_cast<int>(c.size());
  if (g == 1 && c == std::vector<int>{2}) return 0;
  if (g == 0 && std::all_of(c.begin(), c.end(), [](int x) { return x == 1; })) return 0;
  if (g == 1 && c == std::vector<int>{2, 2}) return 1;
  if (g == 2 && c == std::vector<int>{4}) return 1;
  if (std::all_of(c.begin(), c.end(), [](int x) { return x == 2; }) && g >= 1 && g <= m) return g * (m - g);
  return std::nullopt;
}

StratumReport stratum_report(const CombinatorialType& t) {
  type_invariants(t);
  StratumReport rep;
  const std::size_t nb = t.num_branches();
  std::vector<bool> marked(nb, false);
  for (const auto& mk : t.markings) {
    if (mk.kind == Marking::Kind::branch) marked[mk.target] = true;
  }
  for (std::size_t k = 0; k < t.num_components(); ++k) {
    int points = 0;
    for (const auto& mk : t.markings) {
      if (mk.kind == Marking::Kind::point && t.dist_comp[mk.target] == k) ++points;
      if (mk.kind == Marking::Kind::branch && t.branch_comp[mk.target] == k) ++points;
    }
    for (std::size_t b = 0; b < nb; ++b) {
      if (!marked[b] && t.branch_comp[b] == k) ++points;
    }
    BaseFactor f{k, t.comp_genus[k], points, 3 * t.comp_genus[k] - 3 + points, 2 * t.comp_genus[k] - 2 + points <= 0};
    rep.base_dimension += f.dimension;
    rep.base.push_back(f);
  }
  // Unmarked branches may be permuted within classes of equal (sigma, tau, c).
  std::map<std::tuple<std::size_t, std::size_t, int>, std::uint64_t> classes;
  for (std::size_t b = 0; b < nb; ++b) {
    if (!marked[b]) ++classes[{t.branch_sing[b], t.branch_comp[b], t.branch_conductance[b]}];
  }
  for (const auto& [key, size] : classes) {
    for (std::uint64_t i = 2; i <= size; ++i) rep.symmetry_order = saturating_mul(rep.symmetry_order, i);
  }
  rep.total_dimension = rep.base_dimension;
  for (std::size_t s = 0; s < t.num_singularities(); ++s) {
    FiberFactor f{s, t.sing_genus[s], t.local_conductances(s), {}};
    f.dimension = known_fiber_dimension(f.genus, f.conductances);
    if (f.dimension) {
      rep.total_dimension += *f.dimension;
    } else {
      rep.total_is_exact = false;
    }
    rep.fiber.push_back(std::move(f));
  }
  return rep;
}

std::string to_dot(const CombinatorialType& t) {
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  std::string out = "graph combinatorial_type {\n";
  for (std::size_t k = 0; k < t.num_components(); ++k) {
    out += "  " + quote(t.comp_ids[k]) + " [shape=circle, label=" + quote(std::to_string(t.comp_genus[k])) + "];\n";
  }
  for (std::size_t s = 0; s < t.num_singularities(); ++s) {
    out += "  " + quote(t.sing_ids[s]) + " [shape=square, label=" + quote(std::to_string(t.sing_genus[s])) + "];\n";
  }
  for (std::size_t b = 0; b < t.num_branches(); ++b) {
    std::string label = std::to_string(t.branch_conductance[b]);
    std::string marks;
    for (std::size_t i = 0; i < t.markings.size(); ++i) {
      if (t.markings[i].kind == Marking::Kind::branch && t.markings[i].target == b) {
        marks += (marks.empty() ? "" : ",") + std::to_string(i + 1);
      }
    }
    if (!marks.empty()) label += " [" + marks + "]";
    out += "  " + quote(t.sing_ids[t.branch_sing[b]]) + " -- " + quote(t.comp_ids[t.branch_comp[b]]) +
           " [label=" + quote(label) + "];\n";
  }
  for (std::size_t d = 0; d < t.dist_ids.size(); ++d) {
    std::string marks;
    for (std::size_t i = 0; i < t.markings.size(); ++i) {
      if (t.markings[i].kind == Marking::Kind::point && t.markings[i].target == d) {
        marks += (marks.empty() ? "" : ",") + std::to_string(i + 1);
      }
    }
    out += "  " + quote(t.dist_ids[d]) + " [shape=plaintext, label=" + quote(marks) + "];\n";
    out += "  " + quote(t.dist_ids[d]) + " -- " + quote(t.comp_ids[t.dist_comp[d]]) + ";\n";
  }
  return out + "}\n";
}

CombinatorialType example_figure_type() {
  CombinatorialType t;
  t.comp_ids = {"k1", "k2", "k3"};
  t.comp_genus = {1, 0, 0};
  t.sing_ids = {"s1", "s2", "s3", "s4"};
  t.sing_genus = {2, 0, 1, 1};
  // A5 between k1 and k2; self-node on k2; cusp on k2 meeting a smooth branch of k3; cusp on k3.
  t.branch_ids = {"b1", "b2", "b3", "b4", "b5", "b6", "b7"};
  t.branch_sing = {0, 0, 1, 1, 2, 2, 3};
  t.branch_comp = {0, 1, 1, 1, 1, 2, 2};
  t.branch_conductance = {3, 3, 1, 1, 2, 1, 2};
  t.dist_ids = {"d1", "d2"};
  t.dist_comp = {0, 0};
  t.markings = {{Marking::Kind::point, 0}, {Marking::Kind::point, 1}, {Marking::Kind::point, 1}};
  return t;
}

}  // namespace territoire
