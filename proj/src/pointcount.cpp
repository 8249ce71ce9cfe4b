#include "territoire/pointcount.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

namespace territoire {

EnumerationResult enumerate_subalgebras(const AlgebraPtr<PrimeField>& alg, std::size_t delta, const Budgets& budgets,
                                        unsigned threads) {
  const PrimeField& f = alg->field();
  const std::size_t n = alg->dim();
  EnumerationResult result;
  if (delta >= n) return result;
  if (n > budgets.exhaustive_dim) {
    throw BudgetError("exhaustive enumeration needs dimension <= " + std::to_string(budgets.exhaustive_dim));
  }
  if (delta == 0) {
    result.points.push_back(whole_algebra(alg));
    result.candidates = 1;
    return result;
  }
  const auto& unit = alg->unit();
  const std::size_t u0 = static_cast<std::size_t>(
      std::find_if(unit.begin(), unit.end(), [](auto v) { return v != 0; }) - unit.begin());
  const std::size_t k = n - delta - 1;
  result.candidates = gaussian_binomial(n - 1, k, f.characteristic());
  if (result.candidates > budgets.enumeration_candidates) {
    throw BudgetError("enumeration would test " + std::to_string(result.candidates) +
                      " candidate subspaces, above the cap " + std::to_string(budgets.enumeration_candidates));
  }

  // Coordinate u0 is dropped: {x : x[u0] = 0} complements the unit line.
  const auto patterns = combinations(n - 1, k);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(patterns.size())));
  std::vector<std::vector<Subalgebra<PrimeField>>> found(threads);
  auto work = [&](unsigned t) {
    for (std::size_t idx = t; idx < patterns.size(); idx += threads) {
      for_each_rref_with_pivots(f, n - 1, patterns[idx], [&](const Matrix<PrimeField>& h) {
        Matrix<PrimeField> rows(f, 0, n);
        rows.append_row(unit);
        Vec<PrimeField> x(n, 0);
        for (std::size_t r = 0; r < h.rows(); ++r) {
          for (std::size_t c = 0, src = 0; c < n; ++c) x[c] = c == u0 ? 0 : h(r, src++);
          rows.append_row(x);
        }
        auto pivots = rref_in_place(rows);
        if (!closure_violation(*alg, rows, pivots)) {
          found[t].push_back(Subalgebra<PrimeField>::from_canonical(alg, std::move(rows), std::move(pivots)));
        }
      });
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& part : found) {
    for (auto& s : part) result.points.push_back(std::move(s));
  }
  std::sort(result.points.begin(), result.points.end());
  return result;
}

std::string BucketKey::to_string() const {
  std::string s = "delta=" + std::to_string(delta) + " delta'=" + std::to_string(delta_prime);
  if (profile) s += " profile=" + profile->to_string();
  if (conductances) {
    s += " conductances=(";
    for (std::size_t i = 0; i < conductances->size(); ++i) s += (i ? "," : "") + std::to_string((*conductances)[i]);
    s += ")";
  }
  return s;
}

std::vector<EnumerationBucket> bucketize(const std::vector<Subalgebra<PrimeField>>& points,
                                         const std::optional<ConductanceVector>& c) {
  std::map<BucketKey, std::vector<Subalgebra<PrimeField>>> groups;
  for (const auto& b : points) {
    auto rec = full_record(b, c);
    BucketKey key{rec.delta, rec.delta_prime, rec.profile, rec.branch_conductances};
    groups[key].push_back(b);
  }
  std::vector<EnumerationBucket> out;
  for (auto& [key, pts] : groups) out.push_back({key, std::move(pts)});
  return out;
}

std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t m) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  if (m == 0) {
    out.push_back({});
    return out;
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(m, 0);
  while (true) {
    std::size_t blocks = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<std::vector<std::size_t>> parts(blocks);
    for (std::size_t i = 0; i < m; ++i) parts[a[i]].push_back(i);
    out.push_back(std::move(parts));
    std::size_t i = m - 1;
    for (; i > 0; --i) {
      std::size_t prefix_max = *std::max_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i));
      if (a[i] <= prefix_max) {
        ++a[i];
        std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

DecompositionReport verify_decomposition(const ConductanceVector& c, int delta, int delta_prime, std::uint32_t p,
                                         const Budgets& budgets, unsigned threads) {
  if (c.sum() != delta + delta_prime) {
    throw PreconditionError("decomposition needs sum c = delta + delta' (" + std::to_string(c.sum()) +
                            " != " + std::to_string(delta + delta_prime) + ")");
  }
  if (delta < 1) throw PreconditionError("decomposition needs delta >= 1");
  DecompositionReport rep{c, delta, delta_prime, p, {}, 0, 0, {}, {}, 0, false};
  PrimeField f(p);
  auto alg = make_truncated_product(c, f, budgets);
  auto all = enumerate_subalgebras(alg, static_cast<std::size_t>(delta), budgets, threads);
  rep.candidates = all.candidates;
  std::vector<Subalgebra<PrimeField>> stratum;
  for (auto& b : all.points) {
    if (territoire::delta_prime(b) == delta_prime) stratum.push_back(std::move(b));
  }
  rep.observed_total = stratum.size();
  auto buckets = bucketize(stratum, c);

  std::map<std::pair<int, std::vector<int>>, std::uint64_t> ter_cache;
  auto ter_count = [&](int g, std::vector<int> cp) {
    std::sort(cp.begin(), cp.end(), std::greater<>());
    auto key = std::make_pair(g, cp);
    auto it = ter_cache.find(key);
    if (it != ter_cache.end()) return it->second;
    auto n = singularity_territory_points(g, ConductanceVector(cp), p, budgets).size();
    ter_cache.emplace(key, n);
    return static_cast<std::uint64_t>(n);
  };

  for (const auto& parts : set_partitions(c.size())) {
    // Admissible genus ranges per part, then every combination summing to delta.
    std::vector<std::vector<int>> ranges;
    for (const auto& part : parts) {
      int sum = 0;
      for (auto i : part) sum += c[i];
      const int size = static_cast<int>(part.size());
      std::vector<int> gs;
      for (int g = 0; g + size - 1 < sum; ++g) {
        if (sum <= 2 * (g + size - 1)) gs.push_back(g);
      }
      ranges.push_back(std::move(gs));
    }
    std::vector<int> choice(parts.size());
    std::function<void(std::size_t, int)> pick = [&](std::size_t idx, int used) {
      if (idx == parts.size()) {
        if (used != delta) return;
        DecompositionTerm term;
        term.profile.partition = parts;
        term.profile.genera = choice;
        term.predicted = 1;
        for (std::size_t q = 0; q < parts.size(); ++q) {
          std::vector<int> cp;
          for (auto i : parts[q]) cp.push_back(c[i]);
          auto n = ter_count(choice[q], cp);
          term.factor_counts.push_back(n);
          term.predicted = saturating_mul(term.predicted, n);
        }
        rep.terms.push_back(std::move(term));
        return;
      }
      for (int g : ranges[idx]) {
        int d = g + static_cast<int>(parts[idx].size()) - 1;
        if (used + d > delta) break;
        choice[idx] = g;
        pick(idx + 1, used + d);
      }
    };
    pick(0, 0);
  }

  bool ok = true;
  for (auto& term : rep.terms) {
    for (const auto& b : buckets) {
      if (b.key.profile == term.profile) term.observed += b.points.size();
    }
    rep.predicted_total = saturating_add(rep.predicted_total, term.predicted);
    if (term.observed != term.predicted && ok) {
      ok = false;
      for (const auto& b : buckets) {
        if (b.key.profile != term.profile) continue;
        for (const auto& pt : b.points) {
          if (rep.witnesses.size() < budgets.print_cap) rep.witnesses.push_back(pt);
        }
      }
    }
    if (term.observed != term.predicted) ok = false;
  }
  for (const auto& b : buckets) {
    bool explained = std::any_of(rep.terms.begin(), rep.terms.end(),
                                 [&](const DecompositionTerm& t) { return b.key.profile == t.profile; });
    if (!explained) {
      if (ok) {
        for (const auto& pt : b.points) {
          if (rep.witnesses.size() < budgets.print_cap) rep.witnesses.push_back(pt);
        }
      }
      ok = false;
      rep.unexplained.push_back(b);
    }
  }
  rep.ok = ok && rep.predicted_total == rep.observed_total;
  return rep;
}

std::uint64_t aut_group_order(const ConductanceVector& c, std::uint32_t p) {
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < c.size();) {
    std::size_t j = i;
    while (j < c.size() && c[j] == c[i]) ++j;
    for (std::uint64_t k = 2; k <= j - i; ++k) order = saturating_mul(order, k);
    i = j;
  }
  for (auto ci : c.values()) {
    if (ci >= 2) order = saturating_mul(order, saturating_mul(p - 1, saturating_pow(p, static_cast<std::uint64_t>(ci - 2))));
  }
  return order;
}

std::vector<AutElement> aut_elements(const ConductanceVector& c, std::uint32_t p, const Budgets& budgets) {
  const std::uint64_t order = aut_group_order(c, p);
  if (order > budgets.group_order) {
    throw BudgetError("Aut(A_" + c.to_string() + ") over F_" + std::to_string(p) + " has order " +
                      std::to_string(order) + ", above the cap " + std::to_string(budgets.group_order));
  }
  const std::size_t m = c.size();
  // Permutations preserving c: independent permutations of each run of equal values.
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i;
    while (j < m && c[j] == c[i]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  std::function<void(std::size_t)> permute = [&](std::size_t r) {
    if (r == runs.size()) {
      perms.push_back(perm);
      return;
    }
    auto [lo, hi] = runs[r];
    std::sort(perm.begin() + static_cast<std::ptrdiff_t>(lo), perm.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      permute(r + 1);
    } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(lo),
                                   perm.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  permute(0);

  std::vector<std::vector<std::uint32_t>> scal(m);
  for (std::size_t i = 0; i < m; ++i) {
    scal[i].assign(static_cast<std::size_t>(std::max(0, c[i] - 1)), 0);
    if (!scal[i].empty()) scal[i][0] = 1;
  }
  std::vector<AutElement> out;
  out.reserve(order);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t i, std::size_t k) {
    if (i == m) {
      for (const auto& pm : perms) out.push_back({scal, pm});
      return;
    }
    if (k == scal[i].size()) {
      choose(i + 1, 0);
      return;
    }
    const std::uint32_t lo = k == 0 ? 1 : 0;
    for (std::uint32_t a = lo; a < p; ++a) {
      scal[i][k] = a;
      choose(i, k + 1);
    }
    scal[i][k] = k == 0 ? 1 : 0;
  };
  choose(0, 0);
  return out;
}

Matrix<PrimeField> aut_matrix(const ConductanceVector& c, const AutElement& e, const PrimeField& f) {
  const std::size_t n = static_cast<std::size_t>(c.sum());
  Matrix<PrimeField> m(f, n, n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t len = static_cast<std::size_t>(c[i]);
    const std::size_t src = c.offset(i), dst = c.offset(e.permutation[i]);
    // psi = sum_k scalings[i][k] t^{k+1}; row j holds psi^j truncated at t^{c_i}.
    std::vector<std::uint32_t> psi(len, 0), power(len, 0);
    for (std::size_t k = 0; k + 1 < len; ++k) psi[k + 1] = e.scalings[i][k];
    power[0] = 1;
    for (std::size_t j = 0; j < len; ++j) {
      for (std::size_t a = 0; a < len; ++a) m(src + j, dst + a) = power[a];
      std::vector<std::uint32_t> next(len, 0);
      for (std::size_t a = 0; a < len; ++a) {
        if (power[a] == 0) continue;
        for (std::size_t b = 1; a + b < len; ++b) next[a + b] = f.add(next[a + b], f.mul(power[a], psi[b]));
      }
      power = std::move(next);
    }
  }
  return m;
}

namespace {

Matrix<PrimeField> transform(const Matrix<PrimeField>& basis, const Matrix<PrimeField>& m) {
  const PrimeField& f = basis.field();
  Matrix<PrimeField> out(f, basis.rows(), basis.cols());
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      const auto x = basis(r, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < basis.cols(); ++k) out(r, k) = f.add(out(r, k), f.mul(x, m(j, k)));
    }
  }
  return out;
}

}  // namespace

Subalgebra<PrimeField> act(const AutElement& e, const ConductanceVector& c, const Subalgebra<PrimeField>& b) {
  require_truncated_product(b, c);
  auto rows = transform(b.basis(), aut_matrix(c, e, b.ambient().field()));
  auto pivots = rref_in_place(rows);
  return Subalgebra<PrimeField>::from_canonical(b.ambient_ptr(), std::move(rows), std::move(pivots));
}

OrbitReport orbits(const std::vector<Subalgebra<PrimeField>>& points, const ConductanceVector& c,
                   const std::vector<AutElement>& group) {
  OrbitReport rep;
  rep.group_order = group.size();
  if (points.empty()) return rep;
  const PrimeField& f = points.front().ambient().field();
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i].basis().data(), i);

  std::vector<std::size_t> parent(points.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // image[g][i]: index of g applied to point i.
  std::vector<std::vector<std::size_t>> image(group.size(), std::vector<std::size_t>(points.size()));
  for (std::size_t g = 0; g < group.size(); ++g) {
    auto m = aut_matrix(c, group[g], f);
    for (std::size_t i = 0; i < points.size(); ++i) {
      require_truncated_product(points[i], c);
      auto rows = transform(points[i].basis(), m);
      rref_in_place(rows);
      auto it = index.find(rows.data());
      if (it == index.end()) throw PreconditionError("point set is not invariant under Aut(A_" + c.to_string() + ")");
      image[g][i] = it->second;
      auto a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < points.size(); ++i) groups[find(i)].push_back(i);
  for (auto& [root, members] : groups) {
    std::uint64_t stab = 0;
    for (std::size_t g = 0; g < group.size(); ++g) stab += image[g][members.front()] == members.front();
    rep.orbits.push_back(std::move(members));
    rep.stabilizer_orders.push_back(stab);
  }
  return rep;
}

}  // namespace territoire
