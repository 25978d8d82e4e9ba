#include "bsg/ham_builder.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace bsg {
namespace {

int shared_count(const PrismId& a, const PrismId& b) {
  int c = 0;
  for (int x : a.pair)
    for (int y : b.pair) c += (x == y);
  return c;
}

// Cyclic validity of a candidate factor cycle.
bool factor_cycle_ok(int n, const std::vector<PrismId>& cyc) {
  if (cyc.size() != static_cast<std::size_t>(n) * (n - 1) / 2) return false;
  std::set<PrismId> seen(cyc.begin(), cyc.end());
  if (seen.size() != cyc.size()) return false;
  for (std::size_t s = 0; s < cyc.size(); ++s)
    if (shared_count(cyc[s], cyc[(s + 1) % cyc.size()]) != 1) return false;
  return true;
}

std::vector<PrismId> factor_cycle_backtrack(int n) {
  const auto verts = cover(n);
  const std::size_t M = verts.size();
  std::vector<std::size_t> order{0};
  std::vector<bool> used(M, false);
  used[0] = true;
  std::function<bool()> go = [&]() -> bool {
    if (order.size() == M) return shared_count(verts[order.back()], verts[0]) == 1;
    for (std::size_t w = 1; w < M; ++w) {
      if (used[w] || shared_count(verts[order.back()], verts[w]) != 1) continue;
      used[w] = true;
      order.push_back(w);
      if (go()) return true;
      order.pop_back();
      used[w] = false;
    }
    return false;
  };
  if (!go()) throw std::logic_error("factor_ham_cycle: backtracking found no cycle");
  std::vector<PrismId> cyc;
  cyc.reserve(M);
  for (std::size_t idx : order) cyc.push_back(verts[idx]);
  return cyc;
}

// Lexicographically least rotation (Booth's algorithm).
Form least_rotation(const Form& f) {
  if (f.empty()) return f;
  const std::size_t m = f.size();
  std::vector<std::size_t> fail(2 * m, static_cast<std::size_t>(-1));
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * m; ++j) {
    const int sj = f[j % m];
    std::size_t i = fail[j - k - 1];
    while (i != static_cast<std::size_t>(-1) && sj != f[(k + i + 1) % m]) {
      if (sj < f[(k + i + 1) % m]) k = j - i - 1;
      i = fail[i];
    }
    if (sj != f[(k + i + 1) % m]) {
      if (sj < f[(k + i + 1) % m]) k = j;
      fail[j - k] = static_cast<std::size_t>(-1);
    } else {
      fail[j - k] = i + 1;
    }
  }
  Form out;
  out.reserve(m);
  for (std::size_t j = 0; j < m; ++j) out.push_back(f[(k + j) % m]);
  return out;
}

Form cyclic_canon(const Form& f) {
  Form rev(f.rbegin(), f.rend());
  return std::min(least_rotation(f), least_rotation(rev));
}

std::map<int, std::uint64_t> histogram(const Form& f) {
  std::map<int, std::uint64_t> h;
  for (int g : f) ++h[g];
  return h;
}

}  // namespace

bool FactorGraph::adjacent(const PrismId& a, const PrismId& b) {
  return a != b && shared_count(a, b) == 1;
}

FactorGraph factor_graph(int n, std::uint64_t seed, int samples) {
  if (n < 5 || n > kMaxN) throw std::invalid_argument("factor_graph: needs 5 <= n <= 12");
  FactorGraph g;
  g.n = n;
  g.vertices = cover(n);

  // Predicate -> edge: construct the witness vertex [sorted rest, k, i, j]
  // and step b_{n-2}.
  for (const auto& a : g.vertices)
    for (const auto& b : g.vertices) {
      if (!FactorGraph::adjacent(a, b)) continue;
      const Permutation p = pick_exit(a, b, 0);
      const Permutation q = apply_gen(p, n - 2);
      if (!a.contains(p) || !b.contains(q))
        throw std::logic_error("factor_graph: adjacency witness construction failed");
    }

  // Edge -> predicate: every b_{n-2} step joins prisms sharing one element.
  const auto check_vertex = [n](const Permutation& p) {
    const PrismId from = prism_of(p);
    const PrismId to = prism_of(apply_gen(p, n - 2));
    if (from == to || shared_count(from, to) != 1)
      throw std::logic_error("factor_graph: b_{n-2} edge breaks the one-element rule");
  };
  const std::uint64_t total = factorial(n);
  if (n == 5) {
    for (std::uint64_t r = 0; r < total; ++r) check_vertex(lex_unrank(n, r));
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, total - 1);
    for (int s = 0; s < samples; ++s) check_vertex(lex_unrank(n, dist(rng)));
  }
  g.edges_verified = true;
  return g;
}

std::vector<PrismId> factor_ham_cycle(int n) {
  if (n < 5 || n > kMaxN) throw std::invalid_argument("factor_ham_cycle: needs 5 <= n <= 12");
  // Revolving-door order: {1,2}, then for each new element m the pairs
  // {m-1,m}, {m-2,m}, ..., {1,m}. Consecutive pairs exchange one element,
  // and the wraparound {1,n} -> {1,2} shares 1.
  std::vector<PrismId> cyc{PrismId{n, {1, 2}}};
  for (int m = 3; m <= n; ++m)
    for (int x = m - 1; x >= 1; --x) cyc.push_back(PrismId{n, {x, m}});
  if (!factor_cycle_ok(n, cyc)) cyc = factor_cycle_backtrack(n);
  if (!factor_cycle_ok(n, cyc)) throw std::logic_error("factor_ham_cycle: validation failed");
  const auto it = std::find(cyc.begin(), cyc.end(), PrismId{n, {n - 1, n}});
  std::rotate(cyc.begin(), it, cyc.end());
  return cyc;
}

Permutation pick_exit(const PrismId& qs, const PrismId& qnext, int entry_parity) {
  const int n = qs.n;
  if (n < 5) throw std::invalid_argument("pick_exit: needs n >= 5");
  if (qnext.n != n || !FactorGraph::adjacent(qs, qnext))
    throw std::invalid_argument("pick_exit: prisms must be adjacent");
  int j = 0, i = 0, k = 0;
  for (int x : qs.pair) {
    if (x == qnext.pair[0] || x == qnext.pair[1])
      j = x;
    else
      i = x;
  }
  for (int x : qnext.pair)
    if (x != j) k = x;
  std::vector<int> rest;
  for (int x = 1; x <= n; ++x)
    if (x != i && x != j && x != k) rest.push_back(x);
  std::vector<int> img = rest;
  img.push_back(k);
  img.push_back(i);
  img.push_back(j);
  Permutation c0 = Permutation::from_image(img);
  if (parity(c0) != entry_parity) return c0;
  std::swap(img[static_cast<std::size_t>(n) - 4], img[static_cast<std::size_t>(n) - 5]);
  return Permutation::from_image(img);
}

namespace {

void check_lift_plan(const LiftPlan& plan) {
  const int n = plan.n;
  const std::size_t M = plan.prism_order.size();
  if (M != static_cast<std::size_t>(n) * (n - 1) / 2 || plan.entries.size() != M ||
      plan.exits.size() != M)
    throw std::logic_error("lift plan: wrong component counts");
  for (std::size_t s = 0; s < M; ++s) {
    const auto& q = plan.prism_order[s];
    const auto at = [&](const char* what) {
      return std::string("lift plan: ") + what + " at prism " + std::to_string(s);
    };
    if (shared_count(q, plan.prism_order[(s + 1) % M]) != 1)
      throw std::logic_error(at("non-adjacent consecutive prisms"));
    if (!q.contains(plan.entries[s]) || !q.contains(plan.exits[s]))
      throw std::logic_error(at("entry or exit outside prism"));
    if (parity(plan.entries[s]) == parity(plan.exits[s]))
      throw std::logic_error(at("entry and exit share parity"));
    if (apply_gen(plan.exits[s], plan.connector) != plan.entries[(s + 1) % M])
      throw std::logic_error(at("connector does not chain"));
  }
}

}  // namespace

LiftPlan make_lift_plan(int n) {
  if (n < 5 || n > kMaxN) throw std::invalid_argument("make_lift_plan: needs 5 <= n <= 12");
  LiftPlan plan;
  plan.n = n;
  plan.connector = n - 2;
  plan.prism_order = factor_ham_cycle(n);
  const std::size_t M = plan.prism_order.size();
  plan.entries.resize(M);
  plan.exits.resize(M);

  // Start vertex: the lex-smallest exit-shaped vertex of the first prism,
  // with the sorted prefix, [1..n-3, n-2, n-1, n] = identity here.
  const Permutation c0 = pick_exit(plan.prism_order[0], plan.prism_order[1], 0);
  const Permutation c1 = pick_exit(plan.prism_order[0], plan.prism_order[1], 1);
  plan.exits[0] = std::min(c0, c1);
  for (std::size_t s = 1; s < M; ++s) {
    plan.entries[s] = apply_gen(plan.exits[s - 1], plan.connector);
    plan.exits[s] =
        pick_exit(plan.prism_order[s], plan.prism_order[(s + 1) % M], parity(plan.entries[s]));
  }
  plan.entries[0] = apply_gen(plan.exits[M - 1], plan.connector);
  check_lift_plan(plan);
  return plan;
}

Form build_hamiltonian_cycle(int n, BaseMode mode) {
  if (n < 5 || n > kMaxN)
    throw std::invalid_argument("build_hamiltonian_cycle: needs 5 <= n <= 12");
  const LiftPlan plan = make_lift_plan(n);
  const Form base = (mode == BaseMode::recursive && n - 2 >= 5)
                        ? build_hamiltonian_cycle(n - 2, mode)
                        : sjt_cycle(n - 2);
  const std::size_t M = plan.prism_order.size();
  Form form;
  form.reserve(factorial(n));
  for (std::size_t s = 1; s <= M; ++s) {
    const std::size_t si = s % M;
    form.push_back(plan.connector);
    const PrismPath path =
        ham_path_in_prism(plan.prism_order[si], plan.entries[si], plan.exits[si], base);
    for (std::size_t u = 0; u + 1 < path.vertices.size(); ++u) {
      const int g = generator_between(path.vertices[u], path.vertices[u + 1]);
      if (g == 0)
        throw std::logic_error("build_hamiltonian_cycle: non-adjacent prism path step at prism " +
                               std::to_string(si));
      form.push_back(g);
    }
  }
  const WalkReport rep = validate_gray_code(n, form, true);
  if (!rep.ok)
    throw std::logic_error("build_hamiltonian_cycle: final validation failed (" +
                           to_string(rep.first_violation->second) + " at step " +
                           std::to_string(rep.first_violation->first) + ")");
  return form;
}

std::vector<Permutation> hamiltonian_vertices(int n, BaseMode mode) {
  const LiftPlan plan = make_lift_plan(n);
  const Form form = build_hamiltonian_cycle(n, mode);
  std::vector<Permutation> out;
  out.reserve(form.size());
  Permutation v = plan.start();
  out.push_back(v);
  for (std::size_t s = 0; s + 1 < form.size(); ++s) {
    v = apply_gen(v, form[s]);
    out.push_back(v);
  }
  if (apply_gen(v, form.back()) != plan.start())
    throw std::logic_error("hamiltonian_vertices: walk does not close");
  return out;
}

SjtComparison compare_sjt(int n) {
  if (n < 5 || n > kMaxN) throw std::invalid_argument("compare_sjt: needs 5 <= n <= 12");
  SjtComparison cmp;
  cmp.n = n;
  const Form built = build_hamiltonian_cycle(n);
  const Form sjt = sjt_cycle(n);
  cmp.built_valid = validate_gray_code(n, built, true).ok;
  cmp.sjt_valid = validate_gray_code(n, sjt, true).ok;
  cmp.distinct = cyclic_canon(built) != cyclic_canon(sjt);
  cmp.built_histogram = histogram(built);
  cmp.sjt_histogram = histogram(sjt);
  return cmp;
}

}  // namespace bsg
