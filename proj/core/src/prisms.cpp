#include "bsg/prisms.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

namespace bsg {

bool PrismId::contains(const Permutation& p) const {
  if (p.size() != n) return false;
  const int a = p.at(n - 1), b = p.at(n);
  return (a == pair[0] && b == pair[1]) || (a == pair[1] && b == pair[0]);
}

PrismId prism_of(const Permutation& p) {
  const int n = p.size();
  if (n < 5) throw std::invalid_argument("prism_of: needs n >= 5");
  int a = p.at(n - 1), b = p.at(n);
  if (a > b) std::swap(a, b);
  return PrismId{n, {a, b}};
}

std::vector<PrismId> cover(int n) {
  if (n < 5 || n > kMaxN) throw std::invalid_argument("cover: needs 5 <= n <= 12");
  std::vector<PrismId> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back(PrismId{n, {a, b}});
  return out;
}

Form p6_form(int i, int k, int n) {
  if (k < 2 || k > n - 1 || i < 1 || i > n - 1)
    throw std::invalid_argument("p6_form: index out of range");
  if (std::abs(i - k) < 2 || std::abs(i - (k - 1)) < 2)
    throw std::invalid_argument("p6_form: b_i must be independent of b_k and b_{k-1}");
  Form f;
  f.reserve(12);
  for (int rep = 0; rep < 3; ++rep) {
    f.push_back(k);
    f.push_back(i);
    f.push_back(k - 1);
    f.push_back(i);
  }
  return f;
}

PrismPath ham_path_in_prism(const PrismId& id, const Permutation& pi,
                            const Permutation& tau, const Form& base) {
  const int n = id.n;
  if (n < 5) throw std::invalid_argument("ham_path_in_prism: needs n >= 5");
  if (!id.contains(pi) || !id.contains(tau))
    throw std::invalid_argument("ham_path_in_prism: endpoint outside prism");
  if (pi == tau) throw std::invalid_argument("ham_path_in_prism: endpoints equal");
  if (parity(pi) == parity(tau))
    throw std::invalid_argument("ham_path_in_prism: endpoints must have opposite parity");
  if (!validate_gray_code(n - 2, base, true).ok)
    throw std::invalid_argument("ham_path_in_prism: base form failed validation");

  const std::size_t N = base.size();  // (n-2)!
  std::vector<Permutation> v;
  v.reserve(N);
  v.push_back(pi);
  for (std::size_t s = 0; s + 1 < N; ++s) v.push_back(apply_gen(v.back(), base[s]));
  std::vector<Permutation> vb;  // b_{n-1} mirror; commutes with b_1..b_{n-3}
  vb.reserve(N);
  for (const auto& x : v) vb.push_back(apply_gen(x, n - 1));

  std::vector<Permutation> path;
  path.reserve(2 * N);
  const auto it = std::find(v.begin(), v.end(), tau);
  if (it != v.end()) {
    // target on the pi copy; its offset is odd because parities alternate
    const auto t = static_cast<std::size_t>(it - v.begin());
    if (t % 2 != 1) throw std::logic_error("ham_path_in_prism: same-copy target at even offset");
    std::size_t s = 0;
    while (s + 1 < t) {
      path.push_back(v[s]);
      path.push_back(vb[s]);
      path.push_back(vb[s + 1]);
      path.push_back(v[s + 1]);
      s += 2;
    }
    path.push_back(v[t - 1]);
    path.push_back(vb[t - 1]);
    path.push_back(vb[t]);
    for (std::size_t u = t + 1; u < N; ++u) path.push_back(vb[u]);
    path.push_back(v[N - 1]);
    for (std::size_t u = N - 1; u-- > t;) path.push_back(v[u]);
  } else {
    const auto it2 = std::find(vb.begin(), vb.end(), tau);
    if (it2 == vb.end()) throw std::logic_error("ham_path_in_prism: target not found in prism");
    const auto t = static_cast<std::size_t>(it2 - vb.begin());
    if (t == 0) {
      // direct mirror of the start: sweep one copy, then the other backwards
      path = v;
      for (std::size_t u = N; u-- > 0;) path.push_back(vb[u]);
    } else {
      if (t % 2 != 0) throw std::logic_error("ham_path_in_prism: cross-copy target at odd offset");
      for (std::size_t u = 0; u < t; ++u) path.push_back(v[u]);
      for (std::size_t u = t; u-- > 0;) path.push_back(vb[u]);
      path.push_back(vb[N - 1]);
      path.push_back(v[N - 1]);
      for (std::size_t s2 = N - 2;; --s2) {
        if (s2 % 2 == 1) {
          path.push_back(vb[s2]);
          path.push_back(v[s2]);
        } else {
          path.push_back(v[s2]);
          path.push_back(vb[s2]);
        }
        if (s2 == t) break;
      }
    }
  }

  PrismPath out{id, std::move(path)};
  const WalkReport rep = validate_prism_path(out, pi, tau);
  if (!rep.ok)
    throw std::logic_error("ham_path_in_prism: constructed path failed validation (" +
                           to_string(rep.first_violation->second) + " at step " +
                           std::to_string(rep.first_violation->first) + ")");
  return out;
}

WalkReport validate_prism_path(const PrismPath& path, const Permutation& pi,
                               const Permutation& tau) {
  const int n = path.prism.n;
  if (n < 5) return WalkReport::fail(0, WalkViolation::bad_step);
  const std::uint64_t want = 2 * factorial(n - 2);
  const auto& verts = path.vertices;
  if (verts.size() != want) return WalkReport::fail(verts.size(), WalkViolation::wrong_length);
  if (verts.front() != pi) return WalkReport::fail(0, WalkViolation::not_closed);
  if (verts.back() != tau) return WalkReport::fail(verts.size() - 1, WalkViolation::not_closed);
  std::set<std::uint64_t> seen;
  for (std::size_t s = 0; s < verts.size(); ++s) {
    if (!path.prism.contains(verts[s])) return WalkReport::fail(s, WalkViolation::bad_step);
    if (!seen.insert(lex_rank(verts[s])).second)
      return WalkReport::fail(s, WalkViolation::repeat_vertex);
  }
  for (std::size_t s = 0; s + 1 < verts.size(); ++s) {
    const int g = generator_between(verts[s], verts[s + 1]);
    const bool legal = g != 0 && ((g >= 1 && g <= n - 3) || g == n - 1);
    if (!legal) return WalkReport::fail(s, WalkViolation::bad_step);
  }
  return WalkReport::pass();
}

std::vector<Table1Path> table1_paths(int i, int k) {
  if (k < 2 || i < 1 || std::abs(i - k) < 2 || std::abs(i - (k - 1)) < 2)
    throw std::invalid_argument("table1_paths: invalid (i, k), b_i must be independent of b_k and b_{k-1}");
  auto subst = [&](const std::string& word) {
    Form f;
    f.reserve(word.size());
    for (char c : word) f.push_back(c == 'i' ? i : (c == 'k' ? k : k - 1));
    return f;
  };
  std::vector<Table1Path> out;
  out.reserve(table1_entries().size());
  for (const auto& e : table1_entries()) out.push_back({subst(e.target), subst(e.path)});
  return out;
}

Table1Report validate_table1(int i, int k) {
  Table1Report rep;
  rep.i = i;
  rep.k = k;
  rep.n = std::max(i, k) + 1;
  const int n = rep.n;
  const Permutation pi = Permutation::identity(n);
  const Form pf = p6_form(i, k, n);

  std::set<Permutation> prism_verts;
  {
    Permutation v = pi;
    for (std::size_t s = 0; s < pf.size(); ++s) {
      prism_verts.insert(v);
      v = apply_gen(v, pf[s]);
    }
    if (v != pi || prism_verts.size() != 12)
      throw std::logic_error("validate_table1: prism trace failed to close on 12 vertices");
  }

  const auto paths = table1_paths(i, k);
  const auto& entries = table1_entries();
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const Permutation tau = apply_form(pi, paths[e].target);
    bool ok = paths[e].path.size() == 11;
    std::set<Permutation> seen{pi};
    Permutation v = pi;
    for (int g : paths[e].path) {
      v = apply_gen(v, g);
      ok = ok && seen.insert(v).second;
    }
    ok = ok && v == tau && seen == prism_verts;
    rep.entries.emplace_back(entries[e].target, ok);
    ++rep.total;
    if (ok) ++rep.passed;
  }
  return rep;
}

bool prism_hamilton_connected(int m) {
  if (m < 3 || m > 8) throw std::invalid_argument("prism_hamilton_connected: m must be in [3, 8]");
  const int V = 2 * m;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(V));
  const auto idx = [m](int c, int x) { return c * m + x; };
  for (int c = 0; c < 2; ++c)
    for (int x = 0; x < m; ++x) {
      auto& a = adj[static_cast<std::size_t>(idx(c, x))];
      a.push_back(idx(c, (x + 1) % m));
      a.push_back(idx(c, (x + m - 1) % m));
      a.push_back(idx(1 - c, x));
    }
  std::vector<bool> used(static_cast<std::size_t>(V), false);
  std::function<bool(int, int, int)> go = [&](int cur, int goal, int count) -> bool {
    if (count == V) return cur == goal;
    for (int w : adj[static_cast<std::size_t>(cur)]) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (w == goal && count + 1 < V) continue;
      used[static_cast<std::size_t>(w)] = true;
      const bool found = go(w, goal, count + 1);
      used[static_cast<std::size_t>(w)] = false;
      if (found) return true;
    }
    return false;
  };
  for (int u = 0; u < V; ++u)
    for (int g = u + 1; g < V; ++g) {
      std::fill(used.begin(), used.end(), false);
      used[static_cast<std::size_t>(u)] = true;
      if (!go(u, g, 1)) return false;
    }
  return true;
}

}  // namespace bsg
