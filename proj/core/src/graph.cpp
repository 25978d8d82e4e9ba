#include "bsg/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace bsg {

std::string to_string(WalkViolation v) {
  switch (v) {
    case WalkViolation::repeat_vertex: return "repeat-vertex";
    case WalkViolation::bad_step: return "bad-step";
    case WalkViolation::not_closed: return "not-closed";
    case WalkViolation::wrong_length: return "wrong-length";
  }
  return "unknown";
}

std::vector<Permutation> neighbors(const Permutation& p) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(p.size()) - 1);
  for (int i = 1; i < p.size(); ++i) out.push_back(apply_gen(p, i));
  return out;
}

int distance(const Permutation& p, const Permutation& q) {
  const int n = p.size();
  if (n != q.size()) throw std::invalid_argument("distance: size mismatch");
  // inversion count of p^{-1} q
  int posp[kMaxN + 1];
  for (int i = 1; i <= n; ++i) posp[p.at(i)] = i;
  int u[kMaxN + 1];
  for (int i = 1; i <= n; ++i) u[i] = posp[q.at(i)];
  int inv = 0;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (u[a] > u[b]) ++inv;
  return inv;
}

std::vector<int> bfs_distances_from(const Permutation& p) {
  const int n = p.size();
  if (n > kDefaultCap) throw std::invalid_argument("bfs_distances_from: n too large for BFS");
  const std::uint64_t total = factorial(n);
  std::vector<int> dist(total, -1);
  std::deque<std::uint64_t> queue;
  dist[lex_rank(p)] = 0;
  queue.push_back(lex_rank(p));
  while (!queue.empty()) {
    const std::uint64_t r = queue.front();
    queue.pop_front();
    const Permutation v = lex_unrank(n, r);
    for (int i = 1; i < n; ++i) {
      const std::uint64_t w = lex_rank(apply_gen(v, i));
      if (dist[w] < 0) {
        dist[w] = dist[r] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int bfs_distance(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("bfs_distance: size mismatch");
  return bfs_distances_from(p)[lex_rank(q)];
}

int generator_between(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) return 0;
  for (int i = 1; i < a.size(); ++i)
    if (a.at(i) != b.at(i)) return apply_gen(a, i) == b ? i : 0;
  return 0;
}

std::set<Cycle> enumerate_cycles_through(const Permutation& p, int len) {
  if (len != 4 && len != 6)
    throw std::invalid_argument("enumerate_cycles_through: length must be 4 or 6");
  const int n = p.size();
  std::set<Cycle> out;
  std::vector<Permutation> walk;
  walk.reserve(static_cast<std::size_t>(len));
  walk.push_back(p);
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(len));
  std::function<void(const Permutation&)> dfs = [&](const Permutation& v) {
    const int depth = static_cast<int>(seq.size());
    if (depth == len) {
      if (seq.back() != seq.front()) out.insert(make_cycle(walk));
      return;
    }
    for (int i = 1; i < n; ++i) {
      if (!seq.empty() && i == seq.back()) continue;
      const Permutation w = apply_gen(v, i);
      if (depth < len - 1) {
        if (std::find(walk.begin(), walk.end(), w) != walk.end()) continue;
        walk.push_back(w);
        seq.push_back(i);
        dfs(w);
        seq.pop_back();
        walk.pop_back();
      } else {
        if (w != p) continue;  // the last step must close the walk
        seq.push_back(i);
        dfs(w);
        seq.pop_back();
      }
    }
  };
  dfs(p);
  return out;
}

Cycle make_cycle(const std::vector<Permutation>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("make_cycle: empty vertex list");
  Cycle c;
  c.n = vertices.front().size();
  c.vertices.reserve(vertices.size());
  for (const auto& v : vertices) {
    if (v.size() != c.n) throw std::invalid_argument("make_cycle: mixed sizes");
    c.vertices.push_back(lex_rank(v));
  }
  std::sort(c.vertices.begin(), c.vertices.end());
  if (std::adjacent_find(c.vertices.begin(), c.vertices.end()) != c.vertices.end())
    throw std::invalid_argument("make_cycle: repeated vertex");
  return c;
}

Form canonical_form(const Cycle& c) {
  const int len = c.length();
  if (c.n < 2 || len < 4 || (len & 1))
    throw std::invalid_argument("canonical_form: malformed cycle");
  std::vector<Permutation> verts;
  verts.reserve(static_cast<std::size_t>(len));
  for (auto r : c.vertices) verts.push_back(lex_unrank(c.n, r));
  // generator labels between every vertex pair, 0 where not adjacent
  std::vector<std::vector<int>> gen(len, std::vector<int>(len, 0));
  for (int a = 0; a < len; ++a)
    for (int b = 0; b < len; ++b)
      if (a != b) gen[a][b] = generator_between(verts[a], verts[b]);

  Form best;
  auto consider = [&](const Form& f) {
    // every rotation is the same cycle read from a different start vertex
    for (std::size_t r = 0; r < f.size(); ++r) {
      Form g;
      g.reserve(f.size());
      g.insert(g.end(), f.begin() + static_cast<std::ptrdiff_t>(r), f.end());
      g.insert(g.end(), f.begin(), f.begin() + static_cast<std::ptrdiff_t>(r));
      if (g > best) best = g;
    }
  };

  std::vector<bool> used(len, false);
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(len));
  std::function<void(int, int)> dfs = [&](int at, int count) {
    if (count == len) {
      if (gen[at][0] != 0) {
        Form f(seq.begin(), seq.end());
        f.push_back(gen[at][0]);
        consider(f);
      }
      return;
    }
    for (int b = 0; b < len; ++b) {
      if (used[b] || gen[at][b] == 0) continue;
      used[b] = true;
      seq.push_back(gen[at][b]);
      dfs(b, count + 1);
      seq.pop_back();
      used[b] = false;
    }
  };
  used[0] = true;
  dfs(0, 1);
  if (best.empty()) throw std::invalid_argument("canonical_form: vertex set has no spanning cycle");
  return best;
}

WalkReport validate_gray_code(int n, const Form& f, bool closed) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("validate_gray_code: n must be in [2, 12]");
  const std::uint64_t total = factorial(n);
  const std::uint64_t want = closed ? total : total - 1;
  if (f.size() != want) return WalkReport::fail(f.size(), WalkViolation::wrong_length);
  std::vector<bool> visited(total, false);
  const Permutation start = Permutation::identity(n);
  Permutation v = start;
  visited[lex_rank(v)] = true;
  for (std::size_t s = 0; s < f.size(); ++s) {
    const int i = f[s];
    if (i < 1 || i >= n) return WalkReport::fail(s, WalkViolation::bad_step);
    v = apply_gen(v, i);
    if (closed && s + 1 == f.size()) {
      if (v != start) return WalkReport::fail(s, WalkViolation::not_closed);
      return WalkReport::pass();
    }
    const std::uint64_t r = lex_rank(v);
    if (visited[r]) return WalkReport::fail(s, WalkViolation::repeat_vertex);
    visited[r] = true;
  }
  return WalkReport::pass();
}

bool unique_return_path_check(int n, int j, int d) {
  if (n < 3 || n > kMaxN) throw std::invalid_argument("unique_return_path_check: n must be in [3, 12]");
  if (d < 1 || d > n - 2) throw std::invalid_argument("unique_return_path_check: d out of range");
  if (j < 1 || j > n - d) throw std::invalid_argument("unique_return_path_check: j out of range");
  const Permutation pi = Permutation::identity(n);
  std::vector<Permutation> fwd{pi};
  for (int t = 0; t < d; ++t) fwd.push_back(apply_gen(fwd.back(), j + t));
  const Permutation tau = fwd.back();
  if (d == 1) return true;
  const std::vector<Permutation> internal(fwd.begin() + 1, fwd.end() - 1);

  bool disjoint_found = false;
  std::vector<Permutation> vis{tau};
  std::function<void(const Permutation&, int)> dfs = [&](const Permutation& v, int depth) {
    if (disjoint_found) return;
    if (depth == d) {
      // vis = tau, ..., pi; its internal vertices are vis[1 .. d-1]
      for (std::size_t s = 1; s + 1 < vis.size(); ++s)
        if (std::find(internal.begin(), internal.end(), vis[s]) != internal.end()) return;
      disjoint_found = true;
      return;
    }
    for (int i = 1; i < n; ++i) {
      const Permutation w = apply_gen(v, i);
      if (depth < d - 1 && std::find(vis.begin(), vis.end(), w) != vis.end()) continue;
      if (depth == d - 1 && w != pi) continue;
      vis.push_back(w);
      dfs(w, depth + 1);
      vis.pop_back();
    }
  };
  dfs(tau, 0);
  return !disjoint_found;
}

std::string export_dot_bs(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("export_dot_bs: n must be in [2, 4]");
  const std::uint64_t total = factorial(n);
  std::string out = "graph bs" + std::to_string(n) + " {\n";
  for (std::uint64_t r = 0; r < total; ++r)
    out += "  \"" + lex_unrank(n, r).to_string() + "\";\n";
  for (std::uint64_t r = 0; r < total; ++r) {
    const Permutation p = lex_unrank(n, r);
    for (int i = 1; i < n; ++i) {
      const Permutation q = apply_gen(p, i);
      if (lex_rank(q) > r)
        out += "  \"" + p.to_string() + "\" -- \"" + q.to_string() + "\" [gen=" +
               std::to_string(i) + "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace bsg
