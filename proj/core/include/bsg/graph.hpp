#pragma once

#include "bsg/permutation.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bsg {

// Simple cycle of BS_n identified by its vertex set (sorted lex ranks).
// Forms are derived views; two listings of the same vertices are equal.
struct Cycle {
  int n = 0;
  std::vector<std::uint64_t> vertices;  // sorted, distinct

  int length() const { return static_cast<int>(vertices.size()); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

enum class WalkViolation { repeat_vertex, bad_step, not_closed, wrong_length };

std::string to_string(WalkViolation v);

struct WalkReport {
  bool ok = true;
  // 0-based step index of the first violation, when any.
  std::optional<std::pair<std::size_t, WalkViolation>> first_violation;

  static WalkReport pass() { return {}; }
  static WalkReport fail(std::size_t step, WalkViolation why) {
    WalkReport r;
    r.ok = false;
    r.first_violation = {step, why};
    return r;
  }
};

// The n-1 neighbours p*b_1 .. p*b_{n-1}, in generator order.
std::vector<Permutation> neighbors(const Permutation& p);

// Graph distance: inversion count of p^{-1} q. O(n^2), no search.
int distance(const Permutation& p, const Permutation& q);

// Breadth-first-search distance. Validation only: allocates Theta(n!) state.
int bfs_distance(const Permutation& p, const Permutation& q);

// All BFS distances from p, indexed by lex rank. Validation only.
std::vector<int> bfs_distances_from(const Permutation& p);

// The generator index turning a into b, or 0 if they are not adjacent.
int generator_between(const Permutation& a, const Permutation& b);

// Brute-force oracle: the exact set of simple len-cycles through p, for
// len in {4, 6}. DFS over generator-index sequences with no consecutive
// repeats (cyclically), keeping walks that close at p with all len visited
// vertices distinct; deduplicated by vertex set.
std::set<Cycle> enumerate_cycles_through(const Permutation& p, int len);

// Cycle value for an explicit vertex list; validates distinctness.
Cycle make_cycle(const std::vector<Permutation>& vertices);

// Lexicographically maximal index sequence over all readings: every start
// vertex, both directions, every spanning cycle of the induced subgraph.
Form canonical_form(const Cycle& c);

// closed: f must have length n! and trace identity -> ... -> identity with
// no repeated intermediate vertex. open: length n!-1 visiting n! distinct
// vertices. The report carries the first violation instead of throwing.
WalkReport validate_gray_code(int n, const Form& f, bool closed);

// True iff every simple return path of length d from tau = pi b_j..b_{j+d-1}
// back to pi shares an internal vertex with the forward path (pi = identity).
// d == 1 holds by convention: the lone return edge has no internal vertices.
// Requires 1 <= d <= n-2 and 1 <= j <= n-d.
bool unique_return_path_check(int n, int j, int d);

// DOT rendering of BS_n for n <= 4. Lex vertex order, labels like "1324",
// edge attribute gen=<i>.
std::string export_dot_bs(int n);

}  // namespace bsg
