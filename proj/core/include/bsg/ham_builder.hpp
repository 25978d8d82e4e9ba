#pragma once

#include "bsg/prisms.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace bsg {

// Prism adjacency graph of BS_n: one vertex per 2-subset {a, b} of {1..n},
// edges between subsets sharing exactly one element (Johnson graph J(n,2)).
struct FactorGraph {
  int n = 0;
  std::vector<PrismId> vertices;  // lexicographic pair order
  // true once the adjacency predicate has been checked against actual
  // b_{n-2} edges of BS_n.
  bool edges_verified = false;

  static bool adjacent(const PrismId& a, const PrismId& b);
  int degree() const { return 2 * (n - 2); }
};

// Builds the factor graph and verifies the adjacency predicate against
// BS_n both ways: a connecting b_{n-2} edge is constructed for every
// adjacent pair, and b_{n-2} steps are checked to always join prisms
// sharing one element (exhaustive for n == 5, `samples` seeded vertices
// above). Throws logic_error if either direction fails.
FactorGraph factor_graph(int n, std::uint64_t seed = 0, int samples = 2000);

// Hamiltonian cycle of the factor graph: every 2-subset once, consecutive
// subsets (cyclically) intersecting in one element, rotated so {n-1, n} is
// first. Deterministic revolving-door construction with a backtracking
// fallback; the result is validated before returning. Requires n >= 5.
std::vector<PrismId> factor_ham_cycle(int n);

// The lexicographically smallest vertex of prism qs that is one b_{n-2}
// step away from prism qnext and has parity opposite to entry_parity.
// With j the shared element, i = qs \ qnext, k = qnext \ qs, candidates
// look like [sigma, k, i, j]; the two lex-smallest prefixes differ by one
// transposition, so both parities occur. Throws if the prisms are not
// adjacent.
Permutation pick_exit(const PrismId& qs, const PrismId& qnext, int entry_parity);

// Route plan for the prism-by-prism Hamiltonian cycle: a cyclic prism
// order plus one entry and one exit vertex per prism. exit_s * b_{n-2} is
// entry_{s+1}; prism s is later filled by a Hamiltonian path from entry_s
// to exit_s. The walk starts (and ends) at exits[0].
struct LiftPlan {
  int n = 0;
  int connector = 0;  // n - 2
  std::vector<PrismId> prism_order;
  std::vector<Permutation> entries;
  std::vector<Permutation> exits;

  const Permutation& start() const { return exits[0]; }
};

// Builds and checks a LiftPlan: entries/exits inside their prisms, parity
// opposite within each prism, connector chaining, one-element consecutive
// prism intersections. Throws logic_error naming the prism index on any
// breach. Requires 5 <= n <= kMaxN.
LiftPlan make_lift_plan(int n);

enum class BaseMode { sjt, recursive };

// Hamiltonian cycle of BS_n as a closed Form of length n!, built by lifting
// a factor-graph Hamiltonian cycle: prisms are traversed in plan order,
// joined by b_{n-2} connectors, each filled by ham_path_in_prism. The prism
// interiors follow sjt_cycle(n-2), or in recursive mode this construction
// again while n-2 >= 5. The result is certified by validate_gray_code
// before returning (logic_error otherwise). Requires 5 <= n <= kMaxN.
Form build_hamiltonian_cycle(int n, BaseMode mode = BaseMode::sjt);

// The cycle as an explicit vertex listing: n! permutations starting at the
// plan's start vertex, consecutive entries (cyclically) one generator
// apart.
std::vector<Permutation> hamiltonian_vertices(int n, BaseMode mode = BaseMode::sjt);

// Side-by-side check of the prism-lift cycle against sjt_cycle(n): both
// validated, compared as cyclic index sequences up to rotation and
// reflection, with per-generator usage counts.
struct SjtComparison {
  int n = 0;
  bool built_valid = false;
  bool sjt_valid = false;
  bool distinct = false;
  std::map<int, std::uint64_t> built_histogram;
  std::map<int, std::uint64_t> sjt_histogram;
};
SjtComparison compare_sjt(int n);

}  // namespace bsg
