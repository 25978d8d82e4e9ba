#pragma once

#include "bsg/graph.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace bsg {

// One generalized prism of BS_n: all vertices whose last two positions hold
// {pair[0], pair[1]} in either order. Two copies of BS_{n-2} joined by
// b_{n-1} rungs.
struct PrismId {
  int n = 0;
  std::array<int, 2> pair{};  // ascending

  bool contains(const Permutation& p) const;

  friend bool operator==(const PrismId&, const PrismId&) = default;
  friend auto operator<=>(const PrismId&, const PrismId&) = default;
};

// {p_{n-1}, p_n}. Requires n >= 5.
PrismId prism_of(const Permutation& p);

// All C(n,2) prisms in lexicographic pair order; their vertex sets
// partition S_n, each of size 2 (n-2)!.
std::vector<PrismId> cover(int n);

// (b_k b_i b_{k-1} b_i)^3: the 12-step closed form tracing a C6 x K2
// subgraph from any start vertex. Requires 2 <= k <= n-1, 1 <= i <= n-1 and
// b_i independent of both b_k and b_{k-1} (at distance >= 2 from each).
Form p6_form(int i, int k, int n);

struct PrismPath {
  PrismId prism;
  std::vector<Permutation> vertices;  // 2 (n-2)! distinct vertices
};

// Hamiltonian path of the prism from pi to tau, which must lie in the prism
// and have opposite parities. base must be a Hamiltonian cycle form of
// BS_{n-2} (e.g. sjt_cycle(n-2)); its indices act on positions 1..n-2.
// Copy-1 is the copy containing pi; H1 walks it along base, H2 is its
// b_{n-1} mirror, and the path zigzags between the two copies. The result
// is checked with validate_prism_path before returning.
PrismPath ham_path_in_prism(const PrismId& id, const Permutation& pi,
                            const Permutation& tau, const Form& base);

// Checks vertex count 2 (n-2)!, distinctness, prism membership, step
// legality (generators b_1..b_{n-3} and the rung b_{n-1} only) and the
// declared endpoints. Violation mapping: wrong count -> wrong-length,
// revisit -> repeat-vertex, illegal step or vertex outside the prism ->
// bad-step, endpoint mismatch -> not-closed.
WalkReport validate_prism_path(const PrismPath& path, const Permutation& pi,
                               const Permutation& tau);

// One row entry of the built-in 6-prism path table: words over the symbols
// i, k, l, where l stands for the generator below k. target describes the
// end vertex as a word applied to the source, path is the 11-step walk.
struct Table1Entry {
  std::string target;
  std::string path;
};

// All 38 entries, grouped by target row.
const std::vector<Table1Entry>& table1_entries();

// Entries with symbols substituted for concrete i and k.
struct Table1Path {
  Form target;
  Form path;
};
std::vector<Table1Path> table1_paths(int i, int k);

// Validation sweep of the substituted table inside the 6-prism of
// BS_{max(i,k)+1} traced by p6_form(i, k, .) from the identity.
struct Table1Report {
  int i = 0;
  int k = 0;
  int n = 0;
  int total = 0;
  int passed = 0;
  // per entry: symbolic target word, pass flag
  std::vector<std::pair<std::string, bool>> entries;

  bool all_passed() const { return passed == total; }
};
Table1Report validate_table1(int i, int k);

// Brute-force Hamilton-connectivity of the m-prism C_m x K_2 (every ordered
// vertex pair joined by a Hamiltonian path). Requires 3 <= m <= 8.
bool prism_hamilton_connected(int m);

}  // namespace bsg
