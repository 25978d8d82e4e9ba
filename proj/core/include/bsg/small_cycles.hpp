#pragma once

#include "bsg/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bsg {

using BigInt = boost::multiprecision::cpp_int;

enum class CycleFamily { C4, C6_1, C6_2, C6_3, C6_4, C6_5, C6_6 };

std::string to_string(CycleFamily f);
const std::vector<CycleFamily>& all_families();
const std::vector<CycleFamily>& six_cycle_families();

// A parameterised canonical form; params holds (i), (i,j) or (i,j,k),
// unused slots zero.
struct FormFamily {
  CycleFamily family{};
  int n = 0;
  std::array<int, 3> params{};
};

// The literal index sequence with params substituted. Throws when the
// family constraint is violated.
Form expand(const FormFamily& ff);

// All parameter tuples for the family at size n, in lexicographic order.
// Empty below the family's minimum size (not an error).
std::vector<FormFamily> enumerate_family_params(CycleFamily f, int n);

// Cycles through p instantiated from one family: every parameter tuple,
// every rotation, both directions, deduplicated by vertex set.
std::set<Cycle> instantiate_family(const Permutation& p, CycleFamily f);

// Union of instantiate_family over the families of the given length.
std::set<Cycle> cycles_through_vertex(const Permutation& p, int len);

// Distinct-cycle counts through p per family.
std::map<CycleFamily, std::size_t> per_vertex_family_counts(const Permutation& p);

struct CycleCensus {
  int n = 0;
  std::map<CycleFamily, std::size_t> per_vertex;
  std::size_t per_vertex_total_c4 = 0;
  std::size_t per_vertex_total_c6 = 0;
  BigInt total_c4;  // per_vertex_total_c4 * n! / 4
  BigInt total_c6;  // per_vertex_total_c6 * n! / 6
};

// Counts computed by instantiation + dedupe at one vertex (the graph is
// vertex-transitive) with exact big-integer totals; an l-cycle is counted
// at l vertices, hence the divisions.
CycleCensus census(int n);

struct CertifyReport {
  int n = 0;
  std::string scope;  // "full" or "sample:<count>"
  unsigned seed = 0;
  std::uint64_t vertices_checked = 0;
  std::uint64_t mismatching_vertices = 0;
  std::vector<std::uint64_t> mismatch_ranks;  // first few, sorted
  bool counts_uniform = true;
  bool census_match = true;
  // whole-graph distinct cycle counts by set union; full scope only
  std::optional<std::uint64_t> distinct_c4;
  std::optional<std::uint64_t> distinct_c6;

  bool all_equal() const {
    return mismatching_vertices == 0 && counts_uniform && census_match;
  }
};

// Set-equality of the family instantiation against the brute-force oracle,
// vertex by vertex. scope is "full" (n <= 6) or "sample:<count>" (n <= 7);
// sampling draws from a generator seeded with seed. workers > 1 splits the
// vertex list across threads.
CertifyReport certify(int n, const std::string& scope, unsigned seed = 0, int workers = 1);

}  // namespace bsg
