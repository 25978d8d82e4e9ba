#include "bsg/graph.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace bsg;

namespace {

std::vector<Permutation> walk_from(const Permutation& start, const Form& f) {
  std::vector<Permutation> out{start};
  for (std::size_t s = 0; s + 1 < f.size(); ++s) out.push_back(apply_gen(out.back(), f[s]));
  return out;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("neighbors come in generator order") {
  const auto nb = neighbors(Permutation::identity(4));
  REQUIRE(nb.size() == 3);
  CHECK(nb[0].to_string() == "2134");
  CHECK(nb[1].to_string() == "1324");
  CHECK(nb[2].to_string() == "1243");
}

TEST_CASE("distance basics") {
  const Permutation id5 = Permutation::identity(5);
  CHECK(distance(id5, id5) == 0);
  CHECK(distance(id5, apply_gen(id5, 2)) == 1);
  // reversal is the unique farthest vertex: C(n,2)
  CHECK(distance(id5, Permutation::from_image({5, 4, 3, 2, 1})) == 10);
  const Permutation p = Permutation::from_image({3, 1, 4, 2, 5});
  const Permutation q = Permutation::from_image({2, 5, 1, 4, 3});
  CHECK(distance(p, q) == distance(q, p));
}

TEST_CASE("distance equals BFS distance, exhaustive n = 4") {
  for (std::uint64_t a = 0; a < 24; ++a)
    for (std::uint64_t b = 0; b < 24; ++b) {
      const Permutation p = lex_unrank(4, a), q = lex_unrank(4, b);
      CHECK(distance(p, q) == bfs_distance(p, q));
    }
}

TEST_CASE("distance equals BFS distance, exhaustive n = 5") {
  for (std::uint64_t a = 0; a < 120; ++a) {
    const Permutation p = lex_unrank(5, a);
    const auto d = bfs_distances_from(p);
    for (std::uint64_t b = 0; b < 120; ++b)
      CHECK(distance(p, lex_unrank(5, b)) == d[b]);
  }
}

TEST_CASE("distance equals BFS distance, sampled n = 6 and 7") {
  std::mt19937_64 rng(20260816);
  for (int n : {6, 7}) {
    const std::uint64_t total = factorial(n);
    std::uniform_int_distribution<std::uint64_t> dist(0, total - 1);
    for (int src = 0; src < 20; ++src) {
      const Permutation p = lex_unrank(n, dist(rng));
      const auto d = bfs_distances_from(p);
      for (int tgt = 0; tgt < 50; ++tgt) {
        const std::uint64_t b = dist(rng);
        CHECK(distance(p, lex_unrank(n, b)) == d[b]);
      }
    }
  }
}

TEST_CASE("graph is bipartite by parity") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(0, factorial(5) - 1);
  for (int t = 0; t < 200; ++t) {
    const Permutation p = lex_unrank(5, dist(rng)), q = lex_unrank(5, dist(rng));
    CHECK(distance(p, q) % 2 == (parity(p) != parity(q) ? 1 : 0));
  }
}

TEST_CASE("generator_between") {
  const Permutation id5 = Permutation::identity(5);
  for (int i = 1; i <= 4; ++i) CHECK(generator_between(id5, apply_gen(id5, i)) == i);
  CHECK(generator_between(id5, id5) == 0);
  CHECK(generator_between(id5, apply_form(id5, {1, 3})) == 0);
}

TEST_CASE("cycle oracle counts on tiny graphs") {
  CHECK(enumerate_cycles_through(Permutation::identity(3), 4).size() == 0);
  CHECK(enumerate_cycles_through(Permutation::identity(3), 6).size() == 1);
  CHECK(enumerate_cycles_through(Permutation::identity(4), 4).size() == 1);
  CHECK(enumerate_cycles_through(Permutation::identity(4), 6).size() == 2);
  CHECK(enumerate_cycles_through(Permutation::identity(5), 4).size() == 3);
  CHECK(enumerate_cycles_through(Permutation::identity(5), 6).size() == 9);
  CHECK_THROWS_AS(enumerate_cycles_through(Permutation::identity(4), 5),
                  std::invalid_argument);
}

TEST_CASE("oracle cycles pass through the probe vertex") {
  const Permutation p = Permutation::from_image({2, 4, 1, 3});
  for (const Cycle& c : enumerate_cycles_through(p, 6)) {
    CHECK(c.length() == 6);
    CHECK(std::count(c.vertices.begin(), c.vertices.end(), lex_rank(p)) == 1);
    CHECK(std::is_sorted(c.vertices.begin(), c.vertices.end()));
  }
}

TEST_CASE("make_cycle rejects duplicates and sorts") {
  const Permutation id4 = Permutation::identity(4);
  const auto verts = walk_from(id4, {3, 1, 3, 1});
  const Cycle c = make_cycle(verts);
  CHECK(c.length() == 4);
  CHECK(std::is_sorted(c.vertices.begin(), c.vertices.end()));
  CHECK_THROWS_AS(make_cycle({id4, apply_gen(id4, 1), id4, apply_gen(id4, 3)}),
                  std::invalid_argument);
}

TEST_CASE("canonical form is reading independent") {
  const Permutation id4 = Permutation::identity(4);
  const Cycle c4 = make_cycle(walk_from(id4, {3, 1, 3, 1}));
  CHECK(canonical_form(c4) == Form{3, 1, 3, 1});

  const Cycle c6 = make_cycle(walk_from(id4, {1, 2, 1, 2, 1, 2}));
  CHECK(canonical_form(c6) == Form{2, 1, 2, 1, 2, 1});

  // same cycle listed from another start vertex and direction
  const auto w = walk_from(apply_form(id4, {1, 2}), {1, 2, 1, 2, 1, 2});
  CHECK(make_cycle(w) == c6);
  CHECK(canonical_form(make_cycle(w)) == canonical_form(c6));
}

TEST_CASE("gray code validator accepts sjt and rejects mutations") {
  CHECK(validate_gray_code(4, sjt_cycle(4), true).ok);

  Form open = sjt_cycle(4);
  open.pop_back();
  CHECK(validate_gray_code(4, open, false).ok);

  SUBCASE("repeat vertex") {
    const WalkReport r = validate_gray_code(3, {2, 1, 2, 1, 1, 2}, true);
    REQUIRE(!r.ok);
    CHECK(r.first_violation->first == 4);
    CHECK(r.first_violation->second == WalkViolation::repeat_vertex);
    CHECK(to_string(WalkViolation::repeat_vertex) == "repeat-vertex");
  }
  SUBCASE("not closed") {
    const WalkReport r = validate_gray_code(3, {2, 1, 2, 1, 2, 2}, true);
    REQUIRE(!r.ok);
    CHECK(r.first_violation->first == 5);
    CHECK(r.first_violation->second == WalkViolation::not_closed);
  }
  SUBCASE("wrong length") {
    const WalkReport r = validate_gray_code(3, {2, 1, 2, 1}, true);
    REQUIRE(!r.ok);
    CHECK(r.first_violation->second == WalkViolation::wrong_length);
  }
  SUBCASE("bad step index") {
    const WalkReport r = validate_gray_code(3, {2, 1, 3, 1, 2, 1}, true);
    REQUIRE(!r.ok);
    CHECK(r.first_violation->first == 2);
    CHECK(r.first_violation->second == WalkViolation::bad_step);
  }
}

TEST_CASE("unique return path property on small sizes") {
  CHECK(unique_return_path_check(5, 1, 3));
  CHECK(unique_return_path_check(4, 2, 2));
  for (int n = 3; n <= 5; ++n)
    for (int d = 1; d <= std::min(4, n - 2); ++d)
      for (int j = 1; j <= n - d; ++j) CHECK(unique_return_path_check(n, j, d));
  CHECK_THROWS_AS(unique_return_path_check(5, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(unique_return_path_check(4, 1, 3), std::invalid_argument);
}

TEST_CASE("dot export of the small graph") {
  const std::string dot = export_dot_bs(3);
  CHECK(dot.find("graph bs3") != std::string::npos);
  CHECK(dot.find("\"123\"") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos;
       pos = dot.find(" -- ", pos + 1))
    ++edges;
  CHECK(edges == 6);
  CHECK_THROWS_AS(export_dot_bs(5), std::invalid_argument);
}

}  // TEST_SUITE
