#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

using json = nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
};

// Runs the tool through the shell, capturing stdout (stderr only where the
// command string redirects it).
RunResult run(const std::string& args) {
  const std::string cmd = std::string(BSGRAY_BIN) + " " + args;
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors and help") {
  CHECK(run("--help >/dev/null 2>&1").code == 0);
  CHECK(run("2>/dev/null").code == 1);
  CHECK(run("--no-such-flag 2>/dev/null").code == 1);
  CHECK(run("cycles census --n 99 2>/dev/null").code == 1);
}

TEST_CASE("census of the degenerate sizes") {
  const RunResult r3 = run("cycles census --n 3");
  REQUIRE(r3.code == 0);
  const json j3 = json::parse(r3.out);
  CHECK(j3["schema"] == "bsgray.census/1");
  CHECK(j3["totals"]["c4"] == 0);
  CHECK(j3["totals"]["c6"] == 1);

  const RunResult r2 = run("cycles census --n 2");
  REQUIRE(r2.code == 0);
  const json j2 = json::parse(r2.out);
  CHECK(j2["totals"]["c4"] == 0);
  CHECK(j2["totals"]["c6"] == 0);
}

TEST_CASE("census with certification") {
  const RunResult r = run("cycles census --n 5 --certify");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["per_vertex_total"]["c4"] == 3);
  CHECK(j["per_vertex_total"]["c6"] == 9);
  CHECK(j["totals"]["c4"] == 90);
  CHECK(j["totals"]["c6"] == 180);
  CHECK(j["certify"]["all_equal"] == true);
  CHECK(j["certify"]["distinct_c4"] == 90);
  CHECK(j["certify"]["distinct_c6"] == 180);
  CHECK(j["certify"]["scope"] == "full");
}

TEST_CASE("census text format and scope errors") {
  const RunResult t = run("cycles census --n 4 --format text");
  REQUIRE(t.code == 0);
  CHECK(t.out.find("census n=4") != std::string::npos);
  CHECK(t.out.find("totals c4=6 c6=8") != std::string::npos);
  CHECK(run("cycles census --n 5 --certify --scope banana 2>/dev/null").code == 1);
  CHECK(run("cycles census --n 7 --certify --scope full 2>/dev/null").code == 1);
}

TEST_CASE("determinism of seeded sampling") {
  const std::string cmd = "cycles census --n 6 --certify --scope sample:20 --seed 3";
  const RunResult a = run(cmd), b = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("ham build emits indices") {
  const RunResult r = run("ham build --n 5 --emit indices");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 120);
  for (const auto& l : lines) {
    const int v = std::stoi(l);
    CHECK(v >= 1);
    CHECK(v <= 4);
  }
}

TEST_CASE("ham build emits the vertex listing from the start vertex") {
  const RunResult r = run("ham build --n 5 --emit perms");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 120);
  CHECK(lines.front() == "12345");
  std::set<std::string> uniq(lines.begin(), lines.end());
  CHECK(uniq.size() == 120);
}

TEST_CASE("ham build emits the route plan") {
  const RunResult r = run("ham build --n 5 --emit plan");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == "bsgray.plan/1");
  CHECK(j["n"] == 5);
  CHECK(j["connector"] == 3);
  CHECK(j["start"] == "12345");
  CHECK(j["prisms"].size() == 10);
  CHECK(j["entries"].size() == 10);
  CHECK(j["exits"].size() == 10);
  CHECK(j["prisms"][0] == json::array({4, 5}));
}

TEST_CASE("ham build size guards") {
  const RunResult r = run("ham build --n 4 2>&1");
  CHECK(r.code == 1);
  CHECK(r.out.find("ham sjt") != std::string::npos);
  CHECK(run("ham build --n 6 --cap 5 2>/dev/null").code == 1);
}

TEST_CASE("the cap flag widens and narrows the size gate") {
  CHECK(run("cycles census --n 11 2>/dev/null").code == 1);
  CHECK(run("cycles census --n 11 --cap 11 >/dev/null").code == 0);
  CHECK(run("cycles census --cap 11 --n 11 >/dev/null").code == 0);
}

TEST_CASE("round trips through the independent verifier") {
  CHECK(run("ham build --n 6 --emit indices | " + std::string(BSGRAY_BIN) +
            " ham verify --n 6 --file - >/dev/null")
            .code == 0);
  CHECK(run("ham sjt --n 7 | " + std::string(BSGRAY_BIN) +
            " ham verify --n 7 --file - >/dev/null")
            .code == 0);
}

TEST_CASE("ham sjt output") {
  const RunResult r = run("ham sjt --n 4");
  REQUIRE(r.code == 0);
  CHECK(lines_of(r.out).size() == 24);
}

TEST_CASE("verifier rejects a mutated index file") {
  const RunResult built = run("ham sjt --n 5");
  REQUIRE(built.code == 0);
  auto lines = lines_of(built.out);
  REQUIRE(lines.size() == 120);
  lines[60] = (lines[60] == "1") ? "2" : "1";
  const std::string path = "/tmp/bsgray_mutated.txt";
  std::ofstream out(path);
  for (const auto& l : lines) out << l << "\n";
  out.close();
  const RunResult r = run("ham verify --n 5 --file " + path);
  CHECK(r.code == 2);
  const json j = json::parse(r.out);
  CHECK(j["ok"] == false);
  CHECK(j["first_violation"]["step"].is_number());
  std::remove(path.c_str());
}

TEST_CASE("verifier accepts open paths") {
  const RunResult built = run("ham sjt --n 4");
  auto lines = lines_of(built.out);
  lines.pop_back();
  const std::string path = "/tmp/bsgray_open.txt";
  std::ofstream out(path);
  for (const auto& l : lines) out << l << "\n";
  out.close();
  CHECK(run("ham verify --n 4 --open --file " + path + " >/dev/null").code == 0);
  CHECK(run("ham verify --n 4 --file " + path + " >/dev/null").code == 2);
  std::remove(path.c_str());
}

TEST_CASE("verifier parse errors are usage errors") {
  const std::string path = "/tmp/bsgray_garbage.txt";
  std::ofstream out(path);
  out << "1\nbanana\n2\n";
  out.close();
  CHECK(run("ham verify --n 5 --file " + path + " 2>/dev/null").code == 1);
  std::remove(path.c_str());
  CHECK(run("ham verify --n 5 --file /no/such/file 2>/dev/null").code == 1);
}

TEST_CASE("table fixtures pass") {
  const RunResult r = run("fixtures table1 --json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == "bsgray.table1/1");
  CHECK(j["i"] == 4);
  CHECK(j["k"] == 2);
  CHECK(j["total"] == 38);
  CHECK(j["passed"] == 38);
  CHECK(run("fixtures table1 --i 3 --k 2 2>/dev/null").code == 1);
  CHECK(run("fixtures table1 --i 1 --k 4 >/dev/null").code == 0);
}

TEST_CASE("structural proposition checks pass") {
  const RunResult r = run("props check --json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema"] == "bsgray.props/1");
  CHECK(j["all_ok"] == true);
  REQUIRE(j["prism_hamilton_connectivity"].size() == 5);
  CHECK(j["prism_hamilton_connectivity"][0]["hamilton_connected"] == true);
  CHECK(j["prism_hamilton_connectivity"][1]["hamilton_connected"] == false);

  const RunResult t = run("props check");
  CHECK(t.code == 0);
  CHECK(t.out.find("props: PASS") != std::string::npos);
}

TEST_CASE("dot exports") {
  const RunResult bs = run("export dot --what bs --n 3");
  REQUIRE(bs.code == 0);
  CHECK(bs.out.find("graph bs3") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = bs.out.find(" -- "); pos != std::string::npos;
       pos = bs.out.find(" -- ", pos + 1))
    ++edges;
  CHECK(edges == 6);

  const RunResult fac = run("export dot --what factor --n 5");
  REQUIRE(fac.code == 0);
  CHECK(fac.out.find("graph factor5") != std::string::npos);
  std::size_t fedges = 0;
  for (std::size_t pos = fac.out.find(" -- "); pos != std::string::npos;
       pos = fac.out.find(" -- ", pos + 1))
    ++fedges;
  CHECK(fedges == 30);

  CHECK(run("export dot --what bs --n 6 2>/dev/null").code == 1);
  CHECK(run("export dot --what factor --n 10 2>/dev/null").code == 1);
}

}  // TEST_SUITE
