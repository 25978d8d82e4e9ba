// bsgray: census, certification, Hamiltonian construction and exports for
// the bubble-sort graph BS_n. Exit codes: 0 ok, 1 usage, 2 verification
// failure, 3 internal invariant breach.

#include "bsg/ham_builder.hpp"
#include "bsg/small_cycles.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace {

using bsg::Form;
using bsg::Permutation;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitInternal = 3;

json big_to_json(const bsg::BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(v);
  return v.str();
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_census(int n, bool certify, const std::string& scope, unsigned seed, int workers,
               const std::string& format) {
  const bsg::CycleCensus c = bsg::census(n);
  json j;
  j["schema"] = "bsgray.census/1";
  j["n"] = n;
  json pv;
  for (const auto& [fam, cnt] : c.per_vertex) pv[bsg::to_string(fam)] = cnt;
  j["per_vertex"] = pv;
  j["per_vertex_total"] = {{"c4", c.per_vertex_total_c4}, {"c6", c.per_vertex_total_c6}};
  j["totals"] = {{"c4", big_to_json(c.total_c4)}, {"c6", big_to_json(c.total_c6)}};

  bool ok = true;
  if (certify) {
    const bsg::CertifyReport r = bsg::certify(n, scope, seed, workers);
    ok = r.all_equal();
    json cj;
    cj["scope"] = r.scope;
    cj["seed"] = r.seed;
    cj["workers"] = workers;
    cj["vertices_checked"] = r.vertices_checked;
    cj["mismatching_vertices"] = r.mismatching_vertices;
    cj["mismatch_ranks"] = r.mismatch_ranks;
    cj["counts_uniform"] = r.counts_uniform;
    cj["census_match"] = r.census_match;
    if (r.distinct_c4) cj["distinct_c4"] = *r.distinct_c4;
    if (r.distinct_c6) cj["distinct_c6"] = *r.distinct_c6;
    cj["all_equal"] = ok;
    j["certify"] = cj;
  }

  if (format == "json") {
    print_json(j);
  } else {
    std::cout << "census n=" << n << "\n";
    for (const auto& [fam, cnt] : c.per_vertex)
      std::cout << "  per-vertex " << bsg::to_string(fam) << ": " << cnt << "\n";
    std::cout << "  per-vertex c4=" << c.per_vertex_total_c4
              << " c6=" << c.per_vertex_total_c6 << "\n";
    std::cout << "  totals c4=" << c.total_c4.str() << " c6=" << c.total_c6.str() << "\n";
    if (certify)
      std::cout << "  certify " << scope << " seed=" << seed << ": "
                << (ok ? "all-equal" : "MISMATCH") << "\n";
  }
  return ok ? kExitOk : kExitVerify;
}

json plan_to_json(const bsg::LiftPlan& plan) {
  json j;
  j["schema"] = "bsgray.plan/1";
  j["n"] = plan.n;
  j["connector"] = plan.connector;
  j["start"] = plan.start().to_string();
  json prisms = json::array(), entries = json::array(), exits = json::array();
  for (const auto& q : plan.prism_order) prisms.push_back({q.pair[0], q.pair[1]});
  for (const auto& p : plan.entries) entries.push_back(p.to_string());
  for (const auto& p : plan.exits) exits.push_back(p.to_string());
  j["prisms"] = prisms;
  j["entries"] = entries;
  j["exits"] = exits;
  return j;
}

int run_ham_build(int n, const std::string& base, const std::string& emit) {
  const bsg::BaseMode mode =
      base == "recursive" ? bsg::BaseMode::recursive : bsg::BaseMode::sjt;
  if (emit == "plan") {
    print_json(plan_to_json(bsg::make_lift_plan(n)));
    return kExitOk;
  }
  if (emit == "perms") {
    for (const auto& p : bsg::hamiltonian_vertices(n, mode)) std::cout << p.to_string() << "\n";
    return kExitOk;
  }
  for (int g : bsg::build_hamiltonian_cycle(n, mode)) std::cout << g << "\n";
  return kExitOk;
}

int run_ham_verify(int n, const std::string& file, bool open) {
  Form f;
  std::istream* in = &std::cin;
  std::ifstream fin;
  if (file != "-") {
    fin.open(file);
    if (!fin) throw std::invalid_argument("ham verify: cannot open " + file);
    in = &fin;
  }
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(*in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(line, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("ham verify: bad index at line " + std::to_string(lineno));
    }
    if (pos != line.size() || v < 1 || v > n - 1)
      throw std::invalid_argument("ham verify: bad index at line " + std::to_string(lineno));
    f.push_back(v);
  }
  const bsg::WalkReport r = bsg::validate_gray_code(n, f, !open);
  json j;
  j["schema"] = "bsgray.walk/1";
  j["n"] = n;
  j["length"] = f.size();
  j["closed"] = !open;
  j["ok"] = r.ok;
  if (r.first_violation)
    j["first_violation"] = {{"step", r.first_violation->first},
                            {"why", bsg::to_string(r.first_violation->second)}};
  else
    j["first_violation"] = nullptr;
  print_json(j);
  return r.ok ? kExitOk : kExitVerify;
}

int run_table1(int i, int k, bool as_json) {
  const bsg::Table1Report r = bsg::validate_table1(i, k);
  if (as_json) {
    json j;
    j["schema"] = "bsgray.table1/1";
    j["i"] = r.i;
    j["k"] = r.k;
    j["n"] = r.n;
    j["total"] = r.total;
    j["passed"] = r.passed;
    json entries = json::array();
    for (const auto& [target, ok] : r.entries)
      entries.push_back({{"target", target}, {"ok", ok}});
    j["entries"] = entries;
    print_json(j);
  } else {
    for (const auto& [target, ok] : r.entries)
      std::cout << "table1 target=" << target << " " << (ok ? "pass" : "FAIL") << "\n";
    std::cout << "table1 i=" << i << " k=" << k << ": " << r.passed << "/" << r.total
              << " pass\n";
  }
  return r.all_passed() ? kExitOk : kExitVerify;
}

int run_props(bool as_json) {
  bool all_ok = true;
  json prisms = json::array();
  std::ostringstream text;
  for (int m = 3; m <= 7; ++m) {
    const bool got = bsg::prism_hamilton_connected(m);
    const bool want = (m % 2 == 1);
    all_ok = all_ok && got == want;
    prisms.push_back({{"m", m}, {"hamilton_connected", got}, {"expected", want}});
    text << "prism m=" << m << " hamilton-connected=" << (got ? "true" : "false")
         << " expected=" << (want ? "true" : "false") << (got == want ? " ok" : " FAIL")
         << "\n";
  }
  json returns = json::array();
  for (int n = 3; n <= 6; ++n)
    for (int d = 1; d <= std::min(4, n - 2); ++d)
      for (int j = 1; j <= n - d; ++j) {
        const bool got = bsg::unique_return_path_check(n, j, d);
        all_ok = all_ok && got;
        returns.push_back({{"n", n}, {"j", j}, {"d", d}, {"holds", got}});
        text << "unique-return n=" << n << " j=" << j << " d=" << d
             << (got ? " ok" : " FAIL") << "\n";
      }
  if (as_json) {
    json j;
    j["schema"] = "bsgray.props/1";
    j["prism_hamilton_connectivity"] = prisms;
    j["unique_return_paths"] = returns;
    j["all_ok"] = all_ok;
    print_json(j);
  } else {
    std::cout << text.str() << "props: " << (all_ok ? "PASS" : "FAIL") << "\n";
  }
  return all_ok ? kExitOk : kExitVerify;
}

std::string export_dot_factor(int n) {
  const auto verts = bsg::cover(n);
  std::string out = "graph factor" + std::to_string(n) + " {\n";
  const auto name = [](const bsg::PrismId& q) {
    return std::to_string(q.pair[0]) + "_" + std::to_string(q.pair[1]);
  };
  for (const auto& q : verts)
    out += "  \"" + name(q) + "\" [label=\"{" + std::to_string(q.pair[0]) + "," +
           std::to_string(q.pair[1]) + "}\"];\n";
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (bsg::FactorGraph::adjacent(verts[a], verts[b]))
        out += "  \"" + name(verts[a]) + "\" -- \"" + name(verts[b]) + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bubble-sort graph toolkit: small-cycle census and certification, "
               "prism-lifted Hamiltonian cycles, validators and exports"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --cap appear after the subcommand too
  int cap = bsg::kDefaultCap;
  app.add_option("--cap", cap, "working size cap for n")
      ->check(CLI::Range(3, bsg::kMaxN))
      ->capture_default_str();

  // cycles census
  auto* cycles = app.add_subcommand("cycles", "small-cycle structure");
  cycles->require_subcommand(1);
  auto* census_cmd = cycles->add_subcommand("census", "4-/6-cycle counts per vertex and total");
  int census_n = 5;
  bool census_certify = false;
  std::string census_scope = "full";
  unsigned census_seed = 0;
  int census_workers = 1;
  std::string census_format = "json";
  census_cmd->add_option("--n", census_n, "graph size")->check(CLI::Range(2, bsg::kMaxN));
  census_cmd->add_flag("--certify", census_certify,
                       "check family counts against the brute-force oracle");
  census_cmd->add_option("--scope", census_scope, "certification scope: full or sample:<count>");
  census_cmd->add_option("--seed", census_seed, "sampling seed")->capture_default_str();
  census_cmd->add_option("--workers", census_workers, "certification worker threads")
      ->check(CLI::Range(1, 64));
  census_cmd->add_option("--format", census_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  // ham build / sjt / verify
  auto* ham = app.add_subcommand("ham", "Hamiltonian cycles and validation");
  ham->require_subcommand(1);
  auto* build_cmd = ham->add_subcommand("build", "prism-lifted Hamiltonian cycle");
  int build_n = 5;
  std::string build_base = "sjt";
  std::string build_emit = "indices";
  build_cmd->add_option("--n", build_n, "graph size (>= 5)");
  build_cmd->add_option("--base", build_base, "prism interior cycle")
      ->check(CLI::IsMember({"sjt", "recursive"}));
  build_cmd->add_option("--emit", build_emit, "output form")
      ->check(CLI::IsMember({"indices", "perms", "plan"}));

  auto* sjt_cmd = ham->add_subcommand("sjt", "adjacent-transposition cycle by plain SJT");
  int sjt_n = 5;
  sjt_cmd->add_option("--n", sjt_n, "graph size (>= 2)");

  auto* verify_cmd = ham->add_subcommand("verify", "validate an index file as a Gray code");
  int verify_n = 5;
  std::string verify_file;
  bool verify_open = false;
  verify_cmd->add_option("--n", verify_n, "graph size")->required();
  verify_cmd->add_option("--file", verify_file, "index file, one integer per line, - for stdin")
      ->required();
  verify_cmd->add_flag("--open", verify_open, "expect an open path, not a closed cycle");

  // fixtures table1
  auto* fixtures = app.add_subcommand("fixtures", "built-in path tables");
  fixtures->require_subcommand(1);
  auto* table1_cmd = fixtures->add_subcommand("table1", "validate the 38 6-prism paths");
  int t1_i = 4, t1_k = 2;
  bool t1_json = false;
  table1_cmd->add_option("--i", t1_i, "independent generator index");
  table1_cmd->add_option("--k", t1_k, "upper prism generator index");
  table1_cmd->add_flag("--json", t1_json, "JSON output");

  // props check
  auto* props = app.add_subcommand("props", "structural propositions");
  props->require_subcommand(1);
  auto* check_cmd = props->add_subcommand(
      "check", "prism Hamilton-connectivity pattern and unique-return-path checks");
  bool props_json = false;
  check_cmd->add_flag("--json", props_json, "JSON output");

  // export dot
  auto* export_cmd = app.add_subcommand("export", "graph exports");
  export_cmd->require_subcommand(1);
  auto* dot_cmd = export_cmd->add_subcommand("dot", "DOT rendering");
  std::string dot_what = "bs";
  int dot_n = 3;
  dot_cmd->add_option("--what", dot_what, "bs (n <= 4) or factor (n <= 9)")
      ->check(CLI::IsMember({"bs", "factor"}));
  dot_cmd->add_option("--n", dot_n, "graph size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*census_cmd) {
      if (census_n > cap)
        throw std::invalid_argument("cycles census: --n exceeds --cap " + std::to_string(cap));
      return run_census(census_n, census_certify, census_scope, census_seed, census_workers,
                        census_format);
    }
    if (*build_cmd) {
      if (build_n < 5)
        throw std::invalid_argument(
            "ham build: the prism construction needs --n >= 5; for smaller sizes use `ham sjt "
            "--n " +
            std::to_string(build_n) + "`");
      if (build_n > cap)
        throw std::invalid_argument("ham build: --n exceeds --cap " + std::to_string(cap));
      return run_ham_build(build_n, build_base, build_emit);
    }
    if (*sjt_cmd) {
      if (sjt_n < 2 || sjt_n > cap)
        throw std::invalid_argument("ham sjt: --n must be in [2, cap]");
      for (int g : bsg::sjt_cycle(sjt_n)) std::cout << g << "\n";
      return kExitOk;
    }
    if (*verify_cmd) {
      if (verify_n < 2 || verify_n > bsg::kMaxN)
        throw std::invalid_argument("ham verify: --n must be in [2, 12]");
      return run_ham_verify(verify_n, verify_file, verify_open);
    }
    if (*table1_cmd) return run_table1(t1_i, t1_k, t1_json);
    if (*check_cmd) return run_props(props_json);
    if (*dot_cmd) {
      if (dot_what == "bs") {
        if (dot_n < 2 || dot_n > 4)
          throw std::invalid_argument("export dot: bs rendering needs 2 <= n <= 4");
        std::cout << bsg::export_dot_bs(dot_n);
      } else {
        if (dot_n < 5 || dot_n > 9)
          throw std::invalid_argument("export dot: factor rendering needs 5 <= n <= 9");
        std::cout << export_dot_factor(dot_n);
      }
      return kExitOk;
    }
    throw std::invalid_argument("no command selected");
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
