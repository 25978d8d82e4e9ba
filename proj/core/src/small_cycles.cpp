#include "bsg/small_cycles.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <thread>

namespace bsg {

std::string to_string(CycleFamily f) {
  switch (f) {
    case CycleFamily::C4: return "C4";
    case CycleFamily::C6_1: return "C6_1";
    case CycleFamily::C6_2: return "C6_2";
    case CycleFamily::C6_3: return "C6_3";
    case CycleFamily::C6_4: return "C6_4";
    case CycleFamily::C6_5: return "C6_5";
    case CycleFamily::C6_6: return "C6_6";
  }
  return "unknown";
}

const std::vector<CycleFamily>& all_families() {
  static const std::vector<CycleFamily> v{
      CycleFamily::C4,   CycleFamily::C6_1, CycleFamily::C6_2, CycleFamily::C6_3,
      CycleFamily::C6_4, CycleFamily::C6_5, CycleFamily::C6_6};
  return v;
}

const std::vector<CycleFamily>& six_cycle_families() {
  static const std::vector<CycleFamily> v{
      CycleFamily::C6_1, CycleFamily::C6_2, CycleFamily::C6_3,
      CycleFamily::C6_4, CycleFamily::C6_5, CycleFamily::C6_6};
  return v;
}

namespace {

bool c4_ok(int i, int j, int n) { return 1 <= i && i < j - 1 && j - 1 <= n - 2; }
bool c6_triple_ok(int i, int j, int k, int n) {
  return 1 <= i && i < j - 1 && j - 1 < k - 2 && k - 2 <= n - 3;
}

}  // namespace

Form expand(const FormFamily& ff) {
  const int n = ff.n;
  const int i = ff.params[0], j = ff.params[1], k = ff.params[2];
  switch (ff.family) {
    case CycleFamily::C4:
      if (!c4_ok(i, j, n)) throw std::invalid_argument("expand: C4 constraint violated");
      return {j, i, j, i};
    case CycleFamily::C6_1:
      if (!(1 <= i && i <= n - 2)) throw std::invalid_argument("expand: C6_1 constraint violated");
      return {i, i + 1, i, i + 1, i, i + 1};
    case CycleFamily::C6_2:
      // b_j independent of both b_i and b_{i+1}
      if (!(1 <= i && i <= n - 2 && 1 <= j && j <= n - 1 && (j <= i - 2 || j >= i + 3)))
        throw std::invalid_argument("expand: C6_2 constraint violated");
      return {j, i + 1, i, j, i, i + 1};
    case CycleFamily::C6_3:
      if (!c6_triple_ok(i, j, k, n)) throw std::invalid_argument("expand: C6_3 constraint violated");
      return {k, j, i, k, j, i};
    case CycleFamily::C6_4:
      if (!c6_triple_ok(i, j, k, n)) throw std::invalid_argument("expand: C6_4 constraint violated");
      return {k, j, i, k, i, j};
    case CycleFamily::C6_5:
      if (!c6_triple_ok(i, j, k, n)) throw std::invalid_argument("expand: C6_5 constraint violated");
      return {k, j, k, i, j, i};
    case CycleFamily::C6_6:
      if (!c6_triple_ok(i, j, k, n)) throw std::invalid_argument("expand: C6_6 constraint violated");
      return {k, i, k, j, i, j};
  }
  throw std::invalid_argument("expand: unknown family");
}

std::vector<FormFamily> enumerate_family_params(CycleFamily f, int n) {
  std::vector<FormFamily> out;
  switch (f) {
    case CycleFamily::C4:
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
          if (c4_ok(i, j, n)) out.push_back({f, n, {i, j, 0}});
      break;
    case CycleFamily::C6_1:
      for (int i = 1; i <= n - 2; ++i) out.push_back({f, n, {i, 0, 0}});
      break;
    case CycleFamily::C6_2:
      for (int i = 1; i <= n - 2; ++i)
        for (int j = 1; j <= n - 1; ++j)
          if (j <= i - 2 || j >= i + 3) out.push_back({f, n, {i, j, 0}});
      break;
    default:
      for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
          for (int k = 1; k < n; ++k)
            if (c6_triple_ok(i, j, k, n)) out.push_back({f, n, {i, j, k}});
      break;
  }
  return out;
}

std::set<Cycle> instantiate_family(const Permutation& p, CycleFamily f) {
  const int n = p.size();
  std::set<Cycle> out;
  for (const FormFamily& ff : enumerate_family_params(f, n)) {
    const Form base = expand(ff);
    const int len = static_cast<int>(base.size());
    for (int rot = 0; rot < len; ++rot) {
      for (int dir = 0; dir < 2; ++dir) {
        Form g(static_cast<std::size_t>(len));
        for (int s = 0; s < len; ++s) g[static_cast<std::size_t>(s)] = base[(rot + s) % len];
        if (dir) std::reverse(g.begin(), g.end());
        std::vector<Permutation> walk{p};
        for (int s = 0; s + 1 < len; ++s) walk.push_back(apply_gen(walk.back(), g[static_cast<std::size_t>(s)]));
        out.insert(make_cycle(walk));
      }
    }
  }
  return out;
}

std::set<Cycle> cycles_through_vertex(const Permutation& p, int len) {
  if (len != 4 && len != 6)
    throw std::invalid_argument("cycles_through_vertex: length must be 4 or 6");
  std::set<Cycle> out;
  if (len == 4) return instantiate_family(p, CycleFamily::C4);
  for (CycleFamily f : six_cycle_families()) {
    auto s = instantiate_family(p, f);
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::map<CycleFamily, std::size_t> per_vertex_family_counts(const Permutation& p) {
  std::map<CycleFamily, std::size_t> out;
  for (CycleFamily f : all_families()) out[f] = instantiate_family(p, f).size();
  return out;
}

CycleCensus census(int n) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("census: n must be in [2, 12]");
  CycleCensus c;
  c.n = n;
  c.per_vertex = per_vertex_family_counts(Permutation::identity(n));
  for (const auto& [fam, cnt] : c.per_vertex) {
    if (fam == CycleFamily::C4)
      c.per_vertex_total_c4 += cnt;
    else
      c.per_vertex_total_c6 += cnt;
  }
  BigInt fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  c.total_c4 = BigInt(c.per_vertex_total_c4) * fact / 4;
  c.total_c6 = BigInt(c.per_vertex_total_c6) * fact / 6;
  return c;
}

CertifyReport certify(int n, const std::string& scope, unsigned seed, int workers) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("certify: n must be in [2, 12]");
  const bool full = (scope == "full");
  std::uint64_t sample_count = 0;
  if (!full) {
    if (scope.rfind("sample:", 0) != 0)
      throw std::invalid_argument("certify: scope must be \"full\" or \"sample:<count>\"");
    sample_count = std::stoull(scope.substr(7));
    if (sample_count < 1) throw std::invalid_argument("certify: sample count must be >= 1");
  }
  if (full && n > 6) throw std::invalid_argument("certify: full scope supported for n <= 6");
  if (!full && n > 7) throw std::invalid_argument("certify: sampled scope supported for n <= 7");

  const std::uint64_t total = factorial(n);
  std::vector<std::uint64_t> ranks;
  if (full) {
    ranks.resize(total);
    for (std::uint64_t r = 0; r < total; ++r) ranks[r] = r;
  } else {
    sample_count = std::min<std::uint64_t>(sample_count, total);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, total - 1);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < sample_count) chosen.insert(dist(rng));
    ranks.assign(chosen.begin(), chosen.end());
  }

  CertifyReport rep;
  rep.n = n;
  rep.scope = full ? "full" : ("sample:" + std::to_string(sample_count));
  rep.seed = seed;
  rep.vertices_checked = ranks.size();

  const auto ref4 = cycles_through_vertex(Permutation::identity(n), 4).size();
  const auto ref6 = cycles_through_vertex(Permutation::identity(n), 6).size();

  struct Partial {
    std::uint64_t mismatches = 0;
    std::vector<std::uint64_t> mismatch_ranks;
    bool uniform = true;
    std::set<Cycle> c4, c6;
  };
  workers = std::clamp(workers, 1, 64);
  const std::size_t chunk = (ranks.size() + static_cast<std::size_t>(workers) - 1) /
                            static_cast<std::size_t>(workers);
  std::vector<Partial> parts(static_cast<std::size_t>(workers));
  auto work = [&](std::size_t w) {
    Partial& part = parts[w];
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(ranks.size(), lo + chunk);
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const Permutation p = lex_unrank(n, ranks[idx]);
      const auto fam4 = cycles_through_vertex(p, 4);
      const auto orc4 = enumerate_cycles_through(p, 4);
      const auto fam6 = cycles_through_vertex(p, 6);
      const auto orc6 = enumerate_cycles_through(p, 6);
      if (fam4 != orc4 || fam6 != orc6) {
        ++part.mismatches;
        if (part.mismatch_ranks.size() < 8) part.mismatch_ranks.push_back(ranks[idx]);
      }
      if (orc4.size() != ref4 || orc6.size() != ref6) part.uniform = false;
      if (full) {
        part.c4.insert(orc4.begin(), orc4.end());
        part.c6.insert(orc6.begin(), orc6.end());
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, static_cast<std::size_t>(w));
    for (auto& t : threads) t.join();
  }

  std::set<Cycle> all4, all6;
  for (auto& part : parts) {
    rep.mismatching_vertices += part.mismatches;
    rep.counts_uniform = rep.counts_uniform && part.uniform;
    for (auto r : part.mismatch_ranks)
      if (rep.mismatch_ranks.size() < 8) rep.mismatch_ranks.push_back(r);
    if (full) {
      all4.merge(part.c4);
      all6.merge(part.c6);
    }
  }
  std::sort(rep.mismatch_ranks.begin(), rep.mismatch_ranks.end());
  if (full) {
    rep.distinct_c4 = all4.size();
    rep.distinct_c6 = all6.size();
    const CycleCensus cen = census(n);
    rep.census_match = BigInt(*rep.distinct_c4) == cen.total_c4 &&
                       BigInt(*rep.distinct_c6) == cen.total_c6;
  }
  return rep;
}

}  // namespace bsg
