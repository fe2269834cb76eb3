// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tricover/census.hpp"
#include "tricover/cycles.hpp"
#include "tricover/generators.hpp"
#include "tricover/hypertree.hpp"
#include "tricover/random.hpp"
#include "tricover/solver.hpp"
#include "tricover/verify.hpp"

using namespace tricover;

namespace {

constexpr std::uint64_t kSeed = 20240601;

class Gate {
 public:
  void report(int id, const std::string& name, bool ok, const std::string& detail, double seconds) {
    std::printf("[%s] %d. %-28s %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    all_ok_ = all_ok_ && ok;
  }
  bool ok() const { return all_ok_; }

 private:
  bool all_ok_ = true;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string counts(std::size_t checked, std::size_t bad, const char* what = "instances") {
  return std::to_string(checked) + " " + what + ", " + std::to_string(bad) + " violations";
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::vector<std::string> sorted_keys(std::size_t max_m) {
  std::vector<std::string> keys;
  for (const Hypergraph& h : enumerate_connected(max_m)) keys.push_back(canonical_key(h));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

int main() {
  Gate gate;
  SolverOptions solver;
  std::size_t constructive_calls = 0;
  std::size_t fallbacks = 0;
  std::size_t bound_violations = 0;

  const std::vector<Hypergraph> census = enumerate_connected(4);

  {
    Timer t;
    std::size_t bad = 0;
    for (const Hypergraph& h : census) {
      const Bound b = Bound::for_edges(h.num_edges());
      const SolveResult exact = exact_tau(h, solver);
      const SolveResult built = constructive_cover(h);
      ++constructive_calls;
      fallbacks += built.method == Method::fallback ? 1 : 0;
      const bool ok = exact.size <= b.floor() && is_cover(h, built.cover().vertices) && built.size <= b.floor();
      bad += ok ? 0 : 1;
    }
    bound_violations += bad;
    gate.report(1, "main bound (census m<=4)", bad == 0, counts(census.size(), bad), t.seconds());
  }

  {
    Timer t;
    std::size_t bad = 0;
    std::size_t extremal = 0;
    for (const Hypergraph& h : census) {
      const bool tight = 3 * exact_tau(h, solver).size == 2 * h.num_edges() + 1;
      const bool structural = check_hypertree(h) && has_perfect_matching(h);
      extremal += tight ? 1 : 0;
      bad += tight == structural ? 0 : 1;
    }
    gate.report(2, "equality characterization", bad == 0,
                counts(census.size(), bad) + ", " + std::to_string(extremal) + " extremal", t.seconds());
  }

  {
    Timer t;
    std::size_t bad = 0;
    std::size_t checked = 0;
    std::size_t cyclic = 0;
    const auto check = [&](const Hypergraph& h) {
      ++checked;
      const std::size_t n = h.num_vertices();
      const std::size_t m = h.num_edges();
      const bool acyclic = is_acyclic(h);
      cyclic += acyclic ? 0 : 1;
      const bool ok = is_connected(h) && n <= 2 * m + 1 && (n == 2 * m + 1) == acyclic && (acyclic || n <= 2 * m);
      bad += ok ? 0 : 1;
    };
    for (const Hypergraph& h : census) check(h);
    for (std::uint64_t i = 0; i < 10000; ++i) {
      const Hypergraph h = random_instance(kSeed, i, 10);
      check(h);
      const SolveResult built = constructive_cover(h);
      ++constructive_calls;
      fallbacks += built.method == Method::fallback ? 1 : 0;
      if (!is_cover(h, built.cover().vertices) || built.size > built.bound.floor()) ++bound_violations;
    }
    gate.report(3, "counting lemmas", bad == 0,
                counts(checked, bad) + ", " + std::to_string(cyclic) + " cyclic", t.seconds());
  }

  {
    Timer t;
    std::size_t bad = 0;
    std::size_t trees = 0;
    for (const Hypergraph& h : enumerate_connected(5)) {
      if (!is_acyclic(h)) continue;
      ++trees;
      const Cover c = hypertree_cover(h);
      const Matching mt = hypertree_matching(h);
      const bool ok = is_cover(h, c.vertices) && is_matching(h, mt.edges) && c.size() == mt.size() &&
                      c.size() == exact_tau(h, solver).size && mt.size() == exact_nu(h, solver).size;
      bad += ok ? 0 : 1;
    }
    gate.report(4, "Konig on hypertrees (m<=5)", bad == 0 && trees > 0, counts(trees, bad, "hypertrees"),
                t.seconds());
  }

  {
    Timer t;
    std::size_t bad = 0;
    const std::size_t total = 1000;
    for (std::uint64_t i = 0; i < total; ++i) {
      const CycleInstance inst = gen_non_minimal_cycle(derive_seed(kSeed, i));
      if (is_minimal_cycle(inst.cycle, inst.graph)) {
        ++bad;
        continue;
      }
      const auto [c1, c2] = split_cycle(inst.cycle, inst.graph);
      bad += split_contract_holds(inst.graph, inst.cycle, c1, c2) ? 0 : 1;
    }
    gate.report(5, "cycle-splitting contract", bad == 0, counts(total, bad, "non-minimal cycles"), t.seconds());
  }

  {
    Timer t;
    std::size_t bad = 0;
    const std::size_t total = 1000;
    for (std::uint64_t i = 0; i < total; ++i) {
      const Hypergraph h = gen_intersecting_cycles(derive_seed(kSeed + 1, i));
      if (all_cycles_vertex_disjoint(h)) {
        ++bad;
        continue;
      }
      const auto cut = find_low_cut_vertex(h);
      if (!cut) {
        ++bad;
        continue;
      }
      const VertexId removed[] = {cut->vertex};
      const std::size_t recount = oracle::components(delete_vertices(h, removed));
      bad += recount + 2 <= 2 * h.degree(cut->vertex) ? 0 : 1;

      const SolveResult built = constructive_cover(h);
      ++constructive_calls;
      fallbacks += built.method == Method::fallback ? 1 : 0;
      if (!is_cover(h, built.cover().vertices) || built.size > built.bound.floor()) ++bound_violations;
    }
    gate.report(6, "low-cut lemma", bad == 0, counts(total, bad, "intersecting-cycle instances"), t.seconds());
  }

  {
    Timer t;
    std::size_t bad = 0;
    std::size_t brute = 0;
    for (const Hypergraph& h : census) {
      const std::size_t tau = exact_tau(h, solver).size;
      bad += exact_nu(h, solver).size <= tau ? 0 : 1;
      if (h.num_vertices() <= 9) {
        ++brute;
        bad += oracle::tau(h) == tau ? 0 : 1;
      }
    }
    gate.report(7, "oracle sanity", bad == 0,
                counts(census.size(), bad) + ", " + std::to_string(brute) + " brute-forced", t.seconds());
  }

  {
    Timer t;
    const std::size_t one = enumerate_connected(1).size();
    const std::size_t two = enumerate_connected(2).size();
    bool stable = true;
    for (std::size_t m : {1, 2}) {
      const auto golden = read_lines(std::string(TRICOVER_GOLDEN_DIR) + "/census_m" + std::to_string(m) + ".txt");
      stable = stable && sorted_keys(m) == golden && sorted_keys(m) == sorted_keys(m);
    }
    gate.report(8, "census determinism", one == 1 && two == 3 && stable,
                "m<=1: " + std::to_string(one) + ", m<=2: " + std::to_string(two) +
                    ", golden keys " + (stable ? "stable" : "CHANGED"),
                t.seconds());
  }

  {
    const double rate = constructive_calls == 0 ? 0.0 : static_cast<double>(fallbacks) / constructive_calls;
    char detail[160];
    std::snprintf(detail, sizeof detail, "fallback rate %.4f (%zu/%zu calls), %zu bound violations", rate,
                  fallbacks, constructive_calls, bound_violations);
    gate.report(9, "constructive health", bound_violations == 0, detail, 0.0);
  }

  std::printf("%s\n", gate.ok() ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
  return gate.ok() ? 0 : 1;
}
