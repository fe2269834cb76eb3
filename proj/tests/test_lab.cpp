#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tricover/census.hpp"
#include "tricover/cycles.hpp"
#include "tricover/errors.hpp"
#include "tricover/generators.hpp"
#include "tricover/hypertree.hpp"
#include "tricover/json.hpp"
#include "tricover/random.hpp"
#include "tricover/verify.hpp"

using namespace tricover;

namespace {

Hypergraph permuted(const Hypergraph& h, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<VertexId> perm(h.num_vertices());
  std::iota(perm.begin(), perm.end(), 0U);
  rng.shuffle(perm);
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) edges.push_back({perm[e[0]], perm[e[2]], perm[e[1]]});
  rng.shuffle(edges);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) labels.push_back("v" + std::to_string(v));
  return Hypergraph(labels, edges);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace

TEST(Generators, HypertreePm) {
  EXPECT_EQ(gen_hypertree_pm(1, 3).num_edges(), 1u);
  const auto four = gen_hypertree_pm(4, 1);
  EXPECT_EQ(canonical_key(four),
            canonical_key(Hypergraph::from_triples({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}})));
  EXPECT_TRUE(is_extremal(four).extremal);
  const auto seven = gen_hypertree_pm(7, 2);
  EXPECT_EQ(seven.num_vertices(), 15u);
  EXPECT_TRUE(is_extremal(seven).extremal);
  EXPECT_EQ(exact_tau(seven).size, 5u);
  EXPECT_THROW(gen_hypertree_pm(3, 1), PreconditionError);
  EXPECT_THROW(gen_hypertree_pm(0, 1), PreconditionError);
}

TEST(Generators, HypertreePmAlwaysExtremal) {
  for (std::size_t m : {1, 4, 7, 10, 13}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto h = gen_hypertree_pm(m, seed);
      ASSERT_EQ(h.num_edges(), m);
      EXPECT_TRUE(check_hypertree(h));
      EXPECT_TRUE(has_perfect_matching(h));
      const auto v = is_extremal(h);
      EXPECT_TRUE(v.extremal);
      EXPECT_TRUE(v.consistent());
    }
  }
}

TEST(Generators, RandomConnected) {
  EXPECT_EQ(canonical_key(gen_random_connected(3, 1, 99)), "n3:1,2,3");
  const auto a = gen_random_connected(7, 3, 1);
  EXPECT_TRUE(is_connected(a));
  EXPECT_EQ(a.num_vertices(), 7u);
  const auto b = gen_random_connected(9, 4, 2);
  EXPECT_TRUE(is_connected(b));
  EXPECT_TRUE(verify_instance(b).passed());
  EXPECT_THROW(gen_random_connected(8, 3, 1), PreconditionError);
  EXPECT_THROW(gen_random_connected(4, 5, 1), PreconditionError);
  EXPECT_EQ(gen_random_connected(4, 4, 1).num_edges(), 4u);
}

TEST(Generators, RandomConnectedHonoursParameters) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const std::size_t m = rng.between(1, 25);
    std::size_t lo = 3;
    while (lo * (lo - 1) * (lo - 2) / 6 < m) ++lo;
    const std::size_t n = rng.between(lo, 2 * m + 1);
    const auto h = gen_random_connected(n, m, seed);
    EXPECT_EQ(h.num_vertices(), n);
    EXPECT_EQ(h.num_edges(), m);
    EXPECT_TRUE(is_connected(h));
  }
}

TEST(Generators, Deterministic) {
  EXPECT_EQ(random_instance(5, 17, 10), random_instance(5, 17, 10));
  EXPECT_EQ(gen_hypertree_pm(10, 4), gen_hypertree_pm(10, 4));
  EXPECT_EQ(gen_intersecting_cycles(8), gen_intersecting_cycles(8));
}

TEST(Generators, Cycles) {
  const auto loose = gen_cycle(3, true);
  EXPECT_EQ(serialize_h3(loose), "1 2 3\n3 4 5\n5 6 1\n");
  const auto c = find_cycle(loose);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->length(), 3u);
  EXPECT_EQ(gen_cycle(2, false).num_vertices(), 4u);
  const auto wheel = gen_cycle(5, false);
  EXPECT_EQ(wheel.num_vertices(), 6u);
  EXPECT_FALSE(is_acyclic(wheel));
  EXPECT_THROW(gen_cycle(2, true), PreconditionError);
}

TEST(CanonicalKey, RelabelingInvariance) {
  EXPECT_EQ(canonical_key(Hypergraph::from_triples({{1, 2, 3}})),
            canonical_key(Hypergraph::from_triples({{7, 8, 9}})));
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto h = random_instance(seed, 20, 8);
    EXPECT_EQ(canonical_key(h), canonical_key(permuted(h, seed))) << serialize_h3(h);
  }
}

TEST(CanonicalKey, SeparatesNonIsomorphic) {
  EXPECT_NE(canonical_key(Hypergraph::from_triples({{1, 2, 3}, {3, 4, 5}})),
            canonical_key(Hypergraph::from_triples({{1, 2, 3}, {2, 3, 4}})));
}

TEST(CanonicalKey, AgreesWithBruteForceIsomorphism) {
  // Same key iff same brute-force key, on small random instances.
  std::vector<Hypergraph> pool;
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    auto h = random_instance(seed, 21, 4);
    if (h.num_vertices() <= 8) pool.push_back(std::move(h));
  }
  std::vector<std::string> fast;
  std::vector<std::string> slow;
  for (const auto& h : pool) {
    fast.push_back(canonical_key(h));
    slow.push_back(oracle::brute_key(h));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      EXPECT_EQ(fast[i] == fast[j], slow[i] == slow[j]) << serialize_h3(pool[i]) << "--\n" << serialize_h3(pool[j]);
    }
  }
}

TEST(CanonicalKey, FormIsIsomorphicCopy) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto h = random_instance(seed, 22, 7);
    const auto form = canonical_form(h);
    EXPECT_EQ(form.graph.num_vertices(), h.num_vertices());
    EXPECT_EQ(canonical_key(form.graph), form.key);
    if (h.num_vertices() <= 8) EXPECT_EQ(oracle::brute_key(form.graph), oracle::brute_key(h));
  }
}

TEST(CanonicalKey, BudgetExceeded) {
  const auto wheel = gen_cycle(8, false);  // all edges alike: 8! orderings
  EXPECT_THROW(canonical_key(wheel, 1000), BudgetExceeded);
  EXPECT_NO_THROW(canonical_key(wheel));
}

TEST(Census, SmallCounts) {
  EXPECT_EQ(enumerate_connected(1).size(), 1u);
  EXPECT_EQ(enumerate_connected(2).size(), 3u);
  EXPECT_THROW(enumerate_connected(6), BudgetExceeded);
}

TEST(Census, MatchesGenerateAllAndDedup) {
  std::vector<std::size_t> per_m(4, 0);
  for (const auto& h : enumerate_connected(3)) ++per_m[h.num_edges()];
  for (std::size_t m = 1; m <= 3; ++m) EXPECT_EQ(per_m[m], oracle::count_classes(m)) << "m=" << m;
}

TEST(Census, OrbitCountingMatchesLabeledCount) {
  // Each class on n vertices accounts for n!/|Aut| labeled instances.
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> from_classes;
  for (const auto& h : enumerate_connected(4)) {
    std::uint64_t factorial = 1;
    for (std::uint64_t k = 2; k <= h.num_vertices(); ++k) factorial *= k;
    from_classes[{h.num_vertices(), h.num_edges()}] += factorial / oracle::automorphisms(h);
  }
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 3; n <= 2 * m + 1; ++n) {
      EXPECT_EQ((from_classes[{n, m}]), oracle::labeled_count(n, m)) << "n=" << n << " m=" << m;
    }
  }
}

TEST(Census, HypertreeClassesMatchLabeledFormula) {
  // Labeled 3-uniform hypertrees with m edges on n = 2m + 1 vertices:
  // n^(m-1) (2m)! / (m! 2^m).
  std::map<std::size_t, std::uint64_t> from_classes;
  for (const auto& h : enumerate_connected(5)) {
    if (h.num_vertices() != 2 * h.num_edges() + 1) continue;
    std::uint64_t factorial = 1;
    for (std::uint64_t k = 2; k <= h.num_vertices(); ++k) factorial *= k;
    from_classes[h.num_edges()] += factorial / oracle::automorphisms(h);
  }
  for (std::uint64_t m = 1; m <= 5; ++m) {
    const std::uint64_t n = 2 * m + 1;
    std::uint64_t expected = 1;
    for (std::uint64_t i = 1; i < m; ++i) expected *= n;
    for (std::uint64_t k = m + 1; k <= 2 * m; ++k) expected *= k;
    expected >>= m;
    EXPECT_EQ(from_classes[m], expected) << "m=" << m;
  }
}

TEST(Census, InstancesAreConnectedDistinctAndCanonical) {
  std::set<std::string> keys;
  std::size_t last_m = 0;
  for (const auto& h : enumerate_connected(4)) {
    EXPECT_TRUE(is_connected(h));
    EXPECT_GE(h.num_edges(), last_m);
    last_m = h.num_edges();
    for (std::size_t v = 0; v < h.num_vertices(); ++v) EXPECT_EQ(h.label(static_cast<VertexId>(v)), std::to_string(v + 1));
    EXPECT_TRUE(keys.insert(canonical_key(h)).second);
  }
}

TEST(Census, GoldenKeys) {
  for (std::size_t m : {1, 2, 3}) {
    const auto golden = read_lines(std::string(TRICOVER_GOLDEN_DIR) + "/census_m" + std::to_string(m) + ".txt");
    std::vector<std::string> keys;
    for (const auto& h : enumerate_connected(m)) keys.push_back(canonical_key(h));
    std::vector<std::string> sorted_keys = keys;
    std::sort(sorted_keys.begin(), sorted_keys.end());
    EXPECT_EQ(sorted_keys, golden) << "m=" << m;
  }
}

TEST(Verify, SingleEdge) {
  const auto r = verify_instance(Hypergraph::from_triples({{1, 2, 3}}));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.tight);
  EXPECT_EQ(r.tau, 1u);
}

TEST(Verify, TwoCycle) {
  const auto r = verify_instance(Hypergraph::from_triples({{1, 2, 3}, {2, 3, 4}}));
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.tight);
  EXPECT_EQ(r.n, 4u);
  EXPECT_LE(r.n, 2 * r.m);
  EXPECT_EQ(r.tau, 1u);
  EXPECT_EQ(r.nu, 1u);
  EXPECT_EQ(r.lemma_checks.at("konig_on_trees"), CheckStatus::skipped);
}

TEST(Verify, ExtremalInstance) {
  const auto r = verify_instance(Hypergraph::from_triples({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}}));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.tight);
  EXPECT_TRUE(r.is_hypertree);
  EXPECT_TRUE(r.has_pm);
  EXPECT_EQ(r.lemma_checks.at("konig_on_trees"), CheckStatus::pass);
}

TEST(Verify, IntersectingCyclesExerciseStructuralChecks) {
  const auto r = verify_instance(Hypergraph::from_triples({{1, 2, 9}, {2, 3, 7}, {3, 4, 9}, {4, 1, 8}}));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.lemma_checks.at("low_cut_when_intersecting"), CheckStatus::pass);
  EXPECT_EQ(r.lemma_checks.at("split_contract"), CheckStatus::pass);
}

TEST(Verify, BudgetLeavesTauAbsent) {
  VerifyOptions options;
  options.solver.budget = 2;
  const auto r = verify_instance(gen_hypertree_pm(4, 0), options);
  EXPECT_FALSE(r.tau.has_value());
  EXPECT_EQ(r.lemma_checks.at("main_bound"), CheckStatus::skipped);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(report_json(r).contains("tau"));
}

TEST(Verify, DisconnectedIsPerComponent) {
  const auto h = Hypergraph::from_triples({{1, 2, 3}, {4, 5, 6}, {6, 7, 8}});
  EXPECT_THROW(verify_instance(h), PreconditionError);
  const auto reports = verify_components(h);
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].m, 1u);
  EXPECT_EQ(reports[1].m, 2u);
}

TEST(Suite, SmallCensusPlusRandom) {
  SuiteConfig config;
  config.census_max_m = 3;
  config.random_count = 100;
  config.seed = 7;
  const auto s = run_suite(config);
  EXPECT_EQ(s.failures, 0u);
  EXPECT_EQ(s.instances, enumerate_connected(3).size() + 100);
  EXPECT_EQ(s.constructive_calls, s.instances);
  EXPECT_TRUE(std::is_sorted(s.reports.begin(), s.reports.end(),
                             [](const Report& a, const Report& b) { return a.instance_id < b.instance_id; }));
}

TEST(Suite, Deterministic) {
  SuiteConfig config;
  config.census_max_m = 2;
  config.random_count = 40;
  config.seed = 11;
  EXPECT_EQ(suite_json(run_suite(config)).dump(), suite_json(run_suite(config)).dump());
}

TEST(Json, Schemas) {
  const auto h = Hypergraph::from_triples({{1, 2, 3}, {2, 3, 4}});
  const auto c = find_cycle(h);
  ASSERT_TRUE(c.has_value());
  const auto cj = cycle_json(h, *c);
  EXPECT_TRUE(cj.contains("joins"));
  EXPECT_TRUE(cj.contains("edges"));
  EXPECT_EQ(cj["minimal"], true);

  const auto sj = solve_json(h, exact_tau(h));
  for (const char* key : {"size", "certificate", "method", "bound_num", "bound_den", "tight"}) {
    EXPECT_TRUE(sj.contains(key)) << key;
  }
  EXPECT_EQ(sj["bound_num"], 5);
  EXPECT_EQ(sj["method"], "exact");

  SuiteConfig config;
  config.census_max_m = 1;
  const auto suite = suite_json(run_suite(config));
  EXPECT_EQ(suite["counts"]["instances"], 1);
  EXPECT_TRUE(suite["failures"].is_array());
  EXPECT_TRUE(suite.contains("config"));
}
