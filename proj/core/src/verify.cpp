#include "tricover/verify.hpp"

#include <algorithm>

#include "tricover/census.hpp"
#include "tricover/errors.hpp"
#include "tricover/generators.hpp"
#include "tricover/hypertree.hpp"

namespace tricover {
namespace {

CheckStatus verdict(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

std::string raw_id(const Hypergraph& h) {
  std::string id = "raw:";
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    if (e > 0) id += ';';
    const Edge& edge = h.edge(static_cast<EdgeId>(e));
    id += h.label(edge[0]) + " " + h.label(edge[1]) + " " + h.label(edge[2]);
  }
  return id;
}

CheckStatus check_konig(const Hypergraph& h, const Report& r) {
  const Cover cover = hypertree_cover(h);
  const Matching matching = hypertree_matching(h);
  bool ok = is_cover(h, cover.vertices) && is_matching(h, matching.edges) && cover.size() == matching.size();
  if (r.tau) ok = ok && cover.size() == *r.tau;
  if (r.nu) ok = ok && matching.size() == *r.nu;
  return verdict(ok);
}

CheckStatus check_low_cut(const Hypergraph& h) {
  if (!find_intersecting_cycles(h)) return CheckStatus::skipped;
  const auto cut = find_low_cut_vertex(h);
  if (!cut) return CheckStatus::fail;
  const VertexId removed[] = {cut->vertex};
  const std::size_t recount = count_components(delete_vertices(h, removed));
  return verdict(recount == cut->components && recount + 2 <= 2 * h.degree(cut->vertex));
}

CheckStatus check_split(const Hypergraph& h) {
  std::vector<BergeCycle> candidates;
  if (auto c = find_cycle(h)) candidates.push_back(std::move(*c));
  if (auto pair = find_intersecting_cycles(h)) {
    candidates.push_back(std::move(pair->first));
    candidates.push_back(std::move(pair->second));
  }
  CheckStatus status = CheckStatus::skipped;
  for (const BergeCycle& c : candidates) {
    if (is_minimal_cycle(c, h)) continue;
    const auto [c1, c2] = split_cycle(c, h);
    if (!split_contract_holds(h, c, c1, c2)) return CheckStatus::fail;
    status = CheckStatus::pass;
  }
  return status;
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

bool Report::passed() const {
  return std::none_of(lemma_checks.begin(), lemma_checks.end(),
                      [](const auto& kv) { return kv.second == CheckStatus::fail; });
}

std::vector<std::string> Report::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& [name, status] : lemma_checks) {
    if (status == CheckStatus::fail) out.push_back(name);
  }
  return out;
}

bool split_contract_holds(const Hypergraph& h, const BergeCycle& c, const BergeCycle& c1,
                          const BergeCycle& c2) {
  return is_valid_cycle(h, c1) && is_valid_cycle(h, c2) && c1.length() < c.length() &&
         c2.length() < c.length() && c1.length() + c2.length() <= c.length() + 2 &&
         cycles_intersect(h, c1, c2);
}

Report verify_instance(const Hypergraph& h, const VerifyOptions& options) {
  if (!is_connected(h)) throw PreconditionError("verify_instance: hypergraph is not connected");
  Report r;
  r.n = h.num_vertices();
  r.m = h.num_edges();
  r.is_connected = true;
  try {
    r.instance_id = canonical_key(h, options.key_budget);
  } catch (const BudgetExceeded&) {
    r.instance_id = raw_id(h);
  }
  r.h3 = serialize_h3(h);
  const Bound bound = Bound::for_edges(r.m);
  r.bound_num = bound.num;
  r.bound_den = bound.den;

  const bool acyclic = is_acyclic(h);
  const bool within = r.m <= options.solver.budget;
  r.is_hypertree = check_hypertree(h);
  auto& checks = r.lemma_checks;
  checks["n_le_2m1"] = verdict(r.n <= 2 * r.m + 1);
  checks["tree_iff_n_eq"] =
      verdict(r.is_hypertree == acyclic && acyclic == (r.n == 2 * r.m + 1) && (acyclic || r.n <= 2 * r.m));

  if (within) {
    r.tau = exact_tau(h, options.solver).size;
    r.nu = exact_nu(h, options.solver).size;
  }
  if (acyclic || within) r.has_pm = has_perfect_matching(h);
  r.tight = r.tau && bound.attained_by(*r.tau);

  checks["konig_on_trees"] = acyclic ? check_konig(h, r) : CheckStatus::skipped;
  checks["low_cut_when_intersecting"] = check_low_cut(h);
  checks["split_contract"] = check_split(h);
  checks["nu_le_tau"] = r.tau && r.nu ? verdict(*r.nu <= *r.tau) : CheckStatus::skipped;
  checks["main_bound"] = r.tau ? verdict(*r.tau <= bound.floor()) : CheckStatus::skipped;
  try {
    const SolveResult built = constructive_cover(h);
    r.constructive_size = built.size;
    r.constructive_method = built.method;
    checks["constructive_bound"] = verdict(is_cover(h, built.cover().vertices) && built.size <= bound.floor());
  } catch (const std::exception&) {
    checks["constructive_bound"] = CheckStatus::fail;
  }
  checks["extremal_iff"] = r.tau ? verdict(r.tight == (r.is_hypertree && r.has_pm)) : CheckStatus::skipped;
  return r;
}

std::vector<Report> verify_components(const Hypergraph& h, const VerifyOptions& options) {
  std::vector<Report> out;
  for (const Hypergraph& piece : components(h).components) out.push_back(verify_instance(piece, options));
  return out;
}

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport out;
  out.config = config;
  const auto record = [&](Report r) {
    ++out.instances;
    ++out.constructive_calls;
    if (r.constructive_method == Method::fallback) ++out.fallbacks;
    if (r.passed()) ++out.passes;
    out.reports.push_back(std::move(r));
  };
  if (config.census_max_m > 0) {
    for (const Hypergraph& h : enumerate_connected(config.census_max_m)) record(verify_instance(h, config.verify));
  }
  for (std::size_t i = 0; i < config.random_count; ++i) {
    record(verify_instance(random_instance(config.seed, i, config.random_max_m), config.verify));
  }
  for (const Hypergraph& h : config.extra) {
    for (Report& r : verify_components(h, config.verify)) record(std::move(r));
  }

  std::stable_sort(out.reports.begin(), out.reports.end(),
                   [](const Report& a, const Report& b) { return a.instance_id < b.instance_id; });
  for (const Report& r : out.reports) {
    for (const std::string& check : r.failed_checks()) out.failure_list.push_back({r.instance_id, r.h3, check});
  }
  out.failures = out.instances - out.passes;
  return out;
}

}  // namespace tricover
