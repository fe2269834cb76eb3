#include "tricover/json.hpp"

namespace tricover {

using nlohmann::json;

json cycle_json(const Hypergraph& h, const BergeCycle& c) {
  json joins = json::array();
  for (VertexId v : c.joins) joins.push_back(h.label(v));
  return {{"joins", joins}, {"edges", c.edges}, {"minimal", is_minimal_cycle(c, h)}};
}

json solve_json(const Hypergraph& h, const SolveResult& r) {
  json certificate;
  if (std::holds_alternative<Cover>(r.certificate)) {
    json labels = json::array();
    for (VertexId v : r.cover().vertices) labels.push_back(h.label(v));
    certificate["cover"] = labels;
  } else {
    certificate["matching"] = r.matching().edges;
  }
  return {{"size", r.size},
          {"certificate", certificate},
          {"method", to_string(r.method)},
          {"bound_num", r.bound.num},
          {"bound_den", r.bound.den},
          {"tight", r.tight}};
}

json report_json(const Report& r) {
  json checks = json::object();
  for (const auto& [name, status] : r.lemma_checks) checks[name] = to_string(status);
  json out = {{"instance_id", r.instance_id},
              {"n", r.n},
              {"m", r.m},
              {"is_connected", r.is_connected},
              {"is_hypertree", r.is_hypertree},
              {"has_pm", r.has_pm},
              {"bound_num", r.bound_num},
              {"bound_den", r.bound_den},
              {"tight", r.tight},
              {"lemma_checks", checks},
              {"h3", r.h3}};
  if (r.tau) out["tau"] = *r.tau;
  if (r.nu) out["nu"] = *r.nu;
  if (r.constructive_size) out["constructive_size"] = *r.constructive_size;
  if (r.constructive_method) out["constructive_method"] = to_string(*r.constructive_method);
  return out;
}

json suite_json(const SuiteReport& s) {
  json failures = json::array();
  for (const SuiteFailure& f : s.failure_list) failures.push_back({{"key", f.key}, {"h3", f.h3}, {"check", f.check}});
  const SuiteConfig& c = s.config;
  return {{"config",
           {{"census_max_m", c.census_max_m},
            {"random_count", c.random_count},
            {"seed", c.seed},
            {"random_max_m", c.random_max_m},
            {"budget", c.verify.solver.budget},
            {"extra_instances", c.extra.size()}}},
          {"counts",
           {{"instances", s.instances},
            {"passes", s.passes},
            {"failures", s.failures},
            {"fallbacks", s.fallbacks},
            {"constructive_calls", s.constructive_calls}}},
          {"fallback_rate", s.fallback_rate()},
          {"failures", failures}};
}

}  // namespace tricover
