#pragma once

#include <nlohmann/json.hpp>

#include "tricover/cycles.hpp"
#include "tricover/hypergraph.hpp"
#include "tricover/solver.hpp"
#include "tricover/verify.hpp"

namespace tricover {

// Vertices are written by label, edges by input index.

/// {"joins": [...], "edges": [...], "minimal": bool}
nlohmann::json cycle_json(const Hypergraph& h, const BergeCycle& c);

/// {"size", "certificate": {"cover": [...]} | {"matching": [...]}, "method",
///  "bound_num", "bound_den", "tight"}
nlohmann::json solve_json(const Hypergraph& h, const SolveResult& r);

nlohmann::json report_json(const Report& r);

/// {"config", "counts": {"instances", "passes", "failures", "fallbacks",
///  "constructive_calls"}, "fallback_rate", "failures": [{"key", "h3", "check"}]}
nlohmann::json suite_json(const SuiteReport& s);

}  // namespace tricover
