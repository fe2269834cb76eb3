#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tricover/cycles.hpp"
#include "tricover/hypergraph.hpp"
#include "tricover/solver.hpp"

namespace tricover {

enum class CheckStatus { pass, fail, skipped };
std::string_view to_string(CheckStatus s);

/// Verification record for one connected instance.
struct Report {
  std::string instance_id;  // canonical key, or "raw:<h3>" past the key budget
  std::size_t n = 0;
  std::size_t m = 0;
  bool is_connected = false;
  bool is_hypertree = false;
  bool has_pm = false;
  std::optional<std::size_t> tau;
  std::optional<std::size_t> nu;
  std::uint64_t bound_num = 1;
  std::uint64_t bound_den = 3;
  bool tight = false;
  std::optional<std::size_t> constructive_size;
  std::optional<Method> constructive_method;
  std::map<std::string, CheckStatus> lemma_checks;
  std::string h3;

  bool passed() const;
  std::vector<std::string> failed_checks() const;
};

struct VerifyOptions {
  SolverOptions solver;
  std::uint64_t key_budget = 40320;
};

/// True iff (c1, c2) is a valid answer of split_cycle on c: both are valid
/// cycles shorter than c, |c1| + |c2| <= |c| + 2 and they share a vertex.
bool split_contract_holds(const Hypergraph& h, const BergeCycle& c, const BergeCycle& c1,
                          const BergeCycle& c2);

/// Runs every applicable check on a connected hypergraph. Check failures are
/// recorded in the report, never thrown.
Report verify_instance(const Hypergraph& h, const VerifyOptions& options = {});

/// One report per connected component.
std::vector<Report> verify_components(const Hypergraph& h, const VerifyOptions& options = {});

struct SuiteConfig {
  std::size_t census_max_m = 4;
  std::size_t random_count = 0;
  std::uint64_t seed = 1;
  std::size_t random_max_m = 10;
  VerifyOptions verify;
  std::vector<Hypergraph> extra;  // decomposed into components
};

struct SuiteFailure {
  std::string key;
  std::string h3;
  std::string check;
};

struct SuiteReport {
  SuiteConfig config;
  std::size_t instances = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::size_t fallbacks = 0;
  std::size_t constructive_calls = 0;
  std::vector<SuiteFailure> failure_list;
  std::vector<Report> reports;  // ordered by instance_id

  double fallback_rate() const {
    return constructive_calls == 0 ? 0.0 : static_cast<double>(fallbacks) / static_cast<double>(constructive_calls);
  }
  bool ok() const noexcept { return failures == 0; }
};

SuiteReport run_suite(const SuiteConfig& config);

}  // namespace tricover
