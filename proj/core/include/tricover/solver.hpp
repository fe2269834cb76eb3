#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "tricover/hypergraph.hpp"
#include "tricover/hypertree.hpp"

namespace tricover {

enum class Method { exact, hypertree, constructive, fallback };

std::string_view to_string(Method m);

/// The bound (2m + 1) / 3 kept as an exact fraction.
struct Bound {
  std::uint64_t num = 1;
  std::uint64_t den = 3;

  static Bound for_edges(std::size_t m) { return {2 * static_cast<std::uint64_t>(m) + 1, 3}; }
  std::uint64_t floor() const noexcept { return num / den; }
  /// size * den == num, integer arithmetic only.
  bool attained_by(std::size_t size) const noexcept { return size * den == num; }
};

struct SolveResult {
  std::size_t size = 0;
  std::variant<Cover, Matching> certificate;
  Method method = Method::exact;
  Bound bound;
  bool tight = false;

  const Cover& cover() const { return std::get<Cover>(certificate); }
  const Matching& matching() const { return std::get<Matching>(certificate); }
};

struct SolverOptions {
  /// Largest edge count the exact solvers accept.
  std::size_t budget = 20;
};

/// Minimum cover by branch and bound. Branches three ways on the lowest
/// uncovered edge (vertices ascending, earlier siblings excluded), prunes
/// with a greedy disjoint-edge packing, starts from a greedy max-degree
/// cover. Throws BudgetExceeded when m > budget.
SolveResult exact_tau(const Hypergraph& h, const SolverOptions& options = {});

/// Maximum matching by include/exclude branch and bound in edge order.
SolveResult exact_nu(const Hypergraph& h, const SolverOptions& options = {});

struct ConstructiveStats {
  std::size_t hypertree_steps = 0;
  std::size_t low_cut_steps = 0;
  std::size_t leaf_steps = 0;
  std::size_t fallbacks = 0;
};

/// Cover of size at most floor((2m + 1) / 3) for a connected hypergraph.
///
/// Acyclic instances take the forest Konig cover. Otherwise a vertex whose
/// deletion leaves at most 2 d(v) - 2 components goes into the cover and each
/// component is solved recursively. With pairwise vertex-disjoint cycles a
/// leaf of the cycle tree yields a small edge set E1 covered cheaply, and the
/// rest is solved recursively. Any assembled cover above the bound is
/// replaced by the exact optimum and the result is tagged `fallback`.
SolveResult constructive_cover(const Hypergraph& h, ConstructiveStats* stats = nullptr);

struct ExtremalVerdict {
  bool extremal = false;       // 3 tau == 2m + 1
  bool is_hypertree = false;
  bool has_perfect_matching = false;
  std::size_t tau = 0;
  std::string explanation;

  bool structural() const noexcept { return is_hypertree && has_perfect_matching; }
  /// Both sides of the characterization agree.
  bool consistent() const noexcept { return extremal == structural(); }
};

/// Decides 3 tau == 2m + 1 with the exact solver and records the structural
/// check (hypertree with a perfect matching) next to it.
ExtremalVerdict is_extremal(const Hypergraph& h, const SolverOptions& options = {});

}  // namespace tricover
