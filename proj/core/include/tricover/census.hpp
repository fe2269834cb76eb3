#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tricover/hypergraph.hpp"

namespace tricover {

/// Upper limit on edge orderings tried by canonicalization (10!).
inline constexpr std::uint64_t kDefaultKeyBudget = 3628800;

struct CanonicalForm {
  std::string key;
  Hypergraph graph;  // vertices labeled 1..n
};

/// Relabeling-invariant form. Each ordering of the edges gives every vertex
/// a bitmask of its incident edge positions; the canonical ordering is the one
/// whose descending mask sequence is lexicographically largest. Edges are
/// first split into classes by iterated colour refinement and only orderings
/// within a class are searched.
///
/// Throws BudgetExceeded if more than `budget` orderings remain or m > 64.
CanonicalForm canonical_form(const Hypergraph& h, std::uint64_t budget = kDefaultKeyBudget);

/// The key of canonical_form, e.g. "n5:1,2,3;1,4,5".
std::string canonical_key(const Hypergraph& h, std::uint64_t budget = kDefaultKeyBudget);

/// Every connected 3-uniform hypergraph with 1..max_m edges, once per
/// isomorphism class, in canonical labeling, ordered by (m, key).
/// Throws BudgetExceeded for max_m > 5.
std::vector<Hypergraph> enumerate_connected(std::size_t max_m);

}  // namespace tricover
