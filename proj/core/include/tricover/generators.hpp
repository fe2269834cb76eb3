#pragma once

#include <cstddef>
#include <cstdint>

#include "tricover/cycles.hpp"
#include "tricover/hypergraph.hpp"

namespace tricover {

/// Hypertree with a perfect matching on n = 2m + 1 vertices.
///
/// Starts from (2m + 1) / 3 disjoint matched edges and adds (m - 1) / 3
/// connector edges, each taking one vertex from three distinct current
/// components. Requires m % 3 == 1.
Hypergraph gen_hypertree_pm(std::size_t m, std::uint64_t seed);

/// Connected hypergraph with exactly n vertices and m edges: a random
/// spanning construction followed by random extra triples. Requires
/// 3 <= n <= 2m + 1 and m <= C(n, 3), or (n, m) = (1, 0).
Hypergraph gen_random_connected(std::size_t n, std::size_t m, std::uint64_t seed);

/// The i-th instance of a seeded random stream with 1 <= m <= max_m and n
/// drawn from its feasible range.
Hypergraph random_instance(std::uint64_t seed, std::uint64_t index, std::size_t max_m);

/// Cycle of length k. Linear (k >= 3): edges {v_i, u_i, v_i+1} with private
/// middle vertices. Otherwise k = 2 gives two edges sharing two vertices and
/// k >= 3 a wheel whose edges all meet a hub vertex.
Hypergraph gen_cycle(std::size_t k, bool linear);

struct CycleInstance {
  Hypergraph graph;
  BergeCycle cycle;
};

/// A linear cycle of length 4..10 with one to three chords folded in: the
/// middle vertex of some edge is replaced by a join vertex or by the middle
/// vertex of a non-adjacent edge. The returned cycle is never minimal.
CycleInstance gen_non_minimal_cycle(std::uint64_t seed);

/// Two random cycles glued at one or two vertices plus pendant edges and a
/// few random extra edges. Always contains two cycles with a common vertex.
Hypergraph gen_intersecting_cycles(std::uint64_t seed);

}  // namespace tricover
