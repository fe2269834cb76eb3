#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tricover/hypergraph.hpp"

namespace tricover {

/// Berge cycle v1 e1 v2 e2 ... vk ek v1 with k >= 2.
///
/// `joins[i]` and `joins[(i + 1) % k]` both lie in `edges[i]`. Join vertices
/// are pairwise distinct, and so are the edges.
struct BergeCycle {
  std::vector<VertexId> joins;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }
};

/// Checks the alternating-sequence definition against `h`.
bool is_valid_cycle(const Hypergraph& h, const BergeCycle& c);

/// Every vertex lying in some edge of the cycle, join or not. Sorted.
std::vector<VertexId> cycle_vertices(const Hypergraph& h, const BergeCycle& c);

/// Equal as cyclic sequences, up to rotation and reversal.
bool same_cycle(const BergeCycle& a, const BergeCycle& b);

/// True when the cycles have a vertex in common (join or non-join).
bool cycles_intersect(const Hypergraph& h, const BergeCycle& a, const BergeCycle& b);

/// Some cycle of `h`, or nullopt for a hyperforest. Linear time: a Berge
/// cycle is exactly a cycle of the vertex/edge incidence graph.
std::optional<BergeCycle> find_cycle(const Hypergraph& h);

bool is_acyclic(const Hypergraph& h);

/// Non-adjacent edges pairwise disjoint. Throws PreconditionError when `c`
/// is not a cycle of `h`.
bool is_minimal_cycle(const BergeCycle& c, const Hypergraph& h);

/// Splits a non-minimal cycle into two strictly shorter cycles over its own
/// edges that share a vertex, with |C1| + |C2| <= |C| + 2.
///
/// The witness is the first non-adjacent pair (i, j) in index order with a
/// common vertex x (smallest index). When x is a join vertex the chord through
/// x gives |C1| + |C2| = |C| + 1; otherwise both halves pass through x and the
/// total is |C| + 2.
std::pair<BergeCycle, BergeCycle> split_cycle(const BergeCycle& c, const Hypergraph& h);

/// Repeatedly splits until both cycles are minimal. The input cycles must be
/// distinct cycles of `h` with a common vertex; so are the outputs.
std::pair<BergeCycle, BergeCycle> minimal_cycle_pair(const Hypergraph& h, BergeCycle c1,
                                                     BergeCycle c2);

/// Two distinct cycles of `h` with a common vertex, if any exist.
std::optional<std::pair<BergeCycle, BergeCycle>> find_intersecting_cycles(const Hypergraph& h);

bool all_cycles_vertex_disjoint(const Hypergraph& h);

/// Number of components of H \ {v} inside the component of H containing v.
/// Vertices left isolated by the deletion count as components.
std::size_t components_after_removal(const Hypergraph& h, VertexId v);

struct LowCut {
  VertexId vertex;
  std::size_t components;
  std::size_t degree;
};

/// A vertex v whose deletion leaves at most 2 d(v) - 2 components.
///
/// Candidates are the vertices of a pair of intersecting minimal cycles,
/// tried by ascending degree then index, followed by the remaining vertices.
/// Returns nullopt when `h` has no two intersecting cycles.
std::optional<LowCut> find_low_cut_vertex(const Hypergraph& h);

/// Bipartite tree of the (pairwise vertex-disjoint) cycles and the connected
/// acyclic pieces formed by the remaining edges.
struct CycleTree {
  std::vector<BergeCycle> cycle_nodes;
  std::vector<std::vector<EdgeId>> tree_nodes;
  /// (cycle node index, tree node index) pairs sharing a vertex.
  std::vector<std::pair<std::size_t, std::size_t>> links;
};

/// Requires `h` connected with pairwise vertex-disjoint cycles.
CycleTree build_cycle_tree(const Hypergraph& h);

}  // namespace tricover
