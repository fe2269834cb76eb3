#pragma once

#include <span>
#include <vector>

#include "tricover/hypergraph.hpp"

namespace tricover {

/// Pairwise vertex-disjoint edges.
struct Matching {
  std::vector<EdgeId> edges;
  std::size_t size() const noexcept { return edges.size(); }
};

/// Vertex set meeting every edge.
struct Cover {
  std::vector<VertexId> vertices;
  std::size_t size() const noexcept { return vertices.size(); }
};

bool is_matching(const Hypergraph& h, std::span<const EdgeId> edges);
bool is_cover(const Hypergraph& h, std::span<const VertexId> vertices);

/// Connected and acyclic, decided by the count n == 2m + 1.
/// Throws PreconditionError for a disconnected hypergraph.
bool check_hypertree(const Hypergraph& h);

/// Maximum matching and minimum cover of equal size for an acyclic input.
///
/// Each component is rooted at its lowest edge. The deepest remaining edge
/// (edge-graph BFS distance, ties by index) joins the matching and the vertex
/// it shares with its parent edge joins the cover, removing every edge at that
/// vertex. Equal sizes certify both optimal because nu <= tau.
struct KonigPair {
  Matching matching;
  Cover cover;
};
KonigPair forest_konig_pair(const Hypergraph& h);

/// Requires a hypertree; throws PreconditionError otherwise.
Matching hypertree_matching(const Hypergraph& h);
Cover hypertree_cover(const Hypergraph& h);

/// A matching covering every vertex. Uses the greedy forest matching when `h`
/// is acyclic and the exact solver otherwise.
bool has_perfect_matching(const Hypergraph& h);

}  // namespace tricover
