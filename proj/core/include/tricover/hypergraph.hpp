#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tricover {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Three dense vertex indices. Stored in input order; compared as a set.
using Edge = std::array<VertexId, 3>;

/// Immutable 3-uniform hypergraph with distinct edges.
///
/// Vertices carry opaque string labels (the tokens of the h3 format) and are
/// addressed by dense indices 0..n-1. Edges keep their input order. Every
/// operation that derives a new hypergraph returns a fresh instance.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates: labels unique and non-empty, every edge has three distinct
  /// in-range vertices, no edge repeated as a set. Throws PreconditionError.
  Hypergraph(std::vector<std::string> labels, std::vector<Edge> edges);

  /// Convenience for literals: vertices are labelled by the decimal value and
  /// indexed in order of first appearance.
  static Hypergraph from_triples(std::initializer_list<std::array<int, 3>> triples);
  static Hypergraph from_triples(std::span<const std::array<int, 3>> triples);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(v); }
  std::size_t degree(VertexId v) const { return incidence_.at(v).size(); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;

  bool edge_contains(EdgeId e, VertexId v) const;

  /// Same labels in the same order and the same edges in the same order.
  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::unordered_map<std::string, VertexId> index_;
};

/// Edge with its vertices in ascending index order.
Edge sorted(Edge e);

/// A derived hypergraph together with the maps back into its parent.
struct Subgraph {
  Hypergraph graph;
  std::vector<VertexId> parent_vertex;  // local vertex -> parent vertex
  std::vector<EdgeId> parent_edge;      // local edge -> parent edge
};

/// Builds the sub-hypergraph on `vertices` (kept in the given order) with the
/// parent edges `edges`. Every vertex of every listed edge must be listed.
Subgraph extract(const Hypergraph& h, std::span<const VertexId> vertices,
                 std::span<const EdgeId> edges);

struct ComponentDecomposition {
  std::vector<Hypergraph> components;
  /// Parent vertex -> (component index, local vertex id).
  std::vector<std::pair<std::size_t, VertexId>> vertex_map;
  /// Per component: local vertex -> parent vertex.
  std::vector<std::vector<VertexId>> parent_vertices;
  /// Per component: local edge -> parent edge.
  std::vector<std::vector<EdgeId>> parent_edges;
};

/// Maximal connected pieces, ordered by their smallest parent vertex index.
/// Isolated vertices become single-vertex components without edges.
ComponentDecomposition components(const Hypergraph& h);

std::size_t count_components(const Hypergraph& h);
bool is_connected(const Hypergraph& h);

/// H \ S: drops the vertices in S and every edge meeting S.
Hypergraph delete_vertices(const Hypergraph& h, std::span<const VertexId> s);

/// H \ A: drops the edges in A and keeps every vertex.
Hypergraph delete_edges(const Hypergraph& h, std::span<const EdgeId> a);

/// H[A]: the edges in A on the union of their vertices.
Hypergraph induced_by_edges(const Hypergraph& h, std::span<const EdgeId> a);

/// Same as induced_by_edges but keeps the maps into `h`.
Subgraph edge_induced(const Hypergraph& h, std::span<const EdgeId> a);

/// Parses the h3 text format. Throws ParseError with the line number.
Hypergraph parse_h3(std::string_view text);

/// One edge per line, tokens separated by a single space, '\n' terminated.
std::string serialize_h3(const Hypergraph& h);

}  // namespace tricover
