#include "tricover/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "tricover/errors.hpp"
#include "union_find.hpp"

namespace tricover {

Edge sorted(Edge e) {
  std::sort(e.begin(), e.end());
  return e;
}

Hypergraph::Hypergraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)), incidence_(labels_.size()) {
  index_.reserve(labels_.size());
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (labels_[v].empty()) throw PreconditionError("empty vertex label");
    if (!index_.emplace(labels_[v], v).second) {
      throw PreconditionError("duplicate vertex label '" + labels_[v] + "'");
    }
  }
  std::set<Edge> seen;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    for (VertexId v : edge) {
      if (v >= labels_.size()) throw PreconditionError("edge refers to unknown vertex");
    }
    if (edge[0] == edge[1] || edge[0] == edge[2] || edge[1] == edge[2]) {
      throw PreconditionError("repeated vertex in edge");
    }
    if (!seen.insert(sorted(edge)).second) throw PreconditionError("duplicate edge");
    for (VertexId v : edge) incidence_[v].push_back(e);
  }
}

Hypergraph Hypergraph::from_triples(std::initializer_list<std::array<int, 3>> triples) {
  return from_triples(std::span<const std::array<int, 3>>(triples.begin(), triples.size()));
}

Hypergraph Hypergraph::from_triples(std::span<const std::array<int, 3>> triples) {
  std::vector<std::string> labels;
  std::unordered_map<int, VertexId> ids;
  std::vector<Edge> edges;
  edges.reserve(triples.size());
  for (const auto& t : triples) {
    Edge e{};
    for (std::size_t i = 0; i < 3; ++i) {
      auto [it, inserted] = ids.emplace(t[i], static_cast<VertexId>(labels.size()));
      if (inserted) labels.push_back(std::to_string(t[i]));
      e[i] = it->second;
    }
    edges.push_back(e);
  }
  return Hypergraph(std::move(labels), std::move(edges));
}

std::optional<VertexId> Hypergraph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Hypergraph::edge_contains(EdgeId e, VertexId v) const {
  const Edge& edge = edges_.at(e);
  return edge[0] == v || edge[1] == v || edge[2] == v;
}

Subgraph extract(const Hypergraph& h, std::span<const VertexId> vertices,
                 std::span<const EdgeId> edges) {
  constexpr VertexId kAbsent = static_cast<VertexId>(-1);
  std::vector<VertexId> local(h.num_vertices(), kAbsent);
  Subgraph out;
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (VertexId v : vertices) {
    if (v >= h.num_vertices()) throw PreconditionError("unknown vertex id");
    if (local[v] != kAbsent) throw PreconditionError("vertex listed twice");
    local[v] = static_cast<VertexId>(labels.size());
    labels.push_back(h.label(v));
    out.parent_vertex.push_back(v);
  }
  std::vector<Edge> local_edges;
  local_edges.reserve(edges.size());
  for (EdgeId e : edges) {
    if (e >= h.num_edges()) throw PreconditionError("edge index out of range");
    Edge mapped{};
    for (std::size_t i = 0; i < 3; ++i) {
      mapped[i] = local[h.edge(e)[i]];
      if (mapped[i] == kAbsent) throw PreconditionError("edge vertex missing from subgraph");
    }
    local_edges.push_back(mapped);
    out.parent_edge.push_back(e);
  }
  out.graph = Hypergraph(std::move(labels), std::move(local_edges));
  return out;
}

ComponentDecomposition components(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  detail::UnionFind uf(n);
  for (const Edge& e : h.edges()) {
    uf.unite(e[0], e[1]);
    uf.unite(e[0], e[2]);
  }

  ComponentDecomposition out;
  out.vertex_map.resize(n);
  std::vector<std::size_t> root_to_component(n, static_cast<std::size_t>(-1));
  for (VertexId v = 0; v < n; ++v) {
    std::size_t root = uf.find(v);
    if (root_to_component[root] == static_cast<std::size_t>(-1)) {
      root_to_component[root] = out.parent_vertices.size();
      out.parent_vertices.emplace_back();
      out.parent_edges.emplace_back();
    }
    std::size_t c = root_to_component[root];
    out.vertex_map[v] = {c, static_cast<VertexId>(out.parent_vertices[c].size())};
    out.parent_vertices[c].push_back(v);
  }
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    out.parent_edges[out.vertex_map[h.edge(e)[0]].first].push_back(e);
  }
  out.components.reserve(out.parent_vertices.size());
  for (std::size_t c = 0; c < out.parent_vertices.size(); ++c) {
    out.components.push_back(extract(h, out.parent_vertices[c], out.parent_edges[c]).graph);
  }
  return out;
}

std::size_t count_components(const Hypergraph& h) {
  detail::UnionFind uf(h.num_vertices());
  std::size_t count = h.num_vertices();
  for (const Edge& e : h.edges()) {
    if (uf.unite(e[0], e[1])) --count;
    if (uf.unite(e[0], e[2])) --count;
  }
  return count;
}

bool is_connected(const Hypergraph& h) { return count_components(h) <= 1; }

Hypergraph delete_vertices(const Hypergraph& h, std::span<const VertexId> s) {
  std::vector<char> removed(h.num_vertices(), 0);
  for (VertexId v : s) {
    if (v >= h.num_vertices()) throw PreconditionError("unknown vertex id");
    removed[v] = 1;
  }
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const Edge& edge = h.edge(e);
    if (!removed[edge[0]] && !removed[edge[1]] && !removed[edge[2]]) edges.push_back(e);
  }
  return extract(h, keep, edges).graph;
}

Hypergraph delete_edges(const Hypergraph& h, std::span<const EdgeId> a) {
  std::vector<char> removed(h.num_edges(), 0);
  for (EdgeId e : a) {
    if (e >= h.num_edges()) throw PreconditionError("edge index out of range");
    removed[e] = 1;
  }
  std::vector<VertexId> keep(h.num_vertices());
  for (VertexId v = 0; v < h.num_vertices(); ++v) keep[v] = v;
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (!removed[e]) edges.push_back(e);
  }
  return extract(h, keep, edges).graph;
}

Subgraph edge_induced(const Hypergraph& h, std::span<const EdgeId> a) {
  std::vector<char> chosen(h.num_edges(), 0);
  std::vector<char> used(h.num_vertices(), 0);
  for (EdgeId e : a) {
    if (e >= h.num_edges()) throw PreconditionError("edge index out of range");
    chosen[e] = 1;
    for (VertexId v : h.edge(e)) used[v] = 1;
  }
  std::vector<VertexId> vertices;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (used[v]) vertices.push_back(v);
  }
  // Edges keep parent order regardless of the order of A.
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (chosen[e]) edges.push_back(e);
  }
  return extract(h, vertices, edges);
}

Hypergraph induced_by_edges(const Hypergraph& h, std::span<const EdgeId> a) {
  return edge_induced(h, a).graph;
}

}  // namespace tricover
