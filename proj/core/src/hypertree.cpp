#include "tricover/hypertree.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "tricover/cycles.hpp"
#include "tricover/errors.hpp"
#include "tricover/solver.hpp"

namespace tricover {

bool is_matching(const Hypergraph& h, std::span<const EdgeId> edges) {
  std::vector<char> used(h.num_vertices(), 0);
  std::vector<char> seen(h.num_edges(), 0);
  for (EdgeId e : edges) {
    if (e >= h.num_edges() || seen[e]) return false;
    seen[e] = 1;
    for (VertexId v : h.edge(e)) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

bool is_cover(const Hypergraph& h, std::span<const VertexId> vertices) {
  std::vector<char> in(h.num_vertices(), 0);
  for (VertexId v : vertices) {
    if (v >= h.num_vertices()) return false;
    in[v] = 1;
  }
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const Edge& e) { return in[e[0]] || in[e[1]] || in[e[2]]; });
}

bool check_hypertree(const Hypergraph& h) {
  if (!is_connected(h)) throw PreconditionError("check_hypertree: hypergraph is not connected");
  return h.num_vertices() == 2 * h.num_edges() + 1;
}

KonigPair forest_konig_pair(const Hypergraph& h) {
  if (!is_acyclic(h)) throw PreconditionError("hypergraph has a cycle");
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  constexpr auto kNoVertex = std::numeric_limits<VertexId>::max();
  const std::size_t m = h.num_edges();

  std::vector<std::size_t> depth(m, kUnset);
  std::vector<VertexId> via(m, kNoVertex);
  for (EdgeId root = 0; root < m; ++root) {
    if (depth[root] != kUnset) continue;
    depth[root] = 0;
    std::deque<EdgeId> queue{root};
    while (!queue.empty()) {
      const EdgeId e = queue.front();
      queue.pop_front();
      for (VertexId v : h.edge(e)) {
        for (EdgeId f : h.incident(v)) {
          if (depth[f] != kUnset) continue;
          depth[f] = depth[e] + 1;
          via[f] = v;
          queue.push_back(f);
        }
      }
    }
  }

  std::vector<EdgeId> order(m);
  for (EdgeId e = 0; e < m; ++e) order[e] = e;
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return depth[a] != depth[b] ? depth[a] > depth[b] : a < b;
  });

  KonigPair out;
  std::vector<char> removed(m, 0);
  for (EdgeId e : order) {
    if (removed[e]) continue;
    const Edge& edge = h.edge(e);
    const VertexId pick = via[e] != kNoVertex ? via[e] : *std::min_element(edge.begin(), edge.end());
    out.matching.edges.push_back(e);
    out.cover.vertices.push_back(pick);
    for (EdgeId f : h.incident(pick)) removed[f] = 1;
  }
  std::sort(out.matching.edges.begin(), out.matching.edges.end());
  std::sort(out.cover.vertices.begin(), out.cover.vertices.end());
  return out;
}

namespace {

void require_hypertree(const Hypergraph& h) {
  if (!is_connected(h)) throw PreconditionError("not a hypertree: hypergraph is not connected");
  if (!is_acyclic(h)) throw PreconditionError("not a hypertree: hypergraph has a cycle");
}

}  // namespace

Matching hypertree_matching(const Hypergraph& h) {
  require_hypertree(h);
  return forest_konig_pair(h).matching;
}

Cover hypertree_cover(const Hypergraph& h) {
  require_hypertree(h);
  return forest_konig_pair(h).cover;
}

bool has_perfect_matching(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  if (n % 3 != 0) return false;
  if (is_acyclic(h)) return 3 * forest_konig_pair(h).matching.size() == n;
  SolverOptions unlimited;
  unlimited.budget = std::numeric_limits<std::size_t>::max();
  return 3 * exact_nu(h, unlimited).size == n;
}

}  // namespace tricover
