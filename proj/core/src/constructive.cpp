#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <optional>

#include "tricover/cycles.hpp"
#include "tricover/errors.hpp"
#include "tricover/solver.hpp"
#include "union_find.hpp"

namespace tricover {
namespace {

constexpr auto kFar = std::numeric_limits<std::size_t>::max();

// Connected pieces of H[edges], each mapped back into `h`.
std::vector<Subgraph> edge_components(const Hypergraph& h, const std::vector<EdgeId>& edges) {
  detail::UnionFind uf(h.num_vertices());
  for (EdgeId e : edges) {
    uf.unite(h.edge(e)[0], h.edge(e)[1]);
    uf.unite(h.edge(e)[0], h.edge(e)[2]);
  }
  std::map<std::size_t, std::vector<EdgeId>> groups;
  for (EdgeId e : edges) groups[uf.find(h.edge(e)[0])].push_back(e);
  std::vector<Subgraph> out;
  for (auto& [root, group] : groups) out.push_back(edge_induced(h, group));
  return out;
}

std::vector<EdgeId> complement(const Hypergraph& h, const std::vector<EdgeId>& taken) {
  std::vector<char> in(h.num_edges(), 0);
  for (EdgeId e : taken) in[e] = 1;
  std::vector<EdgeId> rest;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (!in[e]) rest.push_back(e);
  }
  return rest;
}

// Every other join vertex: v_i meets e_{i-1} and e_i.
std::vector<VertexId> alternate_joins(const BergeCycle& c) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < c.length(); i += 2) out.push_back(c.joins[i]);
  return out;
}

// An edge set E1 whose edge-induced piece is cheap to cover.
struct LocalMove {
  std::vector<EdgeId> edges;
  std::vector<VertexId> cover;
};

// Distances from `source` inside the sub-hypergraph formed by `edges`.
std::vector<std::size_t> distances(const Hypergraph& h, const std::vector<EdgeId>& edges,
                                   VertexId source) {
  std::vector<char> allowed(h.num_edges(), 0);
  for (EdgeId e : edges) allowed[e] = 1;
  std::vector<std::size_t> dist(h.num_vertices(), kFar);
  dist[source] = 0;
  std::deque<VertexId> queue{source};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : h.incident(v)) {
      if (!allowed[e]) continue;
      for (VertexId w : h.edge(e)) {
        if (dist[w] == kFar) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

// Leaf analysis on the cycle tree of a hypergraph whose cycles are pairwise
// vertex-disjoint.
LocalMove leaf_move(const Hypergraph& h, const CycleTree& tree) {
  if (tree.tree_nodes.empty()) {
    const BergeCycle& c = tree.cycle_nodes.front();
    return {c.edges, alternate_joins(c)};
  }

  std::vector<std::size_t> cycle_links(tree.cycle_nodes.size(), 0);
  std::vector<std::size_t> tree_links(tree.tree_nodes.size(), 0);
  std::vector<std::size_t> partner(tree.tree_nodes.size(), kFar);
  for (auto [c, t] : tree.links) {
    ++cycle_links[c];
    ++tree_links[t];
    partner[t] = c;
  }

  // A leaf cycle has a single neighbouring piece; the rest stays connected.
  for (std::size_t c = 0; c < tree.cycle_nodes.size(); ++c) {
    if (cycle_links[c] == 1) return {tree.cycle_nodes[c].edges, alternate_joins(tree.cycle_nodes[c])};
  }

  std::size_t leaf = kFar;
  for (std::size_t t = 0; t < tree.tree_nodes.size(); ++t) {
    if (tree_links[t] == 1) {
      leaf = t;
      break;
    }
  }
  if (leaf == kFar) throw std::logic_error("cycle tree has no leaf");
  const std::vector<EdgeId>& piece = tree.tree_nodes[leaf];
  const BergeCycle& cycle = tree.cycle_nodes[partner[leaf]];

  // The piece meets its cycle in exactly one vertex u.
  const auto on_cycle = cycle_vertices(h, cycle);
  VertexId u = 0;
  for (EdgeId e : piece) {
    for (VertexId v : h.edge(e)) {
      if (std::binary_search(on_cycle.begin(), on_cycle.end(), v)) u = v;
    }
  }

  const auto dist = distances(h, piece, u);
  VertexId far = u;
  for (EdgeId e : piece) {
    for (VertexId v : h.edge(e)) {
      if (dist[v] > dist[far] || (dist[v] == dist[far] && v < far)) far = v;
    }
  }

  if (dist[far] >= 2) {
    // far -- p -- f -- q: f is the edge above p; every edge at p or at f's
    // third vertex r other than f hangs at maximum depth.
    const std::size_t depth = dist[far];
    const EdgeId low = h.incident(far).front();
    VertexId p = 0;
    for (VertexId v : h.edge(low)) {
      if (dist[v] == depth - 1) p = v;
    }
    EdgeId f = 0;
    for (EdgeId e : h.incident(p)) {
      const Edge& edge = h.edge(e);
      if (std::any_of(edge.begin(), edge.end(), [&](VertexId v) { return dist[v] == depth - 2; })) f = e;
    }
    VertexId r = p;
    for (VertexId v : h.edge(f)) {
      if (v != p && dist[v] == depth - 1) r = v;
    }
    LocalMove move;
    move.cover.push_back(p);
    if (h.degree(r) >= 2) move.cover.push_back(r);
    for (EdgeId e : h.incident(p)) move.edges.push_back(e);
    for (EdgeId e : h.incident(r)) {
      if (e != f) move.edges.push_back(e);
    }
    return move;
  }

  if (piece.size() >= 2) return {piece, {u}};

  // A single pendant edge at u, paired with one cycle edge through u.
  const EdgeId pendant = piece.front();
  const auto join = std::find(cycle.joins.begin(), cycle.joins.end(), u);
  EdgeId partner_edge = 0;
  if (join != cycle.joins.end()) {
    partner_edge = cycle.edges[static_cast<std::size_t>(join - cycle.joins.begin())];
  } else {
    for (EdgeId e : cycle.edges) {
      if (h.edge_contains(e, u)) partner_edge = e;
    }
  }
  return {{pendant, partner_edge}, {u}};
}

class Constructor {
 public:
  explicit Constructor(ConstructiveStats& stats) : stats_(stats) {}

  std::vector<VertexId> solve(const Hypergraph& h) {
    if (h.empty()) return {};
    if (is_acyclic(h)) {
      ++stats_.hypertree_steps;
      return forest_konig_pair(h).cover.vertices;
    }
    std::optional<std::vector<VertexId>> cover;
    try {
      cover = reduce(h);
    } catch (const PreconditionError&) {
      // Intersecting cycles without a low-cut witness; handled below.
    }
    if (!cover || cover->size() > Bound::for_edges(h.num_edges()).floor()) {
      ++stats_.fallbacks;
      SolverOptions unlimited;
      unlimited.budget = std::numeric_limits<std::size_t>::max();
      cover = exact_tau(h, unlimited).cover().vertices;
    }
    return *std::move(cover);
  }

 private:
  std::vector<VertexId> reduce(const Hypergraph& h) {
    if (auto cut = find_low_cut_vertex(h)) {
      ++stats_.low_cut_steps;
      std::vector<EdgeId> rest;
      for (EdgeId e = 0; e < h.num_edges(); ++e) {
        if (!h.edge_contains(e, cut->vertex)) rest.push_back(e);
      }
      return assemble(h, {cut->vertex}, rest);
    }
    ++stats_.leaf_steps;
    const CycleTree tree = build_cycle_tree(h);
    LocalMove move = leaf_move(h, tree);
    return assemble(h, std::move(move.cover), complement(h, move.edges));
  }

  std::vector<VertexId> assemble(const Hypergraph& h, std::vector<VertexId> cover,
                                 const std::vector<EdgeId>& rest) {
    for (const Subgraph& piece : edge_components(h, rest)) {
      for (VertexId v : solve(piece.graph)) cover.push_back(piece.parent_vertex[v]);
    }
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    return cover;
  }

  ConstructiveStats& stats_;
};

}  // namespace

SolveResult constructive_cover(const Hypergraph& h, ConstructiveStats* stats) {
  if (!is_connected(h)) throw PreconditionError("constructive_cover: hypergraph is not connected");
  ConstructiveStats local;
  Constructor builder(local);
  Cover cover{builder.solve(h)};
  std::sort(cover.vertices.begin(), cover.vertices.end());
  if (!is_cover(h, cover.vertices)) throw std::logic_error("constructive_cover: invalid certificate");

  SolveResult out;
  out.size = cover.size();
  out.certificate = std::move(cover);
  if (local.fallbacks > 0) {
    out.method = Method::fallback;
  } else if (local.low_cut_steps == 0 && local.leaf_steps == 0) {
    out.method = Method::hypertree;
  } else {
    out.method = Method::constructive;
  }
  out.bound = Bound::for_edges(h.num_edges());
  out.tight = out.bound.attained_by(out.size);
  if (stats != nullptr) {
    stats->hypertree_steps += local.hypertree_steps;
    stats->low_cut_steps += local.low_cut_steps;
    stats->leaf_steps += local.leaf_steps;
    stats->fallbacks += local.fallbacks;
  }
  return out;
}

ExtremalVerdict is_extremal(const Hypergraph& h, const SolverOptions& options) {
  if (!is_connected(h)) throw PreconditionError("is_extremal: hypergraph is not connected");
  ExtremalVerdict out;
  const SolveResult tau = exact_tau(h, options);
  out.tau = tau.size;
  out.extremal = tau.tight;
  out.is_hypertree = check_hypertree(h);
  out.has_perfect_matching = has_perfect_matching(h);

  const Bound b = tau.bound;
  out.explanation = "tau=" + std::to_string(tau.size) + ", bound=" + std::to_string(b.num) + "/" +
                    std::to_string(b.den) + (out.extremal ? " (attained)" : " (not attained)") +
                    "; hypertree=" + (out.is_hypertree ? "yes" : "no") +
                    ", perfect matching=" + (out.has_perfect_matching ? "yes" : "no") +
                    (out.consistent() ? "; characterization agrees" : "; characterization DISAGREES");
  return out;
}

}  // namespace tricover
