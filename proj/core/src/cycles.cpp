#include "tricover/cycles.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "tricover/errors.hpp"
#include "union_find.hpp"

namespace tricover {
namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Bipartite incidence graph. Nodes 0..n-1 are vertices, n..n+m-1 are edges.
// Arc 3e + slot joins edge e with its slot-th vertex.
struct IncidenceGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj;

  explicit IncidenceGraph(const Hypergraph& h) : n(h.num_vertices()), adj(h.num_vertices() + h.num_edges()) {
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      const auto edge_node = static_cast<std::uint32_t>(n + e);
      for (std::uint32_t slot = 0; slot < 3; ++slot) {
        const std::uint32_t arc = 3 * e + slot;
        const VertexId v = h.edge(e)[slot];
        adj[v].emplace_back(edge_node, arc);
        adj[edge_node].emplace_back(v, arc);
      }
    }
  }

  std::size_t size() const { return adj.size(); }
  bool is_vertex(std::uint32_t node) const { return node < n; }
};

using ArcMask = std::vector<char>;

// Cycle of the incidence graph as a node sequence, closing back to the front.
std::optional<std::vector<std::uint32_t>> find_node_cycle(const IncidenceGraph& g,
                                                          const ArcMask* allowed) {
  const std::size_t size = g.size();
  std::vector<std::uint8_t> state(size, 0);
  std::vector<std::uint32_t> parent(size, kNone);
  std::vector<std::uint32_t> parent_arc(size, kNone);
  std::vector<std::size_t> next(size, 0);
  std::vector<std::uint32_t> stack;

  for (std::uint32_t root = 0; root < size; ++root) {
    if (state[root] != 0) continue;
    state[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const std::uint32_t u = stack.back();
      if (next[u] == g.adj[u].size()) {
        state[u] = 2;
        stack.pop_back();
        continue;
      }
      const auto [w, arc] = g.adj[u][next[u]++];
      if ((allowed != nullptr && !(*allowed)[arc]) || arc == parent_arc[u]) continue;
      if (state[w] == 0) {
        state[w] = 1;
        parent[w] = u;
        parent_arc[w] = arc;
        stack.push_back(w);
      } else if (state[w] == 1) {
        std::vector<std::uint32_t> nodes;
        for (std::uint32_t x = u; x != w; x = parent[x]) nodes.push_back(x);
        nodes.push_back(w);
        std::reverse(nodes.begin(), nodes.end());
        return nodes;
      }
    }
  }
  return std::nullopt;
}

BergeCycle to_berge(const IncidenceGraph& g, std::vector<std::uint32_t> nodes) {
  auto first_vertex = std::find_if(nodes.begin(), nodes.end(),
                                   [&](std::uint32_t x) { return g.is_vertex(x); });
  std::rotate(nodes.begin(), first_vertex, nodes.end());
  BergeCycle c;
  for (std::size_t i = 0; i < nodes.size(); i += 2) {
    c.joins.push_back(nodes[i]);
    c.edges.push_back(static_cast<EdgeId>(nodes[i + 1] - g.n));
  }
  return c;
}

// Biconnected components of the incidence graph, each as a list of arcs.
std::vector<std::vector<std::uint32_t>> blocks(const IncidenceGraph& g) {
  struct Frame {
    std::uint32_t node;
    std::uint32_t parent_arc;
    std::size_t next;
  };
  const std::size_t size = g.size();
  std::vector<std::uint32_t> disc(size, 0);
  std::vector<std::uint32_t> low(size, 0);
  std::uint32_t timer = 0;
  std::vector<std::uint32_t> arc_stack;
  std::vector<Frame> frames;
  std::vector<std::vector<std::uint32_t>> out;

  for (std::uint32_t root = 0; root < size; ++root) {
    if (disc[root] != 0) continue;
    disc[root] = low[root] = ++timer;
    frames.push_back({root, kNone, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const std::uint32_t u = f.node;
      if (f.next < g.adj[u].size()) {
        const auto [w, arc] = g.adj[u][f.next++];
        if (arc == f.parent_arc) continue;
        if (disc[w] == 0) {
          arc_stack.push_back(arc);
          disc[w] = low[w] = ++timer;
          frames.push_back({w, arc, 0});
        } else if (disc[w] < disc[u]) {
          arc_stack.push_back(arc);
          low[u] = std::min(low[u], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) continue;
      const std::uint32_t p = frames.back().node;
      low[p] = std::min(low[p], low[done.node]);
      if (low[done.node] >= disc[p]) {
        std::vector<std::uint32_t> block;
        while (true) {
          const std::uint32_t arc = arc_stack.back();
          arc_stack.pop_back();
          block.push_back(arc);
          if (arc == done.parent_arc) break;
        }
        out.push_back(std::move(block));
      }
    }
  }
  return out;
}

std::pair<std::uint32_t, std::uint32_t> arc_ends(const IncidenceGraph& g, const Hypergraph& h,
                                                 std::uint32_t arc) {
  const EdgeId e = arc / 3;
  return {h.edge(e)[arc % 3], static_cast<std::uint32_t>(g.n + e)};
}

std::size_t block_node_count(const IncidenceGraph& g, const Hypergraph& h,
                             const std::vector<std::uint32_t>& block) {
  std::set<std::uint32_t> nodes;
  for (std::uint32_t arc : block) {
    auto [a, b] = arc_ends(g, h, arc);
    nodes.insert(a);
    nodes.insert(b);
  }
  return nodes.size();
}

// The single cycle of a block whose arc count equals its node count.
BergeCycle block_cycle(const IncidenceGraph& g, const Hypergraph& h,
                       const std::vector<std::uint32_t>& block) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> nbrs;
  for (std::uint32_t arc : block) {
    auto [a, b] = arc_ends(g, h, arc);
    nbrs[a].push_back(b);
    nbrs[b].push_back(a);
  }
  const std::uint32_t start = nbrs.begin()->first;  // smallest node is a vertex
  std::vector<std::uint32_t> nodes{start};
  std::uint32_t prev = start;
  std::uint32_t cur = nbrs[start].front();
  while (cur != start) {
    nodes.push_back(cur);
    const auto& nb = nbrs[cur];
    const std::uint32_t next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return to_berge(g, std::move(nodes));
}

// A block with more arcs than nodes holds two cycles through a common node:
// any cycle C plus an ear leaving C and re-entering it elsewhere.
std::pair<BergeCycle, BergeCycle> ear_pair(const IncidenceGraph& g, const Hypergraph& h,
                                           const std::vector<std::uint32_t>& block) {
  ArcMask allowed(3 * h.num_edges(), 0);
  for (std::uint32_t arc : block) allowed[arc] = 1;
  std::vector<std::uint32_t> cyc = *find_node_cycle(g, &allowed);
  const std::size_t len = cyc.size();

  std::vector<std::size_t> pos(g.size(), kNone);
  for (std::size_t i = 0; i < len; ++i) pos[cyc[i]] = i;
  ArcMask on_cycle(3 * h.num_edges(), 0);
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint32_t a = cyc[i];
    const std::uint32_t b = cyc[(i + 1) % len];
    for (auto [w, arc] : g.adj[a]) {
      if (w == b && allowed[arc]) on_cycle[arc] = 1;
    }
  }

  for (std::size_t px = 0; px < len; ++px) {
    const std::uint32_t x = cyc[px];
    for (auto [y, arc] : g.adj[x]) {
      if (!allowed[arc] || on_cycle[arc]) continue;
      std::vector<std::uint32_t> path;
      if (pos[y] != kNone) {
        path = {x, y};
      } else {
        std::vector<std::uint32_t> from(g.size(), kNone);
        std::deque<std::uint32_t> queue{y};
        from[y] = y;
        std::uint32_t z = kNone;
        while (!queue.empty() && z == kNone) {
          const std::uint32_t u = queue.front();
          queue.pop_front();
          for (auto [w, a2] : g.adj[u]) {
            if (!allowed[a2] || w == x || from[w] != kNone) continue;
            from[w] = u;
            if (pos[w] != kNone) {
              z = w;
              break;
            }
            queue.push_back(w);
          }
        }
        if (z == kNone) continue;
        for (std::uint32_t u = z; u != y; u = from[u]) path.push_back(u);
        path.push_back(y);
        path.push_back(x);
        std::reverse(path.begin(), path.end());
      }
      const std::size_t pz = pos[path.back()];
      std::vector<std::uint32_t> other = path;
      for (std::size_t i = (pz + 1) % len; i != px; i = (i + 1) % len) other.push_back(cyc[i]);
      return {to_berge(g, cyc), to_berge(g, std::move(other))};
    }
  }
  throw std::logic_error("ear_pair: block has no ear");
}

struct CycleScan {
  std::optional<std::pair<BergeCycle, BergeCycle>> intersecting;
  std::vector<BergeCycle> cycles;  // valid when !intersecting
};

CycleScan scan_cycles(const Hypergraph& h) {
  const IncidenceGraph g(h);
  CycleScan out;
  const auto bs = blocks(g);
  for (const auto& b : bs) {
    if (b.size() > block_node_count(g, h, b)) {
      out.intersecting = ear_pair(g, h, b);
      return out;
    }
  }
  for (const auto& b : bs) {
    if (b.size() > 1) out.cycles.push_back(block_cycle(g, h, b));
  }
  std::sort(out.cycles.begin(), out.cycles.end(), [](const BergeCycle& a, const BergeCycle& b) {
    return *std::min_element(a.edges.begin(), a.edges.end()) <
           *std::min_element(b.edges.begin(), b.edges.end());
  });
  std::vector<std::size_t> owner(h.num_vertices(), kNone);
  for (std::size_t i = 0; i < out.cycles.size(); ++i) {
    for (VertexId v : cycle_vertices(h, out.cycles[i])) {
      if (owner[v] != kNone) {
        out.intersecting = std::make_pair(out.cycles[owner[v]], out.cycles[i]);
        return out;
      }
      owner[v] = i;
    }
  }
  return out;
}

void require_cycle(const Hypergraph& h, const BergeCycle& c) {
  if (!is_valid_cycle(h, c)) throw PreconditionError("not a cycle of the hypergraph");
}

// Cycle starting at joins[start] and running over edges start..start+count-1.
// The caller guarantees the last edge closes back to `first_join`.
BergeCycle arc_of(const BergeCycle& c, std::size_t start, std::size_t count, VertexId first_join) {
  const std::size_t k = c.length();
  BergeCycle out;
  out.joins.push_back(first_join);
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) out.joins.push_back(c.joins[(start + i) % k]);
    out.edges.push_back(c.edges[(start + i) % k]);
  }
  return out;
}

}  // namespace

bool is_valid_cycle(const Hypergraph& h, const BergeCycle& c) {
  const std::size_t k = c.length();
  if (k < 2 || c.joins.size() != k) return false;
  std::set<VertexId> joins(c.joins.begin(), c.joins.end());
  std::set<EdgeId> edges(c.edges.begin(), c.edges.end());
  if (joins.size() != k || edges.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const EdgeId e = c.edges[i];
    if (e >= h.num_edges() || c.joins[i] >= h.num_vertices()) return false;
    if (!h.edge_contains(e, c.joins[i]) || !h.edge_contains(e, c.joins[(i + 1) % k])) return false;
  }
  return true;
}

std::vector<VertexId> cycle_vertices(const Hypergraph& h, const BergeCycle& c) {
  std::vector<VertexId> out;
  for (EdgeId e : c.edges) {
    for (VertexId v : h.edge(e)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool same_cycle(const BergeCycle& a, const BergeCycle& b) {
  const std::size_t k = a.length();
  if (k != b.length()) return false;
  for (std::size_t shift = 0; shift < k; ++shift) {
    bool forward = true;
    bool backward = true;
    for (std::size_t i = 0; i < k && (forward || backward); ++i) {
      forward = forward && a.joins[i] == b.joins[(i + shift) % k] &&
                a.edges[i] == b.edges[(i + shift) % k];
      // Reversed b: joins b[s], b[s-1], ...; edge between b[s-i] and b[s-i-1] is edges[s-i-1].
      const std::size_t j = (shift + k - i % k) % k;
      backward = backward && a.joins[i] == b.joins[j] && a.edges[i] == b.edges[(j + k - 1) % k];
    }
    if (forward || backward) return true;
  }
  return false;
}

bool cycles_intersect(const Hypergraph& h, const BergeCycle& a, const BergeCycle& b) {
  const auto va = cycle_vertices(h, a);
  const auto vb = cycle_vertices(h, b);
  std::vector<VertexId> common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  return !common.empty();
}

std::optional<BergeCycle> find_cycle(const Hypergraph& h) {
  const IncidenceGraph g(h);
  auto nodes = find_node_cycle(g, nullptr);
  if (!nodes) return std::nullopt;
  return to_berge(g, std::move(*nodes));
}

bool is_acyclic(const Hypergraph& h) { return !find_cycle(h).has_value(); }

bool is_minimal_cycle(const BergeCycle& c, const Hypergraph& h) {
  require_cycle(h, c);
  const std::size_t k = c.length();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (j - i >= k - 1) continue;
      const Edge a = sorted(h.edge(c.edges[i]));
      const Edge b = sorted(h.edge(c.edges[j]));
      std::vector<VertexId> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (!common.empty()) return false;
    }
  }
  return true;
}

std::pair<BergeCycle, BergeCycle> split_cycle(const BergeCycle& c, const Hypergraph& h) {
  require_cycle(h, c);
  const std::size_t k = c.length();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (j - i >= k - 1) continue;
      const Edge a = sorted(h.edge(c.edges[i]));
      const Edge b = sorted(h.edge(c.edges[j]));
      std::vector<VertexId> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (common.empty()) continue;
      const VertexId x = common.front();

      auto join_pos = std::find(c.joins.begin(), c.joins.end(), x);
      if (join_pos == c.joins.end()) {
        // x lies off the sequence: both halves run through x and keep e_i, e_j.
        BergeCycle c1 = arc_of(c, i, j - i + 1, x);
        BergeCycle c2 = arc_of(c, j, k - (j - i) + 1, x);
        return {std::move(c1), std::move(c2)};
      }
      // x = v_t sits in a cycle edge e_s other than e_{t-1}, e_t: chord at v_t.
      const std::size_t t = static_cast<std::size_t>(join_pos - c.joins.begin());
      const auto incident = [&](std::size_t s) { return s == t || s == (t + k - 1) % k; };
      const std::size_t s = !incident(j) ? j : i;
      const std::size_t span = (s + k - t) % k;  // 1..k-2
      BergeCycle c1 = arc_of(c, t, span + 1, x);
      BergeCycle c2 = arc_of(c, s, k - span, x);
      return {std::move(c1), std::move(c2)};
    }
  }
  throw PreconditionError("split_cycle: cycle is minimal");
}

std::pair<BergeCycle, BergeCycle> minimal_cycle_pair(const Hypergraph& h, BergeCycle c1,
                                                     BergeCycle c2) {
  require_cycle(h, c1);
  require_cycle(h, c2);
  if (same_cycle(c1, c2)) throw PreconditionError("minimal_cycle_pair: cycles are not distinct");
  if (!cycles_intersect(h, c1, c2)) {
    throw PreconditionError("minimal_cycle_pair: cycles share no vertex");
  }
  while (true) {
    if (!is_minimal_cycle(c1, h)) {
      std::tie(c1, c2) = split_cycle(c1, h);
    } else if (!is_minimal_cycle(c2, h)) {
      std::tie(c1, c2) = split_cycle(c2, h);
    } else {
      return {std::move(c1), std::move(c2)};
    }
  }
}

std::optional<std::pair<BergeCycle, BergeCycle>> find_intersecting_cycles(const Hypergraph& h) {
  return scan_cycles(h).intersecting;
}

bool all_cycles_vertex_disjoint(const Hypergraph& h) {
  return !find_intersecting_cycles(h).has_value();
}

std::size_t components_after_removal(const Hypergraph& h, VertexId v) {
  if (v >= h.num_vertices()) throw PreconditionError("unknown vertex id");
  const std::size_t n = h.num_vertices();
  detail::UnionFind whole(n);
  detail::UnionFind rest(n);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const Edge& edge = h.edge(e);
    whole.unite(edge[0], edge[1]);
    whole.unite(edge[0], edge[2]);
    if (!h.edge_contains(e, v)) {
      rest.unite(edge[0], edge[1]);
      rest.unite(edge[0], edge[2]);
    }
  }
  std::set<std::size_t> roots;
  const std::size_t home = whole.find(v);
  for (VertexId u = 0; u < n; ++u) {
    if (u != v && whole.find(u) == home) roots.insert(rest.find(u));
  }
  return roots.size();
}

std::optional<LowCut> find_low_cut_vertex(const Hypergraph& h) {
  auto pair = find_intersecting_cycles(h);
  if (!pair) return std::nullopt;
  auto [c1, c2] = minimal_cycle_pair(h, std::move(pair->first), std::move(pair->second));

  std::vector<VertexId> candidates = cycle_vertices(h, c1);
  for (VertexId v : cycle_vertices(h, c2)) candidates.push_back(v);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  const auto by_degree = [&](VertexId a, VertexId b) {
    return std::make_pair(h.degree(a), a) < std::make_pair(h.degree(b), b);
  };
  std::sort(candidates.begin(), candidates.end(), by_degree);

  std::vector<char> tried(h.num_vertices(), 0);
  const auto attempt = [&](VertexId v) -> std::optional<LowCut> {
    tried[v] = 1;
    const std::size_t d = h.degree(v);
    if (d == 0) return std::nullopt;
    const std::size_t count = components_after_removal(h, v);
    if (count + 2 <= 2 * d) return LowCut{v, count, d};
    return std::nullopt;
  };
  for (VertexId v : candidates) {
    if (auto hit = attempt(v)) return hit;
  }
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (!tried[v]) rest.push_back(v);
  }
  std::sort(rest.begin(), rest.end(), by_degree);
  for (VertexId v : rest) {
    if (auto hit = attempt(v)) return hit;
  }
  return std::nullopt;
}

CycleTree build_cycle_tree(const Hypergraph& h) {
  if (!is_connected(h)) throw PreconditionError("build_cycle_tree: hypergraph is not connected");
  CycleScan scan = scan_cycles(h);
  if (scan.intersecting) {
    throw PreconditionError("build_cycle_tree: two cycles share a vertex");
  }
  CycleTree tree;
  tree.cycle_nodes = std::move(scan.cycles);

  std::vector<char> in_cycle(h.num_edges(), 0);
  for (const auto& c : tree.cycle_nodes) {
    for (EdgeId e : c.edges) in_cycle[e] = 1;
  }
  detail::UnionFind uf(h.num_edges());
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    EdgeId first = kNone;
    for (EdgeId e : h.incident(v)) {
      if (in_cycle[e]) continue;
      if (first == kNone) {
        first = e;
      } else {
        uf.unite(first, e);
      }
    }
  }
  std::vector<std::size_t> piece_of_root(h.num_edges(), kNone);
  std::vector<std::size_t> piece_of_edge(h.num_edges(), kNone);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (in_cycle[e]) continue;
    const std::size_t root = uf.find(e);
    if (piece_of_root[root] == kNone) {
      piece_of_root[root] = tree.tree_nodes.size();
      tree.tree_nodes.emplace_back();
    }
    piece_of_edge[e] = piece_of_root[root];
    tree.tree_nodes[piece_of_edge[e]].push_back(e);
  }
  for (std::size_t ci = 0; ci < tree.cycle_nodes.size(); ++ci) {
    std::set<std::size_t> touching;
    for (VertexId v : cycle_vertices(h, tree.cycle_nodes[ci])) {
      for (EdgeId e : h.incident(v)) {
        if (!in_cycle[e]) touching.insert(piece_of_edge[e]);
      }
    }
    for (std::size_t t : touching) tree.links.emplace_back(ci, t);
  }
  return tree;
}

}  // namespace tricover
