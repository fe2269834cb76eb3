#include "tricover/census.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tricover/errors.hpp"

namespace tricover {
namespace {

// Replaces each signature by its rank among the distinct signatures. Ranks
// depend only on signature values, so they survive relabeling.
template <typename Sig>
std::vector<std::uint32_t> rank(const std::vector<Sig>& sigs) {
  std::vector<Sig> distinct = sigs;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint32_t> out(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), sigs[i]) -
                                        distinct.begin());
  }
  return out;
}

std::size_t count_distinct(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

std::vector<std::uint32_t> edge_colours(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  std::vector<std::uint32_t> vcol(n);
  for (VertexId v = 0; v < n; ++v) vcol[v] = static_cast<std::uint32_t>(h.degree(v));
  std::vector<std::uint32_t> ecol(m, 0);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<std::uint32_t>> esig(m);
    for (EdgeId e = 0; e < m; ++e) {
      esig[e] = {ecol[e]};
      for (VertexId v : h.edge(e)) esig[e].push_back(vcol[v]);
      std::sort(esig[e].begin() + 1, esig[e].end());
    }
    ecol = rank(esig);
    std::vector<std::vector<std::uint32_t>> vsig(n);
    for (VertexId v = 0; v < n; ++v) {
      vsig[v] = {vcol[v]};
      for (EdgeId e : h.incident(v)) vsig[v].push_back(ecol[e]);
      std::sort(vsig[v].begin() + 1, vsig[v].end());
    }
    vcol = rank(vsig);
    const std::size_t now = count_distinct(ecol) + count_distinct(vcol);
    if (now == classes) break;
    classes = now;
  }
  return ecol;
}

std::string edge_key(std::size_t n, const std::vector<Edge>& edges) {
  std::string key = "n" + std::to_string(n) + ":";
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (j > 0) key += ';';
    key += std::to_string(edges[j][0] + 1) + "," + std::to_string(edges[j][1] + 1) + "," +
           std::to_string(edges[j][2] + 1);
  }
  return key;
}

}  // namespace

CanonicalForm canonical_form(const Hypergraph& h, std::uint64_t budget) {
  const std::size_t n = h.num_vertices();
  const std::size_t m = h.num_edges();
  if (m > 64) throw BudgetExceeded("canonical_form supports at most 64 edges");

  const auto colours = edge_colours(h);
  std::map<std::uint32_t, std::vector<EdgeId>> by_colour;
  for (EdgeId e = 0; e < m; ++e) by_colour[colours[e]].push_back(e);
  std::vector<std::vector<EdgeId>> cells;
  std::uint64_t orderings = 1;
  for (auto& [colour, cell] : by_colour) {
    for (std::uint64_t k = 2; k <= cell.size(); ++k) {
      orderings *= k;
      if (orderings > budget) {
        throw BudgetExceeded("canonical_form needs more than " + std::to_string(budget) + " edge orderings");
      }
    }
    cells.push_back(std::move(cell));
  }

  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> mask(n);
  while (true) {
    std::fill(mask.begin(), mask.end(), 0);
    std::size_t pos = 0;
    for (const auto& cell : cells) {
      for (EdgeId e : cell) {
        const std::uint64_t bit = std::uint64_t{1} << (m - 1 - pos);
        for (VertexId v : h.edge(e)) mask[v] |= bit;
        ++pos;
      }
    }
    std::sort(mask.begin(), mask.end(), std::greater<>());
    if (best.empty() || mask > best) best = mask;

    std::size_t i = 0;
    while (i < cells.size() && !std::next_permutation(cells[i].begin(), cells[i].end())) ++i;
    if (i == cells.size()) break;
  }

  std::vector<Edge> edges(m);
  std::vector<std::size_t> fill(m, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < m; ++j) {
      if (best[v] >> (m - 1 - j) & 1U) edges[j][fill[j]++] = v;
    }
  }
  std::vector<std::string> labels;
  for (std::size_t v = 1; v <= n; ++v) labels.push_back(std::to_string(v));
  CanonicalForm out;
  out.key = edge_key(n, edges);
  out.graph = Hypergraph(std::move(labels), std::move(edges));
  return out;
}

std::string canonical_key(const Hypergraph& h, std::uint64_t budget) {
  return canonical_form(h, budget).key;
}

std::vector<Hypergraph> enumerate_connected(std::size_t max_m) {
  if (max_m > 5) throw BudgetExceeded("enumerate_connected supports max_m <= 5");
  std::vector<Hypergraph> out;
  if (max_m == 0) return out;

  std::map<std::string, Hypergraph> level;
  {
    auto single = canonical_form(Hypergraph::from_triples({{1, 2, 3}}));
    level.emplace(std::move(single.key), std::move(single.graph));
  }
  for (std::size_t m = 1;; ++m) {
    for (const auto& [key, g] : level) out.push_back(g);
    if (m == max_m) break;

    std::map<std::string, Hypergraph> next;
    for (const auto& [key, g] : level) {
      const auto n = static_cast<VertexId>(g.num_vertices());
      std::set<Edge> present;
      for (const Edge& e : g.edges()) present.insert(sorted(e));
      std::vector<std::string> labels(g.labels().begin(), g.labels().end());
      const std::vector<Edge> base(g.edges().begin(), g.edges().end());

      const auto add = [&](Edge e, std::size_t fresh) {
        std::vector<std::string> l = labels;
        for (std::size_t i = 0; i < fresh; ++i) l.push_back(std::to_string(n + i + 1));
        std::vector<Edge> edges = base;
        edges.push_back(e);
        auto form = canonical_form(Hypergraph(std::move(l), std::move(edges)));
        next.try_emplace(std::move(form.key), std::move(form.graph));
      };
      for (VertexId a = 0; a < n; ++a) {
        add({a, n, n + 1}, 2);
        for (VertexId b = a + 1; b < n; ++b) {
          add({a, b, n}, 1);
          for (VertexId c = b + 1; c < n; ++c) {
            if (!present.count({a, b, c})) add({a, b, c}, 0);
          }
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace tricover
