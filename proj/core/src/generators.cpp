#include "tricover/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "tricover/errors.hpp"
#include "tricover/random.hpp"

namespace tricover {
namespace {

using Triple = std::array<int, 3>;

Hypergraph build(const std::vector<Triple>& triples) {
  return Hypergraph::from_triples(std::span<const Triple>(triples));
}

std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

std::vector<Triple> cycle_triples(std::size_t k, bool linear) {
  std::vector<Triple> out;
  const int kk = static_cast<int>(k);
  if (linear) {
    for (int i = 0; i < kk; ++i) out.push_back({2 * i + 1, 2 * i + 2, (2 * i + 2) % (2 * kk) + 1});
  } else if (k == 2) {
    out = {{1, 2, 3}, {1, 2, 4}};
  } else {
    for (int i = 0; i < kk; ++i) out.push_back({i + 1, (i + 1) % kk + 1, kk + 1});
  }
  return out;
}

// Relabels vertices 1..n by a random permutation and shuffles edge order.
std::vector<Triple> scramble(std::vector<Triple> triples, int n, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  rng.shuffle(perm);
  for (Triple& t : triples) {
    for (int& v : t) v = perm[static_cast<std::size_t>(v - 1)];
  }
  rng.shuffle(triples);
  return triples;
}

}  // namespace

Hypergraph gen_hypertree_pm(std::size_t m, std::uint64_t seed) {
  if (m % 3 != 1) throw PreconditionError("hypertree-pm needs m = 1 (mod 3), got m = " + std::to_string(m));
  Rng rng(seed);
  const int matched = static_cast<int>((2 * m + 1) / 3);
  std::vector<Triple> triples;
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < matched; ++i) {
    triples.push_back({3 * i + 1, 3 * i + 2, 3 * i + 3});
    comps.push_back({3 * i + 1, 3 * i + 2, 3 * i + 3});
  }
  while (comps.size() > 1) {
    std::vector<std::size_t> pick(comps.size());
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    rng.shuffle(pick);
    pick.resize(3);
    Triple connector{};
    std::vector<int> merged;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& comp = comps[pick[i]];
      connector[i] = comp[rng.below(comp.size())];
      merged.insert(merged.end(), comp.begin(), comp.end());
    }
    triples.push_back(connector);
    std::sort(pick.begin(), pick.end(), std::greater<>());
    for (std::size_t idx : pick) comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(idx));
    comps.push_back(std::move(merged));
  }
  return build(scramble(std::move(triples), 3 * matched, rng));
}

Hypergraph gen_random_connected(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m == 0) {
    if (n != 1) throw PreconditionError("a connected hypergraph without edges has exactly one vertex");
    return Hypergraph({"1"}, {});
  }
  if (n < 3 || n > 2 * m + 1 || m > choose3(n)) {
    throw PreconditionError("infeasible parameters n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  Rng rng(seed);
  std::vector<Triple> triples{{1, 2, 3}};
  std::set<Triple> present{{1, 2, 3}};
  int placed = 3;
  const int total = static_cast<int>(n);
  while (placed < total) {
    const int remaining = total - placed;
    const std::size_t edges_left = m - triples.size() - 1;
    // One new vertex is allowed only if the spanning part still fits in m.
    const bool one_ok = placed >= 2 && edges_left >= static_cast<std::size_t>(remaining) / 2;
    const bool two_ok = remaining >= 2;
    const int fresh = (two_ok && (!one_ok || rng.coin())) ? 2 : 1;
    Triple t{};
    if (fresh == 2) {
      t = {static_cast<int>(rng.below(placed)) + 1, placed + 1, placed + 2};
    } else {
      const int a = static_cast<int>(rng.below(placed));
      int b = static_cast<int>(rng.below(placed - 1));
      if (b >= a) ++b;
      t = {a + 1, b + 1, placed + 1};
    }
    placed += fresh;
    Triple key = t;
    std::sort(key.begin(), key.end());
    present.insert(key);
    triples.push_back(t);
  }

  const std::size_t extra = m - triples.size();
  if (choose3(n) <= 4096) {
    std::vector<Triple> absent;
    for (int a = 1; a <= total; ++a) {
      for (int b = a + 1; b <= total; ++b) {
        for (int c = b + 1; c <= total; ++c) {
          if (!present.count({a, b, c})) absent.push_back({a, b, c});
        }
      }
    }
    rng.shuffle(absent);
    triples.insert(triples.end(), absent.begin(), absent.begin() + static_cast<std::ptrdiff_t>(extra));
  } else {
    while (triples.size() < m) {
      Triple t{static_cast<int>(rng.below(n)) + 1, static_cast<int>(rng.below(n)) + 1,
               static_cast<int>(rng.below(n)) + 1};
      std::sort(t.begin(), t.end());
      if (t[0] == t[1] || t[1] == t[2] || !present.insert(t).second) continue;
      triples.push_back(t);
    }
  }
  return build(scramble(std::move(triples), total, rng));
}

Hypergraph random_instance(std::uint64_t seed, std::uint64_t index, std::size_t max_m) {
  const std::uint64_t stream = derive_seed(seed, index);
  Rng rng(stream);
  const std::size_t m = rng.between(1, max_m);
  std::size_t n_min = 3;
  while (choose3(n_min) < m) ++n_min;
  const std::size_t n = rng.between(n_min, 2 * m + 1);
  return gen_random_connected(n, m, derive_seed(stream, 0));
}

Hypergraph gen_cycle(std::size_t k, bool linear) {
  if (k < 2 || (linear && k < 3)) {
    throw PreconditionError(linear ? "a linear cycle needs k >= 3" : "a cycle needs k >= 2");
  }
  return build(cycle_triples(k, linear));
}

CycleInstance gen_non_minimal_cycle(std::uint64_t seed) {
  Rng rng(seed);
  while (true) {
    const std::size_t k = rng.between(4, 10);
    const auto join = [&](std::size_t i) { return static_cast<int>(2 * (i % k) + 1); };
    std::vector<Triple> triples;
    for (std::size_t i = 0; i < k; ++i) triples.push_back({join(i), join(i + 1), join(i) + 1});

    const std::size_t chords = rng.between(1, 3);
    for (std::size_t c = 0; c < chords; ++c) {
      const std::size_t j = rng.below(k);
      const std::size_t i = (j + rng.between(2, k - 2)) % k;
      if (rng.coin()) {
        triples[j][2] = triples[i][2];
      } else {
        triples[j][2] = join(j + rng.between(2, k - 1));
      }
    }

    Hypergraph h;
    try {
      h = build(triples);
    } catch (const PreconditionError&) {
      continue;
    }
    BergeCycle cycle;
    for (std::size_t i = 0; i < k; ++i) {
      cycle.joins.push_back(*h.find(std::to_string(join(i))));
      cycle.edges.push_back(static_cast<EdgeId>(i));
    }
    if (is_minimal_cycle(cycle, h)) continue;
    return {std::move(h), std::move(cycle)};
  }
}

Hypergraph gen_intersecting_cycles(std::uint64_t seed) {
  Rng rng(seed);
  const auto random_cycle = [&](int offset) {
    std::vector<Triple> t;
    switch (rng.below(3)) {
      case 0:
        t = cycle_triples(rng.between(3, 6), true);
        break;
      case 1:
        t = cycle_triples(2, false);
        break;
      default:
        t = cycle_triples(rng.between(3, 5), false);
        break;
    }
    for (Triple& e : t) {
      for (int& v : e) v += offset;
    }
    return t;
  };
  const auto vertices_of = [](const std::vector<Triple>& t) {
    std::set<int> s;
    for (const Triple& e : t) s.insert(e.begin(), e.end());
    return std::vector<int>(s.begin(), s.end());
  };

  std::vector<Triple> a = random_cycle(0);
  std::vector<Triple> b = random_cycle(100);
  const auto va = vertices_of(a);
  const auto vb = vertices_of(b);
  const std::size_t glue_points = rng.coin() ? 2 : 1;
  std::vector<int> from;
  std::vector<int> to;
  while (from.size() < glue_points) {
    const int x = vb[rng.below(vb.size())];
    const int y = va[rng.below(va.size())];
    if (std::find(from.begin(), from.end(), x) != from.end()) continue;
    if (std::find(to.begin(), to.end(), y) != to.end()) continue;
    from.push_back(x);
    to.push_back(y);
  }
  for (Triple& e : b) {
    for (int& v : e) {
      auto it = std::find(from.begin(), from.end(), v);
      if (it != from.end()) v = to[static_cast<std::size_t>(it - from.begin())];
    }
  }

  std::vector<Triple> triples = a;
  triples.insert(triples.end(), b.begin(), b.end());
  std::set<Triple> present;
  for (Triple t : triples) {
    std::sort(t.begin(), t.end());
    present.insert(t);
  }
  std::vector<int> pool = vertices_of(triples);
  int next_label = 1000;
  for (std::size_t p = rng.between(0, 4); p > 0; --p) {
    const int x = pool[rng.below(pool.size())];
    triples.push_back({x, next_label, next_label + 1});
    Triple key{x, next_label, next_label + 1};
    std::sort(key.begin(), key.end());
    present.insert(key);
    pool.push_back(next_label);
    pool.push_back(next_label + 1);
    next_label += 2;
  }
  for (std::size_t q = rng.between(0, 2); q > 0; --q) {
    Triple t{pool[rng.below(pool.size())], pool[rng.below(pool.size())], pool[rng.below(pool.size())]};
    Triple key = t;
    std::sort(key.begin(), key.end());
    if (key[0] == key[1] || key[1] == key[2] || !present.insert(key).second) continue;
    triples.push_back(t);
  }
  rng.shuffle(triples);
  return build(triples);
}

}  // namespace tricover
