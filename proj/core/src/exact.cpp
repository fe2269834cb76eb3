#include <algorithm>
#include <limits>

#include "tricover/errors.hpp"
#include "tricover/solver.hpp"

namespace tricover {
namespace {

void check_budget(const Hypergraph& h, const SolverOptions& options) {
  if (h.num_edges() > options.budget) {
    throw BudgetExceeded("instance has " + std::to_string(h.num_edges()) +
                         " edges, exactness budget is " + std::to_string(options.budget));
  }
}

class TauSearch {
 public:
  explicit TauSearch(const Hypergraph& h) : h_(h), state_(h.num_vertices(), kFree), stamp_(h.num_vertices(), 0) {
    edges_.reserve(h.num_edges());
    for (const Edge& e : h.edges()) edges_.push_back(sorted(e));
    best_ = greedy_cover();
  }

  std::vector<VertexId> run() {
    search();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  static constexpr std::uint8_t kFree = 0;
  static constexpr std::uint8_t kChosen = 1;
  static constexpr std::uint8_t kExcluded = 2;
  static constexpr std::size_t kInfeasible = std::numeric_limits<std::size_t>::max() / 2;

  bool covered(const Edge& e) const {
    return state_[e[0]] == kChosen || state_[e[1]] == kChosen || state_[e[2]] == kChosen;
  }

  // Disjoint uncovered edges each need their own cover vertex.
  std::size_t lower_bound() {
    ++clock_;
    std::size_t packed = 0;
    for (const Edge& e : edges_) {
      if (covered(e)) continue;
      if (state_[e[0]] == kExcluded && state_[e[1]] == kExcluded && state_[e[2]] == kExcluded) {
        return kInfeasible;
      }
      if (stamp_[e[0]] == clock_ || stamp_[e[1]] == clock_ || stamp_[e[2]] == clock_) continue;
      for (VertexId v : e) stamp_[v] = clock_;
      ++packed;
    }
    return packed;
  }

  void search() {
    auto open = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return !covered(e); });
    if (open == edges_.end()) {
      if (current_.size() < best_.size()) best_ = current_;
      return;
    }
    if (current_.size() + lower_bound() >= best_.size()) return;

    const Edge e = *open;
    std::vector<VertexId> excluded_here;
    for (VertexId x : e) {
      if (state_[x] == kExcluded) continue;
      state_[x] = kChosen;
      current_.push_back(x);
      search();
      current_.pop_back();
      state_[x] = kExcluded;
      excluded_here.push_back(x);
    }
    for (VertexId x : excluded_here) state_[x] = kFree;
  }

  std::vector<VertexId> greedy_cover() const {
    std::vector<char> done(edges_.size(), 0);
    std::vector<VertexId> cover;
    std::size_t remaining = edges_.size();
    while (remaining > 0) {
      VertexId pick = 0;
      std::size_t best_count = 0;
      for (VertexId v = 0; v < h_.num_vertices(); ++v) {
        std::size_t count = 0;
        for (EdgeId e : h_.incident(v)) count += done[e] ? 0 : 1;
        if (count > best_count) {
          best_count = count;
          pick = v;
        }
      }
      cover.push_back(pick);
      for (EdgeId e : h_.incident(pick)) {
        if (!done[e]) {
          done[e] = 1;
          --remaining;
        }
      }
    }
    return cover;
  }

  const Hypergraph& h_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> state_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t clock_ = 0;
  std::vector<VertexId> current_;
  std::vector<VertexId> best_;
};

class NuSearch {
 public:
  explicit NuSearch(const Hypergraph& h) : h_(h), used_(h.num_vertices(), 0), ceiling_(h.num_vertices() / 3) {
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      if (fits(e)) take(e, best_);
    }
    std::fill(used_.begin(), used_.end(), 0);
  }

  std::vector<EdgeId> run() {
    if (best_.size() < ceiling_) search(0);
    return best_;
  }

 private:
  bool fits(EdgeId e) const {
    const Edge& edge = h_.edge(e);
    return !used_[edge[0]] && !used_[edge[1]] && !used_[edge[2]];
  }

  void take(EdgeId e, std::vector<EdgeId>& into) {
    for (VertexId v : h_.edge(e)) used_[v] = 1;
    into.push_back(e);
  }

  void search(EdgeId next) {
    if (done_) return;
    if (next == h_.num_edges()) {
      if (current_.size() > best_.size()) {
        best_ = current_;
        done_ = best_.size() >= ceiling_;
      }
      return;
    }
    std::size_t compatible = 0;
    for (EdgeId e = next; e < h_.num_edges(); ++e) compatible += fits(e) ? 1 : 0;
    const std::size_t free_vertices = h_.num_vertices() - 3 * current_.size();
    if (current_.size() + std::min(compatible, free_vertices / 3) <= best_.size()) return;

    if (fits(next)) {
      take(next, current_);
      search(next + 1);
      current_.pop_back();
      for (VertexId v : h_.edge(next)) used_[v] = 0;
    }
    search(next + 1);
  }

  const Hypergraph& h_;
  std::vector<char> used_;
  std::size_t ceiling_;
  bool done_ = false;
  std::vector<EdgeId> current_;
  std::vector<EdgeId> best_;
};

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::exact:
      return "exact";
    case Method::hypertree:
      return "hypertree";
    case Method::constructive:
      return "constructive";
    case Method::fallback:
      return "fallback";
  }
  return "unknown";
}

SolveResult exact_tau(const Hypergraph& h, const SolverOptions& options) {
  check_budget(h, options);
  SolveResult out;
  Cover cover{TauSearch(h).run()};
  out.size = cover.size();
  out.certificate = std::move(cover);
  out.method = Method::exact;
  out.bound = Bound::for_edges(h.num_edges());
  out.tight = out.bound.attained_by(out.size);
  return out;
}

SolveResult exact_nu(const Hypergraph& h, const SolverOptions& options) {
  check_budget(h, options);
  SolveResult out;
  Matching matching{NuSearch(h).run()};
  std::sort(matching.edges.begin(), matching.edges.end());
  out.size = matching.size();
  out.certificate = std::move(matching);
  out.method = Method::exact;
  out.bound = Bound::for_edges(h.num_edges());
  out.tight = out.bound.attained_by(out.size);
  return out;
}

}  // namespace tricover
