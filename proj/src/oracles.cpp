#include "splitex/oracles.hpp"

#include <algorithm>
#include <string>

#include "splitex/errors.hpp"

namespace splitex {

namespace {

class SplitSearch {
 public:
  SplitSearch(const Graph& g, int p, int q) : g_(g), p_(p), q_(q) {}

  std::optional<ContainmentWitness> run(VertexSet within) {
    if (expand(VertexSet{}, within & g_.vertices(), g_.vertices())) return found_;
    return std::nullopt;
  }

 private:
  // `common` holds the vertices adjacent to everything in `chosen`; the
  // remaining clique members and all apex vertices must come from it.
  bool expand(VertexSet chosen, VertexSet candidates, VertexSet common) {
    const int have = chosen.size();
    if (have == p_) {
      if (common.size() < q_) return false;
      VertexSet apex;
      for (int v : common) {
        if (apex.size() == q_) break;
        apex = apex.with(v);
      }
      found_ = ContainmentWitness{chosen, apex};
      return true;
    }
    const int still_needed = p_ - have - 1;
    for (int v : candidates) {
      const VertexSet next_common = common & g_.neighbors(v);
      if (next_common.size() < still_needed + q_) continue;
      const VertexSet later = VertexSet(~VertexSet::range(v + 1).bits());
      const VertexSet next_candidates = candidates & next_common & later;
      if (next_candidates.size() < still_needed) continue;
      if (expand(chosen.with(v), next_candidates, next_common)) return true;
    }
    return false;
  }

  const Graph& g_;
  int p_;
  int q_;
  ContainmentWitness found_;
};

void max_clique(const Graph& g, VertexSet current, VertexSet candidates, int& best) {
  if (candidates.empty()) {
    best = std::max(best, current.size());
    return;
  }
  while (!candidates.empty()) {
    if (current.size() + candidates.size() <= best) return;
    const int v = candidates.first();
    max_clique(g, current.with(v), candidates & g.neighbors(v), best);
    candidates = candidates.without(v);
  }
}

class Colorer {
 public:
  Colorer(const Graph& g, int k) : g_(g), k_(k), color_(static_cast<std::size_t>(g.order()), -1) {}

  std::optional<std::vector<int>> run() {
    if (k_ >= 1 && assign(0, -1)) return color_;
    return std::nullopt;
  }

  /// One pass of DSATUR without backtracking.
  std::vector<int> greedy() {
    for (int step = 0; step < g_.order(); ++step) {
      const int v = pick();
      const std::uint64_t used = neighbor_colors(v);
      color_[static_cast<std::size_t>(v)] = std::countr_one(used);
    }
    return color_;
  }

 private:
  std::uint64_t neighbor_colors(int v) const {
    std::uint64_t used = 0;
    for (int u : g_.neighbors(v)) {
      const int c = color_[static_cast<std::size_t>(u)];
      if (c >= 0) used |= std::uint64_t{1} << c;
    }
    return used;
  }

  // most saturated uncolored vertex, lowest index on ties
  int pick() const {
    int best = -1;
    int best_sat = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (color_[static_cast<std::size_t>(v)] >= 0) continue;
      const int sat = std::popcount(neighbor_colors(v));
      if (sat > best_sat) {
        best = v;
        best_sat = sat;
      }
    }
    return best;
  }

  bool assign(int colored, int max_used) {
    if (colored == g_.order()) return true;
    const int v = pick();
    const std::uint64_t used = neighbor_colors(v);
    const int limit = std::min(k_ - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if ((used >> c) & 1U) continue;
      color_[static_cast<std::size_t>(v)] = c;
      if (assign(colored + 1, std::max(max_used, c))) return true;
    }
    color_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
};

}  // namespace

std::optional<ContainmentWitness> contains_complete_split(const Graph& g, int p, int q) {
  return contains_complete_split(g, p, q, g.vertices());
}

std::optional<ContainmentWitness> contains_complete_split(const Graph& g, int p, int q, VertexSet within) {
  if (p < 2 || q < 1)
    throw DomainError("complete split pattern needs p >= 2 and q >= 1, got p=" + std::to_string(p) +
                      " q=" + std::to_string(q));
  if (p + q > g.order()) return std::nullopt;
  return SplitSearch(g, p, q).run(within);
}

std::optional<VertexSet> contains_clique(const Graph& g, int k) {
  if (k < 1) throw DomainError("clique size must be at least 1");
  if (k == 1) return VertexSet::single(0);
  if (k == 2) {
    for (int u = 0; u < g.order(); ++u)
      if (!g.neighbors(u).empty()) return VertexSet{u, g.neighbors(u).first()};
    return std::nullopt;
  }
  if (auto w = contains_complete_split(g, k - 1, 1)) return w->clique | w->apex;
  return std::nullopt;
}

int clique_number(const Graph& g) {
  int best = 1;
  max_clique(g, VertexSet{}, g.vertices(), best);
  return best;
}

std::optional<std::vector<int>> k_coloring(const Graph& g, int k) {
  if (k < 1) throw DomainError("number of colors must be at least 1");
  if (k > kMaxVertices) k = kMaxVertices;
  return Colorer(g, k).run();
}

ColoringResult chromatic_number(const Graph& g) {
  std::vector<int> greedy = Colorer(g, kMaxVertices).greedy();
  const int upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
  for (int k = clique_number(g); k < upper; ++k)
    if (auto coloring = k_coloring(g, k)) return {k, std::move(*coloring)};
  return {upper, std::move(greedy)};
}

bool is_k_partite(const Graph& g, int k) {
  if (k < 1) throw DomainError("k-partiteness needs k >= 1");
  if (k >= g.order()) return true;
  return k_coloring(g, k).has_value();
}

bool is_edge_color_critical(const Graph& g) {
  if (g.edge_count() == 0) throw DomainError("edge-color-criticality undefined on edgeless graph");
  const int chi = chromatic_number(g).chi;
  for (auto [u, v] : g.edges())
    if (is_k_partite(g.without_edge(u, v), chi - 1)) return true;
  return false;
}

bool is_proper_coloring(const Graph& g, std::span<const int> coloring) {
  if (coloring.size() != static_cast<std::size_t>(g.order())) return false;
  for (int c : coloring)
    if (c < 0) return false;
  for (auto [u, v] : g.edges())
    if (coloring[static_cast<std::size_t>(u)] == coloring[static_cast<std::size_t>(v)]) return false;
  return true;
}

long intersection_lower_bound(std::span<const long> sizes, long union_size) {
  if (sizes.empty()) throw DomainError("need at least one set");
  long sum = 0;
  for (long s : sizes) {
    if (s < 0) throw DomainError("set sizes must be nonnegative");
    if (s > union_size) throw DomainError("union cannot be smaller than a member");
    sum += s;
  }
  return sum - static_cast<long>(sizes.size() - 1) * union_size;
}

}  // namespace splitex
