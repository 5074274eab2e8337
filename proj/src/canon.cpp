#include "splitex/canon.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "splitex/canon_detail.hpp"

namespace splitex {

namespace detail {

void refine(const Graph& g, Cells& cells) {
  const auto rows = g.rows();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
      const std::uint64_t splitter = cells[w];
      for (std::size_t x = 0; x < cells.size(); ++x) {
        const std::uint64_t cell = cells[x];
        if ((cell & (cell - 1)) == 0) continue;
        const int first = std::popcount(rows[static_cast<std::size_t>(std::countr_zero(cell))] & splitter);
        bool uniform = true;
        for (int v : VertexSet(cell)) {
          if (std::popcount(rows[static_cast<std::size_t>(v)] & splitter) != first) {
            uniform = false;
            break;
          }
        }
        if (uniform) continue;

        std::array<std::uint64_t, kMaxVertices + 1> buckets{};
        for (int v : VertexSet(cell))
          buckets[static_cast<std::size_t>(std::popcount(rows[static_cast<std::size_t>(v)] & splitter))] |=
              std::uint64_t{1} << v;
        Cells pieces;
        for (std::uint64_t b : buckets)
          if (b) pieces.push_back(b);
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

}  // namespace detail

namespace {

using detail::Cells;
using Rows = std::array<std::uint64_t, kMaxVertices>;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
  }

 private:
  std::vector<int> parent_;
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run(Cells start) {
    node(std::move(start), 0);
    CanonicalForm out;
    out.graph = Graph::from_rows(n_, std::span<const std::uint64_t>(best_rows_.data(), static_cast<std::size_t>(n_)));
    out.label = best_label_;
    out.orbits = orbits_of(n_, generators_);
    out.generators = std::move(generators_);
    return out;
  }

 private:
  // Returns the depth the search should unwind to, or -1 to carry on.
  int node(Cells cells, int depth) {
    detail::refine(g_, cells);
    if (static_cast<int>(cells.size()) == n_) return leaf(cells);

    std::size_t target = 0;
    while ((cells[target] & (cells[target] - 1)) == 0) ++target;
    const std::uint64_t cell = cells[target];

    std::vector<int> tried;
    for (int v : VertexSet(cell)) {
      if (!tried.empty() && equivalent_to_tried(v, tried, depth)) continue;
      tried.push_back(v);

      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(std::uint64_t{1} << v);
      child.push_back(cell & ~(std::uint64_t{1} << v));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());

      path_.push_back(v);
      const int back = node(std::move(child), depth + 1);
      path_.pop_back();
      if (back >= 0 && back < depth) return back;
    }
    return -1;
  }

  // v is skipped when a known automorphism fixing the current prefix maps it
  // onto an already explored sibling.
  bool equivalent_to_tried(int v, const std::vector<int>& tried, int depth) {
    UnionFind uf(n_);
    bool any = false;
    for (const Permutation& gamma : generators_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) {
        const int w = path_[static_cast<std::size_t>(i)];
        fixes = gamma[static_cast<std::size_t>(w)] == w;
      }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) uf.unite(x, gamma[static_cast<std::size_t>(x)]);
    }
    if (!any) return false;
    const int root = uf.find(v);
    return std::any_of(tried.begin(), tried.end(), [&](int t) { return uf.find(t) == root; });
  }

  int leaf(const Cells& cells) {
    std::vector<int> label(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cells.size(); ++i)
      label[static_cast<std::size_t>(std::countr_zero(cells[i]))] = static_cast<int>(i);
    Rows rows{};
    for (int v = 0; v < n_; ++v) {
      std::uint64_t r = 0;
      for (int u : g_.neighbors(v)) r |= std::uint64_t{1} << label[static_cast<std::size_t>(u)];
      rows[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = r;
    }

    if (!have_first_) {
      have_first_ = true;
      first_rows_ = best_rows_ = rows;
      first_label_ = best_label_ = label;
      first_path_ = best_path_ = path_;
      return -1;
    }
    if (same(rows, first_rows_)) {
      add_generator(first_label_, label);
      return common_prefix(first_path_);
    }
    const int cmp = compare(rows, best_rows_);
    if (cmp == 0) {
      add_generator(best_label_, label);
      return common_prefix(best_path_);
    }
    if (cmp > 0) {
      best_rows_ = rows;
      best_label_ = label;
      best_path_ = path_;
    }
    return -1;
  }

  bool same(const Rows& a, const Rows& b) const { return compare(a, b) == 0; }

  int compare(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i) {
      const auto x = a[static_cast<std::size_t>(i)];
      const auto y = b[static_cast<std::size_t>(i)];
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }

  void add_generator(const std::vector<int>& reference, const std::vector<int>& label) {
    std::vector<int> inverse(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) inverse[static_cast<std::size_t>(reference[static_cast<std::size_t>(v)])] = v;
    Permutation gamma(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[static_cast<std::size_t>(v)] = inverse[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
      identity = identity && gamma[static_cast<std::size_t>(v)] == v;
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  int common_prefix(const std::vector<int>& other) const {
    std::size_t k = 0;
    while (k < path_.size() && k < other.size() && path_[k] == other[k]) ++k;
    return static_cast<int>(k);
  }

  const Graph& g_;
  int n_;
  std::vector<int> path_;
  bool have_first_ = false;
  Rows first_rows_{};
  Rows best_rows_{};
  std::vector<int> first_label_;
  std::vector<int> best_label_;
  std::vector<int> first_path_;
  std::vector<int> best_path_;
  std::vector<Permutation> generators_;
};

}  // namespace

namespace detail {

CanonicalForm canonical_form_from(const Graph& g, Cells start) { return CanonSearch(g).run(std::move(start)); }

}  // namespace detail

std::vector<VertexSet> equitable_refinement(const Graph& g, std::vector<VertexSet> cells) {
  Cells raw;
  raw.reserve(cells.size());
  for (VertexSet c : cells) raw.push_back(c.bits());
  detail::refine(g, raw);
  std::vector<VertexSet> out;
  out.reserve(raw.size());
  for (std::uint64_t c : raw) out.emplace_back(c);
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return detail::canonical_form_from(g, {g.vertices().bits()}); }

std::string canonical_graph6(const Graph& g) { return encode_graph6(canonical_form(g).graph); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

std::vector<int> orbits_of(int n, const std::vector<Permutation>& generators) {
  UnionFind uf(n);
  for (const Permutation& gamma : generators)
    for (int x = 0; x < n; ++x) uf.unite(x, gamma[static_cast<std::size_t>(x)]);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) out[static_cast<std::size_t>(x)] = uf.find(x);
  return out;
}

}  // namespace splitex
