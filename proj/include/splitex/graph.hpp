#pragma once

// Simple undirected graphs on at most 64 labeled vertices, one adjacency word
// per vertex, plus graph6 serialization.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace splitex {

inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;

/// A set of vertex labels in [0, 64).
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Lowest member, or -1 when empty.
  constexpr int first() const { return bits_ ? std::countr_zero(bits_) : -1; }
  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple graph. Every operation that rewrites edges returns a new
/// value; adjacency is symmetric and loop-free by construction.
class Graph {
 public:
  /// The single-vertex graph K_1.
  Graph() = default;

  static Graph empty(int n);
  static Graph complete(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges);
  /// Rows must be symmetric, loop-free and confined to {0..n-1}.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows);

  int order() const { return n_; }
  int edge_count() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int max_degree() const;
  int min_degree() const;
  std::vector<Edge> edges() const;
  std::span<const std::uint64_t> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  /// Appends vertex `order()` adjacent to `neighbors`.
  Graph with_vertex(VertexSet neighbors) const;
  /// Same vertex set and E(*this) ⊆ E(other).
  bool is_subgraph_of(const Graph& other) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphBuilder;
  void check_vertex(int v) const;

  int n_ = 1;
  int m_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Mutable staging area for building a Graph edge by edge.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const { return g_.n_; }
  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
  Graph build() const { return g_; }

 private:
  Graph g_;
};

/// Ordered list of pairwise disjoint vertex classes.
class VertexPartition {
 public:
  VertexPartition() = default;
  explicit VertexPartition(std::vector<VertexSet> classes);

  const std::vector<VertexSet>& classes() const { return classes_; }
  int count() const { return static_cast<int>(classes_.size()); }
  VertexSet operator[](int i) const { return classes_.at(static_cast<std::size_t>(i)); }
  VertexSet support() const;
  /// Union of the classes equals `universe`.
  bool covers(VertexSet universe) const { return support() == universe; }
  bool covers(const Graph& g) const { return covers(g.vertices()); }
  /// Index of the class holding v, or -1.
  int class_of(int v) const;
  std::vector<int> sizes() const;

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  std::vector<VertexSet> classes_;
};

/// G1 ∇ G2: disjoint union plus every edge between the two vertex sets.
/// Vertices of g2 are shifted by g1.order().
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);
/// G[U] relabeled 0..|U|-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
/// G[U] relabeled in increasing label order.
Graph induced_subgraph(const Graph& g, VertexSet vertices);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);
/// Newline-delimited graph6; blank lines and a leading ">>graph6<<" header are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
void write_graph6_stream(std::ostream& out, std::span<const Graph> graphs);

}  // namespace splitex
