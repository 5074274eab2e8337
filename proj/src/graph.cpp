#include "splitex/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "splitex/errors.hpp"

namespace splitex {

namespace {

void check_order(int n) {
  if (n < 1) throw DomainError("graph must have at least one vertex");
  if (n > kMaxVertices)
    throw CapacityError("graph order " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kMaxVertices));
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw DomainError("vertex label out of range");
    bits_ |= std::uint64_t{1} << v;
  }
}

std::vector<int> VertexSet::to_vector() const { return {begin(), end()}; }

// ---------------------------------------------------------------- Graph

Graph Graph::empty(int n) {
  check_order(n);
  Graph g;
  g.n_ = n;
  return g;
}

Graph Graph::complete(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
  check_order(n);
  if (rows.size() != static_cast<std::size_t>(n)) throw DomainError("row count differs from order");
  const std::uint64_t universe = VertexSet::range(n).bits();
  Graph g = empty(n);
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t row = rows[static_cast<std::size_t>(v)];
    if (row & ~universe) throw DomainError("adjacency row references a vertex outside the graph");
    if ((row >> v) & 1U) throw DomainError("loop at vertex " + std::to_string(v));
    g.adj_[static_cast<std::size_t>(v)] = row;
    degree_sum += std::popcount(row);
  }
  for (int v = 0; v < n; ++v)
    for (int u : VertexSet(g.adj_[static_cast<std::size_t>(v)]))
      if (!g.adjacent(u, v)) throw DomainError("adjacency rows are not symmetric");
  g.m_ = degree_sum / 2;
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw DomainError("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u) - VertexSet::range(u + 1)) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  GraphBuilder b(*this);
  b.add_edge(u, v);
  return b.build();
}

Graph Graph::without_edge(int u, int v) const {
  GraphBuilder b(*this);
  b.remove_edge(u, v);
  return b.build();
}

Graph Graph::with_vertex(VertexSet nbrs) const {
  if (n_ + 1 > kMaxVertices) throw CapacityError("adding a vertex exceeds capacity");
  if (!nbrs.is_subset_of(vertices())) throw DomainError("new vertex adjacent to unknown vertex");
  Graph g = *this;
  const int x = n_;
  g.n_ = n_ + 1;
  g.adj_[static_cast<std::size_t>(x)] = nbrs.bits();
  for (int v : nbrs) g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << x;
  g.m_ = m_ + nbrs.size();
  return g;
}

bool Graph::is_subgraph_of(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (!neighbors(v).is_subset_of(other.neighbors(v))) return false;
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

// --------------------------------------------------------- GraphBuilder

GraphBuilder::GraphBuilder(int n) : g_(Graph::empty(n)) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  if (!g_.adjacent(u, v)) {
    g_.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    g_.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    ++g_.m_;
  }
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (g_.adjacent(u, v)) {
    g_.adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    g_.adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    --g_.m_;
  }
  return *this;
}

// ------------------------------------------------------ VertexPartition

VertexPartition::VertexPartition(std::vector<VertexSet> classes) : classes_(std::move(classes)) {
  VertexSet seen;
  for (VertexSet c : classes_) {
    if (!(seen & c).empty()) throw DomainError("partition classes overlap");
    seen |= c;
  }
}

VertexSet VertexPartition::support() const {
  VertexSet all;
  for (VertexSet c : classes_) all |= c;
  return all;
}

int VertexPartition::class_of(int v) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].contains(v)) return static_cast<int>(i);
  return -1;
}

std::vector<int> VertexPartition::sizes() const {
  std::vector<int> out;
  out.reserve(classes_.size());
  for (VertexSet c : classes_) out.push_back(c.size());
  return out;
}

// ------------------------------------------------------------ operators

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  if (n > kMaxVertices)
    throw CapacityError("combined order " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kMaxVertices));
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n1; ++v) rows[static_cast<std::size_t>(v)] = g1.neighbors(v).bits();
  for (int v = 0; v < g2.order(); ++v)
    rows[static_cast<std::size_t>(n1 + v)] = g2.neighbors(v).bits() << n1;
  return Graph::from_rows(n, rows);
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph u = disjoint_union(g1, g2);
  const int n1 = g1.order();
  const VertexSet left = VertexSet::range(n1);
  const VertexSet right = u.vertices() - left;
  std::vector<std::uint64_t> rows(u.rows().begin(), u.rows().end());
  for (int v : left) rows[static_cast<std::size_t>(v)] |= right.bits();
  for (int v : right) rows[static_cast<std::size_t>(v)] |= left.bits();
  return Graph::from_rows(u.order(), rows);
}

Graph complement(const Graph& g) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v)
    rows[static_cast<std::size_t>(v)] = (g.vertices() - g.neighbors(v)).without(v).bits();
  return Graph::from_rows(g.order(), rows);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  if (vertices.empty()) throw DomainError("induced subgraph needs at least one vertex");
  VertexSet seen;
  for (int v : vertices) {
    if (v < 0 || v >= g.order())
      throw DomainError("vertex " + std::to_string(v) + " not in graph");
    if (seen.contains(v)) throw DomainError("repeated vertex in induced subgraph");
    seen = seen.with(v);
  }
  const int k = static_cast<int>(vertices.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]))
        b.add_edge(i, j);
  return b.build();
}

Graph induced_subgraph(const Graph& g, VertexSet vertices) {
  const std::vector<int> order = vertices.to_vector();
  return induced_subgraph(g, std::span<const int>(order));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

// --------------------------------------------------------------- graph6

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw ParseError("graph6: unexpected end of input", i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside printable range 63..126", i);
    return c - 63;
  };

  long n = byte_at(pos);
  std::size_t body = pos + 1;
  if (n == 63) {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw ParseError("graph6: orders above 258047 are not supported", pos + 1);
    n = 0;
    for (std::size_t i = pos + 1; i <= pos + 3; ++i) n = (n << 6) | byte_at(i);
    body = pos + 4;
  }
  if (n == 0) throw ParseError("graph6: zero-vertex graph", pos);
  if (n > kMaxVertices)
    throw CapacityError("graph6 order " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kMaxVertices));

  const std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t nbytes = (bits + 5) / 6;
  if (text.size() < body + nbytes) throw ParseError("graph6: body too short", text.size());
  if (text.size() > body + nbytes) throw ParseError("graph6: trailing bytes after body", body + nbytes);

  GraphBuilder b(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = byte_at(body + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = body + nbytes - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (byte_at(last) & pad_mask) throw ParseError("graph6: nonzero padding bits", last);
  }
  return b.build();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    out.push_back(decode_graph6(line));
  }
  return out;
}

void write_graph6_stream(std::ostream& out, std::span<const Graph> graphs) {
  for (const Graph& g : graphs) out << encode_graph6(g) << '\n';
}

}  // namespace splitex
