#include "splitex/constructions.hpp"

#include <string>

#include "splitex/errors.hpp"

namespace splitex {

std::vector<int> balanced_parts(int n, int r) {
  if (r < 1 || r > n) throw DomainError("need 1 <= r <= n for a balanced partition");
  std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
  // the larger parts go last so the list is nondecreasing
  for (int i = 0; i < n % r; ++i) ++sizes[static_cast<std::size_t>(r - 1 - i)];
  return sizes;
}

long turan_edge_count(int n, int r) {
  const std::vector<int> sizes = balanced_parts(n, r);
  long within = 0;
  for (int s : sizes) within += static_cast<long>(s) * (s - 1) / 2;
  return static_cast<long>(n) * (n - 1) / 2 - within;
}

Graph complete_multipartite(const VertexPartition& classes, int n) {
  GraphBuilder b(n);
  for (int i = 0; i < classes.count(); ++i)
    for (int j = i + 1; j < classes.count(); ++j)
      for (int u : classes[i])
        for (int v : classes[j]) b.add_edge(u, v);
  return b.build();
}

TuranGraph turan(int n, int r) {
  if (r < 1 || r > n)
    throw DomainError("turan(n, r) requires 1 <= r <= n, got n=" + std::to_string(n) +
                      " r=" + std::to_string(r));
  if (n > kMaxVertices) throw CapacityError("turan graph exceeds vertex capacity");
  std::vector<VertexSet> parts;
  int next = 0;
  for (int s : balanced_parts(n, r)) {
    parts.emplace_back(VertexSet::range(next + s) - VertexSet::range(next));
    next += s;
  }
  VertexPartition partition(std::move(parts));
  return {complete_multipartite(partition, n), partition};
}

Graph complete_split(int p, int q) {
  if (p < 2 || q < 1)
    throw DomainError("complete split graph needs p >= 2 and q >= 1, got p=" + std::to_string(p) +
                      " q=" + std::to_string(q));
  return join(Graph::complete(p), Graph::empty(q));
}

YGraph y_graph(int n, int p) {
  if (p < 2) throw DomainError("y_graph requires p >= 2");
  if (n < 2 * p + 1)
    throw DomainError("y_graph(" + std::to_string(n) + ", " + std::to_string(p) +
                      ") requires n >= 2p+1");
  if (n > kMaxVertices) throw CapacityError("y_graph exceeds vertex capacity");

  TuranGraph t = turan(n - 1, p);
  YGraphSpec spec;
  spec.n = n;
  spec.p = p;
  spec.part_sizes = t.parts.sizes();
  spec.classes = t.parts;
  spec.u0 = n - 1;
  spec.u1 = t.parts[0].first();
  spec.u2 = t.parts[1].first();
  return {g_ij(t.parts, 0, 1, spec.u1, spec.u2), std::move(spec)};
}

int g_ij_apex(const VertexPartition& classes) {
  const VertexSet support = classes.support();
  const int n = support.size() + 1;
  if (n > kMaxVertices) throw CapacityError("g_ij exceeds vertex capacity");
  const VertexSet missing = VertexSet::range(n) - support;
  if (!support.is_subset_of(VertexSet::range(n)) || missing.size() != 1)
    throw DomainError("classes must cover all labels 0..N-1 but one");
  return missing.first();
}

Graph g_ij(const VertexPartition& classes, int i, int j, int ui, int uj) {
  const int p = classes.count();
  if (p < 2) throw DomainError("g_ij needs at least two classes");
  for (VertexSet c : classes.classes())
    if (c.empty()) throw DomainError("g_ij classes must be nonempty");
  if (i < 0 || j < 0 || i >= p || j >= p || i == j) throw DomainError("g_ij class indices invalid");
  if (ui < 0 || uj < 0 || ui >= kMaxVertices || uj >= kMaxVertices || !classes[i].contains(ui) ||
      !classes[j].contains(uj))
    throw DomainError("g_ij endpoints must lie in classes i and j");

  const int u0 = g_ij_apex(classes);
  const int n = classes.support().size() + 1;
  GraphBuilder b(complete_multipartite(classes, n));
  b.remove_edge(ui, uj);
  for (int s = 0; s < p; ++s) {
    if (s == i || s == j) continue;
    for (int v : classes[s]) b.add_edge(u0, v);
  }
  b.add_edge(u0, ui);
  b.add_edge(u0, uj);
  return b.build();
}

Graph complete_bipartite(int a, int b) { return join(Graph::empty(a), Graph::empty(b)); }

Graph cycle(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph path(int n) {
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph star(int leaves) { return join(Graph::empty(1), Graph::empty(leaves)); }

}  // namespace splitex
