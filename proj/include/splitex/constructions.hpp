#pragma once

#include <vector>

#include "splitex/graph.hpp"

namespace splitex {

struct SplitParams {
  int p = 2;  ///< clique size, >= 2
  int q = 1;  ///< independent side, >= 1
};

/// Layout of the graph produced by y_graph.
struct YGraphSpec {
  int n = 0;
  int p = 0;
  std::vector<int> part_sizes;  ///< balanced sizes of T_{n-1,p}, nondecreasing
  VertexPartition classes;      ///< the parts of T_{n-1,p}; u0 lies outside them
  int u0 = -1;                  ///< the added vertex, labeled n-1
  int u1 = -1;                  ///< first vertex of class 0
  int u2 = -1;                  ///< first vertex of class 1
};

struct TuranGraph {
  Graph graph;
  VertexPartition parts;
};

struct YGraph {
  Graph graph;
  YGraphSpec spec;
};

/// Complete r-partite graph on n vertices with part sizes floor(n/r) or
/// ceil(n/r), parts laid out consecutively in nondecreasing size.
TuranGraph turan(int n, int r);

/// Edge count of T_{n,r} without building the graph.
long turan_edge_count(int n, int r);

/// Balanced part sizes of n over r parts, nondecreasing.
std::vector<int> balanced_parts(int n, int r);

/// B_{p,q} = K_p ∇ qK_1. Vertices 0..p-1 form the clique.
Graph complete_split(int p, int q);
inline Graph complete_split(SplitParams s) { return complete_split(s.p, s.q); }

/// Book B_t = B_{2,t}.
inline Graph book(int t) { return complete_split(2, t); }

/// T_{n-1,p} minus the edge u1u2, plus u0 joined to parts 3..p and to u1, u2.
/// Requires p >= 2 and n >= 2p+1.
YGraph y_graph(int n, int p);

/// Complete multipartite graph on `classes` minus the edge ui-uj, plus a new
/// vertex u0 adjacent to every vertex outside classes i and j and to ui, uj.
/// The classes must cover {0..N-1} except exactly one label, which becomes u0.
Graph g_ij(const VertexPartition& classes, int i, int j, int ui, int uj);

/// The vertex left uncovered by `classes` in the g_ij layout.
int g_ij_apex(const VertexPartition& classes);

Graph complete_multipartite(const VertexPartition& classes, int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);

}  // namespace splitex
