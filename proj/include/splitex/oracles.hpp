#pragma once

// Exact decision procedures on small graphs.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "splitex/graph.hpp"

namespace splitex {

/// An embedded copy of B_{p,q}: a p-clique plus q vertices adjacent to all of
/// it. The apex vertices are not required to be independent.
struct ContainmentWitness {
  VertexSet clique;
  VertexSet apex;
};

struct ColoringResult {
  int chi = 0;
  std::vector<int> coloring;  ///< color in [0, chi) per vertex
};

/// Finds a p-clique with at least q common neighbors outside itself. When
/// `within` is given only cliques inside that set are considered; apex
/// vertices may lie anywhere.
std::optional<ContainmentWitness> contains_complete_split(const Graph& g, int p, int q);
std::optional<ContainmentWitness> contains_complete_split(const Graph& g, int p, int q, VertexSet within);

/// Some k-clique, lexicographically first.
std::optional<VertexSet> contains_clique(const Graph& g, int k);

int clique_number(const Graph& g);

/// Proper coloring with at most k colors, or nothing when none exists.
/// Deterministic: the most saturated uncolored vertex first (lowest index on
/// ties), lowest color first.
std::optional<std::vector<int>> k_coloring(const Graph& g, int k);

ColoringResult chromatic_number(const Graph& g);

bool is_k_partite(const Graph& g, int k);

/// Some edge e with χ(G-e) < χ(G).
bool is_edge_color_critical(const Graph& g);

bool is_proper_coloring(const Graph& g, std::span<const int> coloring);

/// Σ|S_i| - (k-1)|∪S_i|, a lower bound on |∩S_i|.
long intersection_lower_bound(std::span<const long> sizes, long union_size);

}  // namespace splitex
