#pragma once

// Canonical labeling and automorphism groups by individualization and
// refinement.

#include <string>
#include <vector>

#include "splitex/graph.hpp"

namespace splitex {

using Permutation = std::vector<int>;

struct CanonicalForm {
  Graph graph;                          ///< g relabeled by `label`
  std::vector<int> label;               ///< label[v] = canonical position of v
  std::vector<Permutation> generators;  ///< generate Aut(g)
  std::vector<int> orbits;              ///< smallest vertex of the orbit of each vertex
};

/// Ordered equitable refinement of `cells`. The result depends only on the
/// graph up to relabeling, never on vertex names.
std::vector<VertexSet> equitable_refinement(const Graph& g, std::vector<VertexSet> cells);

CanonicalForm canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Orbit representatives (smallest member) under the group generated by `generators`.
std::vector<int> orbits_of(int n, const std::vector<Permutation>& generators);

}  // namespace splitex
