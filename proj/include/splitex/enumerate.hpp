#pragma once

// Isomorph-free generation of small graphs by canonical augmentation.

#include <functional>

#include "splitex/graph.hpp"

namespace splitex {

/// Hereditary admissibility test. `added` is the vertex just appended to a
/// graph whose other induced subgraphs already passed; it may be used to
/// restrict the check to structures through that vertex.
using Admissible = std::function<bool(const Graph& g, int added)>;

struct EnumerateOptions {
  int cap = 10;
  int workers = 1;
};

/// Largest order ever accepted, whatever the cap.
inline constexpr int kEnumerationHardCap = 11;

/// Visits one representative per isomorphism class of admissible n-vertex
/// graphs and returns how many were visited. An empty `keep` admits all.
long enumerate(int n, const Admissible& keep, const std::function<void(const Graph&)>& visit,
               const EnumerateOptions& options = {});

/// As above with `visit(g, worker)` called concurrently from
/// `options.workers` threads.
long enumerate_parallel(int n, const Admissible& keep, const std::function<void(const Graph&, int)>& visit,
                        const EnumerateOptions& options);

}  // namespace splitex
