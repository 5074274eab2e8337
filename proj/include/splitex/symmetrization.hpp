#pragma once

// Class-typed rewiring of a graph around a distinguished vertex u0 whose
// removal leaves a properly colored graph.

#include <optional>
#include <string>
#include <vector>

#include "splitex/graph.hpp"

namespace splitex {

enum class ClassType { A, B, C };

std::string to_string(ClassType t);

struct ProcedureState {
  Graph graph;
  int u0 = 0;
  VertexPartition classes;
  std::vector<VertexSet> active;  ///< N(u0) ∩ U_s per class
  std::vector<ClassType> labels;
  int step = 1;
};

struct StepRecord {
  int class_index = 0;
  int vertex = 0;
  Edge removed;
  std::vector<Edge> added;
};

struct ProcedureTrace {
  std::vector<ProcedureState> states;
  std::vector<StepRecord> moves;
  /// Per state, whether the graph is B_{p,q}-free; filled only when q is given.
  std::vector<bool> split_free;

  const ProcedureState& final_state() const { return states.back(); }
};

/// Throws DomainError unless u0 is a vertex, the classes cover V \ {u0}, and
/// each class is independent.
ProcedureState initial_state(const Graph& g, int u0, const VertexPartition& classes);

ClassType classify(const ProcedureState& state, int s);

/// One rewiring step on the lowest-index class of type C, or nothing when no
/// such class remains.
std::optional<std::pair<ProcedureState, StepRecord>> procedure_step(const ProcedureState& state);

/// Runs to completion. With q set, B_{p,q}-freeness of every state is
/// recorded, p being the number of classes.
ProcedureTrace run_procedure(const Graph& g, int u0, const VertexPartition& classes,
                             std::optional<int> q = std::nullopt);

}  // namespace splitex
