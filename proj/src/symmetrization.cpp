#include "splitex/symmetrization.hpp"

#include "splitex/errors.hpp"
#include "splitex/oracles.hpp"

namespace splitex {

namespace {

VertexSet others(const ProcedureState& state, int s) {
  return state.classes.support() - state.classes[s];
}

bool full(const ProcedureState& state, int s, int u) {
  return state.graph.neighbors(u).without(state.u0) == others(state, s);
}

void relabel(ProcedureState& state) {
  state.labels.clear();
  for (int s = 0; s < state.classes.count(); ++s) state.labels.push_back(classify(state, s));
}

}  // namespace

std::string to_string(ClassType t) {
  switch (t) {
    case ClassType::A:
      return "A";
    case ClassType::B:
      return "B";
    case ClassType::C:
      break;
  }
  return "C";
}

ProcedureState initial_state(const Graph& g, int u0, const VertexPartition& classes) {
  if (u0 < 0 || u0 >= g.order()) throw DomainError("u0 is not a vertex");
  if (!classes.covers(g.vertices().without(u0))) throw DomainError("classes must cover every vertex except u0");
  for (int s = 0; s < classes.count(); ++s)
    for (int v : classes[s])
      if (!(g.neighbors(v) & classes[s]).empty())
        throw DomainError("class " + std::to_string(s) + " is not independent");
  ProcedureState state;
  state.graph = g;
  state.u0 = u0;
  state.classes = classes;
  for (int s = 0; s < classes.count(); ++s) state.active.push_back(g.neighbors(u0) & classes[s]);
  relabel(state);
  return state;
}

ClassType classify(const ProcedureState& state, int s) {
  if (s < 0 || s >= state.classes.count()) throw DomainError("class index out of range");
  const VertexSet act = state.active[static_cast<std::size_t>(s)];
  bool all_full = true;
  for (int u : act) all_full = all_full && full(state, s, u);
  if (all_full) return ClassType::A;
  // Within a proper coloring N(u) \ {u0} always sits inside the other classes,
  // so a single non-full vertex is a proper subset.
  if (act.size() == 1) return ClassType::B;
  return ClassType::C;
}

std::optional<std::pair<ProcedureState, StepRecord>> procedure_step(const ProcedureState& state) {
  int s = -1;
  for (int t = 0; t < state.classes.count(); ++t) {
    if (state.labels[static_cast<std::size_t>(t)] == ClassType::C) {
      s = t;
      break;
    }
  }
  if (s < 0) return std::nullopt;

  int ui = -1;
  for (int u : state.active[static_cast<std::size_t>(s)]) {
    if (!full(state, s, u)) {
      ui = u;
      break;
    }
  }

  StepRecord rec;
  rec.class_index = s;
  rec.vertex = ui;
  rec.removed = {std::min(state.u0, ui), std::max(state.u0, ui)};
  GraphBuilder b(state.graph);
  b.remove_edge(state.u0, ui);
  for (int w : others(state, s) - state.graph.neighbors(ui)) {
    b.add_edge(ui, w);
    rec.added.push_back({std::min(ui, w), std::max(ui, w)});
  }

  ProcedureState next = state;
  next.graph = b.build();
  next.active[static_cast<std::size_t>(s)] = next.active[static_cast<std::size_t>(s)].without(ui);
  next.step = state.step + 1;
  relabel(next);
  return std::make_pair(std::move(next), std::move(rec));
}

ProcedureTrace run_procedure(const Graph& g, int u0, const VertexPartition& classes, std::optional<int> q) {
  ProcedureTrace trace;
  trace.states.push_back(initial_state(g, u0, classes));
  const int p = classes.count();
  auto record_freeness = [&](const Graph& h) {
    if (q) trace.split_free.push_back(!contains_complete_split(h, p, *q).has_value());
  };
  record_freeness(g);
  while (auto next = procedure_step(trace.states.back())) {
    record_freeness(next->first.graph);
    trace.states.push_back(std::move(next->first));
    trace.moves.push_back(std::move(next->second));
  }
  return trace;
}

}  // namespace splitex
