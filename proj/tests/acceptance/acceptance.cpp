// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "splitex/canon.hpp"
#include "splitex/constructions.hpp"
#include "splitex/enumerate.hpp"
#include "splitex/errors.hpp"
#include "splitex/exact.hpp"
#include "splitex/oracles.hpp"
#include "splitex/search.hpp"
#include "splitex/spectral.hpp"
#include "splitex/symmetrization.hpp"

using namespace splitex;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail, std::chrono::steady_clock::time_point start) {
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << secs;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << " [" << os.str() << " s]"
            << std::endl;
  if (!ok) ++failures;
}

void note(const std::string& line) { std::cout << "  " << line << std::endl; }

SearchSpec spec(int n, int p, int q, const std::string& constraints, Objective o = Objective::edges) {
  SearchSpec s;
  s.n = n;
  s.p = p;
  s.q = q;
  s.constraints = Constraints::parse(constraints);
  s.objective = o;
  return s;
}

bool has_witness(const ExtremalRecord& rec, const std::string& g6) {
  return std::binary_search(rec.witnesses.begin(), rec.witnesses.end(), g6);
}

// Every graph on at most `n_max` vertices, one per isomorphism class.
std::vector<Graph> graphs_up_to(int n_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    const auto level = brute::all_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  int checked = 0, bad = 0;
  for (int p = 2; p <= 4; ++p)
    for (int n = 2 * p + 1; n <= 20; ++n) {
      ++checked;
      const long want = turan_edge_count(n, p) - n / p + 1;
      const long got = y_graph(n, p).graph.edge_count();
      // The closed form is also checked against an edge count of T(n,p) from scratch.
      if (got != want || turan(n, p).graph.edge_count() != turan_edge_count(n, p)) {
        ++bad;
        note("mismatch at n=" + std::to_string(n) + " p=" + std::to_string(p));
      }
    }
  report(1, bad == 0, "edge identity of Y on " + std::to_string(checked) + " (n,p) pairs", start);
}

void criterion_2() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (int r = 2; r <= 3; ++r)
    for (int n = 1; n <= 9; ++n) {
      const ExtremalRecord rec = compute_ex(spec(n, r, 1, "clique_free"));
      const Graph t = turan(n, std::min(r, n)).graph;
      // Turán's edge count from the part sizes, independently of the library formula.
      long e = static_cast<long>(n) * (n - 1) / 2;
      for (int s : balanced_parts(n, std::min(r, n))) e -= static_cast<long>(s) * (s - 1) / 2;
      const bool row = rec.best_edges && *rec.best_edges == e && t.edge_count() == e &&
                       rec.witnesses == std::vector<std::string>{canonical_graph6(t)};
      if (!row) note("r=" + std::to_string(r) + " n=" + std::to_string(n) + " differs");
      ok = ok && row;
    }
  report(2, ok, "Turán graph is the unique K_{r+1}-free edge maximizer, r in {2,3}, n <= 9", start);
}

void criterion_3() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n = 5; n <= 10; ++n) {
    const ExtremalRecord rec = compute_ex(spec(n, 2, 1, "split_free+non_partite"));
    const long want = (n - 1) * (n - 1) / 4 + 1;
    const bool row = rec.best_edges && *rec.best_edges == want && has_witness(rec, canonical_graph6(y_graph(n, 2).graph));
    note("n=" + std::to_string(n) + " ex=" + (rec.best_edges ? std::to_string(*rec.best_edges) : "none") +
         " expected=" + std::to_string(want) + " witnesses=" + std::to_string(rec.witnesses.size()));
    ok = ok && row;
  }
  report(3, ok, "triangle-free non-bipartite maximum is floor((n-1)^2/4)+1 with Y among witnesses, n in [5,10]",
         start);
}

void criterion_4() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (int r = 2; r <= 3; ++r)
    for (int n = 2 * r + 1; n <= (r == 2 ? 10 : 9); ++n) {
      const ExtremalRecord rec = compute_ex(spec(n, r, 1, "clique_free+non_partite"));
      const long want = turan_edge_count(n, r) - n / r + 1;
      const bool row = rec.best_edges && *rec.best_edges == want && has_witness(rec, canonical_graph6(y_graph(n, r).graph));
      note("r=" + std::to_string(r) + " n=" + std::to_string(n) +
           " ex=" + (rec.best_edges ? std::to_string(*rec.best_edges) : "none") + " expected=" + std::to_string(want));
      ok = ok && row;
    }
  report(4, ok, "K_{r+1}-free non-r-partite maximum is e(T(n,r)) - floor(n/r) + 1 with Y among witnesses", start);
}

void criterion_5() {
  const auto start = std::chrono::steady_clock::now();
  int deviations = 0, rows = 0;
  bool hard_fail = false;
  for (int n = 5; n <= 10; ++n) {
    ++rows;
    const SearchSpec s = spec(n, 2, 1, "split_free+non_partite", Objective::rho);
    const ExtremalRecord rec = compute_spex(s);
    const Graph y = y_graph(n, 2).graph;
    const std::string yg6 = canonical_graph6(y);
    // Independent certification: Y strictly beats every other feasible graph,
    // decided on the exact characteristic polynomials.
    const Polynomial phi_y = characteristic_polynomial(y);
    int beaten = 0, undecided = 0, exact = 0, rivals = 0;
    enumerate(n, [](const Graph& g, int) { return !contains_clique(g, 3); }, [&](const Graph& g) {
      if (is_k_partite(g, 2) || canonical_graph6(g) == yg6) return;
      ++rivals;
      if (compare_largest_roots(characteristic_polynomial(g), phi_y) != std::strong_ordering::less) ++beaten;
      try {
        const RhoComparison c = compare_rho_detailed(g, y);
        if (c.route == Route::exact) ++exact;
        if (c.order != std::strong_ordering::less) ++beaten;
      } catch (const UndecidableComparison&) {
        ++undecided;
      }
    });
    const bool unique = rec.witnesses == std::vector<std::string>{yg6} && beaten == 0 && undecided == 0;
    note("n=" + std::to_string(n) + " witnesses=" + std::to_string(rec.witnesses.size()) +
         (unique ? " Y unique" : " SMALL-N-DEVIATION") + " rivals_below_Y_exactly=" + std::to_string(rivals - beaten) +
         "/" + std::to_string(rivals) + " needing_exact_route=" + std::to_string(exact));
    if (!unique) ++deviations;
    if (!rec.feasible) hard_fail = true;
  }
  report(5, !hard_fail && deviations < rows,
         "Y is the unique triangle-free non-bipartite spectral maximizer for " + std::to_string(rows - deviations) +
             " of " + std::to_string(rows) + " orders in [5,10]",
         start);
}

void criterion_6() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  struct Range {
    int p, q, lo, hi;
  };
  for (const Range& r : {Range{3, 2, 7, 9}, Range{2, 2, 6, 10}})
    for (int n = r.lo; n <= r.hi; ++n)
      for (Objective o : {Objective::edges, Objective::rho}) {
        const YProbe probe = y_probe(n, r.p, r.q, o);
        // Feasibility of Y from the brute-force oracles.
        const Graph y = y_graph(n, r.p).graph;
        const bool y_free = !brute::has_subgraph(y, complete_split(r.p, r.q)) && brute::chromatic(y) > r.p;
        const bool row = probe.record.feasible && probe.y_feasible && y_free &&
                         (o == Objective::edges ? *probe.record.best_edges >= probe.y_edges
                                                : compare_rho(decode_graph6(probe.record.witnesses.front()), y) !=
                                                      std::strong_ordering::less);
        std::string best = o == Objective::edges ? std::to_string(*probe.record.best_edges)
                                                 : std::to_string(probe.record.best_rho->rho);
        std::string yv = o == Objective::edges ? std::to_string(probe.y_edges) : std::to_string(probe.y_rho.rho);
        note("p=" + std::to_string(r.p) + " q=" + std::to_string(r.q) + " n=" + std::to_string(n) + " " +
             to_string(o) + " best=" + best + " Y=" + yv + " Y " +
             (probe.y_unique ? "is the unique extremal graph"
                             : probe.y_dominates ? "is extremal, not unique" : "is not extremal"));
        ok = ok && row;
      }
  report(6, ok, "Y is feasible and the optimum is at least value(Y) for (3,2) n in [7,9] and (2,2) n in [6,10]",
         start);
}

void criterion_7() {
  const auto start = std::chrono::steady_clock::now();
  long disagreements = 0, graphs = 0;
  const std::vector<std::pair<int, int>> params{{2, 1}, {2, 2}, {3, 1}, {3, 2}};
  std::vector<Graph> patterns;
  for (auto [p, q] : params) patterns.push_back(complete_split(p, q));
  for (const Graph& g : graphs_up_to(8)) {
    ++graphs;
    for (std::size_t k = 0; k < params.size(); ++k) {
      const bool fast = contains_complete_split(g, params[k].first, params[k].second).has_value();
      if (fast != brute::has_subgraph(g, patterns[k])) ++disagreements;
    }
  }
  report(7, disagreements == 0,
         std::to_string(disagreements) + " disagreements with generic subgraph search over " + std::to_string(graphs) +
             " graphs on at most 8 vertices",
         start);
}

void criterion_8() {
  const auto start = std::chrono::steady_clock::now();
  long violations = 0, checks = 0;
  auto flag = [&](const std::string& what, const Graph& g) {
    ++violations;
    note(what + " violated by " + encode_graph6(g));
  };
  for (const Graph& g : graphs_up_to(8)) {
    // Cross-check against a dense eigensolver so the sweep does not rest on
    // the power iteration alone.
    const double jacobi = brute::eigenvalues(g).back();
    if (!contains_clique(g, 3)) {
      ++checks;
      const BoundReport b = check_nosal(g);
      if (!b.holds || jacobi > std::sqrt(static_cast<double>(g.edge_count())) + 1e-9) flag("nosal", g);
    }
    for (int r = 2; r <= 3; ++r) {
      if (contains_clique(g, r + 1)) continue;
      checks += 2;
      const BoundReport w = check_wilf(g, r);
      if (!w.holds || jacobi > (1.0 - 1.0 / r) * g.order() + 1e-9) flag("wilf r=" + std::to_string(r), g);
      const BoundReport s = check_spectral_turan(g, r);
      const Graph t = turan(g.order(), std::min(r, g.order())).graph;
      const bool is_turan = isomorphic(g, t);
      const bool attained = s.turan_order && s.turan_order->order == std::strong_ordering::equal;
      const bool exceeds = !s.turan_order || s.turan_order->order == std::strong_ordering::greater;
      if (!s.holds || exceeds || attained != is_turan) flag("spectral turan r=" + std::to_string(r), g);
    }
  }
  report(8, violations == 0,
         std::to_string(violations) + " violations in " + std::to_string(checks) +
             " Nosal, Wilf and spectral Turán checks over all graphs on at most 8 vertices",
         start);
}

void criterion_9() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240901);
  const int target = 10000;
  int done = 0, failed = 0, indeterminate = 0, exact = 0;
  while (done < target) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = brute::random_connected_graph(n, 0.2 + 0.6 * std::uniform_real_distribution<>(0, 1)(rng), rng);
    const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
    const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
    if (u == v) continue;
    const VertexSet pool = g.neighbors(v) - g.neighbors(u) - VertexSet::single(u);
    if (pool.empty()) continue;
    VertexSet priv;
    while (priv.empty())
      for (int w : pool)
        if (rng() & 1U) priv |= VertexSet::single(w);
    const PerronOrder po = compare_perron_entries(g, u, v);
    // A valid spec needs x_u >= x_v; undecided Perron orders count as indeterminate.
    if (po.order && *po.order == std::strong_ordering::less) continue;
    ++done;
    if (!po.order) {
      ++indeterminate;
      continue;
    }
    const Graph h = rotate_edges(g, RotationSpec{u, v, priv});
    try {
      const RhoComparison c = compare_rho_detailed(h, g);
      if (c.route == Route::exact) ++exact;
      if (c.order != std::strong_ordering::greater) {
        ++failed;
        note("rotation failed on " + encode_graph6(g));
      }
    } catch (const UndecidableComparison&) {
      ++indeterminate;
    }
  }
  const bool ok = failed == 0 && indeterminate * 1000 < target;
  report(9, ok,
         std::to_string(target) + " rotations, " + std::to_string(failed) + " failures, " +
             std::to_string(indeterminate) + " indeterminate, " + std::to_string(exact) + " settled exactly",
         start);
}

void criterion_10() {
  const auto start = std::chrono::steady_clock::now();
  const int p = 3;
  struct Candidate {
    Graph g;
    int q;
  };
  std::vector<Candidate> pool;
  for (int q = 1; q <= 2; ++q)
    for (int n = 7; n <= 9; ++n) {
      enumerate(n, [&](const Graph& g, int v) { return !contains_complete_split(g, p, q, g.neighbors(v).with(v)); },
                [&](const Graph& g) {
                  if (!is_k_partite(g, p)) pool.push_back({g, q});
                });
    }
  std::mt19937_64 rng(7);
  std::shuffle(pool.begin(), pool.end(), rng);

  int runs = 0, bad = 0, skipped = 0, two_b = 0, steps = 0, uiuj_edge = 0;
  int by_q[3] = {0, 0, 0};
  for (const Candidate& c : pool) {
    if (runs == 1000) break;
    const Graph& g = c.g;
    int u0 = 0;
    for (int v = 1; v < g.order(); ++v)
      if (g.degree(v) < g.degree(u0)) u0 = v;
    std::vector<int> rest;
    for (int v = 0; v < g.order(); ++v)
      if (v != u0) rest.push_back(v);
    const auto coloring = k_coloring(induced_subgraph(g, rest), p);
    if (!coloring) {
      ++skipped;  // G - u0 is not p-partite, so the procedure does not apply
      continue;
    }
    std::vector<VertexSet> cls(static_cast<std::size_t>(p));
    for (std::size_t k = 0; k < rest.size(); ++k) cls[static_cast<std::size_t>((*coloring)[k])] |= VertexSet::single(rest[k]);
    const VertexPartition classes(cls);
    ++runs;

    const ProcedureTrace t = run_procedure(g, u0, classes);
    std::vector<std::string> broken;
    if (static_cast<int>(t.moves.size()) > g.degree(u0)) broken.push_back("too many steps");
    for (std::size_t k = 0; k + 1 < t.states.size(); ++k)
      if (t.states[k + 1].graph.edge_count() < t.states[k].graph.edge_count()) broken.push_back("edge count fell");
    steps += static_cast<int>(t.moves.size());
    const ProcedureState& last = t.final_state();
    std::vector<int> b_classes;
    for (int s = 0; s < p; ++s) {
      const ClassType type = classify(last, s);
      if (type == ClassType::C) broken.push_back("type C class left");
      if (type == ClassType::B) b_classes.push_back(s);
    }
    if (b_classes.size() == 2) {
      ++two_b;
      const int i = b_classes[0], j = b_classes[1];
      const int ui = last.active[static_cast<std::size_t>(i)].first();
      const int uj = last.active[static_cast<std::size_t>(j)].first();
      if (!last.graph.is_subgraph_of(g_ij(classes, i, j, ui, uj))) {
        // g_ij lacks the edge ui-uj; report whether that is the only obstruction.
        const bool only_edge = last.graph.without_edge(ui, uj).is_subgraph_of(g_ij(classes, i, j, ui, uj)) &&
                               last.graph.adjacent(ui, uj);
        broken.push_back(only_edge ? "not inside g_ij: ui-uj is an edge" : "not inside g_ij");
        if (only_edge) ++uiuj_edge;
      }
    }
    if (!broken.empty()) {
      ++bad;
      ++by_q[c.q];
      std::string why;
      for (const auto& b : broken) why += (why.empty() ? "" : ", ") + b;
      note("violation on " + encode_graph6(g) + " q=" + std::to_string(c.q) + ": " + why);
    }
  }
  report(10, runs == 1000 && bad == 0,
         std::to_string(runs) + " runs, " + std::to_string(bad) + " violations (q=1: " + std::to_string(by_q[1]) +
             ", q=2: " + std::to_string(by_q[2]) + "; " + std::to_string(uiuj_edge) +
             " only because ui-uj is an edge), " + std::to_string(steps) +
             " steps, " + std::to_string(two_b) + " terminal states with two type B classes, " +
             std::to_string(skipped) + " graphs skipped where G - u0 is not 3-colorable",
         start);
}

void criterion_11() {
  const auto start = std::chrono::steady_clock::now();
  const long expected[] = {4, 11, 34, 156, 1044, 12346};
  bool ok = true;
  for (int n = 3; n <= 8; ++n) {
    const long got = enumerate(n, {}, [](const Graph&) {});
    ok = ok && got == expected[n - 3];
    if (n <= 6) ok = ok && brute::class_count(n) == got;
  }
  report(11, ok, "enumeration yields 4, 11, 34, 156, 1044, 12346 classes for n = 3..8", start);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                    criterion_5, criterion_6, criterion_7, criterion_8,
                                                    criterion_9, criterion_10, criterion_11};
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    try {
      criteria[k]();
    } catch (const std::exception& e) {
      std::cout << "FAIL criterion " << k + 1 << ": " << e.what() << std::endl;
      ++failures;
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
