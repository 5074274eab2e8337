#include <doctest.h>

#include <cmath>

#include "brute.hpp"
#include "splitex/canon.hpp"
#include "splitex/constructions.hpp"
#include "splitex/errors.hpp"
#include "splitex/search.hpp"
#include "splitex/spectral.hpp"

using namespace splitex;

namespace {

SearchSpec make(int n, int p, int q, const std::string& constraints, Objective o = Objective::edges) {
  SearchSpec s;
  s.n = n;
  s.p = p;
  s.q = q;
  s.constraints = Constraints::parse(constraints);
  s.objective = o;
  return s;
}

// Independent feasibility check built on the brute-force oracles.
bool brute_ok(const Graph& g, const SearchSpec& s) {
  const Constraints& c = s.constraints;
  if (c.complete_split_free && brute::has_subgraph(g, complete_split(s.p, s.q))) return false;
  if (c.clique_free && brute::has_subgraph(g, Graph::complete(s.p + 1))) return false;
  if (c.non_partite && brute::chromatic(g) <= s.p) return false;
  if (c.connected && !is_connected(g)) return false;
  return true;
}

}  // namespace

TEST_CASE("constraint keys") {
  const Constraints c = Constraints::parse("split_free+non_partite");
  CHECK(c.complete_split_free);
  CHECK(c.non_partite);
  CHECK_FALSE(c.clique_free);
  CHECK(c.key() == "split_free+non_partite");
  CHECK(Constraints{}.key() == "none");
  CHECK(Constraints::parse("none") == Constraints{});
  CHECK_THROWS_AS(Constraints::parse("bogus"), DomainError);
  CHECK(parse_objective("rho") == Objective::rho);
  CHECK(to_string(Objective::edges) == "edges");
  CHECK_THROWS_AS(parse_objective("vertices"), DomainError);
}

TEST_CASE("extremal edge counts") {
  const ExtremalRecord c5 = compute_ex(make(5, 2, 1, "split_free+non_partite"));
  CHECK(c5.feasible);
  CHECK(*c5.best_edges == 5);
  CHECK(c5.witnesses == std::vector<std::string>{canonical_graph6(cycle(5))});
  CHECK(c5.exhaustive);

  const ExtremalRecord k4 = compute_ex(make(7, 3, 1, "split_free+non_partite"));
  CHECK(*k4.best_edges == 15);

  const ExtremalRecord t = compute_ex(make(8, 3, 1, "clique_free"));
  CHECK(*t.best_edges == turan_edge_count(8, 3));
  CHECK(t.witnesses == std::vector<std::string>{canonical_graph6(turan(8, 3).graph)});

  const ExtremalRecord none = compute_ex(make(4, 2, 1, "split_free+non_partite"));
  CHECK_FALSE(none.feasible);
  CHECK_FALSE(none.best_edges);
  CHECK(none.witnesses.empty());
}

TEST_CASE("extremal searches match a brute-force scan") {
  for (const char* cons : {"split_free", "split_free+non_partite", "clique_free+connected", "split_free+connected"})
    for (int n = 3; n <= 6; ++n)
      for (auto [p, q] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        const SearchSpec spec = make(n, p, q, cons);
        long best = -1;
        std::vector<std::string> wit;
        for (const Graph& g : brute::all_graphs(n)) {
          if (!brute_ok(g, spec)) continue;
          if (g.edge_count() > best) {
            best = g.edge_count();
            wit.clear();
          }
          if (g.edge_count() == best) wit.push_back(canonical_graph6(g));
        }
        std::sort(wit.begin(), wit.end());
        const ExtremalRecord rec = compute_ex(spec);
        CHECK(rec.feasible == (best >= 0));
        if (best >= 0) CHECK(*rec.best_edges == best);
        CHECK(rec.witnesses == wit);
      }
}

TEST_CASE("spectral extremal searches") {
  const ExtremalRecord k = compute_spex(make(5, 2, 1, "none", Objective::rho));
  REQUIRE(k.best_rho);
  CHECK(std::abs(k.best_rho->rho - 4.0) <= k.best_rho->err + 1e-12);
  CHECK(k.witnesses == std::vector<std::string>{canonical_graph6(Graph::complete(5))});

  for (int n = 4; n <= 6; ++n) {
    const SearchSpec spec = make(n, 2, 2, "split_free+connected", Objective::rho);
    const ExtremalRecord rec = compute_spex(spec);
    REQUIRE(rec.feasible);
    // No feasible graph beats a witness.
    const Graph best = decode_graph6(rec.witnesses.front());
    for (const Graph& g : brute::all_graphs(n))
      if (brute_ok(g, spec)) CHECK(compare_rho(g, best) != std::strong_ordering::greater);
    for (const auto& w : rec.witnesses) CHECK(compare_rho(decode_graph6(w), best) == std::strong_ordering::equal);
  }

  const ExtremalRecord t = compute_spex(make(7, 2, 1, "clique_free", Objective::rho));
  CHECK(t.witnesses == std::vector<std::string>{canonical_graph6(turan(7, 2).graph)});
}

TEST_CASE("y probes") {
  const YProbe c5 = y_probe(5, 2, 1, Objective::edges);
  CHECK(c5.y_feasible);
  CHECK(c5.y_dominates);
  CHECK(c5.y_unique);
  CHECK(c5.y_edges == 5);
}

TEST_CASE("theorem verification") {
  const Report m = verify_theorem("mantel", 2, 7, {});
  CHECK(m.overall == Status::pass);
  CHECK(m.rows.size() == 6);
  CHECK(verify_theorem("turan", 4, 7, TheoremParams{3, 1}).overall == Status::pass);
  CHECK(verify_theorem("erdos_nonbipartite", 5, 8, {}).overall == Status::pass);
  CHECK(verify_theorem("wilf", 3, 6, TheoremParams{3, 1}).overall == Status::pass);
  CHECK_THROWS_AS(verify_theorem("thm_1_1", 7, 7, TheoremParams{2, 1}), DomainError);
  CHECK_THROWS_AS(verify_theorem("no_such_theorem", 5, 6, {}), DomainError);
  CHECK_THROWS_AS(verify_theorem("mantel", 6, 5, {}), DomainError);
  CHECK(theorem_names().size() == 10);
  CHECK(to_string(Status::small_n_deviation) == "SMALL-N-DEVIATION");
}
