#pragma once

// Exhaustive extremal searches over small graphs and theorem verification.

#include <optional>
#include <string>
#include <vector>

#include "splitex/graph.hpp"

namespace splitex {

struct Constraints {
  bool complete_split_free = false;  ///< no B_{p,q}
  bool clique_free = false;          ///< no K_{p+1}
  bool non_partite = false;          ///< χ > p
  bool connected = false;

  /// "split_free+clique_free+non_partite+connected" style key; "none" when empty.
  std::string key() const;
  static Constraints parse(const std::string& key);
  friend bool operator==(const Constraints&, const Constraints&) = default;
};

enum class Objective { edges, rho };

std::string to_string(Objective o);
Objective parse_objective(const std::string& s);

struct SearchSpec {
  int n = 1;
  int p = 2;
  int q = 1;
  Constraints constraints;
  Objective objective = Objective::edges;
};

struct RhoValue {
  double rho = 0.0;
  double err = 0.0;
};

struct ExtremalRecord {
  SearchSpec spec;
  std::optional<long> best_edges;
  std::optional<RhoValue> best_rho;
  std::vector<std::string> witnesses;  ///< canonical graph6, sorted
  long graphs_scanned = 0;
  bool feasible = false;
  bool exhaustive = true;
  double elapsed_ms = 0.0;
};

struct SearchOptions {
  int workers = 1;
  int cap = 10;
};

/// Every constraint of `spec`, checked from scratch.
bool satisfies(const Graph& g, const SearchSpec& spec);

ExtremalRecord compute_ex(const SearchSpec& spec, const SearchOptions& options = {});
ExtremalRecord compute_spex(const SearchSpec& spec, const SearchOptions& options = {});
ExtremalRecord compute(const SearchSpec& spec, const SearchOptions& options = {});

enum class Status { pass, fail, small_n_deviation };

std::string to_string(Status s);

struct ReportRow {
  std::string theorem;
  int n = 0;
  int p = 0;
  int q = 0;
  std::string expected;
  std::string observed;
  Status status = Status::pass;
  std::vector<std::string> witnesses;  ///< offending or optimal graphs
  std::string note;
};

struct Report {
  std::vector<ReportRow> rows;
  Status overall = Status::pass;
  std::vector<ExtremalRecord> records;
};

/// How Y_p(n) fares against the constrained optimum under B_{p,q}-freeness
/// and non-p-partiteness.
struct YProbe {
  ExtremalRecord record;
  std::string y_graph6;  ///< canonical
  bool y_feasible = false;
  bool y_dominates = false;  ///< value(Y) >= best value
  bool y_unique = false;     ///< Y is the only witness
  long y_edges = 0;
  RhoValue y_rho;
};

YProbe y_probe(int n, int p, int q, Objective objective, const SearchOptions& options = {});

struct TheoremParams {
  int r = 2;  ///< also p for the split-graph theorems
  int q = 1;
};

/// Known names: mantel, turan, erdos_nonbipartite, brouwer, nosal, wilf,
/// spectral_turan, li_peng, thm_1_1, thm_1_2.
Report verify_theorem(const std::string& name, int n_lo, int n_hi, const TheoremParams& params,
                      const SearchOptions& options = {});

const std::vector<std::string>& theorem_names();

}  // namespace splitex
