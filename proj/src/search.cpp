#include "splitex/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <sstream>

#include "splitex/canon.hpp"
#include "splitex/constructions.hpp"
#include "splitex/enumerate.hpp"
#include "splitex/errors.hpp"
#include "splitex/exact.hpp"
#include "splitex/oracles.hpp"
#include "splitex/spectral.hpp"

namespace splitex {

namespace {

const std::vector<std::pair<std::string, bool Constraints::*>>& constraint_fields() {
  static const std::vector<std::pair<std::string, bool Constraints::*>> fields = {
      {"split_free", &Constraints::complete_split_free},
      {"clique_free", &Constraints::clique_free},
      {"non_partite", &Constraints::non_partite},
      {"connected", &Constraints::connected},
  };
  return fields;
}

void validate(const SearchSpec& spec) {
  if (spec.p < 1) throw DomainError("p must be at least 1");
  if (spec.q < 1) throw DomainError("q must be at least 1");
  if (spec.n < 1) throw DomainError("n must be at least 1");
}

Admissible hereditary(const SearchSpec& spec) {
  const bool split = spec.constraints.complete_split_free;
  const bool clique = spec.constraints.clique_free;
  if (!split && !clique) return {};
  const int p = spec.p;
  const int q = spec.q;
  // The parent is already free, so only copies through the new vertex matter.
  return [=](const Graph& g, int v) {
    const VertexSet closed = g.neighbors(v).with(v);
    if (split && contains_complete_split(g, p, q, closed)) return false;
    if (clique && contains_complete_split(g, p, 1, closed)) return false;
    return true;
  };
}

// Constraints that the enumeration does not already enforce.
bool leaf_ok(const Graph& g, const SearchSpec& spec) {
  if (spec.constraints.connected && !is_connected(g)) return false;
  if (spec.constraints.non_partite && is_k_partite(g, spec.p)) return false;
  return true;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void finish(ExtremalRecord& rec) {
  std::sort(rec.witnesses.begin(), rec.witnesses.end());
  rec.witnesses.erase(std::unique(rec.witnesses.begin(), rec.witnesses.end()), rec.witnesses.end());
  rec.feasible = !rec.witnesses.empty();
  for (const std::string& w : rec.witnesses)
    if (!satisfies(decode_graph6(w), rec.spec)) throw Error("witness " + w + " violates the search constraints");
}

double stanley_bound(long m) { return (-1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(m))) / 2.0; }

}  // namespace

std::string Constraints::key() const {
  std::string out;
  for (const auto& [name, field] : constraint_fields()) {
    if (!(this->*field)) continue;
    if (!out.empty()) out += '+';
    out += name;
  }
  return out.empty() ? "none" : out;
}

Constraints Constraints::parse(const std::string& key) {
  Constraints c;
  if (key == "none" || key.empty()) return c;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, '+')) {
    bool found = false;
    for (const auto& [name, field] : constraint_fields()) {
      if (name == item) {
        c.*field = true;
        found = true;
      }
    }
    if (!found) throw DomainError("unknown constraint '" + item + "'");
  }
  return c;
}

std::string to_string(Objective o) { return o == Objective::edges ? "edges" : "rho"; }

Objective parse_objective(const std::string& s) {
  if (s == "edges") return Objective::edges;
  if (s == "rho") return Objective::rho;
  throw DomainError("unknown objective '" + s + "'");
}

bool satisfies(const Graph& g, const SearchSpec& spec) {
  if (g.order() != spec.n) return false;
  if (spec.constraints.complete_split_free && contains_complete_split(g, spec.p, spec.q)) return false;
  if (spec.constraints.clique_free && contains_clique(g, spec.p + 1)) return false;
  if (spec.constraints.connected && !is_connected(g)) return false;
  if (spec.constraints.non_partite && is_k_partite(g, spec.p)) return false;
  return true;
}

ExtremalRecord compute_ex(const SearchSpec& spec, const SearchOptions& options) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  const int workers = std::max(1, options.workers);

  struct Local {
    long best = -1;
    std::vector<std::string> witnesses;
  };
  std::vector<Local> local(static_cast<std::size_t>(workers));
  EnumerateOptions eo{options.cap, workers};
  ExtremalRecord rec;
  rec.spec = spec;
  rec.spec.objective = Objective::edges;
  rec.graphs_scanned = enumerate_parallel(
      spec.n, hereditary(spec),
      [&](const Graph& g, int w) {
        Local& l = local[static_cast<std::size_t>(w)];
        const long m = g.edge_count();
        if (m < l.best || !leaf_ok(g, spec)) return;
        if (m > l.best) {
          l.best = m;
          l.witnesses.clear();
        }
        l.witnesses.push_back(canonical_graph6(g));
      },
      eo);

  long best = -1;
  for (const Local& l : local) best = std::max(best, l.best);
  if (best >= 0) {
    rec.best_edges = best;
    for (const Local& l : local)
      if (l.best == best) rec.witnesses.insert(rec.witnesses.end(), l.witnesses.begin(), l.witnesses.end());
  }
  finish(rec);
  rec.elapsed_ms = elapsed_since(start);
  return rec;
}

ExtremalRecord compute_spex(const SearchSpec& spec, const SearchOptions& options) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  const int workers = std::max(1, options.workers);

  struct Candidate {
    Graph graph;
    SpectralResult spectrum;
  };
  struct Local {
    double floor = -1.0;  // best certified lower bound seen
    std::vector<Candidate> candidates;
  };
  std::vector<Local> local(static_cast<std::size_t>(workers));
  EnumerateOptions eo{options.cap, workers};
  ExtremalRecord rec;
  rec.spec = spec;
  rec.spec.objective = Objective::rho;
  rec.graphs_scanned = enumerate_parallel(
      spec.n, hereditary(spec),
      [&](const Graph& g, int w) {
        Local& l = local[static_cast<std::size_t>(w)];
        const double cheap = std::min<double>(g.max_degree(), stanley_bound(g.edge_count())) + 1e-9;
        if (cheap < l.floor || !leaf_ok(g, spec)) return;
        SpectralResult r = spectral_radius(g);
        if (r.upper() < l.floor) return;
        if (r.lower() > l.floor) {
          l.floor = r.lower();
          std::erase_if(l.candidates, [&](const Candidate& c) { return c.spectrum.upper() < l.floor; });
        }
        l.candidates.push_back({g, std::move(r)});
      },
      eo);

  double floor = -1.0;
  for (const Local& l : local) floor = std::max(floor, l.floor);
  std::vector<Candidate> pool;
  for (Local& l : local)
    for (Candidate& c : l.candidates)
      if (c.spectrum.upper() >= floor) pool.push_back(std::move(c));
  std::sort(pool.begin(), pool.end(),
            [](const Candidate& a, const Candidate& b) { return a.spectrum.rho > b.spectrum.rho; });

  // Resolve near-ties between the surviving candidates.
  std::vector<const Candidate*> champions;
  for (const Candidate& c : pool) {
    if (champions.empty()) {
      champions.push_back(&c);
      continue;
    }
    std::strong_ordering order = std::strong_ordering::equal;
    try {
      order = compare_rho(c.graph, champions.front()->graph);
    } catch (const UndecidableComparison&) {
      rec.exhaustive = false;
      champions.push_back(&c);
      continue;
    }
    if (order == std::strong_ordering::greater) {
      champions.assign(1, &c);
    } else if (order == std::strong_ordering::equal) {
      champions.push_back(&c);
    }
  }
  if (!champions.empty()) {
    rec.best_rho = RhoValue{champions.front()->spectrum.rho, champions.front()->spectrum.err};
    for (const Candidate* c : champions) rec.witnesses.push_back(canonical_graph6(c->graph));
  }
  finish(rec);
  rec.elapsed_ms = elapsed_since(start);
  return rec;
}

ExtremalRecord compute(const SearchSpec& spec, const SearchOptions& options) {
  return spec.objective == Objective::edges ? compute_ex(spec, options) : compute_spex(spec, options);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::small_n_deviation:
      break;
  }
  return "SMALL-N-DEVIATION";
}

YProbe y_probe(int n, int p, int q, Objective objective, const SearchOptions& options) {
  SearchSpec spec;
  spec.n = n;
  spec.p = p;
  spec.q = q;
  spec.constraints.complete_split_free = true;
  spec.constraints.non_partite = true;
  spec.objective = objective;

  YProbe out;
  const Graph y = y_graph(n, p).graph;
  out.y_graph6 = canonical_graph6(y);
  out.y_feasible = satisfies(y, spec);
  out.y_edges = y.edge_count();
  const SpectralResult ry = spectral_radius(y);
  out.y_rho = {ry.rho, ry.err};
  out.record = compute(spec, options);

  const auto& w = out.record.witnesses;
  const bool listed = std::binary_search(w.begin(), w.end(), out.y_graph6);
  out.y_dominates = listed;
  if (!listed && out.record.feasible) {
    if (objective == Objective::edges) {
      out.y_dominates = out.y_edges >= *out.record.best_edges;
    } else {
      out.y_dominates = compare_rho(y, decode_graph6(w.front())) != std::strong_ordering::less;
    }
  }
  out.y_unique = listed && w.size() == 1;
  return out;
}

namespace {

std::string num(long v) { return std::to_string(v); }

std::string num(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

void require_range(int lo, int hi, int min_n) {
  if (lo > hi) throw DomainError("empty n range");
  if (lo < min_n) throw DomainError("n must be at least " + std::to_string(min_n) + " for this theorem");
}

ReportRow row(const std::string& name, int n, int p, int q) {
  ReportRow r;
  r.theorem = name;
  r.n = n;
  r.p = p;
  r.q = q;
  return r;
}

// Edge-count theorem: optimum equals `expected`, optionally with `must_list`
// among (or, with `unique`, exactly) the witnesses.
ReportRow edge_row(const std::string& name, const ExtremalRecord& rec, long expected,
                   const std::optional<Graph>& must_list, bool unique) {
  ReportRow r = row(name, rec.spec.n, rec.spec.p, rec.spec.q);
  r.expected = num(expected);
  r.observed = rec.best_edges ? num(*rec.best_edges) : "none";
  r.witnesses = rec.witnesses;
  bool ok = rec.best_edges && *rec.best_edges == expected;
  if (ok && must_list) {
    const std::string c = canonical_graph6(*must_list);
    const bool listed = std::binary_search(rec.witnesses.begin(), rec.witnesses.end(), c);
    ok = listed && (!unique || rec.witnesses.size() == 1);
    if (!listed) r.note = "expected witness " + c + " missing";
    else if (!ok) r.note = "extremal graph is not unique";
  }
  r.status = ok ? Status::pass : Status::fail;
  return r;
}

bool complete_bipartite_on_support(const Graph& g) {
  VertexSet support;
  for (int v : g.vertices())
    if (g.degree(v) > 0) support = support.with(v);
  if (support.empty()) return true;
  const Graph h = induced_subgraph(g, support);
  if (!is_connected(h)) return false;
  const auto col = k_coloring(h, 2);
  if (!col) return false;
  long a = std::count(col->begin(), col->end(), 0);
  long b = static_cast<long>(col->size()) - a;
  return h.edge_count() == a * b;
}

// ρ² = m exactly, for graphs within the exact order limit.
std::optional<bool> rho_squared_is_m(const Graph& g) {
  if (g.order() > kExactOrderLimit) return std::nullopt;
  const Polynomial d(std::vector<BigInt>{BigInt(-g.edge_count()), BigInt(0), BigInt(1)});
  return sign_at_largest_root(characteristic_polynomial(g), d) == 0;
}

template <class Check>
void sweep(int n, const Admissible& keep, const SearchOptions& options, Check&& check) {
  std::mutex mu;
  EnumerateOptions eo{options.cap, std::max(1, options.workers)};
  enumerate_parallel(
      n, keep,
      [&](const Graph& g, int) {
        check(g, mu);
      },
      eo);
}

Admissible clique_free(int k) {
  return [k](const Graph& g, int v) { return !contains_complete_split(g, k - 1, 1, g.neighbors(v).with(v)); };
}

ReportRow spectral_sweep(const std::string& name, int n, int r, const SearchOptions& options) {
  ReportRow out = row(name, n, r, 1);
  long scanned = 0;
  long violations = 0;
  long equalities = 0;
  const std::string turan_c = canonical_graph6(turan(n, std::min(n, r)).graph);
  bool turan_equal = false;
  sweep(n, clique_free(r + 1), options, [&](const Graph& g, std::mutex& mu) {
    bool bad = false;
    bool equal = false;
    bool is_turan = false;
    if (name == "nosal") {
      const BoundReport b = check_nosal(g);
      bad = !b.holds;
      if (!bad && b.equality_candidate) {
        const auto exact = rho_squared_is_m(g);
        equal = exact.value_or(true);
        if (equal && !complete_bipartite_on_support(g)) bad = exact.has_value();
      }
    } else if (name == "wilf") {
      bad = !check_wilf(g, r).holds;
    } else {
      const BoundReport b = check_spectral_turan(g, r);
      bad = !b.holds;
      equal = b.turan_order && b.turan_order->order == std::strong_ordering::equal;
      if (equal) {
        is_turan = canonical_graph6(g) == turan_c;
        bad = !is_turan;
      }
    }
    std::lock_guard lock(mu);
    ++scanned;
    if (equal) ++equalities;
    if (is_turan) turan_equal = true;
    if (bad) {
      ++violations;
      if (out.witnesses.size() < 10) out.witnesses.push_back(canonical_graph6(g));
    }
  });
  std::sort(out.witnesses.begin(), out.witnesses.end());
  out.expected = "0 violations";
  out.observed = num(violations) + " violations over " + num(scanned) + " graphs";
  out.status = violations == 0 ? Status::pass : Status::fail;
  if (name == "spectral_turan") {
    out.note = num(equalities) + " equality cases";
    if (!turan_equal) {
      out.status = Status::fail;
      out.note += ", Turán graph not attained";
    }
  } else if (name == "nosal") {
    out.note = num(equalities) + " equality cases, all complete bipartite";
  }
  return out;
}

ReportRow probe_row(const std::string& name, const YProbe& probe, bool need_unique) {
  const ExtremalRecord& rec = probe.record;
  ReportRow r = row(name, rec.spec.n, rec.spec.p, rec.spec.q);
  r.witnesses = rec.witnesses;
  bool below_y = !rec.feasible;
  if (rec.spec.objective == Objective::edges) {
    r.expected = num(probe.y_edges);
    r.observed = rec.best_edges ? num(*rec.best_edges) : "none";
    below_y = below_y || *rec.best_edges < probe.y_edges;
  } else {
    r.expected = num(probe.y_rho.rho);
    r.observed = rec.best_rho ? num(rec.best_rho->rho) : "none";
    below_y = below_y || rec.best_rho->rho + rec.best_rho->err < probe.y_rho.rho - probe.y_rho.err;
  }
  const bool listed = std::binary_search(rec.witnesses.begin(), rec.witnesses.end(), probe.y_graph6);
  if (!probe.y_feasible) {
    r.status = Status::fail;
    r.note = "Y graph violates the constraints";
  } else if (below_y) {
    r.status = Status::fail;
    r.note = "search optimum below the feasible Y graph";
  } else if (!listed) {
    r.status = Status::small_n_deviation;
    r.note = "Y graph not extremal";
  } else if (need_unique && !probe.y_unique) {
    r.status = Status::small_n_deviation;
    r.note = "Y graph extremal but not unique";
  } else {
    r.note = probe.y_unique ? "Y graph is the unique extremal graph" : "Y graph is extremal";
  }
  if (!rec.exhaustive) r.note += " (comparison undecided for some candidates)";
  return r;
}

Status overall(const std::vector<ReportRow>& rows) {
  Status s = Status::pass;
  for (const ReportRow& r : rows) {
    if (r.status == Status::fail) return Status::fail;
    if (r.status == Status::small_n_deviation) s = Status::small_n_deviation;
  }
  return s;
}

}  // namespace

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = {"mantel", "turan",          "erdos_nonbipartite", "brouwer", "nosal",
                                                 "wilf",   "spectral_turan", "li_peng",            "thm_1_1", "thm_1_2"};
  return names;
}

Report verify_theorem(const std::string& name, int n_lo, int n_hi, const TheoremParams& params,
                      const SearchOptions& options) {
  const auto& names = theorem_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw DomainError("unknown theorem '" + name + "'");
  const int r = params.r;
  if (r < 1) throw DomainError("r must be at least 1");
  Report report;

  if (name == "mantel" || name == "turan") {
    const int parts = name == "mantel" ? 2 : r;
    require_range(n_lo, n_hi, 1);
    for (int n = n_lo; n <= n_hi; ++n) {
      SearchSpec spec{n, parts, 1, {}, Objective::edges};
      spec.constraints.clique_free = true;
      ExtremalRecord rec = compute_ex(spec, options);
      report.rows.push_back(edge_row(name, rec, turan_edge_count(n, parts), turan(n, parts).graph, true));
      report.records.push_back(std::move(rec));
    }
  } else if (name == "erdos_nonbipartite" || name == "brouwer") {
    const int parts = name == "brouwer" ? r : 2;
    if (parts < 2) throw DomainError("r must be at least 2");
    require_range(n_lo, n_hi, 2 * parts + 1);
    for (int n = n_lo; n <= n_hi; ++n) {
      SearchSpec spec{n, parts, 1, {}, Objective::edges};
      spec.constraints.clique_free = true;
      spec.constraints.non_partite = true;
      ExtremalRecord rec = compute_ex(spec, options);
      const long expected = name == "brouwer" ? turan_edge_count(n, parts) - n / parts + 1
                                              : static_cast<long>((n - 1) * (n - 1) / 4 + 1);
      report.rows.push_back(edge_row(name, rec, expected, y_graph(n, parts).graph, false));
      report.records.push_back(std::move(rec));
    }
  } else if (name == "nosal" || name == "wilf" || name == "spectral_turan") {
    const int parts = name == "nosal" ? 2 : r;
    require_range(n_lo, n_hi, 1);
    for (int n = n_lo; n <= n_hi; ++n) report.rows.push_back(spectral_sweep(name, n, parts, options));
  } else if (name == "li_peng") {
    if (r < 2) throw DomainError("r must be at least 2");
    require_range(n_lo, n_hi, 2 * r + 1);
    for (int n = n_lo; n <= n_hi; ++n) {
      // q = 1 makes B_{r,1} = K_{r+1}.
      YProbe probe = y_probe(n, r, 1, Objective::rho, options);
      report.rows.push_back(probe_row(name, probe, true));
      report.records.push_back(std::move(probe.record));
    }
  } else {
    if (r < 3) throw DomainError("the split-graph theorems need p >= 3");
    if (params.q < 1) throw DomainError("q must be at least 1");
    require_range(n_lo, n_hi, 2 * r + 1);
    const Objective objective = name == "thm_1_1" ? Objective::edges : Objective::rho;
    for (int n = n_lo; n <= n_hi; ++n) {
      YProbe probe = y_probe(n, r, params.q, objective, options);
      ReportRow out = probe_row(name, probe, name == "thm_1_2");
      if (name == "thm_1_1") {
        // Every K_{p+1}-free extremal graph is B_{p,q}-free; compare the optima.
        SearchSpec base{n, r, 1, {}, Objective::edges};
        base.constraints.complete_split_free = true;
        base.constraints.non_partite = true;
        const ExtremalRecord rec1 = compute_ex(base, options);
        bool included = true;
        for (const std::string& w : rec1.witnesses)
          included = included && !contains_complete_split(decode_graph6(w), r, params.q);
        const bool match = rec1.best_edges && probe.record.best_edges && *rec1.best_edges == *probe.record.best_edges;
        out.note += "; q=1 optimum " + (rec1.best_edges ? num(*rec1.best_edges) : std::string("none")) +
                    (match ? " matches" : " differs");
        if (!included) {
          out.status = Status::fail;
          out.note += "; a q=1 witness contains B_{p,q}";
        } else if (!match && out.status == Status::pass) {
          out.status = Status::small_n_deviation;
        }
      }
      report.rows.push_back(std::move(out));
      report.records.push_back(std::move(probe.record));
    }
  }
  report.overall = overall(report.rows);
  return report;
}

}  // namespace splitex
