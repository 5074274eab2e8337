#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitex/canon.hpp"
#include "splitex/constructions.hpp"
#include "splitex/errors.hpp"
#include "splitex/oracles.hpp"
#include "splitex/search.hpp"
#include "splitex/spectral.hpp"
#include "splitex/store.hpp"
#include "splitex/symmetrization.hpp"

namespace splitex::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& text, char sep = ',') {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("not an integer: '" + item + "'");
    }
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_ints(text);
    if (v.size() != 1) throw UsageError("bad range '" + text + "'");
    return {v[0], v[0]};
  }
  const auto lo = parse_ints(text.substr(0, dots));
  const auto hi = parse_ints(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1) throw UsageError("bad range '" + text + "'");
  return {lo[0], hi[0]};
}

VertexSet to_set(const std::vector<int>& vs) {
  VertexSet s;
  for (int v : vs) {
    if (v < 0 || v >= kMaxVertices) throw DomainError("vertex " + std::to_string(v) + " out of range");
    s = s.with(v);
  }
  return s;
}

VertexPartition parse_classes(const std::string& text) {
  std::vector<VertexSet> classes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) classes.push_back(to_set(parse_ints(item)));
  return VertexPartition(std::move(classes));
}

json set_json(VertexSet s) { return s.to_vector(); }

json classes_json(const VertexPartition& p) {
  json out = json::array();
  for (VertexSet c : p.classes()) out.push_back(set_json(c));
  return out;
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool no_timing = false;
};

Graph read_graph(const std::string& arg, std::istream& in) {
  if (!arg.empty()) return decode_graph6(arg);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return decode_graph6(line);
  }
  throw UsageError("no graph given and none on standard input");
}

void emit(Context& ctx, const json& j) { ctx.out << j.dump() << '\n'; }

// construct ---------------------------------------------------------------

void emit_graph(Context& ctx, const Graph& g, const std::string& format, json extra = json::object()) {
  if (format == "graph6") {
    ctx.out << encode_graph6(g) << '\n';
    return;
  }
  extra["graph6"] = encode_graph6(g);
  extra["n"] = g.order();
  extra["edges"] = g.edge_count();
  emit(ctx, extra);
}

// procedure -----------------------------------------------------------------

json state_json(const ProcedureState& s) {
  json j;
  j["step"] = s.step;
  j["graph6"] = encode_graph6(s.graph);
  j["edges"] = s.graph.edge_count();
  json labels = json::array();
  for (ClassType t : s.labels) labels.push_back(to_string(t));
  j["labels"] = labels;
  json active = json::array();
  for (VertexSet a : s.active) active.push_back(set_json(a));
  j["active"] = active;
  return j;
}

VertexPartition auto_classes(const Graph& g, int u0) {
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (v != u0) keep.push_back(v);
  if (keep.empty()) return VertexPartition(std::vector<VertexSet>{});
  const ColoringResult c = chromatic_number(induced_subgraph(g, keep));
  std::vector<VertexSet> classes(static_cast<std::size_t>(c.chi));
  for (std::size_t i = 0; i < keep.size(); ++i)
    classes[static_cast<std::size_t>(c.coloring[i])] = classes[static_cast<std::size_t>(c.coloring[i])].with(keep[i]);
  return VertexPartition(std::move(classes));
}

VertexPartition classes_from_coloring(const std::vector<int>& colors, int n, int u0) {
  if (static_cast<int>(colors.size()) != n) throw DomainError("coloring needs one entry per vertex");
  int k = 0;
  for (int v = 0; v < n; ++v)
    if (v != u0) {
      if (colors[static_cast<std::size_t>(v)] < 0) throw DomainError("negative color");
      k = std::max(k, colors[static_cast<std::size_t>(v)] + 1);
    }
  std::vector<VertexSet> classes(static_cast<std::size_t>(k));
  for (int v = 0; v < n; ++v)
    if (v != u0) classes[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] =
        classes[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])].with(v);
  return VertexPartition(std::move(classes));
}

// search --------------------------------------------------------------------

json record_json(const ExtremalRecord& rec, bool timing) { return to_json(rec, timing); }

json row_json(const ReportRow& r) {
  json j;
  j["theorem"] = r.theorem;
  j["n"] = r.n;
  j["p"] = r.p;
  j["q"] = r.q;
  j["expected"] = r.expected;
  j["observed"] = r.observed;
  j["status"] = to_string(r.status);
  j["witnesses"] = r.witnesses;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

int run(const std::vector<std::string>& args, Context& ctx) {
  CLI::App app{"Extremal and spectral checks for complete-split-free graphs", "splitex"};
  app.require_subcommand(1);
  app.add_flag("--no-timing", "omit timing fields from the output");

  std::string graph_arg;
  std::string format = "graph6";

  // construct
  auto* construct = app.add_subcommand("construct", "build a named graph");
  construct->require_subcommand(1);
  construct->add_option("--format", format, "graph6 or json")->check(CLI::IsMember({"graph6", "json"}));
  int n = 0, p = 2, q = 1, r = 2, t = 1;
  auto* c_turan = construct->add_subcommand("turan", "Turán graph T(n,r)");
  c_turan->add_option("--n", n)->required();
  c_turan->add_option("--r", r)->required();
  auto* c_split = construct->add_subcommand("split", "complete split graph B(p,q)");
  c_split->add_option("--p", p)->required();
  c_split->add_option("--q", q)->required();
  auto* c_y = construct->add_subcommand("y", "the graph Y_p(n)");
  c_y->add_option("--n", n)->required();
  c_y->add_option("--p", p)->required();
  auto* c_book = construct->add_subcommand("book", "book graph B_t");
  c_book->add_option("--t", t)->required();
  auto* c_gij = construct->add_subcommand("gij", "G_ij over explicit classes");
  std::string classes_text;
  int ci = 0, cj = 1, ui = -1, uj = -1;
  c_gij->add_option("--classes", classes_text, "classes as 0,1;2,3;...")->required();
  c_gij->add_option("--i", ci);
  c_gij->add_option("--j", cj);
  c_gij->add_option("--ui", ui)->required();
  c_gij->add_option("--uj", uj)->required();
  for (auto* c : {c_turan, c_split, c_y, c_book, c_gij})
    c->add_option("--format", format, "graph6 or json")->check(CLI::IsMember({"graph6", "json"}));

  // contains
  auto* contains = app.add_subcommand("contains", "test for a copy of B(p,q)");
  contains->add_option("graph", graph_arg, "graph6; read from stdin when omitted");
  contains->add_option("--p", p)->required();
  contains->add_option("--q", q)->required();

  // chromatic
  auto* chromatic = app.add_subcommand("chromatic", "chromatic number and an optimal coloring");
  chromatic->add_option("graph", graph_arg);

  // spectral
  auto* spectral = app.add_subcommand("spectral", "certified spectral radius");
  spectral->add_option("graph", graph_arg);
  double tol = 1e-12;
  bool want_perron = false;
  spectral->add_option("--tol", tol);
  spectral->add_flag("--perron", want_perron, "include the Perron vector");

  // rotate
  auto* rotate = app.add_subcommand("rotate", "move edges from v to u over private neighbors");
  rotate->add_option("graph", graph_arg);
  int ru = -1, rv = -1;
  std::string private_text;
  bool verify_lemma = false;
  rotate->add_option("--u", ru)->required();
  rotate->add_option("--v", rv)->required();
  rotate->add_option("--private", private_text, "comma separated; all of them when omitted");
  rotate->add_flag("--verify", verify_lemma, "check that the spectral radius grows");

  // procedure
  auto* procedure = app.add_subcommand("procedure", "run the class-typed rewiring procedure");
  procedure->add_option("graph", graph_arg);
  int u0 = -1;
  std::string coloring_text;
  int proc_q = 0;
  procedure->add_option("--u0", u0, "defaults to a minimum-degree vertex");
  procedure->add_option("--classes", classes_text, "classes as 0,1;2,3;...");
  procedure->add_option("--coloring", coloring_text, "one color per vertex; the entry of u0 is ignored");
  procedure->add_option("--q", proc_q, "report B(p,q)-freeness of every state");

  // search
  auto* search = app.add_subcommand("search", "exhaustive extremal search");
  search->require_subcommand(1);
  std::string n_range;
  std::string constraint_text = "none";
  bool split_free = false, clique_free = false, non_partite = false, connected = false;
  int workers = 1, cap = 10;
  std::string store_path;
  bool resume = false;
  std::string search_format = "json";
  auto* s_ex = search->add_subcommand("ex", "maximize the edge count");
  auto* s_spex = search->add_subcommand("spex", "maximize the spectral radius");
  for (auto* s : {s_ex, s_spex}) {
    s->add_option("--n", n_range, "n or lo..hi")->required();
    s->add_option("--p", p);
    s->add_option("--q", q);
    s->add_option("--constraints", constraint_text, "e.g. split_free+non_partite");
    s->add_flag("--split-free", split_free);
    s->add_flag("--clique-free", clique_free);
    s->add_flag("--non-partite", non_partite);
    s->add_flag("--connected", connected);
    s->add_option("--workers", workers);
    s->add_option("--cap", cap);
    s->add_option("--store", store_path, "JSON-lines record store");
    s->add_flag("--resume", resume, "reuse records already in the store");
    s->add_option("--format", search_format)->check(CLI::IsMember({"json", "csv"}));
  }

  // verify
  auto* verify = app.add_subcommand("verify", "check a theorem against exhaustive search");
  std::string theorem;
  verify->add_option("theorem", theorem)->required()->check(CLI::IsMember(theorem_names()));
  verify->add_option("--n", n_range, "n or lo..hi")->required();
  verify->add_option("--r", r, "part count (also p)");
  verify->add_option("--p", r, "alias of --r");
  verify->add_option("--q", q);
  verify->add_option("--workers", workers);
  verify->add_option("--cap", cap);

  // encode / decode
  auto* encode = app.add_subcommand("encode", "edge list to graph6");
  std::string edges_text;
  encode->add_option("--n", n)->required();
  encode->add_option("--edges", edges_text, "as 0-1,1-2,...");
  auto* decode = app.add_subcommand("decode", "graph6 to an edge list");
  decode->add_option("graph", graph_arg);

  // Accepted anywhere on the line.
  std::vector<std::string> reversed;
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    if (*it == "--no-timing") ctx.no_timing = true;
    else reversed.push_back(*it);
  }
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, ctx.out, ctx.err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, ctx.out, ctx.err);
    ctx.err << app.help();
    return kExitUsage;
  }

  if (*construct) {
    if (*c_turan) {
      const TuranGraph tg = turan(n, r);
      emit_graph(ctx, tg.graph, format, {{"parts", classes_json(tg.parts)}});
    } else if (*c_split) {
      emit_graph(ctx, complete_split(p, q), format);
    } else if (*c_y) {
      const YGraph y = y_graph(n, p);
      emit_graph(ctx, y.graph, format,
                 {{"parts", classes_json(y.spec.classes)}, {"u0", y.spec.u0}, {"u1", y.spec.u1}, {"u2", y.spec.u2}});
    } else if (*c_book) {
      emit_graph(ctx, book(t), format);
    } else {
      const VertexPartition classes = parse_classes(classes_text);
      emit_graph(ctx, g_ij(classes, ci, cj, ui, uj), format, {{"u0", g_ij_apex(classes)}});
    }
    return kExitOk;
  }

  if (*contains) {
    const Graph g = read_graph(graph_arg, ctx.in);
    const auto w = contains_complete_split(g, p, q);
    json j{{"contains", w.has_value()}, {"p", p}, {"q", q}};
    if (w) {
      j["clique"] = set_json(w->clique);
      j["apex"] = set_json(w->apex);
    }
    emit(ctx, j);
    return kExitOk;
  }

  if (*chromatic) {
    const Graph g = read_graph(graph_arg, ctx.in);
    const ColoringResult c = chromatic_number(g);
    emit(ctx, {{"chi", c.chi}, {"coloring", c.coloring}});
    return kExitOk;
  }

  if (*spectral) {
    const Graph g = read_graph(graph_arg, ctx.in);
    const SpectralResult s = spectral_radius(g, tol);
    json j{{"rho", s.rho}, {"err", s.err}, {"iterations", s.iterations}};
    if (want_perron) j["perron"] = s.perron;
    emit(ctx, j);
    return kExitOk;
  }

  if (*rotate) {
    const Graph g = read_graph(graph_arg, ctx.in);
    RotationSpec spec;
    spec.u = ru;
    spec.v = rv;
    if (!private_text.empty()) {
      spec.private_neighbors = to_set(parse_ints(private_text));
    } else if (ru >= 0 && ru < g.order() && rv >= 0 && rv < g.order()) {
      spec.private_neighbors = (g.neighbors(rv) - g.neighbors(ru)).without(ru);
    }
    const Graph h = rotate_edges(g, spec);
    json j{{"graph6", encode_graph6(h)}, {"edges", h.edge_count()}};
    int code = kExitOk;
    if (verify_lemma) {
      const RotationCheck check = verify_rotation_lemma(g, spec);
      j["verdict"] = to_string(check.verdict);
      j["perron_order"] = check.perron.order ? to_string(*check.perron.order) : "undecided";
      j["perron_route"] = check.perron.route;
      if (check.comparison) {
        j["rho_order"] = to_string(check.comparison->order);
        j["rho_route"] = check.comparison->route == Route::exact ? "exact" : "numeric";
      }
      if (check.verdict == Verdict::fails) code = kExitFail;
    }
    emit(ctx, j);
    return code;
  }

  if (*procedure) {
    const Graph g = read_graph(graph_arg, ctx.in);
    if (u0 < 0) {
      u0 = 0;
      for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(u0)) u0 = v;
    }
    if (u0 >= g.order()) throw DomainError("u0 is not a vertex");
    VertexPartition classes;
    if (!classes_text.empty()) {
      classes = parse_classes(classes_text);
    } else if (!coloring_text.empty()) {
      classes = classes_from_coloring(parse_ints(coloring_text), g.order(), u0);
    } else {
      classes = auto_classes(g, u0);
    }
    const ProcedureTrace trace =
        run_procedure(g, u0, classes, proc_q > 0 ? std::optional<int>(proc_q) : std::nullopt);
    json states = json::array();
    for (std::size_t i = 0; i < trace.states.size(); ++i) {
      json s = state_json(trace.states[i]);
      if (!trace.split_free.empty()) s["split_free"] = static_cast<bool>(trace.split_free[i]);
      states.push_back(s);
    }
    json moves = json::array();
    for (const StepRecord& m : trace.moves) {
      json added = json::array();
      for (const Edge& e : m.added) added.push_back({e.first, e.second});
      moves.push_back({{"class", m.class_index},
                       {"vertex", m.vertex},
                       {"removed", {m.removed.first, m.removed.second}},
                       {"added", added}});
    }
    emit(ctx, {{"u0", u0},
               {"classes", classes_json(classes)},
               {"states", states},
               {"moves", moves},
               {"final_graph6", encode_graph6(trace.final_state().graph)}});
    return kExitOk;
  }

  if (*search) {
    const auto [lo, hi] = parse_range(n_range);
    Constraints cons = Constraints::parse(constraint_text);
    cons.complete_split_free = cons.complete_split_free || split_free;
    cons.clique_free = cons.clique_free || clique_free;
    cons.non_partite = cons.non_partite || non_partite;
    cons.connected = cons.connected || connected;
    if (store_path.empty()) {
      if (const char* env = std::getenv("SPLITEX_STORE")) store_path = env;
    }
    std::optional<RecordStore> store;
    if (!store_path.empty()) {
      store.emplace(store_path);
      store->load(&ctx.err);
    }
    const SearchOptions options{workers, cap};
    std::vector<ExtremalRecord> records;
    for (int k = lo; k <= hi; ++k) {
      SearchSpec spec{k, p, q, cons, *s_ex ? Objective::edges : Objective::rho};
      std::optional<ExtremalRecord> rec;
      if (store && resume) rec = store->find(spec);
      if (!rec) {
        rec = compute(spec, options);
        if (store) store->append(*rec);
      }
      records.push_back(*rec);
    }
    if (search_format == "csv") {
      export_csv(ctx.out, records);
    } else {
      for (const ExtremalRecord& rec : records) emit(ctx, record_json(rec, !ctx.no_timing));
    }
    return kExitOk;
  }

  if (*verify) {
    const auto [lo, hi] = parse_range(n_range);
    const Report report = verify_theorem(theorem, lo, hi, TheoremParams{r, q}, SearchOptions{workers, cap});
    for (const ReportRow& row : report.rows) emit(ctx, row_json(row));
    emit(ctx, {{"theorem", theorem}, {"overall", to_string(report.overall)}});
    return report.overall == Status::fail ? kExitFail : kExitOk;
  }

  if (*encode) {
    GraphBuilder b(n);
    std::stringstream ss(edges_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto dash = item.find('-');
      if (dash == std::string::npos) throw UsageError("bad edge '" + item + "'");
      const auto a = parse_ints(item.substr(0, dash));
      const auto c = parse_ints(item.substr(dash + 1));
      if (a.size() != 1 || c.size() != 1) throw UsageError("bad edge '" + item + "'");
      if (a[0] < 0 || a[0] >= n || c[0] < 0 || c[0] >= n || a[0] == c[0])
        throw DomainError("edge " + item + " is not between two distinct vertices");
      b.add_edge(a[0], c[0]);
    }
    ctx.out << encode_graph6(b.build()) << '\n';
    return kExitOk;
  }

  const Graph g = read_graph(graph_arg, ctx.in);
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  emit(ctx, {{"n", g.order()}, {"edges", edges}});
  (void)decode;
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  try {
    return run(args, ctx);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << " (best err " << e.best_err() << ")\n";
    return kExitCapacity;
  } catch (const UndecidableComparison& e) {
    err << "undecidable: " << e.what() << '\n';
    return kExitCapacity;
  }
}

}  // namespace splitex::cli
