#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "splitex/errors.hpp"
#include "splitex/search.hpp"
#include "splitex/store.hpp"

using namespace splitex;

namespace {

std::string temp_path(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("splitex_test_" + name + ".jsonl");
  std::filesystem::remove(p);
  return p.string();
}

SearchSpec spec(int n, Objective o) {
  SearchSpec s;
  s.n = n;
  s.p = 2;
  s.q = 1;
  s.constraints = Constraints::parse("split_free+non_partite");
  s.objective = o;
  return s;
}

}  // namespace

TEST_CASE("json round trip") {
  for (Objective o : {Objective::edges, Objective::rho}) {
    const ExtremalRecord rec = compute(spec(6, o));
    const ExtremalRecord back = record_from_json(nlohmann::json::parse(to_json(rec).dump()));
    CHECK(back.spec.n == rec.spec.n);
    CHECK(back.spec.constraints == rec.spec.constraints);
    CHECK(back.spec.objective == o);
    CHECK(back.best_edges == rec.best_edges);
    CHECK(back.best_rho.has_value() == rec.best_rho.has_value());
    if (rec.best_rho) CHECK(back.best_rho->rho == rec.best_rho->rho);
    CHECK(back.witnesses == rec.witnesses);
    CHECK(back.graphs_scanned == rec.graphs_scanned);
    CHECK(back.exhaustive == rec.exhaustive);
  }
  const ExtremalRecord empty = compute(spec(4, Objective::edges));
  CHECK_FALSE(record_from_json(to_json(empty)).best_edges);
  CHECK_FALSE(to_json(empty, false).contains("elapsed_ms"));
  CHECK_THROWS_AS(record_from_json(nlohmann::json::parse(R"({"n": 3})")), ParseError);
  CHECK(record_key(spec(7, Objective::rho)) == "n=7 p=2 q=1 constraints=split_free+non_partite objective=rho");
}

TEST_CASE("store append, reload and resume") {
  const std::string path = temp_path("resume");
  {
    RecordStore store(path);
    store.load();
    CHECK(store.records().empty());
    store.append(compute(spec(5, Objective::edges)));
    store.append(compute(spec(6, Objective::edges)));
  }
  RecordStore again(path);
  again.load();
  CHECK(again.records().size() == 2);
  CHECK(again.contains(spec(5, Objective::edges)));
  CHECK_FALSE(again.contains(spec(5, Objective::rho)));
  CHECK(*again.find(spec(5, Objective::edges))->best_edges == 5);
  std::filesystem::remove(path);
}

TEST_CASE("corrupt lines are skipped with a warning") {
  const std::string path = temp_path("corrupt");
  {
    RecordStore store(path);
    store.append(compute(spec(5, Objective::edges)));
  }
  {
    std::ofstream out(path, std::ios::app);
    out << "{\"n\": 6, \"p\": tru\n";
  }
  {
    RecordStore store(path);
    store.append(compute(spec(6, Objective::edges)));
  }
  RecordStore store(path);
  std::ostringstream warnings;
  store.load(&warnings);
  CHECK(store.records().size() == 2);
  CHECK(warnings.str() == "warning: " + path + ":2: skipping corrupt record\n");
  std::filesystem::remove(path);
}

TEST_CASE("csv export") {
  std::ostringstream out;
  export_csv(out, {compute(spec(5, Objective::edges)), compute(spec(4, Objective::edges))});
  CHECK(out.str() ==
        "n,p,q,constraints,objective,best_value,witness_count,exhaustive\n"
        "5,2,1,split_free+non_partite,edges,5,1,true\n"
        "4,2,1,split_free+non_partite,edges,,0,true\n");
}
