#include "splitex/store.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "splitex/errors.hpp"

namespace splitex {

using nlohmann::json;

nlohmann::json to_json(const ExtremalRecord& rec, bool timing) {
  json j;
  j["n"] = rec.spec.n;
  j["p"] = rec.spec.p;
  j["q"] = rec.spec.q;
  j["constraints"] = rec.spec.constraints.key();
  j["objective"] = to_string(rec.spec.objective);
  if (rec.best_edges) {
    j["best_value"] = *rec.best_edges;
  } else if (rec.best_rho) {
    j["best_value"] = {{"rho", rec.best_rho->rho}, {"err", rec.best_rho->err}};
  } else {
    j["best_value"] = nullptr;
  }
  j["witnesses"] = rec.witnesses;
  j["graphs_scanned"] = rec.graphs_scanned;
  j["feasible"] = rec.feasible;
  j["exhaustive"] = rec.exhaustive;
  if (timing) j["elapsed_ms"] = rec.elapsed_ms;
  return j;
}

ExtremalRecord record_from_json(const nlohmann::json& j) {
  try {
    ExtremalRecord rec;
    rec.spec.n = j.at("n").get<int>();
    rec.spec.p = j.at("p").get<int>();
    rec.spec.q = j.at("q").get<int>();
    rec.spec.constraints = Constraints::parse(j.at("constraints").get<std::string>());
    rec.spec.objective = parse_objective(j.at("objective").get<std::string>());
    const json& v = j.at("best_value");
    if (v.is_number_integer()) {
      rec.best_edges = v.get<long>();
    } else if (v.is_object()) {
      rec.best_rho = RhoValue{v.at("rho").get<double>(), v.at("err").get<double>()};
    } else if (!v.is_null()) {
      throw ParseError("best_value has an unexpected type", 0);
    }
    rec.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    rec.graphs_scanned = j.at("graphs_scanned").get<long>();
    rec.feasible = j.at("feasible").get<bool>();
    rec.exhaustive = j.at("exhaustive").get<bool>();
    rec.elapsed_ms = j.value("elapsed_ms", 0.0);
    return rec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad record: ") + e.what(), 0);
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad record: ") + e.what(), 0);
  }
}

std::string record_key(const SearchSpec& spec) {
  std::ostringstream os;
  os << "n=" << spec.n << " p=" << spec.p << " q=" << spec.q << " constraints=" << spec.constraints.key()
     << " objective=" << to_string(spec.objective);
  return os.str();
}

RecordStore::RecordStore(std::string path) : path_(std::move(path)) {}

void RecordStore::load(std::ostream* warnings) {
  records_.clear();
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records_.push_back(record_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      if (warnings) *warnings << "warning: " << path_ << ":" << number << ": skipping corrupt record\n";
    }
  }
}

void RecordStore::append(const ExtremalRecord& rec) {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("cannot open record store " + path_);
  out << to_json(rec).dump() << '\n';
  if (!out) throw Error("cannot write record store " + path_);
  records_.push_back(rec);
}

std::optional<ExtremalRecord> RecordStore::find(const SearchSpec& spec) const {
  const std::string key = record_key(spec);
  for (auto it = records_.rbegin(); it != records_.rend(); ++it)
    if (record_key(it->spec) == key) return *it;
  return std::nullopt;
}

void export_csv(std::ostream& out, const std::vector<ExtremalRecord>& records) {
  out << "n,p,q,constraints,objective,best_value,witness_count,exhaustive\n";
  for (const ExtremalRecord& r : records) {
    out << r.spec.n << ',' << r.spec.p << ',' << r.spec.q << ',' << r.spec.constraints.key() << ','
        << to_string(r.spec.objective) << ',';
    if (r.best_edges) {
      out << *r.best_edges;
    } else if (r.best_rho) {
      std::ostringstream v;
      v << std::setprecision(17) << r.best_rho->rho;
      out << v.str();
    }
    out << ',' << r.witnesses.size() << ',' << (r.exhaustive ? "true" : "false") << '\n';
  }
}

}  // namespace splitex
