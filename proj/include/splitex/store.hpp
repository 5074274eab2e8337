#pragma once

// Append-only JSON-lines store of extremal search records.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "splitex/search.hpp"

namespace splitex {

nlohmann::json to_json(const ExtremalRecord& rec, bool timing = true);
/// Throws ParseError on a malformed object.
ExtremalRecord record_from_json(const nlohmann::json& j);

/// "n=7 p=3 q=2 constraints=split_free+non_partite objective=edges"
std::string record_key(const SearchSpec& spec);

class RecordStore {
 public:
  explicit RecordStore(std::string path);

  /// Reads every record; corrupt lines are skipped with a warning naming the
  /// line number written to `warnings`.
  void load(std::ostream* warnings = nullptr);
  void append(const ExtremalRecord& rec);
  std::optional<ExtremalRecord> find(const SearchSpec& spec) const;
  bool contains(const SearchSpec& spec) const { return find(spec).has_value(); }
  const std::vector<ExtremalRecord>& records() const { return records_; }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::vector<ExtremalRecord> records_;
};

/// Columns n,p,q,constraints,objective,best_value,witness_count,exhaustive.
void export_csv(std::ostream& out, const std::vector<ExtremalRecord>& records);

}  // namespace splitex
