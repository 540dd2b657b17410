#pragma once
/// @file report.hpp
/// Check results, their aggregation and JSON / text rendering.

#include <map>
#include <string>
#include <vector>

namespace modrep {

enum class Status { pass, fail, evidence_only };
const char* status_label(Status s);
Status parse_status(const std::string& text);

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string details;
  long runtime_ms = 0;
};

struct Report {
  std::string suite;
  std::map<std::string, std::string> config;
  std::vector<Check> checks;
  std::string version;
  long cache_hits = 0;
  bool incomplete = false;

  /// "fail" when any check fails or the run is incomplete, else "pass".
  std::string overall() const;
  /// Warnings that do not change the status (an empty check list).
  std::vector<std::string> warnings() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  /// Appends the checks of another report, prefixing names with its suite.
  void merge(const Report& o);
};

const char* artifact_version();

/// Canonical JSON (sorted keys, checks sorted by name). With `reproducible`
/// every runtime is written as 0.
std::string to_json(const Report& r, bool reproducible = false);
/// Throws ParseError on malformed input.
Report report_from_json(const std::string& text);
std::string to_text(const Report& r);

}  // namespace modrep
