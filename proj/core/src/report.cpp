#include "modrep/report.hpp"

#include <algorithm>
#include <iomanip>
#include "json.hpp"
#include <sstream>

#include "modrep/errors.hpp"

#ifndef MODREP_VERSION
#define MODREP_VERSION "dev"
#endif

namespace modrep {

const char* status_label(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::evidence_only: return "evidence-only";
  }
  return "?";
}

Status parse_status(const std::string& text) {
  if (text == "pass") return Status::pass;
  if (text == "fail") return Status::fail;
  if (text == "evidence-only") return Status::evidence_only;
  throw ParseError("unknown status: " + text);
}

std::string Report::overall() const {
  if (incomplete) return "fail";
  bool any_fail = std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::fail; });
  return any_fail ? "fail" : "pass";
}

std::vector<std::string> Report::warnings() const {
  std::vector<std::string> w;
  if (checks.empty()) w.push_back("no checks were run");
  if (incomplete) w.push_back("run incomplete: a resource limit was hit");
  return w;
}

void Report::merge(const Report& o) {
  for (Check c : o.checks) {
    c.name = o.suite + "/" + c.name;
    checks.push_back(std::move(c));
  }
  cache_hits += o.cache_hits;
  incomplete = incomplete || o.incomplete;
}

const char* artifact_version() { return MODREP_VERSION; }

namespace {

std::vector<Check> sorted_checks(const Report& r) {
  std::vector<Check> c = r.checks;
  std::stable_sort(c.begin(), c.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  return c;
}

}  // namespace

std::string to_json(const Report& r, bool reproducible) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["config"] = r.config;
  j["checks"] = nlohmann::json::array();
  for (const Check& c : sorted_checks(r))
    j["checks"].push_back({{"name", c.name},
                           {"status", status_label(c.status)},
                           {"details", c.details},
                           {"runtime_ms", reproducible ? 0 : c.runtime_ms}});
  j["overall"] = r.overall();
  j["version"] = r.version;
  j["cache_hits"] = reproducible ? 0 : r.cache_hits;
  j["incomplete"] = r.incomplete;
  j["warnings"] = r.warnings();
  // nlohmann::json objects are std::map backed, so keys come out sorted.
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  Report r;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    r.suite = j.at("suite").get<std::string>();
    r.config = j.at("config").get<std::map<std::string, std::string>>();
    r.version = j.at("version").get<std::string>();
    r.cache_hits = j.value("cache_hits", 0L);
    r.incomplete = j.value("incomplete", false);
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), parse_status(c.at("status").get<std::string>()),
                          c.at("details").get<std::string>(), c.at("runtime_ms").get<long>()});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
  return r;
}

std::string to_text(const Report& r) {
  std::vector<Check> checks = sorted_checks(r);
  std::size_t wn = 5, ws = 6;
  for (const Check& c : checks) {
    wn = std::max(wn, c.name.size());
    ws = std::max(ws, std::string(status_label(c.status)).size());
  }
  std::ostringstream os;
  os << "suite: " << r.suite << "  version: " << r.version << "  overall: " << r.overall() << "\n";
  for (const auto& [k, v] : r.config) os << "  " << k << " = " << v << "\n";
  os << std::left << std::setw(int(wn)) << "check" << "  " << std::setw(int(ws)) << "status" << "  "
     << std::right << std::setw(8) << "ms" << "  details\n";
  for (const Check& c : checks)
    os << std::left << std::setw(int(wn)) << c.name << "  " << std::setw(int(ws)) << status_label(c.status)
       << "  " << std::right << std::setw(8) << c.runtime_ms << "  " << c.details << "\n";
  for (const std::string& w : r.warnings()) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace modrep
