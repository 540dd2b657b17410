#include "modrep/config.hpp"

#include <sstream>

#include "modrep/errors.hpp"
#include "modrep/field.hpp"

namespace modrep {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long to_long(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long x = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw UsageError("parameter " + key + " expects an integer, got '" + v + "'");
  }
}

}  // namespace

void SuiteConfig::validate() const {
  if (!is_odd_prime(p)) throw UsageError("p must be an odd prime");
  if (k < 1 || k > 4) throw UsageError("k must be in 1..4");
  if (r_lo != -1 && (r_lo < 0 || r_hi < r_lo || r_hi > int(p) - 1))
    throw UsageError("r must lie in 0..p-1");
  if (depth < 2) throw UsageError("depth must be >= 2");
  if (slack < 0) throw UsageError("slack must be >= 0");
  if (word_len < 0) throw UsageError("word length must be >= 0");
  if (window_m < 0 || window_n < 0) throw UsageError("window entries must be >= 0");
  if (levels < 1) throw UsageError("levels must be >= 1");
  if (rounds < 0) throw UsageError("rounds must be >= 0");
}

std::vector<int> SuiteConfig::weights() const {
  std::vector<int> out;
  int lo = r_lo == -1 ? 0 : r_lo, hi = r_lo == -1 ? int(p) - 1 : r_hi;
  for (int r = lo; r <= hi; ++r) out.push_back(r);
  return out;
}

std::map<std::string, std::string> SuiteConfig::echo() const {
  std::map<std::string, std::string> m;
  m["p"] = std::to_string(p);
  m["k"] = std::to_string(k);
  m["r"] = r_lo == -1 ? "all" : (r_lo == r_hi ? std::to_string(r_lo) : std::to_string(r_lo) + ".." + std::to_string(r_hi));
  m["lambda"] = lambda ? *lambda : "default";
  m["depth"] = std::to_string(depth);
  m["slack"] = std::to_string(slack);
  m["word_len"] = std::to_string(word_len);
  m["alphabet"] = alphabet.empty() ? "default" : alphabet;
  m["window"] = std::to_string(window_m) + "," + std::to_string(window_n);
  m["seed"] = std::to_string(seed);
  m["a"] = std::to_string(a);
  m["levels"] = std::to_string(levels);
  m["rounds"] = std::to_string(rounds);
  return m;
}

void set_param(SuiteConfig& c, const std::string& key, const std::string& value) {
  std::string k = key;
  for (char& ch : k)
    if (ch == '-') ch = '_';
  if (k == "suite") c.suite = value;
  else if (k == "p") c.p = std::uint32_t(to_long(key, value));
  else if (k == "k") c.k = unsigned(to_long(key, value));
  else if (k == "r") {
    auto dots = value.find("..");
    if (dots == std::string::npos) {
      c.r_lo = c.r_hi = int(to_long(key, value));
    } else {
      c.r_lo = int(to_long(key, value.substr(0, dots)));
      c.r_hi = int(to_long(key, value.substr(dots + 2)));
    }
    if (c.r_lo < 0) throw UsageError("r must be >= 0");
  } else if (k == "lambda") c.lambda = value;
  else if (k == "depth") c.depth = int(to_long(key, value));
  else if (k == "slack") c.slack = int(to_long(key, value));
  else if (k == "word_len") c.word_len = int(to_long(key, value));
  else if (k == "alphabet") c.alphabet = value;
  else if (k == "window") {
    auto comma = value.find(',');
    if (comma == std::string::npos) throw UsageError("window expects M,N");
    c.window_m = int(to_long(key, trim(value.substr(0, comma))));
    c.window_n = int(to_long(key, trim(value.substr(comma + 1))));
  } else if (k == "seed") c.seed = std::uint64_t(to_long(key, value));
  else if (k == "a") c.a = to_long(key, value);
  else if (k == "levels") c.levels = int(to_long(key, value));
  else if (k == "rounds") c.rounds = int(to_long(key, value));
  else throw UsageError("unknown parameter: " + key);
}

SuiteConfig parse_config(const std::string& text, SuiteConfig base) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    try {
      set_param(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const UsageError& e) {
      throw ParseError("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

}  // namespace modrep
