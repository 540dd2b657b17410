#pragma once
/// @file config.hpp
/// Suite parameters, from flags or a flat `key = value` file.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modrep {

struct SuiteConfig {
  std::string suite;
  std::uint32_t p = 5;
  unsigned k = 2;
  int r_lo = -1, r_hi = -1;  // -1: every weight 0..p-1
  std::optional<std::string> lambda;
  int depth = 4;
  int slack = 1;
  int word_len = 4;
  std::string alphabet;  // empty: the suite default
  int window_m = 1, window_n = 1;
  int rounds = 12;       // closure rounds for generation evidence
  std::uint64_t seed = 1;
  long a = 1;            // unit exponent for pseries-ramified
  int levels = 3;        // ladder levels for steinberg

  /// Throws UsageError on out-of-range values.
  void validate() const;
  std::vector<int> weights() const;
  /// Parameters echoed into reports.
  std::map<std::string, std::string> echo() const;
};

/// Sets one parameter by its flag name (`p`, `r`, `window`, ...); `r` takes
/// `n` or `lo..hi`, `window` takes `M,N`. Throws UsageError.
void set_param(SuiteConfig& c, const std::string& key, const std::string& value);
/// Lines `key = value`; `#` starts a comment. Throws ParseError.
SuiteConfig parse_config(const std::string& text, SuiteConfig base = {});

}  // namespace modrep
