#pragma once
/// @file suites.hpp
/// Named verification suites over a SuiteConfig.

#include <string>
#include <vector>

#include "modrep/cache.hpp"
#include "modrep/config.hpp"
#include "modrep/report.hpp"

namespace modrep {

/// cind-core, supersingular, pseries-unramified, pseries-ramified,
/// steinberg, isomorphism-table, appendix-c.
const std::vector<std::string>& suite_names();

/// Runs config.suite. Throws UsageError for unknown suites or bad parameters.
Report run_suite(const SuiteConfig& config, const Cache* cache = nullptr);

/// Default values of Lambda for the principal-series suites: -1 first, then
/// powers of the field generator, five distinct values in all when the
/// field has that many.
std::vector<Field::code> default_lambdas(const Field& f);

}  // namespace modrep
