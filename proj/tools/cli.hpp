// Command-line front end.  run_cli() is the whole program; main() only forwards
// argv so the tests can drive it in-process.

#ifndef FRICKE_TOOLS_CLI_HPP_
#define FRICKE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fricke/orbit_search.hpp"

namespace fricke::cli {

enum ExitCode { kOk = 0, kUsage = 1, kMismatch = 2, kInternal = 3 };

/// {"text": canonical ring string, "value": double}.
nlohmann::json value_json(const CosSum& v);

/// Search output document (orbits, counters, metadata); identical for every
/// thread count.
nlohmann::json search_json(const SearchResult& r, const SearchOptions& opts);
std::string search_csv(const SearchResult& r);

/// Table rows as a golden document: {"rows": [{row, size, omega, fourMinusOmega4, r}]}.
nlohmann::json golden_json();

/// One line per golden row that has no matching orbit (or matches one already taken).
std::vector<std::string> compare_to_golden(const nlohmann::json& golden,
                                           const std::vector<OrbitRecord>& orbits);

/// Orbits listed in a search document, re-closed exactly from their representatives.
std::vector<OrbitRecord> orbits_from_search_json(const nlohmann::json& doc);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fricke::cli

#endif  // FRICKE_TOOLS_CLI_HPP_
