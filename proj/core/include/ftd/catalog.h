#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ftd/design.h"

namespace ftd {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CatalogEntryInfo {
  std::string id;
  std::string recipe;
  DesignParams expected;  // p = 0 for entries that are not a single design
  bool large = false;     // only with --large
};

// Every entry known to the catalog, in run order.
const std::vector<CatalogEntryInfo>& catalog_entries();

struct CatalogConfig {
  std::vector<std::string> entries;  // ids or shell globs; empty = default catalog
  bool large = false;
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

struct CatalogResult {
  nlohmann::json report;
  std::size_t passed = 0, failed = 0;
  bool all_pass() const { return failed == 0; }
};

// Ids selected by the config; throws CatalogError on a pattern that matches nothing.
std::vector<std::string> select_entries(const CatalogConfig& config);

CatalogResult run_catalog(const CatalogConfig& config);

// One entry's JSON record (see report.schema.json).
nlohmann::json run_entry(const std::string& id, const CatalogConfig& config);

// The bundled JSON schema for catalog reports.
const char* report_schema();

}  // namespace ftd
