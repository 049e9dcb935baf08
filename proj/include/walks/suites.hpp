#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace walks {

struct SuiteEntry {
  std::string id;
  std::string anchor;
  bool pass = false;
  /// Truncation order or largest walk length checked.
  std::size_t checked = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteEntry> entries;

  bool pass() const;
  std::size_t failures() const;
};

/// Suite names accepted by run_suite: identities, closed-forms, params,
/// endpoints, quartics.
const std::vector<std::string>& suite_names();

struct SuiteOptions {
  std::size_t order = 12;        // t-order (identities, params, endpoints, quartics)
  std::size_t heavy_order = 10;  // kernel-substitution identities
  long max_length = 24;          // closed forms: walk lengths 0..max_length
  std::vector<std::string> ids;  // empty: every entry
  unsigned threads = 0;
};

/// Throws std::invalid_argument for an unknown suite or id.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

SuiteReport identity_suite(const SuiteOptions& options);
/// Each closed form against the DP endpoint count at every even length.
SuiteReport closed_form_suite(const SuiteOptions& options);
/// Each catalogued parametrization against its DP-side series.
SuiteReport param_suite(const SuiteOptions& options);
/// Each endpoint rational expression against the DP endpoint series, plus the
/// square/diagonal coincidence.
SuiteReport endpoint_suite(const SuiteOptions& options);
/// DP-derived S1, P0, F0 against their quartics and rational closed forms.
SuiteReport quartic_suite(const SuiteOptions& options);

void to_json(nlohmann::json& j, const SuiteEntry& e);
void to_json(nlohmann::json& j, const SuiteReport& r);
std::string format_text(const SuiteReport& r);
std::string format_csv(const SuiteReport& r);

}  // namespace walks
