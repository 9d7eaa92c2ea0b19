#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace schwartzlab {

struct CheckRecord {
  std::string id;
  /// Which identity is tested, in words.
  std::string reference;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
};

struct VerificationReport {
  std::string suite;
  nlohmann::json grid;
  nlohmann::json action;
  unsigned long long seed = 0;
  int n_trials = 0;
  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;
  double timing_seconds = 0.0;

  /// Every check passes (a report without checks does not).
  bool pass() const;
  /// Worst residual over all checks.
  double worst_residual() const;
  nlohmann::json to_json() const;
};

inline constexpr const char* kReportSchema = "schwartzlab.report/1";

/// {"schema", "pass", "suites": [...]} with suites ordered by name.
nlohmann::json merge_reports(const std::vector<VerificationReport>& reports);

/// Drop timing fields (for determinism comparisons).
nlohmann::json strip_timings(nlohmann::json report);

/// Write via a temporary file in the same directory and rename.
void write_atomically(const std::string& path, const std::string& contents);

}  // namespace schwartzlab
