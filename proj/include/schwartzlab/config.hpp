#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schwartzlab/algebra.hpp"
#include "schwartzlab/inputs.hpp"
#include "schwartzlab/omega.hpp"

namespace schwartzlab {

/// Action kind plus generator; no generator means a fresh random generator per
/// trial, drawn from the trial's seeded stream.
struct ActionSpec {
  ActionKind kind = ActionKind::unitary_conjugation;
  std::optional<Matrix> generator;

  /// Validated action for the given group (random when generator is empty).
  Action build(Group group, int dim, Rng& rng) const;
  nlohmann::json to_json() const;
};

struct LabConfig {
  double L = 10.0;
  int N = 512;
  Group group = Group::line;
  int circle_N = 128;
  int dim = 2;
  ActionSpec action;
  ActionSpec circle_action;
  std::optional<BumpKind> bump;

  std::vector<std::string> suites;
  std::map<std::string, double> tolerance_overrides;
  std::optional<double> tolerance_all;

  unsigned long long seed = 42;
  int n_trials = 20;
  std::string report_path = "schwartzlab_report.json";
  std::string csv_path = "convergence.csv";
  bool oracle = false;
  double decay_tol = 1e-10;
  TestInputSpec inputs;
  double convergence_sigma = 0.15;
  std::vector<int> convergence_N{128, 256, 512};

  /// Checks every module invariant that can be checked before computing:
  /// grid sizes, generator admissibility, suite names, tolerances. Throws
  /// UsageError with the offending field.
  void validate() const;

  /// Tolerance for a check id after overrides.
  double tolerance(const std::string& id, double fallback) const;
};

/// Parse and validate. Missing fields keep their defaults; unknown fields are
/// rejected. Throws UsageError.
LabConfig parse_config(const nlohmann::json& j);
LabConfig load_config(const std::string& path);

/// Matrix from [[ [re, im], ... ], ...].
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);

}  // namespace schwartzlab
