#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schwartzlab/config.hpp"
#include "schwartzlab/report.hpp"

namespace schwartzlab {

struct SuiteInfo {
  std::string name;
  std::string reference;
};

/// All suites, sorted by name.
const std::vector<SuiteInfo>& suite_catalog();
bool is_suite(std::string_view name);

/// Runs the invariant battery of one suite over cfg.n_trials seeded trials and
/// keeps the worst residual per check. Unknown name: UsageError.
VerificationReport run_suite(std::string_view name, const LabConfig& cfg);

struct ConvergenceRow {
  int N = 0;
  double worst_residual = 0.0;
  std::optional<double> ratio;
};

struct ConvergenceTable {
  std::string suite;
  std::vector<ConvergenceRow> rows;
  /// Every ratio <= 0.1, or both neighbours already at the quadrature floor.
  bool pass = true;
  std::vector<std::string> flags;

  std::string to_csv() const;
};

inline constexpr double kConvergenceRatio = 0.1;
inline constexpr double kQuadratureFloor = 1e-11;
/// Edge-decay tolerance for convergence grids. Coarse grids ring all the way to the
/// boundary; 1 switches the edge checks off so the residual records the error instead.
inline constexpr double kConvergenceDecayTol = 1.0;

/// Reruns a suite at each N (fixed L) on the convergence test set
/// (inputs.sigma replaced by cfg.convergence_sigma).
ConvergenceTable convergence_study(std::string_view suite, const std::vector<int>& Ns,
                                   const LabConfig& cfg);

/// Scalar diagrams (A = C, trivial action): appends checks to `report`.
/// variant is "pointwise", "convolution" or "fourier".
void scalar_sequence_check(std::string_view variant, const LabConfig& cfg, VerificationReport& report);

}  // namespace schwartzlab
