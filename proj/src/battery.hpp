#pragma once

// Internal helpers shared by the suite implementations.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "schwartzlab/config.hpp"
#include "schwartzlab/field.hpp"
#include "schwartzlab/report.hpp"

namespace schwartzlab::detail {

/// Accumulates the worst residual per check id across trials.
class Battery {
 public:
  Battery(const LabConfig& cfg, VerificationReport& report) : cfg_(cfg), report_(report) {}

  void record(const std::string& id, const std::string& reference, double residual, double tolerance) {
    if (!std::isfinite(residual)) residual = std::numeric_limits<double>::infinity();
    residual = std::max(residual, 0.0);
    const double tol = cfg_.tolerance(id, tolerance);
    for (auto& c : report_.checks) {
      if (c.id != id) continue;
      c.residual = std::max(c.residual, residual);
      c.pass = c.residual <= c.tolerance;
      return;
    }
    report_.checks.push_back({id, reference, residual, tol, residual <= tol});
  }

  /// Marks a check failed because the computation threw.
  void record_error(const std::string& id, const std::string& reference, double tolerance,
                    const std::string& what) {
    record(id, reference, std::numeric_limits<double>::infinity(), tolerance);
    report_.notes.push_back(id + ": " + what);
  }

  const LabConfig& config() const { return cfg_; }
  VerificationReport& report() { return report_; }

 private:
  const LabConfig& cfg_;
  VerificationReport& report_;
};

inline double safe_scale(double s) { return s > 0.0 ? s : 1.0; }

template <int Rank>
double residual(const Field<Rank>& lhs, const Field<Rank>& rhs, double scale) {
  return sup_norm(lhs - rhs) / safe_scale(scale);
}

}  // namespace schwartzlab::detail
