#include "schwartzlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "schwartzlab/errors.hpp"

namespace schwartzlab {

namespace {

// JSON has no inf/nan; a check that threw is reported as null
nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

bool VerificationReport::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

double VerificationReport::worst_residual() const {
  double w = 0.0;
  for (const auto& c : checks) w = std::max(w, c.residual);
  return w;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["pass"] = pass();
  j["grid"] = grid;
  j["action"] = action;
  j["seed"] = seed;
  j["n_trials"] = n_trials;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"id", c.id}, {"reference", c.reference}, {"residual", finite_or_null(c.residual)},
                           {"tolerance", c.tolerance}, {"pass", c.pass}});
  j["notes"] = notes;
  j["timing_seconds"] = timing_seconds;
  return j;
}

nlohmann::json merge_reports(const std::vector<VerificationReport>& reports) {
  std::vector<const VerificationReport*> sorted;
  for (const auto& r : reports) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->suite < b->suite; });
  nlohmann::json out;
  out["schema"] = kReportSchema;
  bool pass = !sorted.empty();
  out["suites"] = nlohmann::json::array();
  for (const auto* r : sorted) {
    pass = pass && r->pass();
    out["suites"].push_back(r->to_json());
  }
  out["pass"] = pass;
  return out;
}

nlohmann::json strip_timings(nlohmann::json report) {
  if (report.is_object()) {
    report.erase("timing_seconds");
    for (auto& [key, value] : report.items()) value = strip_timings(value);
  } else if (report.is_array()) {
    for (auto& value : report) value = strip_timings(value);
  }
  return report;
}

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw UsageError("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace schwartzlab
