// Acceptance criteria runner: one PASS/FAIL line per criterion.
// Thresholds are pinned here, independent of the tolerances the suites use.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schwartzlab/cli.hpp"
#include "schwartzlab/config.hpp"
#include "schwartzlab/report.hpp"
#include "schwartzlab/suites.hpp"

using namespace schwartzlab;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Timed {
  VerificationReport report;
  double seconds = 0.0;
};

std::map<std::string, Timed>& cache() {
  static std::map<std::string, Timed> c;
  return c;
}

const Timed& suite(const std::string& name) {
  auto it = cache().find(name);
  if (it != cache().end()) return it->second;
  const LabConfig cfg = parse_config(json::object());
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport r = run_suite(name, cfg);
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return cache().emplace(name, Timed{std::move(r), s}).first->second;
}

std::string sci(double v) {
  std::ostringstream o;
  o.precision(2);
  o << std::scientific << v;
  return o.str();
}

// Every check whose id satisfies `select` must have a finite residual <= tol.
// At least one check must match.
void bound(Outcome& out, const VerificationReport& r, const std::string& label,
           const std::function<bool(const std::string&)>& select, double tol) {
  double worst = 0.0;
  int n = 0;
  std::string worst_id;
  for (const auto& c : r.checks) {
    if (!select(c.id)) continue;
    ++n;
    const double v = std::isfinite(c.residual) ? c.residual : INFINITY;
    if (!(v <= tol)) out.pass = false;
    if (!(v <= worst)) {
      worst = v;
      worst_id = c.id;
    }
  }
  if (n == 0) {
    out.pass = false;
    out.detail += label + ": no checks; ";
    return;
  }
  out.detail += label + " " + sci(worst) + (worst <= tol ? " <= " : " > ") + sci(tol);
  if (!(worst <= tol)) out.detail += " [" + worst_id + "]";
  out.detail += "; ";
}

void exact(Outcome& out, const VerificationReport& r, const std::string& id, double tol) {
  bound(out, r, id, [&](const std::string& s) { return s == id; }, tol);
}

void prefix(Outcome& out, const VerificationReport& r, const std::string& p, double tol) {
  bound(out, r, p + "*", [&](const std::string& s) { return s.rfind(p, 0) == 0; }, tol);
}

void runtime(Outcome& out, double seconds, double limit) {
  out.detail += "runtime " + std::to_string(seconds).substr(0, 5) + " s";
  if (seconds > limit) {
    out.pass = false;
    out.detail += " > " + std::to_string(static_cast<int>(limit)) + " s";
  }
  out.detail += "; ";
}

Outcome ac1() {
  Outcome o;
  const Timed& t = suite("exact-sequence-line");
  const auto& r = t.report;
  exact(o, r, "sequence.m-j", 1e-8);
  exact(o, r, "sequence.pi-iota", 1e-8);
  for (const char* ax : {"x", "y"}) {
    exact(o, r, std::string("sequence.pi-rho-") + ax, 1e-7);
    exact(o, r, std::string("sequence.beta-iota-") + ax, 1e-6);
    exact(o, r, std::string("sequence.homotopy-") + ax, 1e-6);
  }
  runtime(o, t.seconds, 60.0);
  return o;
}

Outcome ac2() {
  Outcome o;
  const Timed& t = suite("exact-sequence-circle");
  // the criterion lists the line identities; the extra ker-pi checks are not part of it
  bound(o, t.report, "sequence.* (G = T)",
        [](const std::string& s) { return s.find("ker-pi") == std::string::npos; }, 1e-9);
  runtime(o, t.seconds, 20.0);
  return o;
}

Outcome ac3() {
  Outcome o;
  prefix(o, suite("crossed-algebra").report, "degenerate.", 1e-12);
  const auto& s = suite("scalar-sequences").report;
  bool all = s.pass();
  o.pass = o.pass && all;
  o.detail += std::string("scalar diagrams ") + (all ? "all within tolerance" : "FAILED") + "; ";
  prefix(o, s, "scalar.fourier.", 1e-8);
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto& r = suite("operator-T").report;
  exact(o, r, "operator-T.inverse", 1e-12);
  exact(o, r, "operator-T.eq4", 1e-8);
  exact(o, r, "operator-T.intertwining", 1e-8);
  return o;
}

Outcome ac5() {
  Outcome o;
  prefix(o, suite("bimodule").report, "bimodule.", 1e-7);
  exact(o, suite("tensor").report, "tensor.I1-balanced", 1e-8);
  return o;
}

Outcome ac6() {
  Outcome o;
  exact(o, suite("fourier").report, "fourier.homomorphism", 1e-8);
  exact(o, suite("crossed-algebra").report, "crossed.iso-i-homomorphism", 1e-8);
  exact(o, suite("crossed-algebra").report, "crossed.associativity", 1e-8);
  return o;
}

Outcome ac7() {
  Outcome o;
  exact(o, suite("hadamard").report, "hadamard.round-trip", 1e-7);
  exact(o, suite("hadamard").report, "hadamard.dual-round-trip", 1e-8);
  return o;
}

Outcome ac8() {
  Outcome o;
  const LabConfig cfg = parse_config(json::object());
  for (const char* name : {"exact-sequence-line", "operator-T"}) {
    const ConvergenceTable t = convergence_study(name, {128, 256, 512}, cfg);
    o.detail += std::string(name) + " [";
    for (std::size_t k = 0; k < t.rows.size(); ++k) {
      const auto& row = t.rows[k];
      o.detail += (k ? ", " : "") + std::to_string(row.N) + ": " + sci(row.worst_residual);
      if (row.ratio) {
        o.detail += " (x" + sci(*row.ratio) + ")";
        const bool floor = t.rows[k - 1].worst_residual <= kQuadratureFloor && row.worst_residual <= kQuadratureFloor;
        if (!(*row.ratio <= 0.1) && !floor) o.pass = false;
      }
    }
    o.detail += "]; ";
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  const auto& r = suite("crossed-algebra").report;
  for (const char* id : {"crossed.oracle-twisted", "crossed.oracle-twisted-alt", "crossed.oracle-convolve",
                         "crossed.oracle-left-crossed", "crossed.oracle-right-crossed"})
    exact(o, r, id, 1e-12);
  return o;
}

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "schwartzlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

void write(const std::filesystem::path& p, const json& j) {
  std::ofstream(p) << j.dump(2);
}

Outcome ac10() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "schwartzlab_acceptance";
  std::filesystem::create_directories(dir);

  // every suite, reduced grid and trial count
  json base = {{"grid", {{"N", 256}}}, {"n_trials", 2}, {"seed", 1234}};
  write(dir / "det.json", base);
  cli({"run", "--config", (dir / "det.json").string(), "--out", (dir / "a.json").string()});
  cli({"run", "--config", (dir / "det.json").string(), "--out", (dir / "b.json").string()});
  const bool same = strip_timings(read_json(dir / "a.json")) == strip_timings(read_json(dir / "b.json"));
  o.pass = same;
  o.detail += std::string("reports ") + (same ? "identical" : "DIFFER") + " modulo timings; ";

  json ok = base;
  ok["suites"] = {"operator-T", "tensor"};
  write(dir / "ok.json", ok);
  json forced = ok;
  forced["tolerances"] = {{"all", 1e-20}};
  write(dir / "forced.json", forced);
  std::ofstream(dir / "bad.json") << R"({"grid": {"N": 256}, "unknown_field": 1})";

  const struct {
    const char* name;
    std::filesystem::path cfg;
    int want;
  } scenarios[] = {{"all-pass", dir / "ok.json", kExitPass},
                   {"forced-fail", dir / "forced.json", kExitFail},
                   {"bad-config", dir / "bad.json", kExitUsage}};
  for (const auto& s : scenarios) {
    const int got = cli({"run", "--config", s.cfg.string(), "--out", (dir / "x.json").string()});
    o.detail += std::string(s.name) + " exit " + std::to_string(got);
    if (got != s.want) {
      o.pass = false;
      o.detail += " (want " + std::to_string(s.want) + ")";
    }
    o.detail += "; ";
  }
  return o;
}

const std::vector<std::pair<std::string, Outcome (*)()>>& criteria() {
  static const std::vector<std::pair<std::string, Outcome (*)()>> c{
      {"exact-sequence suite on the line", ac1},
      {"exact-sequence suite on the circle", ac2},
      {"trivial-action degeneracy and scalar diagrams", ac3},
      {"operator T", ac4},
      {"bimodule identities and balanced tensors", ac5},
      {"algebra isomorphisms", ac6},
      {"Hadamard division and its dual", ac7},
      {"convergence under grid refinement", ac8},
      {"fast path vs quadrature oracle at N = 128", ac9},
      {"determinism and exit codes", ac10},
  };
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"schwartzlab acceptance criteria"};
  int which = 0;
  app.add_option("--criterion", which, "criterion number (default: all)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (std::size_t k = 0; k < criteria().size(); ++k) {
    if (which != 0 && static_cast<int>(k + 1) != which) continue;
    const auto& [title, fn] = criteria()[k];
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (o.detail.size() >= 2 && o.detail.ends_with("; ")) o.detail.resize(o.detail.size() - 2);
    std::cout << (o.pass ? "PASS" : "FAIL") << " AC" << (k + 1) << " " << title << ": " << o.detail << std::endl;
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
