#include "schwartzlab/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "schwartzlab/config.hpp"
#include "schwartzlab/errors.hpp"
#include "schwartzlab/suites.hpp"

namespace schwartzlab {

namespace {

struct Options {
  std::string config;
  std::vector<std::string> suites;
  std::optional<unsigned long long> seed;
  std::string out;
  bool oracle = false;
  bool json_only = false;
  std::vector<int> ns;
};

LabConfig resolve(const Options& o) {
  LabConfig cfg = o.config.empty() ? parse_config(nlohmann::json::object()) : load_config(o.config);
  if (o.seed) cfg.seed = *o.seed;
  if (o.oracle) cfg.oracle = true;
  if (!o.suites.empty()) cfg.suites = o.suites;
  cfg.validate();
  return cfg;
}

int cmd_run(const Options& o, std::ostream& out, std::ostream& err) {
  const LabConfig cfg = resolve(o);
  std::vector<std::string> names = cfg.suites;
  if (names.empty())
    for (const auto& s : suite_catalog()) names.push_back(s.name);
  std::vector<VerificationReport> reports;
  for (const auto& name : names) {
    if (!o.json_only) err << "running " << name << " ..." << std::endl;
    reports.push_back(run_suite(name, cfg));
    if (!o.json_only) {
      const auto& r = reports.back();
      out << (r.pass() ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.suite << " worst residual "
          << std::scientific << std::setprecision(3) << r.worst_residual() << "  (" << std::fixed
          << std::setprecision(2) << r.timing_seconds << " s)\n";
      for (const auto& c : r.checks)
        if (!c.pass)
          out << "     failed " << c.id << ": " << std::scientific << c.residual << " > " << c.tolerance << "\n";
    }
  }
  const nlohmann::json merged = merge_reports(reports);
  const std::string path = o.out.empty() ? cfg.report_path : o.out;
  write_atomically(path, merged.dump(2) + "\n");
  if (o.json_only)
    out << merged.dump(2) << "\n";
  else
    out << "report written to " << path << "\n";
  return merged["pass"].get<bool>() ? kExitPass : kExitFail;
}

int cmd_convergence(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.suites.size() != 1) throw UsageError("convergence needs exactly one --suite");
  const LabConfig cfg = resolve(o);
  const std::vector<int> ns = o.ns.empty() ? cfg.convergence_N : o.ns;
  const ConvergenceTable table = convergence_study(o.suites.front(), ns, cfg);
  const std::string csv = table.to_csv();
  const std::string path = o.out.empty() ? cfg.csv_path : o.out;
  write_atomically(path, csv);
  out << csv;
  for (const auto& f : table.flags) err << "non-convergent: " << f << "\n";
  return table.pass ? kExitPass : kExitFail;
}

int cmd_list(std::ostream& out) {
  for (const auto& s : suite_catalog()) out << s.name << " \u2014 " << s.reference << "\n";
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical laboratory for smooth crossed products and their split exact sequences", "schwartzlab"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON configuration file");
    sub->add_option("--seed", o.seed, "override the seed");
    sub->add_option("--out", o.out, "output path (report JSON or CSV)");
    sub->add_flag("--oracle", o.oracle, "use the direct O(N^2) quadratures");
  };
  CLI::App* run = app.add_subcommand("run", "run identity suites and write a JSON report");
  add_common(run);
  run->add_option("--suite", o.suites, "suite to run (repeatable; default all)");
  run->add_flag("--json-only", o.json_only, "print only the merged JSON report");

  CLI::App* conv = app.add_subcommand("convergence", "residual versus N for one suite, as CSV");
  add_common(conv);
  conv->add_option("--suite", o.suites, "suite name")->required();
  conv->add_option("--N", o.ns, "grid sizes, ascending (repeatable; default from config)");

  app.add_subcommand("list", "list suites with the identities they test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(o, out, err);
    if (conv->parsed()) return cmd_convergence(o, out, err);
    return cmd_list(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace schwartzlab
