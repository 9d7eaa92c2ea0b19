#include "doctest.h"
#include "helpers.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "schwartzlab/cli.hpp"
#include "schwartzlab/config.hpp"
#include "schwartzlab/errors.hpp"
#include "schwartzlab/report.hpp"
#include "schwartzlab/suites.hpp"

using namespace schwartzlab;
using namespace testing_support;
using nlohmann::json;

namespace {

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "schwartzlab_unit";
  std::filesystem::create_directories(dir);
  return dir / name;
}

int cli(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "schwartzlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

}  // namespace

TEST_CASE("random inputs are deterministic and decay") {
  const Grid g = Grid::line(10.0, 256);
  TestInputSpec spec;
  spec.seed = 77;
  const SampledFunction a = random_schwartz(spec, g, 2), b = random_schwartz(spec, g, 2);
  CHECK(a.storage() == b.storage());
  CHECK_NOTHROW(check_decay(a));
  spec.seed = 78;
  CHECK(random_schwartz(spec, g, 2).storage() != a.storage());

  Rng r1(5), r2(5);
  CHECK(random_bischwartz(spec, g, 2, r1).storage() == random_bischwartz(spec, g, 2, r2).storage());

  TestInputSpec bad;
  bad.degree = 7;
  CHECK_THROWS_AS(bad.validate(10.0), InputError);
  bad = TestInputSpec{};
  bad.sigma = 3.0;
  CHECK_THROWS_AS(bad.validate(10.0), InputError);
}

TEST_CASE("random actions are admissible") {
  Rng rng(12);
  for (int k = 0; k < 5; ++k) {
    const Matrix h = random_hermitian(rng, 3);
    const double n = seminorm(h);
    CHECK(n >= 0.5 - 1e-12);
    CHECK(n <= 1.0 + 1e-12);
    const Action c = random_action(ActionKind::unitary_conjugation, Group::circle, 2, rng);
    const Matrix a = random_matrix(rng, 2);
    CHECK(seminorm(act(c, 1.0, a) - a) < 1e-12);
  }
}

TEST_CASE("config parsing") {
  const LabConfig d = parse_config(json::object());
  CHECK(d.L == 10.0);
  CHECK(d.N == 512);
  CHECK(d.n_trials == 20);
  CHECK(d.seed == 42);

  const LabConfig c = parse_config(json::parse(R"({
    "grid": {"L": 8, "N": 256},
    "algebra": {"dim": 2, "action": {"kind": "unitary-conjugation",
                "generator": [[[1, 0], [0, 0]], [[0, 0], [-1, 0]]]}},
    "suites": ["operator-T"],
    "tolerances": {"all": 1e-3, "operator-T.eq4": 1e-9},
    "seed": 7, "n_trials": 3
  })"));
  CHECK(c.N == 256);
  CHECK(c.action.generator.has_value());
  CHECK(c.tolerance("operator-T.eq4", 1.0) == 1e-9);
  CHECK(c.tolerance("operator-T.inverse", 1.0) == 1e-3);

  CHECK_THROWS_AS(parse_config(json::parse(R"({"grd": {}})")), UsageError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"grid": {"N": 100}})")), UsageError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"suites": ["nope"]})")), UsageError);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"n_trials": "many"})")), UsageError);
  CHECK_THROWS_AS(parse_config(json::parse(
                      R"({"algebra": {"action": {"kind": "unitary-conjugation", "generator": [[[0,0],[1,0]],[[0,0],[0,0]]]}}})")),
                  UsageError);
  CHECK_THROWS_AS(load_config(scratch("missing.json").string()), UsageError);

  const Matrix m = matrix_from_json(json::parse("[[[1, 2], [3, 4]], [[5, 6], [7, 8]]]"));
  CHECK(m(0, 1) == cplx(3, 4));
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.suite = "b";
  r.checks.push_back({"x.one", "ref", 1e-12, 1e-10, true});
  r.checks.push_back({"x.two", "ref", std::numeric_limits<double>::infinity(), 1e-10, false});
  r.timing_seconds = 1.5;
  CHECK_FALSE(r.pass());
  const json j = r.to_json();
  CHECK(j["checks"][1]["residual"].is_null());
  VerificationReport a;
  a.suite = "a";
  a.checks.push_back({"y", "ref", 0.0, 1.0, true});
  const json m = merge_reports({r, a});
  CHECK(m["schema"] == kReportSchema);
  CHECK(m["suites"][0]["suite"] == "a");
  CHECK_FALSE(m["pass"].get<bool>());
  const json s = strip_timings(m);
  CHECK(s.dump().find("timing") == std::string::npos);
  CHECK_FALSE(VerificationReport{}.pass());

  const auto path = scratch("report.json");
  write_atomically(path.string(), "{}\n");
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(text == "{}\n");
}

TEST_CASE("suite catalog") {
  const auto& cat = suite_catalog();
  CHECK(cat.size() == 10);
  for (std::size_t k = 1; k < cat.size(); ++k) CHECK(cat[k - 1].name < cat[k].name);
  CHECK(is_suite("exact-sequence-line"));
  LabConfig c;
  CHECK_THROWS_AS(run_suite("missing", c), UsageError);
}

TEST_CASE("small suite runs pass and are reproducible") {
  LabConfig c = parse_config(json::parse(R"({"grid": {"N": 256}, "n_trials": 1})"));
  for (const char* s : {"operator-T", "crossed-algebra", "exact-sequence-line"}) {
    CAPTURE(s);
    const VerificationReport a = run_suite(s, c), b = run_suite(s, c);
    CHECK(a.pass());
    CHECK(strip_timings(a.to_json()) == strip_timings(b.to_json()));
  }
}

TEST_CASE("cli exit codes") {
  const auto cfg = scratch("cli.json");
  {
    std::ofstream o(cfg);
    o << R"({"grid": {"N": 128}, "n_trials": 1, "suites": ["operator-T"]})";
  }
  const auto out = scratch("cli_report.json").string();
  CHECK(cli({"run", "--config", cfg.string(), "--out", out}) == kExitPass);
  CHECK(std::filesystem::exists(out));
  {
    std::ofstream o(cfg);
    o << R"({"grid": {"N": 128}, "n_trials": 1, "suites": ["operator-T"], "tolerances": {"all": 1e-300}})";
  }
  CHECK(cli({"run", "--config", cfg.string(), "--out", out}) == kExitFail);
  CHECK(cli({"run", "--config", scratch("nope.json").string()}) == kExitUsage);
  CHECK(cli({"run", "--bogus"}) == kExitUsage);
  CHECK(cli({"convergence", "--config", cfg.string()}) == kExitUsage);
  std::string listing;
  CHECK(cli({"list"}, &listing) == kExitPass);
  CHECK(listing.find("exact-sequence-circle") != std::string::npos);
}
