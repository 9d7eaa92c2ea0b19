#include "schwartzlab/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "schwartzlab/errors.hpp"
#include "schwartzlab/grid.hpp"
#include "schwartzlab/suites.hpp"

namespace schwartzlab {

using nlohmann::json;

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw UsageError("generator must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  Matrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw UsageError("generator must be square");
    for (Eigen::Index c = 0; c < n; ++c) {
      const json& e = row[c];
      if (e.is_number())
        m(r, c) = e.get<double>();
      else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
        m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
      else
        throw UsageError("generator entries must be [re, im] pairs");
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

Action ActionSpec::build(Group group, int dim, Rng& rng) const {
  if (!generator) return random_action(kind, group, dim, rng);
  if (generator->rows() != dim) throw UsageError("generator dimension does not match algebra.dim");
  switch (kind) {
    case ActionKind::trivial: return Action::trivial(dim, group);
    case ActionKind::unitary_conjugation: return Action::unitary(*generator, group);
    case ActionKind::nilpotent_conjugation: return Action::nilpotent(*generator, group);
  }
  return Action::trivial(dim, group);
}

json ActionSpec::to_json() const {
  json j;
  j["kind"] = std::string(to_string(kind));
  j["generator"] = generator ? matrix_to_json(*generator) : json("random");
  return j;
}

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw UsageError(where + " must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items())
    if (!ok.count(key)) throw UsageError("unknown field '" + key + "' in " + where);
}

template <class T>
void read(const json& j, const char* key, T& out, const std::string& where) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError("field '" + std::string(key) + "' in " + where + " has the wrong type");
  }
}

ActionSpec parse_action(const json& j, const std::string& where, std::optional<Group>* group) {
  reject_unknown(j, {"kind", "generator", "group"}, where);
  ActionSpec spec;
  std::string kind = std::string(to_string(spec.kind));
  read(j, "kind", kind, where);
  try {
    spec.kind = action_kind_from_string(kind);
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
  if (j.contains("generator")) {
    const json& g = j["generator"];
    if (!(g.is_null() || (g.is_string() && g.get<std::string>() == "random")))
      spec.generator = matrix_from_json(g);
  }
  if (j.contains("group") && group) {
    std::string name;
    read(j, "group", name, where);
    try {
      *group = group_from_string(name);
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
  }
  return spec;
}

}  // namespace

LabConfig parse_config(const json& j) {
  LabConfig c;
  reject_unknown(j, {"grid", "circle", "algebra", "bump", "suites", "tolerances", "seed", "n_trials",
                     "output", "oracle", "decay_tol", "inputs", "convergence"},
                 "config");
  if (j.contains("grid")) {
    const json& g = j["grid"];
    reject_unknown(g, {"L", "N", "group"}, "grid");
    read(g, "L", c.L, "grid");
    read(g, "N", c.N, "grid");
    std::string group = "line";
    read(g, "group", group, "grid");
    try {
      c.group = group_from_string(group);
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
  }
  if (j.contains("circle")) {
    reject_unknown(j["circle"], {"N"}, "circle");
    read(j["circle"], "N", c.circle_N, "circle");
  }
  std::optional<Group> action_group;
  if (j.contains("algebra")) {
    const json& a = j["algebra"];
    reject_unknown(a, {"dim", "action", "circle_action"}, "algebra");
    read(a, "dim", c.dim, "algebra");
    if (a.contains("action")) c.action = parse_action(a["action"], "algebra.action", &action_group);
    if (a.contains("circle_action")) c.circle_action = parse_action(a["circle_action"], "algebra.circle_action", nullptr);
  }
  if (action_group && *action_group != c.group)
    throw UsageError("algebra.action.group must match grid.group");
  if (j.contains("bump")) {
    std::string b;
    read(j, "bump", b, "config");
    try {
      c.bump = bump_kind_from_string(b);
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
  }
  read(j, "suites", c.suites, "config");
  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    if (!t.is_object()) throw UsageError("tolerances must be an object");
    for (const auto& [key, value] : t.items()) {
      if (!value.is_number()) throw UsageError("tolerance '" + key + "' must be a number");
      if (key == "all")
        c.tolerance_all = value.get<double>();
      else
        c.tolerance_overrides[key] = value.get<double>();
    }
  }
  read(j, "seed", c.seed, "config");
  read(j, "n_trials", c.n_trials, "config");
  if (j.contains("output")) {
    reject_unknown(j["output"], {"report", "csv"}, "output");
    read(j["output"], "report", c.report_path, "output");
    read(j["output"], "csv", c.csv_path, "output");
  }
  read(j, "oracle", c.oracle, "config");
  read(j, "decay_tol", c.decay_tol, "config");
  if (j.contains("inputs")) {
    const json& in = j["inputs"];
    reject_unknown(in, {"sigma", "degree", "coef_norm", "center_fraction", "terms", "kappa"}, "inputs");
    read(in, "sigma", c.inputs.sigma, "inputs");
    read(in, "degree", c.inputs.degree, "inputs");
    read(in, "coef_norm", c.inputs.coef_norm, "inputs");
    read(in, "center_fraction", c.inputs.center_fraction, "inputs");
    read(in, "terms", c.inputs.terms, "inputs");
    read(in, "kappa", c.inputs.kappa, "inputs");
  }
  if (j.contains("convergence")) {
    reject_unknown(j["convergence"], {"sigma", "N"}, "convergence");
    read(j["convergence"], "sigma", c.convergence_sigma, "convergence");
    read(j["convergence"], "N", c.convergence_N, "convergence");
  }
  c.validate();
  return c;
}

LabConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

void LabConfig::validate() const {
  try {
    Grid::line(L, N);
    Grid::circle(circle_N);
    if (dim < 1 || dim > 8) throw UsageError("algebra.dim must be in [1, 8]");
    if (group == Group::circle) Grid::circle(N);
    inputs.validate(L);
    if (!(convergence_sigma > 0.0) || convergence_sigma > L / 5.0)
      throw UsageError("convergence.sigma must be in (0, L/5]");
    // Generators given explicitly are checked against their groups now.
    Rng rng(seed);
    action.build(group, dim, rng);
    circle_action.build(Group::circle, dim, rng);
  } catch (const InputError& e) {
    throw UsageError(std::string("invalid config: ") + e.what());
  }
  if (n_trials < 1) throw UsageError("n_trials must be >= 1");
  if (!(decay_tol > 0.0)) throw UsageError("decay_tol must be positive");
  for (const auto& s : suites)
    if (!is_suite(s)) throw UsageError("unknown suite '" + s + "'");
  for (const auto& [id, tol] : tolerance_overrides)
    if (!(tol >= 0.0)) throw UsageError("tolerance '" + id + "' must be nonnegative");
  if (tolerance_all && !(*tolerance_all >= 0.0)) throw UsageError("tolerances.all must be nonnegative");
  if (convergence_N.empty()) throw UsageError("convergence.N must be non-empty");
  for (std::size_t k = 0; k < convergence_N.size(); ++k) {
    const int n = convergence_N[k];
    if (n < 64 || (n & (n - 1)) != 0) throw UsageError("convergence.N entries must be powers of two >= 64");
    if (k > 0 && n <= convergence_N[k - 1]) throw UsageError("convergence.N must be ascending");
  }
}

double LabConfig::tolerance(const std::string& id, double fallback) const {
  if (auto it = tolerance_overrides.find(id); it != tolerance_overrides.end()) return it->second;
  if (tolerance_all) return *tolerance_all;
  return fallback;
}

}  // namespace schwartzlab
