#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "schwartzlab/cli.hpp"
#include "schwartzlab/config.hpp"
#include "schwartzlab/crossed.hpp"
#include "schwartzlab/errors.hpp"
#include "schwartzlab/omega.hpp"
#include "schwartzlab/schwartz.hpp"
#include "schwartzlab/suites.hpp"

namespace py = pybind11;
using namespace schwartzlab;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

// numpy layout: (N, d, d) for functions, (N, N, d, d) for bi-functions
SampledFunction to_field(const Grid& g, const CArray& a) {
  if (a.ndim() != 3 || a.shape(0) != g.size() || a.shape(1) != a.shape(2))
    throw StructuralError("expected an array of shape (N, d, d)");
  const int d = static_cast<int>(a.shape(1));
  SampledFunction f(g, d);
  auto v = a.unchecked<3>();
  for (int i = 0; i < g.size(); ++i)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) f.at(i)(r, c) = v(i, r, c);
  return f;
}

BiSampledFunction to_field2(const Grid& g, const CArray& a) {
  if (a.ndim() != 4 || a.shape(0) != g.size() || a.shape(1) != g.size() || a.shape(2) != a.shape(3))
    throw StructuralError("expected an array of shape (N, N, d, d)");
  const int d = static_cast<int>(a.shape(2));
  BiSampledFunction f(g, d);
  auto v = a.unchecked<4>();
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) f.at(i, j)(r, c) = v(i, j, r, c);
  return f;
}

CArray from_field(const SampledFunction& f) {
  const int n = f.grid().size(), d = f.dim();
  CArray out({n, d, d});
  auto v = out.mutable_unchecked<3>();
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) v(i, r, c) = f.at(i)(r, c);
  return out;
}

CArray from_field2(const BiSampledFunction& f) {
  const int n = f.grid().size(), d = f.dim();
  CArray out({n, n, d, d});
  auto v = out.mutable_unchecked<4>();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) v(i, j, r, c) = f.at(i, j)(r, c);
  return out;
}

Axis axis_of(const std::string& s) {
  if (s == "x") return Axis::x;
  if (s == "y") return Axis::y;
  throw InputError("axis must be 'x' or 'y'");
}

Path path_of(bool oracle) { return oracle ? Path::oracle : Path::fast; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discretized smooth crossed products by R and T";

  auto base = py::register_exception<LabError>(m, "LabError");
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
  py::register_exception<InputError>(m, "InputError", base.ptr());
  py::register_exception<DomainTruncationError>(m, "DomainTruncationError", base.ptr());
  py::register_exception<MeanNotZeroError>(m, "MeanNotZeroError", base.ptr());
  py::register_exception<GridMismatchError>(m, "GridMismatchError", base.ptr());
  py::register_exception<NotInIdealError>(m, "NotInIdealError", base.ptr());
  py::register_exception<VerificationFailure>(m, "VerificationFailure", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());

  py::class_<Grid>(m, "Grid")
      .def_static("line", &Grid::line, py::arg("L"), py::arg("N"))
      .def_static("circle", &Grid::circle, py::arg("N"))
      .def_property_readonly("group", [](const Grid& g) { return std::string(to_string(g.group())); })
      .def_property_readonly("N", &Grid::size)
      .def_property_readonly("L", &Grid::half_width)
      .def_property_readonly("h", &Grid::spacing)
      .def("nodes", [](const Grid& g) {
        py::array_t<double> x(g.size());
        auto v = x.mutable_unchecked<1>();
        for (int i = 0; i < g.size(); ++i) v(i) = g.node(i);
        return x;
      });

  py::class_<Action>(m, "Action")
      .def_static("trivial", [](int dim, const std::string& g) { return Action::trivial(dim, group_from_string(g)); },
                  py::arg("dim"), py::arg("group") = "line")
      .def_static("unitary", [](const Matrix& h, const std::string& g) { return Action::unitary(h, group_from_string(g)); },
                  py::arg("H"), py::arg("group") = "line")
      .def_static("nilpotent", [](const Matrix& n) { return Action::nilpotent(n); }, py::arg("N"))
      .def_property_readonly("kind", [](const Action& a) { return std::string(to_string(a.kind())); })
      .def_property_readonly("dim", &Action::dim)
      .def("__call__", [](const Action& a, double x, const Matrix& b) { return act(a, x, b); });

  m.def("differentiate", [](const Grid& g, const CArray& f) { return from_field(differentiate(to_field(g, f))); });
  m.def("integrate", [](const Grid& g, const CArray& f) { return Matrix(integrate(to_field(g, f))); });
  m.def("fourier_transform", [](const Grid& g, const CArray& f, bool forward) {
    return from_field(fourier_transform(to_field(g, f), forward));
  }, py::arg("grid"), py::arg("f"), py::arg("forward") = true);
  m.def("convolve", [](const Grid& g, const CArray& f, const CArray& h) {
    return from_field(convolve(to_field(g, f), to_field(g, h)));
  });
  m.def("twisted_convolve", [](const Action& a, const Grid& g, const CArray& f, const CArray& h, bool oracle) {
    return from_field(twisted_convolve(a, to_field(g, f), to_field(g, h), path_of(oracle)));
  }, py::arg("action"), py::arg("grid"), py::arg("f"), py::arg("g"), py::arg("oracle") = false);
  m.def("op_T", [](const Action& a, const Grid& g, const CArray& f, bool forward) {
    return from_field(op_T(a, to_field(g, f), forward));
  }, py::arg("action"), py::arg("grid"), py::arg("f"), py::arg("forward") = true);
  m.def("d_alpha", [](const Action& a, const Grid& g, const CArray& f) { return from_field(d_alpha(a, to_field(g, f))); });
  m.def("map_iota", [](const Action& a, const Grid& g, const CArray& F) { return from_field2(map_iota(a, to_field2(g, F))); });
  m.def("map_pi", [](const Action& a, const Grid& g, const CArray& F) { return from_field(map_pi(a, to_field2(g, F))); });
  m.def("sect_rho", [](const Action& a, const Grid& g, const std::string& ax, const CArray& f) {
    return from_field2(sect_rho(a, axis_of(ax), to_field(g, f), Bump::standard(g)));
  });
  m.def("homotopy_beta", [](const Action& a, const Grid& g, const std::string& ax, const CArray& F) {
    return from_field2(homotopy_beta(a, axis_of(ax), to_field2(g, F), Bump::standard(g)));
  });

  m.def("suite_names", [] {
    std::vector<std::string> out;
    for (const auto& s : suite_catalog()) out.push_back(s.name);
    return out;
  });
  m.def("_run_suite_json", [](const std::string& name, const std::string& config_json) {
    const LabConfig cfg = parse_config(nlohmann::json::parse(config_json));
    py::gil_scoped_release release;
    return run_suite(name, cfg).to_json().dump();
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> full{"schwartzlab"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
