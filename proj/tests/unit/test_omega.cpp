#include "doctest.h"
#include "helpers.hpp"

#include <numbers>

#include "schwartzlab/crossed.hpp"
#include "schwartzlab/errors.hpp"
#include "schwartzlab/omega.hpp"
#include "schwartzlab/schwartz.hpp"

using namespace schwartzlab;
using namespace testing_support;

namespace {

TensorElement single(const SampledFunction& a, const SampledFunction& b) {
  TensorElement t;
  t.terms.emplace_back(a, b);
  return t;
}

struct Setup {
  Grid g = Grid::line(10.0, 256);
  TestInputSpec spec;
  Rng rng{91};
  Action A = random_action(ActionKind::unitary_conjugation, Group::line, 2, rng);
  SampledFunction f = random_schwartz(spec, g, 2, rng);
  SampledFunction h = random_schwartz(spec, g, 2, rng);
  BiSampledFunction F = random_bischwartz(spec, g, 2, rng);
  Bump phi = Bump::standard(g);
  double nf = sup_norm(f), nh = sup_norm(h), nF = sup_norm(F);
};

}  // namespace

TEST_CASE("bumps have unit mass") {
  for (BumpKind k : {BumpKind::gaussian, BumpKind::compact}) CHECK(Bump::make(k, Grid::line(10.0, 512)).mass() == doctest::Approx(1.0).epsilon(1e-14));
  for (BumpKind k : {BumpKind::von_mises, BumpKind::compact}) CHECK(Bump::make(k, Grid::circle(128)).mass() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(bump_kind_from_string("von-mises") == BumpKind::von_mises);
}

TEST_CASE("I1") {
  Setup s;
  const Action T = Action::trivial(2);
  const BiSampledFunction i1 = iso_I1(T, single(s.f, s.h));
  double err = 0.0;
  for (int i = 0; i < s.g.size(); ++i)
    for (int j = 0; j < s.g.size(); ++j) err = std::max(err, seminorm(i1.at(i, j) - s.f.at(i) * s.h.at(j)));
  CHECK(err == 0.0);

  Rng rng(3);
  const Matrix a = random_matrix(rng, 2);
  CHECK(diff(iso_I1(s.A, single(module_act_algebra(s.A, Side::right, a, s.f), s.h)),
             iso_I1(s.A, single(s.f, module_act_algebra(s.A, Side::left, a, s.h)))) < 1e-10 * s.nf * s.nh);
  TensorElement two = single(s.f, s.h);
  two += single(s.h, s.f);
  CHECK(diff(iso_I1(s.A, two), iso_I1(s.A, single(s.f, s.h)) + iso_I1(s.A, single(s.h, s.f))) < 1e-14 * s.nf * s.nh);
}

TEST_CASE("m and j") {
  Setup s;
  const Grid g = Grid::line(10.0, 512);
  const Matrix I = Matrix::Identity(2, 2);
  const auto e = sample(g, I, [](double x) { return std::exp(-x * x); });
  const auto want = sample(g, I, [](double x) { return std::sqrt(std::numbers::pi / 2) * std::exp(-x * x / 2); });
  CHECK(diff(tensor_m(Action::trivial(2), single(e, e)), want) < 1e-8);

  const TensorElement t = single(s.f, s.h);
  CHECK(sup_norm(tensor_m(s.A, tensor_j(s.A, t))) < 1e-8 * s.nf * s.nh);
  CHECK(diff(map_pi(s.A, iso_I1(s.A, t)), tensor_m(s.A, t)) < 1e-8 * s.nf * s.nh);
  CHECK(diff(iso_I1(s.A, tensor_j(s.A, t)), map_iota(s.A, iso_I1(s.A, t))) < 1e-8 * s.nf * s.nh);
}

TEST_CASE("iota and pi") {
  Setup s;
  const Matrix a = Matrix::Identity(2, 2);
  const auto G = sample2(s.g, a, [](double x, double y) { return std::exp(-x * x - y * y); });
  const auto want = sample2(s.g, a, [](double x, double y) { return (-2 * x + 2 * y) * std::exp(-x * x - y * y); });
  CHECK(diff(map_iota(Action::trivial(2), G), want) < 1e-8);
  CHECK(sup_norm(map_pi(s.A, map_iota(s.A, s.F))) < 1e-8 * s.nF);
  CHECK(sup_norm(map_pi(s.A, BiSampledFunction(s.g, 2))) == 0.0);

  // trivial action: pi(F)(x) = int F(y, x - y) dy
  const SampledFunction p = map_pi(Action::trivial(2), s.F);
  double err = 0.0;
  for (int i = 0; i < s.g.size(); ++i) {
    Matrix acc = Matrix::Zero(2, 2);
    for (int j = 0; j < s.g.size(); ++j) acc += s.F.at(j, s.g.sub(i, j));
    err = std::max(err, seminorm(s.g.spacing() * acc - p.at(i)));
  }
  CHECK(err < 1e-13 * s.nF);

  const auto wide = sample2(s.g, a, [](double x, double y) { return std::exp(-(x * x + y * y) / 8.0) * (x > 0 && y > 0); });
  CHECK_THROWS_AS(map_pi(s.A, wide), DomainTruncationError);
}

TEST_CASE("splitting maps") {
  Setup s;
  for (Axis ax : {Axis::x, Axis::y}) {
    CHECK(diff(map_pi(s.A, sect_rho(s.A, ax, s.f, s.phi)), s.f) < 1e-7 * s.nf);
    CHECK(diff(homotopy_beta(s.A, ax, map_iota(s.A, s.F), s.phi), s.F) < 1e-6 * s.nF);
    const BiSampledFunction lhs = map_iota(s.A, homotopy_beta(s.A, ax, s.F, s.phi)) + sect_rho(s.A, ax, map_pi(s.A, s.F), s.phi);
    CHECK(diff(lhs, s.F) < 1e-6 * s.nF);
  }
  Rng rng(2);
  const Matrix a = random_matrix(rng, 2);
  CHECK(diff(sect_rho(s.A, Axis::x, module_act_algebra(s.A, Side::right, a, s.f), s.phi),
             act_right_algebra(s.A, sect_rho(s.A, Axis::x, s.f, s.phi), a)) < 1e-10 * s.nf);
  CHECK(diff(homotopy_beta(s.A, Axis::x, act_left_crossed(s.A, s.h, s.F), s.phi),
             act_left_crossed(s.A, s.h, homotopy_beta(s.A, Axis::x, s.F, s.phi))) < 1e-6 * s.nh * s.nF);

  // trivial action: rho_x(f)(x, y) = phi(y) f(x + y)
  const BiSampledFunction r = sect_rho(Action::trivial(2), Axis::x, s.f, s.phi);
  double err = 0.0;
  for (int i = 0; i < s.g.size(); ++i)
    for (int j = 0; j < s.g.size(); ++j) err = std::max(err, seminorm(r.at(i, j) - s.phi[j] * s.f.at(s.g.add(i, j))));
  CHECK(err == 0.0);
}

TEST_CASE("beta mass check") {
  Setup s;
  // the anti-diagonal integrands have zero mass only up to rounding
  CHECK_NOTHROW(homotopy_beta(s.A, Axis::x, s.F, s.phi));
  CHECK_THROWS_AS(homotopy_beta(s.A, Axis::x, s.F, s.phi, 0.0), MeanNotZeroError);
}

TEST_CASE("circle sequence") {
  const Grid g = Grid::circle(128);
  TestInputSpec spec;
  Rng rng(17);
  const Action A = random_action(ActionKind::unitary_conjugation, Group::circle, 2, rng);
  const BiSampledFunction F = random_bischwartz(spec, g, 2, rng);
  const SampledFunction f = random_schwartz(spec, g, 2, rng);
  const Bump phi = Bump::standard(g);
  const double nF = sup_norm(F), nf = sup_norm(f);
  CHECK(sup_norm(map_pi(A, map_iota(A, F))) < 1e-9 * nF);
  for (Axis ax : {Axis::x, Axis::y}) {
    CHECK(diff(map_pi(A, sect_rho(A, ax, f, phi)), f) < 1e-9 * nf);
    const BiSampledFunction lhs = map_iota(A, homotopy_beta(A, ax, F, phi)) + sect_rho(A, ax, map_pi(A, F), phi);
    CHECK(diff(lhs, F) < 1e-9 * nF);
    // on ker pi beta is a left inverse of iota
    const BiSampledFunction F0 = F - sect_rho(A, ax, map_pi(A, F), phi);
    CHECK(diff(homotopy_beta(A, ax, map_iota(A, F0), phi), F0) < 1e-9 * nF);
  }
}
