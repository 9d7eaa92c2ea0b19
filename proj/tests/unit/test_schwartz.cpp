#include "doctest.h"
#include "helpers.hpp"

#include <numbers>

#include "schwartzlab/errors.hpp"
#include "schwartzlab/schwartz.hpp"

using namespace schwartzlab;
using namespace testing_support;

namespace {

const double pi = std::numbers::pi;

Matrix rand_a(unsigned long long s) {
  Rng rng(s);
  return random_matrix(rng, 2);
}

}  // namespace

TEST_CASE("grid lattice maps") {
  const Grid g = Grid::line(10.0, 128);
  CHECK(g.node(0) == -10.0);
  for (int i : {0, 5, 64, 127})
    for (int j : {0, 3, 64, 100}) {
      const double s = g.node(i) + g.node(j), d = g.node(i) - g.node(j);
      const auto wrap = [&](double v) { return std::remainder(v, g.period()); };
      CHECK(std::abs(wrap(g.node(g.add(i, j)) - s)) < 1e-12);
      CHECK(std::abs(wrap(g.node(g.sub(i, j)) - d)) < 1e-12);
    }
  CHECK(g.node(g.neg(70)) == doctest::Approx(-g.node(70)));
  CHECK_THROWS_AS(Grid::line(10.0, 100), InputError);
  CHECK_THROWS_AS(Grid::line(2.0, 128), InputError);
  CHECK_THROWS_AS(Grid::circle(32), InputError);
}

TEST_CASE("differentiate") {
  const Matrix a = rand_a(1);
  const Grid g = Grid::line(10.0, 512);
  const auto f = sample(g, a, [](double x) { return std::exp(-x * x); });
  const auto df = sample(g, a, [](double x) { return -2.0 * x * std::exp(-x * x); });
  CHECK(diff(differentiate(f), df) < 1e-9);

  const Grid c = Grid::circle(64);
  const auto s = sample(c, a, [](double x) { return std::sin(2 * pi * x); });
  const auto ds = sample(c, a, [](double x) { return 2 * pi * std::cos(2 * pi * x); });
  CHECK(diff(differentiate(s), ds) < 1e-12);
  const auto k = sample(c, a, [](double) { return 1.0; });
  CHECK(sup_norm(differentiate(k)) < 1e-13);

  const auto wide = sample(g, a, [](double x) { return std::exp(-x * x / 50.0); });
  CHECK_THROWS_AS(differentiate(wide), DomainTruncationError);
}

TEST_CASE("integrate") {
  const Matrix a = rand_a(2);
  const Grid g = Grid::line(10.0, 512);
  CHECK(seminorm(integrate(sample(g, a, [](double x) { return std::exp(-pi * x * x); })) - a) < 1e-10);
  CHECK(seminorm(integrate(sample(g, a, [](double x) { return x * std::exp(-x * x); }))) < 1e-12);
  CHECK(seminorm(integrate(sample(g, a, [](double x) { return std::exp(-x * x); })) - std::sqrt(pi) * a) < 1e-10);
}

TEST_CASE("cumulative_integral") {
  const Matrix a = rand_a(3);
  const Grid g = Grid::line(10.0, 512);
  const auto f = sample(g, a, [](double x) { return -2.0 * x * std::exp(-x * x); });
  const auto F = sample(g, a, [](double x) { return std::exp(-x * x); });
  CHECK(diff(cumulative_integral(f), F) < 1e-8);
  CHECK(sup_norm(cumulative_integral(SampledFunction(g, 2))) == 0.0);

  TestInputSpec spec;
  const SampledFunction r = random_schwartz(spec, g, 2);
  SampledFunction shifted = r;
  for (int i = 0; i < g.size(); ++i) shifted.at(i) -= r.at(0);
  CHECK(diff(cumulative_integral(differentiate(r)), shifted) < 1e-8 * sup_norm(r));

  CHECK_THROWS_AS(cumulative_integral(F), MeanNotZeroError);
}

TEST_CASE("seminorm_kl") {
  const Grid g = Grid::line(10.0, 512);
  const Matrix id = Matrix::Identity(2, 2);
  CHECK(std::abs(seminorm_kl(sample(g, id, [](double x) { return std::exp(-pi * x * x); }), 0, 0) - 1.0) < 1e-12);
  // node max of |x e^{-x^2}|: exact only where a node hits 1/sqrt(2)
  const auto e = sample(g, id, [](double x) { return std::exp(-x * x); });
  const double exact = 1.0 / std::sqrt(2.0 * std::numbers::e);
  const double h = g.spacing();
  CHECK(seminorm_kl(e, 0, 1) <= exact);
  CHECK(exact - seminorm_kl(e, 0, 1) < h * h);
  // L chosen so that x = 1/sqrt(2) is a node
  const double L = 64.0 / std::sqrt(2.0) / 8.0;
  const Grid g2 = Grid::line(L, 256);
  const auto e2 = sample(g2, id, [](double x) { return std::exp(-x * x); });
  CHECK(std::abs(seminorm_kl(e2, 0, 1) - exact) < 1e-9);
  CHECK(seminorm_kl(SampledFunction(g, 2), 3, 4) == 0.0);
  CHECK_THROWS_AS(seminorm_kl(e, 9, 0), InputError);
}

TEST_CASE("fourier_transform") {
  const Matrix a = rand_a(4);
  // the output lies on the session nodes, so the x-grid must resolve |xi| <= L: N >= 4 L^2
  const Grid g = Grid::line(10.0, 512);
  const auto gauss = sample(g, a, [](double x) { return std::exp(-pi * x * x); });
  CHECK(diff(fourier_transform(gauss), gauss) < 1e-9);

  TestInputSpec spec;
  Rng rng(11);
  const SampledFunction f = random_schwartz(spec, g, 2, rng);
  const SampledFunction h = random_schwartz(spec, g, 2, rng);
  const SampledFunction ff = fourier_transform(f);
  CHECK(diff(fourier_transform(ff, false), f) < 1e-10 * sup_norm(f));
  CHECK(diff(fourier_transform(ff), reflect(f)) < 1e-9 * sup_norm(f));
  CHECK(diff(fourier_transform(pointwise_multiply(f, h)), convolve(ff, fourier_transform(h))) <
        1e-8 * sup_norm(f) * sup_norm(h));

  // a narrow spike has a transform wider than the grid
  const auto spike = sample(g, a, [](double x) { return std::exp(-x * x / 0.002); });
  CHECK_THROWS_AS(fourier_transform(spike), GridMismatchError);
  CHECK_THROWS_AS(fourier_transform(sample(Grid::circle(64), a, [](double) { return 1.0; })), InputError);
}

TEST_CASE("pointwise products and convolution") {
  const Grid g = Grid::line(10.0, 512);
  const Matrix id = Matrix::Identity(2, 2);
  const auto e = sample(g, id, [](double x) { return std::exp(-x * x); });
  CHECK(sup_norm(pointwise_multiply(e, SampledFunction(g, 2))) == 0.0);
  CHECK(diff(pointwise_multiply(e, e), sample(g, id, [](double x) { return std::exp(-2 * x * x); })) < 1e-15);
  const auto want = sample(g, id, [](double x) { return std::sqrt(pi / 2) * std::exp(-x * x / 2); });
  CHECK(diff(convolve(e, e), want) < 1e-8);
  CHECK(diff(convolve(e, e), convolve_direct(e, e)) < 1e-12);
  const auto wide = sample(g, id, [](double x) { return std::exp(-x * x / 20.0); });
  CHECK_THROWS_AS(convolve(wide, wide), DomainTruncationError);
  CHECK_THROWS_AS(convolve(e, SampledFunction(Grid::line(10.0, 256), 2)), StructuralError);
}

TEST_CASE("hadamard_divide") {
  const Grid g = Grid::line(10.0, 128);
  const Matrix a = rand_a(5);
  const auto G = sample2(g, a, [](double x, double y) { return std::exp(-x * x - y * y); });
  const auto F = multiply_x_minus_y(G);
  CHECK(diff(hadamard_divide(F), G) < 1e-8);
  CHECK(sup_norm(hadamard_divide(BiSampledFunction(g, 2))) == 0.0);

  TestInputSpec spec;
  Rng rng(12);
  const BiSampledFunction R = multiply_x_minus_y(random_bischwartz(spec, g, 2, rng));
  CHECK(diff(multiply_x_minus_y(hadamard_divide(R)), R) < 1e-7 * sup_norm(R));
  CHECK_THROWS_AS(hadamard_divide(G), NotInIdealError);
}
