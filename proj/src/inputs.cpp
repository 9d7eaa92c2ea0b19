#include "schwartzlab/inputs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "schwartzlab/errors.hpp"

namespace schwartzlab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

cplx gaussian_c(Rng& rng) {
  std::normal_distribution<double> n;
  const double re = n(rng);
  return {re, n(rng)};
}

// Random polynomial factor of degree <= d evaluated at u.
struct Poly {
  std::vector<cplx> c;
  cplx operator()(double u) const {
    cplx v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * u + *it;
    return v;
  }
};

Poly random_poly(Rng& rng, int degree) {
  Poly p;
  for (int k = 0; k <= degree; ++k) p.c.push_back(gaussian_c(rng) / std::sqrt(1.0 + k));
  return p;
}

// Trigonometric polynomial sum_{|m| <= d} c_m e^{2 pi i m x}.
struct TrigPoly {
  std::vector<cplx> c;
  int degree = 0;
  cplx operator()(double x) const {
    cplx v = 0.0;
    for (int m = -degree; m <= degree; ++m) v += c[m + degree] * std::polar(1.0, two_pi * m * x);
    return v;
  }
};

TrigPoly random_trig(Rng& rng, int degree) {
  TrigPoly p;
  p.degree = degree;
  for (int m = -degree; m <= degree; ++m) p.c.push_back(gaussian_c(rng) / (1.0 + std::abs(m)));
  return p;
}

// A scalar smooth profile: envelope times polynomial, centered at random.
struct Profile {
  Group group;
  double mu, sigma, kappa;
  Poly poly;
  TrigPoly trig;
  cplx operator()(double x) const {
    if (group == Group::line) {
      const double u = (x - mu) / sigma;
      return poly(u) * std::exp(-0.5 * u * u);
    }
    return trig(x) * std::exp(kappa * (std::cos(two_pi * (x - mu)) - 1.0));
  }
};

Profile random_profile(const TestInputSpec& spec, const Grid& grid, Rng& rng) {
  Profile p{grid.group(), 0.0, spec.sigma, spec.kappa, {}, {}};
  if (grid.group() == Group::line) {
    const double bound = spec.center_fraction * grid.half_width();
    p.mu = std::uniform_real_distribution<double>(-bound, bound)(rng);
    p.poly = random_poly(rng, spec.degree);
  } else {
    p.mu = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    p.trig = random_trig(rng, spec.degree);
  }
  return p;
}

}  // namespace

void TestInputSpec::validate(double half_width) const {
  if (!(sigma > 0.0) || sigma > half_width / 5.0) throw InputError("input sigma must be in (0, L/5]");
  if (degree < 0 || degree > 6) throw InputError("input polynomial degree must be in [0, 6]");
  if (terms < 1 || terms > 3) throw InputError("input term count must be in [1, 3]");
  if (!(coef_norm > 0.0)) throw InputError("coefficient norm cap must be positive");
  if (center_fraction < 0.0 || center_fraction > 0.25) throw InputError("center fraction must be in [0, 1/4]");
  if (!(kappa > 0.0)) throw InputError("kappa must be positive");
}

Matrix random_matrix(Rng& rng, int dim, double norm) {
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = gaussian_c(rng);
  return (norm / seminorm(a)) * a;
}

Matrix random_hermitian(Rng& rng, int dim, double lo, double hi) {
  Matrix a = random_matrix(rng, dim);
  Matrix h = 0.5 * (a + a.adjoint());
  double nrm = seminorm(h);
  if (nrm == 0.0) {
    h = Matrix::Identity(dim, dim);
    nrm = 1.0;
  }
  const double target = std::uniform_real_distribution<double>(lo, hi)(rng);
  h *= target / nrm;
  return 0.5 * (h + h.adjoint());
}

SampledFunction random_schwartz(const TestInputSpec& spec, const Grid& grid, int dim, Rng& rng) {
  SampledFunction f(grid, dim);
  for (int t = 0; t < spec.terms; ++t) {
    const Profile p = random_profile(spec, grid, rng);
    const Matrix a = random_matrix(rng, dim, spec.coef_norm);
    for (int i = 0; i < grid.size(); ++i) f.at(i) += p(grid.node(i)) * a;
  }
  return f;
}

SampledFunction random_schwartz(const TestInputSpec& spec, const Grid& grid, int dim) {
  Rng rng(spec.seed);
  return random_schwartz(spec, grid, dim, rng);
}

BiSampledFunction random_bischwartz(const TestInputSpec& spec, const Grid& grid, int dim, Rng& rng) {
  const int n = grid.size();
  BiSampledFunction F(grid, dim);
  for (int t = 0; t < 2; ++t) {
    const SampledFunction f = random_schwartz(spec, grid, dim, rng);
    const SampledFunction g = random_schwartz(spec, grid, dim, rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) F.at(i, j).noalias() += f.at(i) * g.at(j);
  }
  // Correlated envelope: not a finite sum of products.
  const Matrix a = random_matrix(rng, dim, spec.coef_norm);
  const double c = std::uniform_real_distribution<double>(-0.6, 0.6)(rng);
  if (grid.group() == Group::line) {
    const double bound = spec.center_fraction * grid.half_width();
    std::uniform_real_distribution<double> center(-bound, bound);
    const double mx = center(rng), my = center(rng);
    const double s2 = spec.sigma * spec.sigma * (1.0 - c * c);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double u = grid.node(i) - mx, v = grid.node(j) - my;
        F.at(i, j) += std::exp(-(u * u - 2.0 * c * u * v + v * v) / (2.0 * s2)) * a;
      }
  } else {
    std::uniform_real_distribution<double> center(0.0, 1.0);
    const double mu = center(rng), nu = center(rng);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double x = grid.node(i), y = grid.node(j);
        const double e = spec.kappa * (std::cos(two_pi * (x - y - mu)) + (1.0 + c) * std::cos(two_pi * (x + y - nu)) - 2.0 - c);
        F.at(i, j) += std::exp(e) * a;
      }
  }
  return F;
}

Action random_action(ActionKind kind, Group group, int dim, Rng& rng) {
  switch (kind) {
    case ActionKind::trivial:
      return Action::trivial(dim, group);
    case ActionKind::unitary_conjugation: {
      if (group == Group::line) return Action::unitary(random_hermitian(rng, dim), group);
      std::uniform_int_distribution<int> pick(-1, 1);
      std::vector<int> m(dim);
      do {
        for (int& v : m) v = pick(rng);
      } while (dim > 1 && std::all_of(m.begin(), m.end(), [&](int v) { return v == m[0]; }));
      Eigen::HouseholderQR<Matrix> qr(random_matrix(rng, dim));
      const Matrix v = qr.householderQ();
      Matrix d = Matrix::Zero(dim, dim);
      for (int k = 0; k < dim; ++k) d(k, k) = two_pi * m[k];
      Matrix h = v * d * v.adjoint();
      return Action::unitary(0.5 * (h + h.adjoint()), group);
    }
    case ActionKind::nilpotent_conjugation: {
      Matrix nmat = Matrix::Zero(dim, dim);
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) nmat(i, j) = gaussian_c(rng);
      if (dim > 1) nmat /= seminorm(nmat);
      return Action::nilpotent(nmat, group);
    }
  }
  return Action::trivial(dim, group);
}

}  // namespace schwartzlab
