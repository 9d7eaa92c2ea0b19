// Scalar diagrams for A = C: the pointwise sequence with j = (x - y), the
// convolution sequence, and the Fourier transform exchanging the two. The
// convolution side is computed twice: by the general crossed-product code
// with the trivial action, and by plain scalar arrays below.

#include <cmath>
#include <numbers>

#include "battery.hpp"
#include "schwartzlab/errors.hpp"
#include "schwartzlab/omega.hpp"
#include "schwartzlab/suites.hpp"

namespace schwartzlab {

namespace {

using detail::Battery;
using detail::residual;
using Vec = Eigen::VectorXcd;
using Arr2 = Eigen::MatrixXcd;  // (i, j) = value at (x_i, y_j)

Vec to_vec(const SampledFunction& f) {
  Vec v(f.grid().size());
  for (int i = 0; i < v.size(); ++i) v(i) = f.data()[i];
  return v;
}

Arr2 to_arr(const BiSampledFunction& F) {
  const int n = F.grid().size();
  Arr2 a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = F.at(i, j)(0, 0);
  return a;
}

BiSampledFunction from_arr(const Grid& g, const Arr2& a) {
  BiSampledFunction F(g, 1);
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) F.at(i, j)(0, 0) = a(i, j);
  return F;
}

template <class Derived>
double sup(const Eigen::MatrixBase<Derived>& a) {
  return a.cwiseAbs().maxCoeff();
}
template <class T>
double rel(const T& a, const T& b, double s) {
  return sup(a - b) / detail::safe_scale(s);
}

// Spectral derivative along x (axis 0) or y (axis 1) of a column-major array.
Arr2 scalar_derivative(const Grid& g, Arr2 a, int axis) {
  const int n = g.size();
  const int stride = axis == 0 ? 1 : n, dist = axis == 0 ? n : 1;
  spectral::dft(a.data(), n, n, stride, dist, true);
  spectral::scale_modes(a.data(), n, n, stride, dist, [&](int k) { return spectral::derivative_symbol(g, k); });
  spectral::dft(a.data(), n, n, stride, dist, false);
  return a;
}

Vec scalar_derivative(const Grid& g, Vec v) {
  const int n = g.size();
  spectral::dft(v.data(), n, 1, 1, n, true);
  spectral::scale_modes(v.data(), n, 1, 1, n, [&](int k) { return spectral::derivative_symbol(g, k); });
  spectral::dft(v.data(), n, 1, 1, n, false);
  return v;
}

Vec scalar_pi_conv(const Grid& g, const Arr2& a) {
  const int n = g.size();
  Vec out = Vec::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i) += g.spacing() * a(j, g.sub(i, j));
  return out;
}

Vec scalar_convolution(const Grid& g, const Vec& f, const Vec& h) {
  const int n = g.size();
  Vec out = Vec::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i) += g.spacing() * f(j) * h(g.sub(i, j));
  return out;
}

Arr2 outer(const Vec& f, const Vec& h) { return f * h.transpose(); }

Arr2 x_minus_y(const Grid& g, const Arr2& a) {
  Arr2 out = a;
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) out(i, j) *= g.node(i) - g.node(j);
  return out;
}

Vec times_x(const Grid& g, const Vec& f) {
  Vec out = f;
  for (int i = 0; i < g.size(); ++i) out(i) *= g.node(i);
  return out;
}

TensorElement single(const SampledFunction& f, const SampledFunction& h) {
  TensorElement t;
  t.terms.emplace_back(f, h);
  return t;
}

template <class Body>
void guarded(Battery& bat, const std::string& id, double tol, Body&& body) {
  try {
    body();
  } catch (const LabError& e) {
    bat.record_error(id, "scalar diagram", tol, e.what());
  }
}

Rng scalar_rng(const LabConfig& cfg, std::string_view variant, int trial) {
  std::seed_seq seq{static_cast<unsigned>(cfg.seed & 0xffffffffu), static_cast<unsigned>(cfg.seed >> 32),
                    static_cast<unsigned>(std::hash<std::string_view>{}(variant) & 0xffffffffu),
                    static_cast<unsigned>(trial)};
  return Rng(seq);
}

void pointwise(const LabConfig& cfg, Battery& bat) {
  const Grid g = Grid::line(cfg.L, cfg.N);
  const int n = g.size();
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    Rng rng = scalar_rng(cfg, "pointwise", trial);
    const Vec f = to_vec(random_schwartz(cfg.inputs, g, 1, rng));
    const Vec h = to_vec(random_schwartz(cfg.inputs, g, 1, rng));
    const BiSampledFunction Gb = random_bischwartz(cfg.inputs, g, 1, rng);
    const Arr2 G = to_arr(Gb);
    const double nf = sup(f), nh = sup(h), nG = sup(G);

    bat.record("scalar.pointwise.pi-j", "pi(j(F)) = ((x - y) F)(x, x) = 0", sup(Vec(x_minus_y(g, G).diagonal())) / nG, 1e-12);
    // k(f (x) g) = xf (x) g - f (x) xg; m is the pointwise product.
    const Vec mk = times_x(g, f).cwiseProduct(h) - f.cwiseProduct(times_x(g, h));
    bat.record("scalar.pointwise.m-k", "m(k(f (x) g)) = xfg - fxg = 0", sup(mk) / (nf * nh), 1e-12);
    const Arr2 Ik = outer(times_x(g, f), h) - outer(f, times_x(g, h));
    bat.record("scalar.pointwise.square-k", "I(k(f (x) g)) = j(I(f (x) g))", rel(Ik, x_minus_y(g, outer(f, h)), nf * nh), 1e-12);
    bat.record("scalar.pointwise.square-m", "pi(I(f (x) g)) = fg",
               rel(Vec(outer(f, h).diagonal()), Vec(f.cwiseProduct(h)), nf * nh), 1e-12);
    // Section rho(f)(x, y) = f(x) psi(x - y), psi(0) = 1.
    Arr2 rho(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double u = g.node(i) - g.node(j);
        rho(i, j) = f(i) * std::exp(-2.0 * u * u);
      }
    bat.record("scalar.pointwise.pi-rho", "pi(rho(f)) = f", rel(Vec(rho.diagonal()), f, nf), 1e-12);
    guarded(bat, "scalar.pointwise.exact-middle", 1e-7, [&] {
      // F in ker pi is j of something: F = j(hadamard_divide(F)).
      Arr2 F0 = G;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double u = g.node(i) - g.node(j);
          F0(i, j) -= G(i, i) * std::exp(-2.0 * u * u);
        }
      const Arr2 q = to_arr(hadamard_divide(from_arr(g, F0)));
      bat.record("scalar.pointwise.exact-middle", "ker pi = im j via hadamard_divide", rel(x_minus_y(g, q), F0, sup(F0)), 1e-7);
      const Arr2 back = to_arr(hadamard_divide(from_arr(g, x_minus_y(g, G))));
      bat.record("scalar.pointwise.j-injective", "hadamard_divide(j(G)) = G", rel(back, G, nG), 1e-8);
    });
  }
}

void convolution(const LabConfig& cfg, Battery& bat) {
  const Grid g = Grid::line(cfg.L, cfg.N);
  const Action triv = Action::trivial(1);
  const Bump phi = cfg.bump ? Bump::make(*cfg.bump, g) : Bump::standard(g);
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    Rng rng = scalar_rng(cfg, "convolution", trial);
    const SampledFunction fs = random_schwartz(cfg.inputs, g, 1, rng);
    const SampledFunction hs = random_schwartz(cfg.inputs, g, 1, rng);
    const BiSampledFunction Fb = random_bischwartz(cfg.inputs, g, 1, rng);
    const Vec f = to_vec(fs), h = to_vec(hs);
    const Arr2 F = to_arr(Fb);
    const double nf = sup(f), nh = sup(h), nF = sup(F);
    const std::string ref = "convolution diagram: trivial-action machinery equals scalar code";
    guarded(bat, "scalar.convolution.general-vs-scalar", 1e-10, [&] {
      const Arr2 j_scalar = scalar_derivative(g, F, 0) - scalar_derivative(g, F, 1);
      bat.record("scalar.convolution.j-general-vs-scalar", ref, rel(to_arr(map_iota(triv, Fb)), j_scalar, sup(j_scalar)), 1e-10);
      bat.record("scalar.convolution.pi-general-vs-scalar", ref,
                 rel(to_vec(map_pi(triv, Fb)), scalar_pi_conv(g, F), nF), 1e-10);
      bat.record("scalar.convolution.m-general-vs-scalar", ref,
                 rel(to_vec(tensor_m(triv, single(fs, hs))), scalar_convolution(g, f, h), nf * nh), 1e-10);
      const Arr2 k_scalar = outer(scalar_derivative(g, f), h) - outer(f, scalar_derivative(g, h));
      bat.record("scalar.convolution.k-general-vs-scalar", ref,
                 rel(to_arr(iso_I1(triv, tensor_j(triv, single(fs, hs)))), k_scalar, sup(k_scalar)), 1e-10);
    });
    guarded(bat, "scalar.convolution.exactness", 1e-6, [&] {
      bat.record("scalar.convolution.m-k", "m(k(f (x) g)) = f' * g - f * g' = 0",
                 sup_norm(tensor_m(triv, tensor_j(triv, single(fs, hs)))) / (nf * nh), 1e-8);
      bat.record("scalar.convolution.pi-j", "pi(j(F)) = 0", sup_norm(map_pi(triv, map_iota(triv, Fb))) / nF, 1e-8);
      bat.record("scalar.convolution.pi-rho", "pi(rho(f)) = f", residual(map_pi(triv, sect_rho(triv, Axis::x, fs, phi)), fs, nf), 1e-7);
      bat.record("scalar.convolution.beta-j", "beta(j(F)) = F",
                 residual(homotopy_beta(triv, Axis::x, map_iota(triv, Fb), phi), Fb, nF), 1e-6);
      const BiSampledFunction lhs =
          map_iota(triv, homotopy_beta(triv, Axis::x, Fb, phi)) + sect_rho(triv, Axis::x, map_pi(triv, Fb), phi);
      bat.record("scalar.convolution.homotopy", "j(beta(F)) + rho(pi(F)) = F", residual(lhs, Fb, nF), 1e-6);
    });
  }
}

void fourier_exchange(const LabConfig& cfg, Battery& bat) {
  const Grid g = Grid::line(cfg.L, cfg.N);
  const Action triv = Action::trivial(1);
  const cplx c = -1.0 / cplx(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    Rng rng = scalar_rng(cfg, "fourier", trial);
    const SampledFunction fs = random_schwartz(cfg.inputs, g, 1, rng);
    const SampledFunction hs = random_schwartz(cfg.inputs, g, 1, rng);
    const BiSampledFunction Fb = random_bischwartz(cfg.inputs, g, 1, rng);
    const double nF = sup_norm(Fb), nf = sup_norm(fs), nh = sup_norm(hs);
    const std::string ref = "the Fourier transform exchanges the pointwise and convolution diagrams";
    guarded(bat, "scalar.fourier", 1e-8, [&] {
      const BiSampledFunction FF = fourier_transform(Fb, true, cfg.decay_tol);
      bat.record("scalar.fourier.j", ref + ": F2((x - y) F) = (-1/(2 pi i)) (d/dxi - d/deta) F2(F)",
                 residual(fourier_transform(multiply_x_minus_y(Fb), true, cfg.decay_tol), c * map_iota(triv, FF), nF), 1e-8);
      SampledFunction diag(g, 1);
      for (int i = 0; i < g.size(); ++i) diag.at(i) = Fb.at(i, i);
      bat.record("scalar.fourier.pi", ref + ": F(F(x, x)) = pi_conv(F2(F))",
                 residual(fourier_transform(diag, true, cfg.decay_tol), map_pi(triv, FF), nF), 1e-8);
      bat.record("scalar.fourier.m", ref + ": F(fg) = F(f) * F(g)",
                 residual(fourier_transform(pointwise_multiply(fs, hs), true, cfg.decay_tol),
                          convolve(fourier_transform(fs, true, cfg.decay_tol), fourier_transform(hs, true, cfg.decay_tol)),
                          nf * nh),
                 1e-8);
    });
  }
}

}  // namespace

void scalar_sequence_check(std::string_view variant, const LabConfig& cfg, VerificationReport& report) {
  Battery bat(cfg, report);
  if (variant == "pointwise") pointwise(cfg, bat);
  else if (variant == "convolution") convolution(cfg, bat);
  else if (variant == "fourier") fourier_exchange(cfg, bat);
  else throw UsageError("unknown scalar variant '" + std::string(variant) + "'");
}

}  // namespace schwartzlab
