#include "schwartzlab/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "battery.hpp"
#include "schwartzlab/crossed.hpp"
#include "schwartzlab/errors.hpp"
#include "schwartzlab/omega.hpp"

namespace schwartzlab {

using detail::Battery;
using detail::residual;
using detail::safe_scale;

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = {
      {"action", "Proposition: criterion for smooth m-tempered actions (group law, automorphism, derivative, growth bounds)"},
      {"bimodule", "Lemmas: bimodule structures on S_alpha and S(R^2, A)_alpha, module maps j, m, iota, pi, rho, beta"},
      {"crossed-algebra", "Theorem: smooth crossed product is a Frechet-Arens-Michael algebra; Proposition: algebra isomorphism i"},
      {"exact-sequence-circle", "Theorem: rows are short exact sequences (G = T)"},
      {"exact-sequence-line", "Theorem: rows are short exact sequences"},
      {"fourier", "Theorem: Fourier transform induces an isomorphism"},
      {"hadamard", "Lemma: Hadamard's lemma and its Fourier dual"},
      {"operator-T", "Proposition: properties of the operator T"},
      {"scalar-sequences", "Proposition: scalar pointwise and convolution diagrams are split short exact sequences"},
      {"tensor", "Proposition: I1 identifies S_alpha (x)_A S_alpha with S(R^2, A); commutative diagrams"},
  };
  return catalog;
}

bool is_suite(std::string_view name) {
  for (const auto& s : suite_catalog())
    if (s.name == name) return true;
  return false;
}

namespace {

constexpr double kPi = std::numbers::pi;

Grid session_grid(const LabConfig& cfg) {
  return cfg.group == Group::line ? Grid::line(cfg.L, cfg.N) : Grid::circle(cfg.N);
}

nlohmann::json grid_json(const Grid& g) {
  nlohmann::json j{{"group", std::string(to_string(g.group()))}, {"N", g.size()}};
  if (g.group() == Group::line) j["L"] = g.half_width();
  return j;
}

Rng trial_rng(const LabConfig& cfg, std::string_view suite, int trial) {
  std::seed_seq seq{static_cast<unsigned>(cfg.seed & 0xffffffffu), static_cast<unsigned>(cfg.seed >> 32),
                    static_cast<unsigned>(std::hash<std::string_view>{}(suite) & 0xffffffffu),
                    static_cast<unsigned>(trial)};
  return Rng(seq);
}

Bump bump_for(const LabConfig& cfg, const Grid& g) {
  return cfg.bump ? Bump::make(*cfg.bump, g) : Bump::standard(g);
}

Path path_of(const LabConfig& cfg) { return cfg.oracle ? Path::oracle : Path::fast; }

TensorElement single(const SampledFunction& f, const SampledFunction& g) {
  TensorElement t;
  t.terms.emplace_back(f, g);
  return t;
}

// Runs `body`; any library error marks the given check as failed.
template <class Body>
void guarded(Battery& bat, const std::string& id, const std::string& ref, double tol, Body&& body) {
  try {
    body();
  } catch (const LabError& e) {
    bat.record_error(id, ref, tol, e.what());
  }
}

// ---------------------------------------------------------------- action

void suite_action(const LabConfig& cfg, Battery& bat) {
  const int d = cfg.dim;
  const Grid g = session_grid(cfg);
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    Rng rng = trial_rng(cfg, "action", trial);
    const Action line_action = cfg.action.build(cfg.group, d, rng);
    const Action circle_action = cfg.circle_action.build(Group::circle, d, rng);
    const Action nil = random_action(ActionKind::nilpotent_conjugation, Group::line, d, rng);
    const Matrix a = random_matrix(rng, d), b = random_matrix(rng, d);
    const double span = g.group() == Group::line ? g.half_width() : 1.0;
    std::uniform_real_distribution<double> unif(-span, span);
    const double x = unif(rng), y = unif(rng);

    for (const Action* act_p : {&line_action, &nil}) {
      const Action& A = *act_p;
      const std::string tag = act_p == &nil ? "/nilpotent" : "";
      bat.record("action.group-law" + tag, "alpha_x alpha_y = alpha_{x+y}",
                 seminorm(act(A, x, act(A, y, a)) - act(A, x + y, a)) / seminorm(a), 1e-12);
      bat.record("action.automorphism" + tag, "alpha_x(ab) = alpha_x(a) alpha_x(b)",
                 seminorm(act(A, x, a * b) - act(A, x, a) * act(A, x, b)) / (seminorm(a) * seminorm(b)), 1e-12);
      const double h = 1e-5;
      const Matrix fd = (act(A, h, a) - act(A, -h, a)) / (2.0 * h);
      bat.record("action.derivative-fd" + tag, "central difference of x -> alpha_x(a) at 0 equals alpha'_0(a)",
                 seminorm(fd - act_generator_power(A, 1, a)) / seminorm(a), 1e-8);
      bat.record("action.identity-at-zero" + tag, "alpha_0(a) = a exactly", seminorm(act(A, 0.0, a) - a), 0.0);
    }
    bat.record("action.trivial-fixed-point", "trivial action fixes every element",
               seminorm(act(Action::trivial(d), x, a) - a), 0.0);
    bat.record("action.circle-periodicity", "alpha_1 = id for circle actions",
               seminorm(act(circle_action, 1.0, a) - a) / seminorm(a), 1e-12);
    bat.record("action.circle-group-law", "alpha_x alpha_y = alpha_{x+y} on the circle",
               seminorm(act(circle_action, x, act(circle_action, y, a)) - act(circle_action, x + y, a)) / seminorm(a),
               1e-12);

    std::vector<double> xs;
    for (int i = 0; i < g.size(); i += 8) xs.push_back(g.node(i));
    for (const Action* act_p : {&line_action, &nil}) {
      const std::string tag = act_p == &nil ? "/nilpotent" : "";
      const std::string ref = "||alpha_x(a)|| <= |p(x)| ||a|| and ||alpha_0^(k)(a)|| <= C_k ||a||";
      try {
        const BoundCertificate cert = verify_tempered_bounds(*act_p, xs, 4, rng());
        bat.record("action.tempered-growth" + tag, ref, std::max(0.0, cert.worst_growth_ratio - 1.0), 1e-12);
        bat.record("action.tempered-derivative" + tag, ref, std::max(0.0, cert.worst_derivative_ratio - 1.0), 1e-12);
        if (act_p->kind() != ActionKind::nilpotent_conjugation)
          bat.record("action.isometric", "conjugation by a unitary group is isometric",
                     std::abs(cert.measured_growth - 1.0), 1e-10);
      } catch (const VerificationFailure& e) {
        bat.record("action.tempered-growth" + tag, ref, e.worst_ratio() - 1.0, 1e-12);
        bat.report().notes.push_back(std::string(e.what()) + " at x = " + std::to_string(e.at_x()));
      }
    }
  }
}

// --------------------------------------------------------------- fourier

void suite_fourier(const LabConfig& cfg, Battery& bat) {
  const Grid g = Grid::line(cfg.L, cfg.N);
  const int d = cfg.dim;
  const double tol = cfg.decay_tol;
  {
    Rng rng = trial_rng(cfg, "fourier", -1);
    const Matrix a = random_matrix(rng, d);
    const SampledFunction gauss = sample(g, a, [](double x) { return std::exp(-kPi * x * x); });
    guarded(bat, "fourier.gaussian-invariance", "F(exp(-pi x^2)) = exp(-pi xi^2)", 1e-9, [&] {
      bat.record("fourier.gaussian-invariance", "F(exp(-pi x^2)) = exp(-pi xi^2)",
                 residual(fourier_transform(gauss, true, tol), gauss, seminorm(a)), 1e-9);
    });
    bat.record("fourier.unit-mass", "integral of exp(-pi x^2) a is a",
               seminorm(integrate(gauss) - a) / seminorm(a), 1e-10);
    const SampledFunction e2 = sample(g, a, [](double x) { return std::exp(-x * x); });
    bat.record("fourier.gaussian-integral", "integral of exp(-x^2) a is sqrt(pi) a",
               seminorm(integrate(e2) - std::sqrt(kPi) * a) / seminorm(a), 1e-10);
    const SampledFunction de2 = sample(g, a, [](double x) { return -2.0 * x * std::exp(-x * x); });
    bat.record("fourier.spectral-derivative", "spectral derivative of exp(-x^2) is -2x exp(-x^2)",
               residual(differentiate(e2, tol), de2, seminorm(a)), 1e-9);
  }
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    Rng rng = trial_rng(cfg, "fourier", trial);
    const SampledFunction f = random_schwartz(cfg.inputs, g, d, rng);
    const SampledFunction h = random_schwartz(cfg.inputs, g, d, rng);
    const double nf = sup_norm(f), nh = sup_norm(h);
    guarded(bat, "fourier.round-trip", "inverse transform after forward transform is the identity", 1e-10, [&] {
      const SampledFunction ff = fourier_transform(f, true, tol);
      bat.record("fourier.round-trip", "inverse transform after forward transform is the identity",
                 residual(fourier_transform(ff, false, tol), f, nf), 1e-10);
      bat.record("fourier.square-parity", "F(F(f)) = f(-x)",
                 residual(fourier_transform(ff, true, tol), reflect(f), nf), 1e-9);
      const SampledFunction fh = fourier_transform(h, true, tol);
      bat.record("fourier.homomorphism", "F(f g) = F(f) * F(g)",
                 residual(fourier_transform(pointwise_multiply(f, h), true, tol), convolve(ff, fh, tol), nf * nh),
                 1e-8);
    });
  }
}

// -------------------------------------------------------------- hadamard

BiSampledFunction diagonal_vanishing(const BiSampledFunction& G) {
  const Grid& g = G.grid();
  BiSampledFunction F = G;
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) {
      const double u = g.node(i) - g.node(j);
      F.at(i, j) -= std::exp(-2.0 * u * u) * G.at(i, i);
    }
  return F;
}

void suite_hadamard(const LabConfig& cfg, Battery& bat) {
  const Grid g = Grid::line(cfg.L, cfg.N);
  const int d = cfg.dim;
  {
    const Matrix id = Matrix::Identity(d, d);
    const BiSampledFunction e = sample2(g, id, [](double x, double y) { return std::exp(-x * x - y * y); });
    guarded(bat, "hadamard.explicit-gaussian", "(x - y) exp(-x^2 - y^2) divided by (x - y)", 1e-8, [&] {
      bat.record("hadamard.explicit-gaussian", "(x - y) exp(-x^2 - y^2) divided by (x - y)",
                 residual(hadamard_divide(multiply_x_minus_y(e)), e, 1.0), 1e-8);
    });
    const SampledFunction odd = sample(g, id, [](double x) { return -2.0 * x * std::exp(-x * x); });
    const SampledFunction e1 = sample(g, id, [](double x) { return std::exp(-x * x); });
    guarded(bat, "hadamard.antiderivative-gaussian", "antiderivative of -2x exp(-x^2) vanishing at -L", 1e-8, [&] {
      bat.record("hadamard.antiderivative-gaussian", "antiderivative of -2x exp(-x^2) vanishing at -L",
                 residual(cumulative_integral(odd), e1, 1.0), 1e-8);
    });
  }
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    Rng rng = trial_rng(cfg, "hadamard", trial);
    const BiSampledFunction G = random_bischwartz(cfg.inputs, g, d, rng);
    const double nG = sup_norm(G);
    const BiSampledFunction F = diagonal_vanishing(G);
    guarded(bat, "hadamard.round-trip", "(x - y) hadamard_divide(F) = F on the diagonal ideal", 1e-7, [&] {
      bat.record("hadamard.round-trip", "(x - y) hadamard_divide(F) = F on the diagonal ideal",
                 residual(multiply_x_minus_y(hadamard_divide(F)), F, sup_norm(F)), 1e-7);
      bat.record("hadamard.divide-product", "hadamard_divide((x - y) G) = G",
                 residual(hadamard_divide(multiply_x_minus_y(G)), G, nG), 1e-8);
    });
    const SampledFunction f = random_schwartz(cfg.inputs, g, d, rng);
    guarded(bat, "hadamard.dual-round-trip", "cumulative_integral(f') = f - f(-L)", 1e-8, [&] {
      SampledFunction expect = f;
      const Matrix f0 = f.at(0);
      for (int i = 0; i < g.size(); ++i) expect.at(i) -= f0;
      bat.record("hadamard.dual-round-trip", "cumulative_integral(f') = f - f(-L)",
                 residual(cumulative_integral(differentiate(f, cfg.decay_tol)), expect, sup_norm(f)), 1e-8);
    });
  }
}

// ------------------------------------------------------- crossed-algebra

void degeneracy_checks(const LabConfig& cfg, Battery& bat, const Grid& g, Rng& rng) {
  const int d = cfg.dim, n = g.size();
  const Action triv = Action::trivial(d, g.group());
  const SampledFunction f = random_schwartz(cfg.inputs, g, d, rng);
  const SampledFunction h = random_schwartz(cfg.inputs, g, d, rng);
  const BiSampledFunction F = random_bischwartz(cfg.inputs, g, d, rng);
  const Matrix a = random_matrix(rng, d);
  const double nf = sup_norm(f), nh = sup_norm(h), nF = sup_norm(F);
  const Bump phi = bump_for(cfg, g);
  const std::string ref = "trivial action: twisted operation equals its untwisted counterpart";
  auto rec = [&](const std::string& id, double r) { bat.record("degenerate." + id, ref, r, 1e-12); };

  guarded(bat, "degenerate.twisted-convolve", ref, 1e-12, [&] {
    const SampledFunction plain = convolve(f, h, cfg.decay_tol);
    rec("twisted-convolve", residual(twisted_convolve(triv, f, h, path_of(cfg)), plain, nf * nh));
    rec("twisted-convolve-alt", residual(twisted_convolve_alt(triv, f, h, path_of(cfg)), plain, nf * nh));
    rec("tensor-m", residual(tensor_m(triv, single(f, h)), plain, nf * nh));
  });
  rec("op-T", residual(op_T(triv, f), f, nf));
  rec("iso-i", residual(iso_i(triv, f), f, nf));
  guarded(bat, "degenerate.d-alpha", ref, 1e-12, [&] {
    rec("d-alpha", residual(d_alpha(triv, f), differentiate(f), safe_scale(sup_norm(differentiate(f)))));
    BiSampledFunction dd = spectral::derivative(F, Axis::x) - spectral::derivative(F, Axis::y);
    rec("iota", residual(map_iota(triv, F), dd, sup_norm(dd)));
  });
  rec("module-right", residual(module_act_algebra(triv, Side::right, a, f), pointwise_multiply(f, sample(g, a, [](double) { return 1.0; })), nf * seminorm(a)));
  guarded(bat, "degenerate.pi", ref, 1e-12, [&] {
    SampledFunction plain(g, d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) plain.at(i) += g.spacing() * F.at(j, g.sub(i, j));
    rec("pi", residual(map_pi(triv, F), plain, nF));
  });
  {
    BiSampledFunction prod(g, d), rho(g, d), left(g, d), right(g, d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        prod.at(i, j) = f.at(i) * h.at(j);
        rho.at(i, j) = phi[j] * f.at(g.add(i, j));
        left.at(i, j) = a * F.at(i, j);
        right.at(i, j) = F.at(i, j) * a;
      }
    rec("iso-I1", residual(iso_I1(triv, single(f, h)), prod, nf * nh));
    rec("rho-x", residual(sect_rho(triv, Axis::x, f, phi), rho, nf));
    rec("left-algebra", residual(act_left_algebra(triv, a, F), left, seminorm(a) * nF));
    rec("right-algebra", residual(act_right_algebra(triv, F, a), right, seminorm(a) * nF));
    rec("left-algebra-identity", residual(act_left_algebra(triv, Matrix::Identity(d, d), F), F, nF));
    rec("left-crossed", residual(act_left_crossed(triv, h, F), lattice_convolution(h, F, Axis::x, true), nh * nF));
    rec("right-crossed", residual(act_right_crossed(triv, F, h), lattice_convolution(h, F, Axis::y, false), nh * nF));
  }
}

void suite_crossed(const LabConfig& cfg, Battery& bat) {
  const Grid g = session_grid(cfg);
  const int d = cfg.dim;
  const Grid small = g.group() == Group::line ? Grid::line(cfg.L, 128) : Grid::circle(128);
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    Rng rng = trial_rng(cfg, "crossed-algebra", trial);
    const Action A = cfg.action.build(g.group(), d, rng);
    const SampledFunction f = random_schwartz(cfg.inputs, g, d, rng);
    const SampledFunction h = random_schwartz(cfg.inputs, g, d, rng);
    const SampledFunction k = random_schwartz(cfg.inputs, g, d, rng);
    const double nf = sup_norm(f), nh = sup_norm(h), nk = sup_norm(k);
    const Path p = path_of(cfg);
    guarded(bat, "crossed.associativity", "(f *a g) *a h = f *a (g *a h)", 1e-8, [&] {
      bat.record("crossed.associativity", "(f *a g) *a h = f *a (g *a h)",
                 residual(twisted_convolve(A, twisted_convolve(A, f, h, p), k, p),
                          twisted_convolve(A, f, twisted_convolve(A, h, k, p), p), nf * nh * nk),
                 1e-8);
      bat.record("crossed.iso-i-homomorphism", "i(f *a g) = i(f) *'a i(g)",
                 residual(iso_i(A, twisted_convolve(A, f, h, p)),
                          twisted_convolve_alt(A, iso_i(A, f), iso_i(A, h), p), nf * nh),
                 1e-8);
    });
    bat.record("crossed.iso-i-inverse", "i^{-1}(i(f)) = f", residual(iso_i(A, iso_i(A, f), false), f, nf), 1e-12);

    // Fast shift-quadrature against the direct double loop.
    Rng orng = trial_rng(cfg, "crossed-algebra/oracle", trial);
    const Action As = cfg.action.build(small.group(), d, orng);
    const SampledFunction fs = random_schwartz(cfg.inputs, small, d, orng);
    const SampledFunction hs = random_schwartz(cfg.inputs, small, d, orng);
    const double ns = sup_norm(fs) * sup_norm(hs);
    const std::string oref = "fast shift-quadrature agrees with the direct O(N^2) quadrature (N = 128)";
    guarded(bat, "crossed.oracle-twisted", oref, 1e-12, [&] {
      bat.record("crossed.oracle-twisted", oref,
                 residual(twisted_convolve(As, fs, hs, Path::fast), twisted_convolve(As, fs, hs, Path::oracle), ns), 1e-12);
      bat.record("crossed.oracle-twisted-alt", oref,
                 residual(twisted_convolve_alt(As, fs, hs, Path::fast), twisted_convolve_alt(As, fs, hs, Path::oracle), ns),
                 1e-12);
      bat.record("crossed.oracle-convolve", oref, residual(convolve(fs, hs), convolve_direct(fs, hs), ns), 1e-12);
      if (trial < 2) {
        const BiSampledFunction Fs = random_bischwartz(cfg.inputs, small, d, orng);
        const double nb = sup_norm(Fs) * sup_norm(hs);
        bat.record("crossed.oracle-left-crossed", oref,
                   residual(act_left_crossed(As, hs, Fs, Path::fast), act_left_crossed(As, hs, Fs, Path::oracle), nb), 1e-12);
        bat.record("crossed.oracle-right-crossed", oref,
                   residual(act_right_crossed(As, Fs, hs, Path::fast), act_right_crossed(As, Fs, hs, Path::oracle), nb),
                   1e-12);
      }
    });

    degeneracy_checks(cfg, bat, g, rng);
  }
}

// ------------------------------------------------------------ operator-T

void suite_operator_t(const LabConfig& cfg, Battery& bat) {
  const Grid g = session_grid(cfg);
  const int d = cfg.dim;
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    Rng rng = trial_rng(cfg, "operator-T", trial);
    const Action A = cfg.action.build(g.group(), d, rng);
    const SampledFunction f = random_schwartz(cfg.inputs, g, d, rng);
    const SampledFunction h = random_schwartz(cfg.inputs, g, d, rng);
    const double nf = sup_norm(f), nh = sup_norm(h);
    const double inv = std::max(sup_norm(op_T(A, op_T(A, f, false), true) - f), sup_norm(op_T(A, op_T(A, f, true), false) - f));
    bat.record("operator-T.inverse", "T T^{-1} = T^{-1} T = Id", inv / nf, 1e-12);
    guarded(bat, "operator-T.eq4", "T (d/dx) T^{-1} f = f' - alpha'_0(f)", 1e-8, [&] {
      const SampledFunction composite = op_T(A, differentiate(op_T(A, f, false), cfg.decay_tol), true);
      bat.record("operator-T.eq4", "T (d/dx) T^{-1} f = f' - alpha'_0(f)",
                 residual(composite, d_alpha(A, f, cfg.decay_tol), nf), 1e-8);
      bat.record("operator-T.intertwining", "f' *a g = f *a d_alpha(g)",
                 residual(twisted_convolve(A, differentiate(f, cfg.decay_tol), h, path_of(cfg), cfg.decay_tol),
                          twisted_convolve(A, f, d_alpha(A, h, cfg.decay_tol), path_of(cfg), cfg.decay_tol),
                          nf * nh),
                 1e-8);
    });
    if (A.kind() != ActionKind::nilpotent_conjugation)
      bat.record("operator-T.isometry", "sup-seminorm of T(f) equals that of f (unitary conjugation)",
                 std::abs(seminorm_kl(op_T(A, f), 0, 0) - seminorm_kl(f, 0, 0)) / nf, 1e-10);
  }
}

// -------------------------------------------------------------- bimodule

void suite_bimodule(const LabConfig& cfg, Battery& bat) {
  const Grid g = session_grid(cfg);
  const int d = cfg.dim;
  const Bump phi = bump_for(cfg, g);
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    Rng rng = trial_rng(cfg, "bimodule", trial);
    const Action A = cfg.action.build(g.group(), d, rng);
    const Path p = path_of(cfg);
    const SampledFunction f = random_schwartz(cfg.inputs, g, d, rng);
    const SampledFunction h = random_schwartz(cfg.inputs, g, d, rng);
    const SampledFunction H = random_schwartz(cfg.inputs, g, d, rng);
    const SampledFunction K = random_schwartz(cfg.inputs, g, d, rng);
    const BiSampledFunction F = random_bischwartz(cfg.inputs, g, d, rng);
    const Matrix a = random_matrix(rng, d), b = random_matrix(rng, d);
    const double nf = sup_norm(f), nh = sup_norm(h), nH = sup_norm(H), nK = sup_norm(K), nF = sup_norm(F);
    const double na = seminorm(a), nb = seminorm(b);
    auto conv = [&](const SampledFunction& x, const SampledFunction& y) { return twisted_convolve(A, x, y, p); };
    auto lc = [&](const SampledFunction& x, const BiSampledFunction& Y) { return act_left_crossed(A, x, Y, p); };
    auto rc = [&](const BiSampledFunction& Y, const SampledFunction& x) { return act_right_crossed(A, Y, x, p); };
    auto la = [&](const Matrix& m, const BiSampledFunction& Y) { return act_left_algebra(A, m, Y); };
    auto ra = [&](const BiSampledFunction& Y, const Matrix& m) { return act_right_algebra(A, Y, m); };
    auto fa = [&](const SampledFunction& x, const Matrix& m) { return module_act_algebra(A, Side::right, m, x); };
    auto af = [&](const Matrix& m, const SampledFunction& x) { return module_act_algebra(A, Side::left, m, x); };
    auto rec = [&](const std::string& id, const std::string& ref, double r, double tol = 1e-7) {
      bat.record("bimodule." + id, ref, r, tol);
    };

    guarded(bat, "bimodule.S-alpha", "bimodule identities on S_alpha", 1e-7, [&] {
      rec("S-alpha.crossed-algebra-compat", "(H o F) o a = H o (F o a) on S_alpha",
          residual(fa(conv(H, f), a), conv(H, fa(f, a)), nH * nf * na));
      rec("S-alpha.algebra-assoc", "(a o F) o b = a o (F o b) on S_alpha",
          residual(fa(af(a, f), b), af(a, fa(f, b)), na * nf * nb), 1e-10);
      rec("S-alpha.right-action", "(F o a) o b = F o (ab) on S_alpha",
          residual(fa(fa(f, a), b), fa(f, a * b), na * nf * nb), 1e-10);
      rec("S-alpha.right-unit", "F o 1 = F on S_alpha", residual(fa(f, Matrix::Identity(d, d)), f, nf), 1e-12);
    });

    guarded(bat, "bimodule.j-m", "j and m are bimodule maps", 1e-7, [&] {
      rec("m.left-crossed", "m((H *a F) (x) G) = H *a m(F (x) G)",
          residual(tensor_m(A, single(conv(H, f), h), p), conv(H, tensor_m(A, single(f, h), p)), nH * nf * nh));
      rec("m.right-crossed", "m(F (x) (G *a K)) = m(F (x) G) *a K",
          residual(tensor_m(A, single(f, conv(h, K)), p), conv(tensor_m(A, single(f, h), p), K), nf * nh * nK));
      const BiSampledFunction jfg = iso_I1(A, tensor_j(A, single(f, h)));
      rec("j.left-crossed", "j((H *a F) (x) G) = H o j(F (x) G)",
          residual(iso_I1(A, tensor_j(A, single(conv(H, f), h))), lc(H, jfg), nH * nf * nh));
      rec("j.right-crossed", "j(F (x) (G *a K)) = j(F (x) G) o K",
          residual(iso_I1(A, tensor_j(A, single(f, conv(h, K)))), rc(jfg, K), nf * nh * nK));
    });

    guarded(bat, "bimodule.I1", "actions on S(R^2, A)_alpha agree with I1", 1e-7, [&] {
      const BiSampledFunction i1 = iso_I1(A, single(f, h));
      rec("I1.left-crossed", "I1((H *a F) (x) G) = H o I1(F (x) G)",
          residual(iso_I1(A, single(conv(H, f), h)), lc(H, i1), nH * nf * nh));
      rec("I1.right-crossed", "I1(F (x) (G *a K)) = I1(F (x) G) o K",
          residual(iso_I1(A, single(f, conv(h, K))), rc(i1, K), nf * nh * nK));
      rec("I1.left-algebra", "I1((a o F) (x) G) = a o I1(F (x) G)",
          residual(iso_I1(A, single(af(a, f), h)), la(a, i1), na * nf * nh), 1e-10);
      rec("I1.right-algebra", "I1(F (x) (G o a)) = I1(F (x) G) o a",
          residual(iso_I1(A, single(f, fa(h, a))), ra(i1, a), na * nf * nh), 1e-10);
      rec("bi.crossed-commute", "(H o F) o K = H o (F o K)", residual(rc(lc(H, F), K), lc(H, rc(F, K)), nH * nF * nK));
      rec("bi.algebra-crossed-left", "(a o F) o K = a o (F o K)", residual(rc(la(a, F), K), la(a, rc(F, K)), na * nF * nK));
      rec("bi.crossed-algebra-right", "(H o F) o a = H o (F o a)", residual(ra(lc(H, F), a), lc(H, ra(F, a)), nH * nF * na));
      rec("bi.left-crossed-assoc", "(H *a K) o F = H o (K o F)",
          residual(lc(conv(H, K), F), lc(H, lc(K, F)), nH * nK * nF));
    });

    guarded(bat, "bimodule.iota-pi", "iota and pi are bimodule maps", 1e-7, [&] {
      const BiSampledFunction iF = map_iota(A, F, cfg.decay_tol);
      const SampledFunction pF = map_pi(A, F, cfg.decay_tol);
      rec("iota.left-crossed", "iota(H o F) = H o iota(F)", residual(map_iota(A, lc(H, F)), lc(H, iF), nH * nF));
      rec("iota.right-crossed", "iota(F o K) = iota(F) o K", residual(map_iota(A, rc(F, K)), rc(iF, K), nK * nF));
      rec("iota.left-algebra", "iota(a o F) = a o iota(F)", residual(map_iota(A, la(a, F)), la(a, iF), na * nF));
      rec("iota.right-algebra", "iota(F o a) = iota(F) o a", residual(map_iota(A, ra(F, a)), ra(iF, a), na * nF));
      rec("pi.left-crossed", "pi(H o F) = H *a pi(F)", residual(map_pi(A, lc(H, F)), conv(H, pF), nH * nF));
      rec("pi.right-crossed", "pi(F o K) = pi(F) *a K", residual(map_pi(A, rc(F, K)), conv(pF, K), nK * nF));
      rec("pi.left-algebra", "pi(a o F) = a pi(F)", residual(map_pi(A, la(a, F)), af(a, pF), na * nF));
      rec("pi.right-algebra", "pi(F o a) = pi(F) o a", residual(map_pi(A, ra(F, a)), fa(pF, a), na * nF));
    });

    guarded(bat, "bimodule.rho", "rho_x, rho_y are one-sided bimodule maps", 1e-7, [&] {
      rec("rho-x.left-crossed", "rho_x(H *a f) = H o rho_x(f)",
          residual(sect_rho(A, Axis::x, conv(H, f), phi), lc(H, sect_rho(A, Axis::x, f, phi)), nH * nf));
      rec("rho-x.right-algebra", "rho_x(f o a) = rho_x(f) o a",
          residual(sect_rho(A, Axis::x, fa(f, a), phi), ra(sect_rho(A, Axis::x, f, phi), a), na * nf));
      rec("rho-y.left-algebra", "rho_y(a o f) = a o rho_y(f)",
          residual(sect_rho(A, Axis::y, af(a, f), phi), la(a, sect_rho(A, Axis::y, f, phi)), na * nf));
      rec("rho-y.right-crossed", "rho_y(f *a K) = rho_y(f) o K",
          residual(sect_rho(A, Axis::y, conv(f, K), phi), rc(sect_rho(A, Axis::y, f, phi), K), nK * nf));
    });

    guarded(bat, "bimodule.beta", "beta_x, beta_y are one-sided bimodule maps", 1e-7, [&] {
      auto beta = [&](Axis ax, const BiSampledFunction& X) { return homotopy_beta(A, ax, X, phi); };
      rec("beta-x.left-crossed", "beta_x(H o F) = H o beta_x(F)",
          residual(beta(Axis::x, lc(H, F)), lc(H, beta(Axis::x, F)), nH * nF));
      rec("beta-x.right-algebra", "beta_x(F o a) = beta_x(F) o a",
          residual(beta(Axis::x, ra(F, a)), ra(beta(Axis::x, F), a), na * nF));
      rec("beta-y.left-algebra", "beta_y(a o F) = a o beta_y(F)",
          residual(beta(Axis::y, la(a, F)), la(a, beta(Axis::y, F)), na * nF));
      rec("beta-y.right-crossed", "beta_y(F o K) = beta_y(F) o K",
          residual(beta(Axis::y, rc(F, K)), rc(beta(Axis::y, F), K), nK * nF));
    });
  }
}

// ---------------------------------------------------------------- tensor

void suite_tensor(const LabConfig& cfg, Battery& bat) {
  const Grid g = session_grid(cfg);
  const int d = cfg.dim;
  if (g.group() == Group::line) {
    const Action triv = Action::trivial(d);
    const Matrix id = Matrix::Identity(d, d);
    const SampledFunction e = sample(g, id, [](double x) { return std::exp(-x * x); });
    const SampledFunction expect = sample(g, id, [](double x) { return std::sqrt(kPi / 2.0) * std::exp(-x * x / 2.0); });
    bat.record("tensor.m-gaussian", "m(exp(-x^2) (x) exp(-x^2)) = sqrt(pi/2) exp(-x^2/2)",
               residual(tensor_m(triv, single(e, e)), expect, 1.0), 1e-8);
  }
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    Rng rng = trial_rng(cfg, "tensor", trial);
    const Action A = cfg.action.build(g.group(), d, rng);
    const Path p = path_of(cfg);
    const SampledFunction f = random_schwartz(cfg.inputs, g, d, rng);
    const SampledFunction h = random_schwartz(cfg.inputs, g, d, rng);
    const SampledFunction f2 = random_schwartz(cfg.inputs, g, d, rng);
    const SampledFunction h2 = random_schwartz(cfg.inputs, g, d, rng);
    const Matrix a = random_matrix(rng, d);
    const double scale = sup_norm(f) * sup_norm(h), s2 = sup_norm(f2) * sup_norm(h2), na = seminorm(a);
    TensorElement t;
    t.terms = {{f, h}, {f2, h2}};
    const TensorElement fa_g = single(module_act_algebra(A, Side::right, a, f), h);
    const TensorElement f_ag = single(f, module_act_algebra(A, Side::left, a, h));
    bat.record("tensor.I1-balanced", "I1((F o a) (x) G) = I1(F (x) (a o G))",
               residual(iso_I1(A, fa_g), iso_I1(A, f_ag), scale * na), 1e-10);
    bat.record("tensor.I1-bilinear", "I1 of concatenated term lists is the sum of images",
               residual(iso_I1(A, t), iso_I1(A, single(f, h)) + iso_I1(A, single(f2, h2)), scale + s2), 1e-14);
    guarded(bat, "tensor.m-balanced", "m and j are constant on balanced classes", 1e-8, [&] {
      bat.record("tensor.m-balanced", "m((F o a) (x) G) = m(F (x) (a o G))",
                 residual(tensor_m(A, fa_g, p), tensor_m(A, f_ag, p), scale * na), 1e-8);
      bat.record("tensor.j-balanced", "I1 j((F o a) (x) G) = I1 j(F (x) (a o G))",
                 residual(iso_I1(A, tensor_j(A, fa_g)), iso_I1(A, tensor_j(A, f_ag)), scale * na), 1e-8);
      bat.record("tensor.diagram-j", "I1 o j = iota o I1",
                 residual(iso_I1(A, tensor_j(A, t)), map_iota(A, iso_I1(A, t)), scale + s2), 1e-8);
      bat.record("tensor.diagram-m", "pi o I1 = m", residual(map_pi(A, iso_I1(A, t)), tensor_m(A, t, p), scale + s2), 1e-8);
    });
  }
}

// -------------------------------------------------------- exact sequence

struct SequenceTolerances {
  double mj, pi_iota, pi_rho, beta_iota, homotopy;
};

void sequence_checks(const LabConfig& cfg, Battery& bat, const Action& A, const Grid& g, Rng& rng,
                     const SequenceTolerances& tol, const std::string& tag) {
  const int d = A.dim();
  const Bump phi = bump_for(cfg, g);
  const Path p = path_of(cfg);
  TensorElement t;
  double tscale = 0.0;
  for (int k = 0; k < 2; ++k) {
    SampledFunction f = random_schwartz(cfg.inputs, g, d, rng);
    SampledFunction h = random_schwartz(cfg.inputs, g, d, rng);
    tscale += sup_norm(f) * sup_norm(h);
    t.terms.emplace_back(std::move(f), std::move(h));
  }
  const SampledFunction f = random_schwartz(cfg.inputs, g, d, rng);
  const BiSampledFunction F = random_bischwartz(cfg.inputs, g, d, rng);
  const double nf = sup_norm(f), nF = sup_norm(F);
  const bool circle = g.group() == Group::circle;
  auto id = [&](const std::string& s) { return "sequence." + s + tag; };

  guarded(bat, id("m-j"), "m o j = 0", tol.mj, [&] {
    bat.record(id("m-j"), "m o j = 0", sup_norm(tensor_m(A, tensor_j(A, t, cfg.decay_tol), p, cfg.decay_tol)) / tscale, tol.mj);
  });
  guarded(bat, id("pi-iota"), "pi o iota = 0 (exactness at the middle term)", tol.pi_iota, [&] {
    bat.record(id("pi-iota"), "pi o iota = 0 (exactness at the middle term)",
               sup_norm(map_pi(A, map_iota(A, F, cfg.decay_tol), cfg.decay_tol)) / nF, tol.pi_iota);
  });
  const SampledFunction pF = map_pi(A, F, cfg.decay_tol);
  for (Axis ax : {Axis::x, Axis::y}) {
    const std::string a = ax == Axis::x ? "x" : "y";
    guarded(bat, id("pi-rho-" + a), "pi o rho = Id", tol.pi_rho, [&] {
      bat.record(id("pi-rho-" + a), "pi o rho_" + a + " = Id",
                 residual(map_pi(A, sect_rho(A, ax, f, phi), cfg.decay_tol), f, nf), tol.pi_rho);
    });
    guarded(bat, id("beta-iota-" + a), "beta o iota = Id", tol.beta_iota, [&] {
      bat.record(id("beta-iota-" + a), "beta_" + a + " o iota = Id",
                 residual(homotopy_beta(A, ax, map_iota(A, F, cfg.decay_tol), phi, kDefaultMeanZeroTol, cfg.decay_tol), F, nF), tol.beta_iota);
    });
    guarded(bat, id("homotopy-" + a), "iota o beta + rho o pi = Id", tol.homotopy, [&] {
      const BiSampledFunction lhs = map_iota(A, homotopy_beta(A, ax, F, phi, kDefaultMeanZeroTol, cfg.decay_tol), cfg.decay_tol) + sect_rho(A, ax, pF, phi);
      bat.record(id("homotopy-" + a), "iota o beta_" + a + " + rho_" + a + " o pi = Id", residual(lhs, F, nF),
                 tol.homotopy);
    });
    if (circle) {
      // On the circle iota kills alpha_{-x}(G(x + y)); beta o iota can only be
      // the identity on ker pi.
      guarded(bat, id("beta-iota-ker-pi-" + a), "beta o iota = Id on ker pi", tol.beta_iota, [&] {
        const BiSampledFunction F0 = F - sect_rho(A, ax, pF, phi);
        bat.record(id("beta-iota-ker-pi-" + a), "beta_" + a + " o iota = Id on ker pi (circle)",
                   residual(homotopy_beta(A, ax, map_iota(A, F0, cfg.decay_tol), phi, kDefaultMeanZeroTol, cfg.decay_tol), F0, nF), tol.beta_iota);
      });
    }
  }
}

void suite_sequence_line(const LabConfig& cfg, Battery& bat) {
  const Grid g = Grid::line(cfg.L, cfg.N);
  const SequenceTolerances tol{1e-8, 1e-8, 1e-7, 1e-6, 1e-6};
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    Rng rng = trial_rng(cfg, "exact-sequence-line", trial);
    const Action A = cfg.action.build(Group::line, cfg.dim, rng);
    sequence_checks(cfg, bat, A, g, rng, tol, "");
    if (trial < 2) {
      // The other two action kinds, on a couple of trials.
      const Action nil = random_action(ActionKind::nilpotent_conjugation, Group::line, cfg.dim, rng);
      sequence_checks(cfg, bat, nil, g, rng, tol, "/nilpotent");
      sequence_checks(cfg, bat, Action::trivial(cfg.dim), g, rng, tol, "/trivial");
    }
  }
}

void suite_sequence_circle(const LabConfig& cfg, Battery& bat) {
  const Grid g = Grid::circle(cfg.circle_N);
  const SequenceTolerances tol{1e-9, 1e-9, 1e-9, 1e-9, 1e-9};
  for (int trial = 0; trial < cfg.n_trials; ++trial) {
    Rng rng = trial_rng(cfg, "exact-sequence-circle", trial);
    const Action A = cfg.circle_action.build(Group::circle, cfg.dim, rng);
    sequence_checks(cfg, bat, A, g, rng, tol, "");
    if (trial < 2) sequence_checks(cfg, bat, Action::trivial(cfg.dim, Group::circle), g, rng, tol, "/trivial");
  }
}

// ---------------------------------------------------------------- scalar

void suite_scalar(const LabConfig& cfg, Battery& bat) {
  for (const char* variant : {"pointwise", "convolution", "fourier"})
    scalar_sequence_check(variant, cfg, bat.report());
}

nlohmann::json action_summary(std::string_view name, const LabConfig& cfg) {
  if (name == "exact-sequence-circle") return cfg.circle_action.to_json();
  if (name == "scalar-sequences" || name == "fourier" || name == "hadamard")
    return {{"kind", "trivial"}, {"generator", nullptr}};
  nlohmann::json j = cfg.action.to_json();
  if (name == "action") j["circle_action"] = cfg.circle_action.to_json();
  return j;
}

Grid suite_grid(std::string_view name, const LabConfig& cfg) {
  if (name == "exact-sequence-circle") return Grid::circle(cfg.circle_N);
  if (name == "exact-sequence-line" || name == "fourier" || name == "hadamard" || name == "scalar-sequences")
    return Grid::line(cfg.L, cfg.N);
  return session_grid(cfg);
}

}  // namespace

VerificationReport run_suite(std::string_view name, const LabConfig& cfg) {
  if (!is_suite(name)) throw UsageError("unknown suite '" + std::string(name) + "'");
  VerificationReport report;
  report.suite = std::string(name);
  report.seed = cfg.seed;
  report.n_trials = cfg.n_trials;
  report.grid = grid_json(suite_grid(name, cfg));
  report.action = action_summary(name, cfg);
  Battery bat(cfg, report);
  const auto start = std::chrono::steady_clock::now();
  if (name == "action") suite_action(cfg, bat);
  else if (name == "fourier") suite_fourier(cfg, bat);
  else if (name == "hadamard") suite_hadamard(cfg, bat);
  else if (name == "crossed-algebra") suite_crossed(cfg, bat);
  else if (name == "operator-T") suite_operator_t(cfg, bat);
  else if (name == "bimodule") suite_bimodule(cfg, bat);
  else if (name == "tensor") suite_tensor(cfg, bat);
  else if (name == "exact-sequence-line") suite_sequence_line(cfg, bat);
  else if (name == "exact-sequence-circle") suite_sequence_circle(cfg, bat);
  else if (name == "scalar-sequences") suite_scalar(cfg, bat);
  report.timing_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string ConvergenceTable::to_csv() const {
  std::ostringstream out;
  out.precision(6);
  out << std::scientific;
  out << "N,worst_residual,ratio\n";
  for (const auto& r : rows) {
    out << r.N << ',' << r.worst_residual << ',';
    if (r.ratio) out << *r.ratio;
    out << '\n';
  }
  return out.str();
}

ConvergenceTable convergence_study(std::string_view suite, const std::vector<int>& Ns, const LabConfig& cfg) {
  if (!is_suite(suite)) throw UsageError("unknown suite '" + std::string(suite) + "'");
  if (Ns.empty()) throw UsageError("convergence needs at least one N");
  for (std::size_t k = 1; k < Ns.size(); ++k)
    if (Ns[k] <= Ns[k - 1]) throw UsageError("N list must be ascending");
  ConvergenceTable table;
  table.suite = std::string(suite);
  for (int n : Ns) {
    LabConfig c = cfg;
    c.N = n;
    if (suite == "exact-sequence-circle") c.circle_N = n;
    c.inputs.sigma = cfg.convergence_sigma;
    c.decay_tol = std::max(cfg.decay_tol, kConvergenceDecayTol);
    try {
      c.validate();
    } catch (const UsageError& e) {
      throw UsageError(std::string("convergence at N = ") + std::to_string(n) + ": " + e.what());
    }
    const VerificationReport r = run_suite(suite, c);
    ConvergenceRow row{n, r.worst_residual(), std::nullopt};
    if (!table.rows.empty()) {
      const double prev = table.rows.back().worst_residual;
      row.ratio = prev > 0.0 ? row.worst_residual / prev : 0.0;
      const bool at_floor = prev <= kQuadratureFloor && row.worst_residual <= kQuadratureFloor;
      if (!(*row.ratio <= kConvergenceRatio) && !at_floor) {
        table.pass = false;
        table.flags.push_back("N = " + std::to_string(n) + ": ratio " + std::to_string(*row.ratio) + " > 0.1");
      }
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace schwartzlab
