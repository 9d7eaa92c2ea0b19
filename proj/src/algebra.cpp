#include "schwartzlab/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "schwartzlab/errors.hpp"

namespace schwartzlab {

std::string_view to_string(Group g) noexcept {
  return g == Group::line ? "line" : "circle";
}

Group group_from_string(std::string_view name) {
  if (name == "line") return Group::line;
  if (name == "circle") return Group::circle;
  throw InputError("unknown group '" + std::string(name) + "' (expected line|circle)");
}

std::string_view to_string(ActionKind k) noexcept {
  switch (k) {
    case ActionKind::trivial: return "trivial";
    case ActionKind::unitary_conjugation: return "unitary-conjugation";
    case ActionKind::nilpotent_conjugation: return "nilpotent-conjugation";
  }
  return "?";
}

ActionKind action_kind_from_string(std::string_view name) {
  if (name == "trivial") return ActionKind::trivial;
  if (name == "unitary-conjugation") return ActionKind::unitary_conjugation;
  if (name == "nilpotent-conjugation") return ActionKind::nilpotent_conjugation;
  throw InputError("unknown action kind '" + std::string(name) + "'");
}

double seminorm(const Matrix& a) {
  const auto n = a.rows();
  if (n == 0) return 0.0;
  if (n == 1) return std::abs(a(0, 0));
  if (n == 2) {
    // Largest eigenvalue of the Hermitian 2x2 matrix a^* a in closed form.
    const double p = std::norm(a(0, 0)) + std::norm(a(1, 0));
    const double r = std::norm(a(0, 1)) + std::norm(a(1, 1));
    const cplx q = std::conj(a(0, 0)) * a(0, 1) + std::conj(a(1, 0)) * a(1, 1);
    const double half_gap = 0.5 * (p - r);
    const double lambda = 0.5 * (p + r) + std::sqrt(half_gap * half_gap + std::norm(q));
    return std::sqrt(std::max(lambda, 0.0));
  }
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

cplx SeparableTerm::weight(double x) const {
  cplx w = coefficient;
  if (power > 0) w *= std::pow(x, power);
  if (frequency != 0.0) w *= std::polar(1.0, frequency * x);
  return w;
}

namespace {

bool all_finite(const Matrix& m) {
  return m.allFinite();
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

Action::Action(ActionKind kind, Group group, Matrix generator)
    : kind_(kind), group_(group), dim_(static_cast<int>(generator.rows())),
      generator_(std::move(generator)) {
  switch (kind_) {
    case ActionKind::trivial:
      infinitesimal_ = Matrix::Zero(dim_, dim_);
      break;
    case ActionKind::unitary_conjugation:
      infinitesimal_ = cplx(0.0, 1.0) * generator_;
      break;
    case ActionKind::nilpotent_conjugation:
      infinitesimal_ = generator_;
      break;
  }
  build_terms();
}

Action Action::trivial(int dim, Group group) {
  if (dim <= 0) throw InputError("algebra dimension must be positive");
  return Action(ActionKind::trivial, group, Matrix::Zero(dim, dim));
}

Action Action::unitary(Matrix hermitian, Group group) {
  if (hermitian.rows() == 0 || hermitian.rows() != hermitian.cols())
    throw StructuralError("generator must be a non-empty square matrix");
  if (!all_finite(hermitian)) throw InputError("generator has non-finite entries");
  if (max_abs(hermitian - hermitian.adjoint()) > 1e-12)
    throw InputError("unitary-conjugation generator is not Hermitian (tolerance 1e-12)");
  Matrix h = 0.5 * (hermitian + hermitian.adjoint());
  if (group == Group::circle) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
    const auto& ev = eig.eigenvalues();
    const double two_pi = 2.0 * std::numbers::pi;
    for (Eigen::Index k = 1; k < ev.size(); ++k) {
      const double gap = (ev(k) - ev(0)) / two_pi;
      if (std::abs(gap - std::round(gap)) > 1e-9)
        throw InputError("circle action requires eigenvalue gaps of H in 2*pi*Z");
    }
  }
  return Action(ActionKind::unitary_conjugation, group, std::move(h));
}

Action Action::nilpotent(Matrix nilpotent, Group group) {
  if (nilpotent.rows() == 0 || nilpotent.rows() != nilpotent.cols())
    throw StructuralError("generator must be a non-empty square matrix");
  if (!all_finite(nilpotent)) throw InputError("generator has non-finite entries");
  Matrix power = Matrix::Identity(nilpotent.rows(), nilpotent.cols());
  for (Eigen::Index k = 0; k < nilpotent.rows(); ++k) power = power * nilpotent;
  if (!(power.array() == cplx(0.0)).all())
    throw InputError("nilpotent-conjugation generator must satisfy N^dim = 0 exactly");
  if (group == Group::circle && !(nilpotent.array() == cplx(0.0)).all())
    throw InputError("nilpotent conjugation is not periodic; not admissible on the circle");
  return Action(ActionKind::nilpotent_conjugation, group, std::move(nilpotent));
}

Action Action::on(Group group) const {
  switch (kind_) {
    case ActionKind::trivial: return trivial(dim_, group);
    case ActionKind::unitary_conjugation: return unitary(generator_, group);
    case ActionKind::nilpotent_conjugation: return nilpotent(generator_, group);
  }
  return *this;
}

void Action::build_terms() {
  terms_.clear();
  const Matrix id = Matrix::Identity(dim_, dim_);
  switch (kind_) {
    case ActionKind::trivial:
      terms_.push_back({cplx(1.0), 0, 0.0, id, id});
      break;
    case ActionKind::unitary_conjugation: {
      // alpha_x(b) = sum_{k,l} e^{i(l_k - l_l)x} P_k b P_l with spectral projectors P.
      Eigen::SelfAdjointEigenSolver<Matrix> eig(generator_);
      const Matrix& v = eig.eigenvectors();
      std::vector<Matrix> projectors;
      for (int k = 0; k < dim_; ++k) projectors.push_back(v.col(k) * v.col(k).adjoint());
      for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l)
          terms_.push_back({cplx(1.0), 0, eig.eigenvalues()(k) - eig.eigenvalues()(l),
                            projectors[k], projectors[l]});
      break;
    }
    case ActionKind::nilpotent_conjugation: {
      // e^{xN} b e^{-xN} = sum_{p,q} x^{p+q}/(p! q!) N^p b (-N)^q.
      std::vector<Matrix> pos{id}, neg{id};
      for (int p = 1; p < dim_; ++p) {
        pos.push_back(pos.back() * generator_);
        neg.push_back(-neg.back() * generator_);
      }
      for (int p = 0; p < dim_; ++p)
        for (int q = 0; q < dim_; ++q) {
          if (max_abs(pos[p]) == 0.0 || max_abs(neg[q]) == 0.0) continue;
          terms_.push_back({cplx(1.0 / (factorial(p) * factorial(q))), p + q, 0.0, pos[p], neg[q]});
        }
      break;
    }
  }
}

Propagator Action::propagator(double x) const {
  if (!std::isfinite(x)) throw InputError("group parameter must be finite");
  const Matrix id = Matrix::Identity(dim_, dim_);
  switch (kind_) {
    case ActionKind::trivial:
      return {id, id};
    case ActionKind::unitary_conjugation: {
      Matrix forward = (x * infinitesimal_).exp();
      Matrix inverse = forward.adjoint();
      return {std::move(forward), std::move(inverse)};
    }
    case ActionKind::nilpotent_conjugation: {
      Matrix forward = id, inverse = id, term = id, neg_term = id;
      for (int k = 1; k < dim_; ++k) {
        term = term * (x * infinitesimal_) / static_cast<double>(k);
        neg_term = neg_term * (-x * infinitesimal_) / static_cast<double>(k);
        forward += term;
        inverse += neg_term;
      }
      return {std::move(forward), std::move(inverse)};
    }
  }
  return {id, id};
}

Matrix Action::derivation(const Matrix& a) const {
  if (a.rows() != dim_ || a.cols() != dim_) throw StructuralError("dimension mismatch in derivation");
  if (kind_ == ActionKind::trivial) return Matrix::Zero(dim_, dim_);
  return infinitesimal_ * a - a * infinitesimal_;
}

Matrix act(const Action& action, double x, const Matrix& a) {
  if (a.rows() != action.dim() || a.cols() != action.dim())
    throw StructuralError("algebra element dimension does not match the action");
  if (!std::isfinite(x)) throw InputError("group parameter must be finite");
  if (action.kind() == ActionKind::trivial || x == 0.0) return a;
  const Propagator u = action.propagator(x);
  return u.forward * a * u.inverse;
}

Matrix act_generator_power(const Action& action, int k, const Matrix& a) {
  if (k < 0 || k > kMaxGeneratorPower)
    throw InputError("generator power must be in [0, " + std::to_string(kMaxGeneratorPower) + "]");
  if (a.rows() != action.dim() || a.cols() != action.dim())
    throw StructuralError("algebra element dimension does not match the action");
  Matrix out = a;
  for (int i = 0; i < k; ++i) out = action.derivation(out);
  return out;
}

double BoundCertificate::bound_at(double x) const {
  double value = 0.0, power = 1.0;
  for (double c : polynomial) {
    value += c * power;
    power *= std::abs(x);
  }
  return value;
}

BoundCertificate verify_tempered_bounds(const Action& action, std::span<const double> xs,
                                        int trials, unsigned long long seed) {
  if (xs.empty()) throw InputError("verify_tempered_bounds needs at least one sample point");
  if (trials <= 0) throw InputError("trials must be positive");
  const int n = action.dim();
  const double g_norm = seminorm(action.infinitesimal());

  BoundCertificate cert;
  switch (action.kind()) {
    case ActionKind::trivial:
    case ActionKind::unitary_conjugation:
      cert.polynomial = {1.0};
      break;
    case ActionKind::nilpotent_conjugation: {
      // ||e^{+-xN}|| <= q(|x|) = sum_{p<n} (|x| ||N||)^p / p!, and p = q^2.
      std::vector<double> q(n);
      double f = 1.0;
      for (int p = 0; p < n; ++p) {
        if (p > 0) f *= p;
        q[p] = std::pow(g_norm, p) / f;
      }
      cert.polynomial.assign(2 * n - 1, 0.0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cert.polynomial[i + j] += q[i] * q[j];
      break;
    }
  }
  cert.derivative_constants.resize(kMaxGeneratorPower + 1);
  for (int k = 0; k <= kMaxGeneratorPower; ++k)
    cert.derivative_constants[k] = std::pow(2.0 * g_norm, k);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double worst_at = 0.0;
  for (int t = 0; t < trials; ++t) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = cplx(normal(rng), normal(rng));
    a /= seminorm(a);
    for (double x : xs) {
      const double ratio = seminorm(act(action, x, a));
      cert.measured_growth = std::max(cert.measured_growth, ratio);
      const double rel = ratio / cert.bound_at(x);
      if (rel > cert.worst_growth_ratio) {
        cert.worst_growth_ratio = rel;
        worst_at = x;
      }
    }
    Matrix d = a;
    for (int k = 1; k <= kMaxGeneratorPower; ++k) {
      d = action.derivation(d);
      const double c = cert.derivative_constants[k];
      const double measured = seminorm(d);
      const double rel = c > 0.0 ? measured / c : (measured > 0.0 ? INFINITY : 0.0);
      cert.worst_derivative_ratio = std::max(cert.worst_derivative_ratio, rel);
    }
  }
  constexpr double slack = 1.0 + 1e-12;
  if (cert.worst_growth_ratio > slack)
    throw VerificationFailure("growth bound ||alpha_x(a)|| <= |p(x)| ||a|| violated",
                              cert.worst_growth_ratio, worst_at);
  if (cert.worst_derivative_ratio > slack)
    throw VerificationFailure("derivative bound ||alpha_0^(k)(a)|| <= C_k ||a|| violated",
                              cert.worst_derivative_ratio, 0.0);
  return cert;
}

}  // namespace schwartzlab
