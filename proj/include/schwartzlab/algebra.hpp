#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "schwartzlab/types.hpp"

namespace schwartzlab {

enum class ActionKind { trivial, unitary_conjugation, nilpotent_conjugation };

std::string_view to_string(ActionKind k) noexcept;
ActionKind action_kind_from_string(std::string_view name);

/// Operator norm (largest singular value). Submultiplicative on M_n(C).
double seminorm(const Matrix& a);

/// Largest entrywise modulus; used for the exact-zero style checks.
double max_abs(const Matrix& a);

/// Pair of mutually inverse matrices implementing alpha_x = Ad(forward).
struct Propagator {
  Matrix forward;
  Matrix inverse;
};

/// One summand of the separable form alpha_x(b) = sum_r w_r(x) L_r b R_r,
/// with w_r(x) = coefficient * x^power * exp(i * frequency * x).
struct SeparableTerm {
  cplx coefficient{1.0};
  int power = 0;
  double frequency = 0.0;
  Matrix left;
  Matrix right;

  cplx weight(double x) const;
};

/// A one-parameter automorphism group of M_n(C) given by conjugation with
/// exp(x G). G is i*H for unitary conjugation and the nilpotent N otherwise.
class Action {
 public:
  static Action trivial(int dim, Group group = Group::line);
  /// Throws InputError unless `hermitian` is Hermitian to 1e-12 entrywise and,
  /// on the circle, alpha_1 = id (eigenvalue gaps in 2*pi*Z).
  static Action unitary(Matrix hermitian, Group group = Group::line);
  /// Throws InputError unless nilpotent^dim == 0 exactly. Line only.
  static Action nilpotent(Matrix nilpotent, Group group = Group::line);

  ActionKind kind() const noexcept { return kind_; }
  Group group() const noexcept { return group_; }
  int dim() const noexcept { return dim_; }
  /// H for unitary conjugation, N for nilpotent conjugation, zero for trivial.
  const Matrix& generator() const noexcept { return generator_; }
  /// The matrix G with alpha_x(a) = exp(xG) a exp(-xG).
  const Matrix& infinitesimal() const noexcept { return infinitesimal_; }

  /// exp(xG) and exp(-xG): Padé scaling-and-squaring for unitary conjugation,
  /// the finite Taylor sum for nilpotent conjugation.
  Propagator propagator(double x) const;

  /// alpha'_0(a) = [G, a].
  Matrix derivation(const Matrix& a) const;

  const std::vector<SeparableTerm>& separable_terms() const noexcept { return terms_; }

  /// Same action with a different group label (validated).
  Action on(Group group) const;

 private:
  Action(ActionKind kind, Group group, Matrix generator);
  void build_terms();

  ActionKind kind_;
  Group group_;
  int dim_;
  Matrix generator_;
  Matrix infinitesimal_;
  std::vector<SeparableTerm> terms_;
};

/// alpha_x(a). act(action, 0, a) returns a unchanged.
Matrix act(const Action& action, double x, const Matrix& a);

/// The k-th derivative of x -> alpha_x(a) at 0, i.e. ad_G^k(a). k <= 12.
Matrix act_generator_power(const Action& action, int k, const Matrix& a);

inline constexpr int kMaxGeneratorPower = 12;

/// Certified growth data for an action: ||alpha_x(a)|| <= |p(x)| ||a|| and
/// ||alpha_0^(k)(a)|| <= C_k ||a||.
struct BoundCertificate {
  /// Coefficients of p in increasing degree (evaluate at |x|).
  std::vector<double> polynomial;
  /// C_k for k = 0..kMaxGeneratorPower; C_0 = 1.
  std::vector<double> derivative_constants;
  /// sup over sampled x and trials of ||alpha_x(a)|| / ||a||.
  double measured_growth = 0.0;
  /// sup over sampled x of measured ratio / |p(x)|; at most 1 when certified.
  double worst_growth_ratio = 0.0;
  /// sup over k >= 1 of measured ||alpha_0^(k)(a)|| / (C_k ||a||).
  double worst_derivative_ratio = 0.0;

  double bound_at(double x) const;
};

/// Samples random unit-norm a and checks both bounds at every x in xs.
/// Throws VerificationFailure on violation, InputError on empty xs.
BoundCertificate verify_tempered_bounds(const Action& action, std::span<const double> xs,
                                        int trials, unsigned long long seed = 42);

}  // namespace schwartzlab
