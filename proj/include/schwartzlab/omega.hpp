#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "schwartzlab/crossed.hpp"

namespace schwartzlab {

/// Finite sum of F_i (x) G_i over A. Compared only through iso_I1.
struct TensorElement {
  std::vector<std::pair<SampledFunction, SampledFunction>> terms;

  TensorElement& operator+=(const TensorElement& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
  }
};

enum class BumpKind { gaussian, compact, von_mises };
std::string_view to_string(BumpKind k) noexcept;
BumpKind bump_kind_from_string(std::string_view name);

/// Scalar profile phi with unit mass under the grid quadrature.
class Bump {
 public:
  /// gaussian: exp(-t^2 / (2 w^2)), w = 0.25 (line)
  /// compact: exp(-1 / (1 - t^2)) on (-1, 1) (line); on the circle t is
  ///          twice the distance to 0
  /// von_mises: exp(kappa (cos 2 pi t - 1)), kappa = 4 (circle)
  static Bump make(BumpKind kind, const Grid& grid);
  /// gaussian on the line, von_mises on the circle.
  static Bump standard(const Grid& grid);

  BumpKind kind() const noexcept { return kind_; }
  const Grid& grid() const noexcept { return grid_; }
  double operator[](int i) const noexcept { return values_[i]; }
  /// h * sum phi, exactly 1 up to rounding.
  double mass() const;

 private:
  Bump(BumpKind kind, Grid grid, std::vector<double> values)
      : kind_(kind), grid_(grid), values_(std::move(values)) {}
  BumpKind kind_;
  Grid grid_;
  std::vector<double> values_;
};

/// I1(F (x) G)(x, y) = alpha_{-x}(F(x)) G(y), summed over terms.
BiSampledFunction iso_I1(const Action& action, const TensorElement& t);
/// sum_i F_i *_a G_i.
SampledFunction tensor_m(const Action& action, const TensorElement& t, Path path = Path::fast,
                         double decay_tol = kDefaultDecayTol);
/// (F, G) -> (F', G) + (-F, d_alpha G).
TensorElement tensor_j(const Action& action, const TensorElement& t,
                       double decay_tol = kDefaultDecayTol);

/// (d/dx - d/dy) F + alpha'_0(F).
BiSampledFunction map_iota(const Action& action, const BiSampledFunction& F,
                           double decay_tol = kDefaultDecayTol);
/// pi(F)(x) = int alpha_y(F(y, x - y)) dy.
SampledFunction map_pi(const Action& action, const BiSampledFunction& F,
                       double decay_tol = kDefaultDecayTol);

/// x: phi(y) alpha_{-x}(f(x + y));  y: phi(x) alpha_{-x}(f(x + y)).
BiSampledFunction sect_rho(const Action& action, Axis axis, const SampledFunction& f,
                           const Bump& phi);

/// beta(F)(x, y) = alpha_{-x}(K(x, x + y)) with
/// K(tau, s) = int_{-inf}^{tau} [alpha_t(F(t, s - t)) - psi(t, s) pi(F)(s)] dt,
/// psi = phi(s - t) for axis x and phi(t) for axis y. Each anti-diagonal
/// integrand must have vanishing mass (MeanNotZeroError otherwise). On the
/// circle the antiderivative is the mean-free periodic one.
BiSampledFunction homotopy_beta(const Action& action, Axis axis, const BiSampledFunction& F,
                                const Bump& phi, double mean_zero_tol = kDefaultMeanZeroTol,
                                double decay_tol = kDefaultDecayTol);

}  // namespace schwartzlab
