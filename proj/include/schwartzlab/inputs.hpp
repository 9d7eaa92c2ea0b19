#pragma once

#include <random>

#include "schwartzlab/algebra.hpp"
#include "schwartzlab/field.hpp"

namespace schwartzlab {

using Rng = std::mt19937_64;

/// Parameters of the randomized smooth test set.
struct TestInputSpec {
  unsigned long long seed = 42;
  /// Gaussian envelope width (line).
  double sigma = 0.5;
  /// Polynomial degree cap, <= 6. On the circle: trigonometric degree.
  int degree = 2;
  /// Bound on the operator norm of each matrix coefficient.
  double coef_norm = 1.0;
  /// Centers satisfy |mu| <= center_fraction * L, at most 1/4.
  double center_fraction = 0.125;
  /// Number of envelope terms, <= 3.
  int terms = 3;
  /// von Mises concentration of circle envelopes.
  double kappa = 4.0;

  /// Throws InputError unless degree <= 6, terms in [1, 3], sigma <= L/5 and
  /// center_fraction <= 1/4.
  void validate(double half_width) const;
};

/// Complex matrix with Gaussian entries scaled to operator norm `norm`.
Matrix random_matrix(Rng& rng, int dim, double norm = 1.0);
/// Hermitian with operator norm uniform in [lo, hi].
Matrix random_hermitian(Rng& rng, int dim, double lo = 0.5, double hi = 1.0);

/// sum_j p_j(x) exp(-(x - mu_j)^2 / 2 sigma^2) a_j on the line; on the circle
/// the envelope is exp(kappa (cos 2 pi (x - mu_j) - 1)) and p_j a
/// trigonometric polynomial.
SampledFunction random_schwartz(const TestInputSpec& spec, const Grid& grid, int dim, Rng& rng);
/// Deterministic in spec.seed.
SampledFunction random_schwartz(const TestInputSpec& spec, const Grid& grid, int dim);

/// Two separable products f_k(x) g_k(y) plus one correlated envelope term.
BiSampledFunction random_bischwartz(const TestInputSpec& spec, const Grid& grid, int dim, Rng& rng);

/// Random admissible action of the given kind for the group:
///   unitary line: Hermitian H with ||H|| in [0.5, 1]
///   unitary circle: V diag(2 pi m) V^*, m in {-1, 0, 1} not all equal
///   nilpotent: strictly upper triangular, norm 1
Action random_action(ActionKind kind, Group group, int dim, Rng& rng);

}  // namespace schwartzlab
