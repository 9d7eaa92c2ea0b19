#pragma once

#include "schwartzlab/field.hpp"
#include "schwartzlab/spectral.hpp"

namespace schwartzlab {

using spectral::Axis;

inline constexpr double kDefaultDecayTol = 1e-10;
inline constexpr double kDefaultMeanZeroTol = 1e-8;
inline constexpr double kDefaultDiagTol = 1e-8;

/// Line grids only (no-op on the circle): the 4 outermost nodes must be
/// below tol * max node norm. Throws DomainTruncationError.
void check_decay(const SampledFunction& f, double tol = kDefaultDecayTol);
/// Same on the two outermost rows and columns of each edge.
void check_decay(const BiSampledFunction& f, double tol = kDefaultDecayTol);
/// Line: nodes with |x + y| >= L must be negligible, otherwise the
/// anti-diagonal x + y wraps around the period. Throws DomainTruncationError.
void check_antidiagonal_support(const BiSampledFunction& f, double tol = kDefaultDecayTol);

SampledFunction differentiate(const SampledFunction& f, double decay_tol = kDefaultDecayTol);
BiSampledFunction differentiate(const BiSampledFunction& f, Axis axis,
                                double decay_tol = kDefaultDecayTol);

/// h * sum of node values (h = 1/N on the circle).
Matrix integrate(const SampledFunction& f);

/// Line: g with g' = f and g(-L) = 0; spectral antiderivative of f - mean plus
/// mean * (x + L). Circle: the mean-free periodic antiderivative.
/// Requires |integral f| <= tol * integral |f|, else MeanNotZeroError.
SampledFunction cumulative_integral(const SampledFunction& f,
                                    double mean_zero_tol = kDefaultMeanZeroTol);

/// Raw version on `howmany` lines of length n (see spectral::dft for layout);
/// no mass check.
void antiderivative_lines(const Grid& g, cplx* base, int howmany, int stride, int dist);

/// max_i ||x_i^l D^k f(x_i)||; l is ignored on the circle. k, l <= 8.
double seminorm_kl(const SampledFunction& f, int k, int l);

/// Continuous transform with kernel exp(-2 pi i x xi) (forward) sampled on the
/// session nodes by direct quadrature. Line only. Throws GridMismatchError if
/// the result does not decay inside [-L, L).
SampledFunction fourier_transform(const SampledFunction& f, bool forward = true,
                                  double decay_tol = kDefaultDecayTol);
/// Transform in both variables.
BiSampledFunction fourier_transform(const BiSampledFunction& f, bool forward = true,
                                    double decay_tol = kDefaultDecayTol);

/// f(-x) on the lattice.
SampledFunction reflect(const SampledFunction& f);

SampledFunction pointwise_multiply(const SampledFunction& f, const SampledFunction& g);

/// h * sum_j f(x_j) g(x_i - x_j) with periodic indexing (1/N on the circle).
/// Line: throws DomainTruncationError if the result is not decayed at the edges.
SampledFunction convolve(const SampledFunction& f, const SampledFunction& g,
                         double decay_tol = kDefaultDecayTol);
/// Same quadrature by a direct double loop.
SampledFunction convolve_direct(const SampledFunction& f, const SampledFunction& g);

/// (x - y) F(x, y) with actual coordinates.
BiSampledFunction multiply_x_minus_y(const BiSampledFunction& f);

/// g with (x - y) g = F. Diagonal by (d/dx - d/dy) F / 2. Line only.
/// Throws NotInIdealError if F does not vanish on the diagonal.
BiSampledFunction hadamard_divide(const BiSampledFunction& f, double diag_tol = kDefaultDiagTol);

/// Shift helpers for convolution output on the lattice.
SampledFunction lattice_convolution(const SampledFunction& f, const SampledFunction& g);

}  // namespace schwartzlab
