#pragma once

#include "schwartzlab/algebra.hpp"
#include "schwartzlab/schwartz.hpp"

namespace schwartzlab {

/// Elements of the smooth crossed product are sampled functions read together
/// with an Action; every operation below takes the action explicitly and checks
/// that its group matches the grid.

/// fast: FFT shift-quadrature on the separable form of the action.
/// oracle: the defining double loop, O(N^2) in 1-D and O(N^3) in 2-D.
enum class Path { fast, oracle };

/// exp(+-x_i G) at every node, as contiguous dim x dim blocks.
struct NodePropagators {
  SampledFunction forward;
  SampledFunction inverse;
};
NodePropagators node_propagators(const Action& action, const Grid& grid);

void require_compatible(const Action& action, const Grid& grid, int dim);

/// (f *_a g)(x) = int f(y) alpha_y(g(x - y)) dy.
SampledFunction twisted_convolve(const Action& action, const SampledFunction& f,
                                 const SampledFunction& g, Path path = Path::fast,
                                 double decay_tol = kDefaultDecayTol);
/// (f *'_a g)(x) = int alpha_{-y}(f(x - y)) g(y) dy.
SampledFunction twisted_convolve_alt(const Action& action, const SampledFunction& f,
                                     const SampledFunction& g, Path path = Path::fast,
                                     double decay_tol = kDefaultDecayTol);

/// forward: alpha_x(f(x)); inverse: alpha_{-x}(f(x)).
SampledFunction op_T(const Action& action, const SampledFunction& f, bool forward = true);
/// i(f)(x) = alpha_{-x}(f(x)) (forward), i.e. op_T in the inverse direction.
SampledFunction iso_i(const Action& action, const SampledFunction& f, bool forward = true);
/// f' - alpha'_0(f).
SampledFunction d_alpha(const Action& action, const SampledFunction& f,
                        double decay_tol = kDefaultDecayTol);
/// Pointwise alpha'_0(f(x)).
SampledFunction derivation(const Action& action, const SampledFunction& f);

enum class Side { left, right };

/// left: a f(x); right: f(x) alpha_x(a).
SampledFunction module_act_algebra(const Action& action, Side side, const Matrix& a,
                                   const SampledFunction& f);

/// The four actions on bi-functions:
///   left-algebra   (a o F)(x, y) = alpha_{-x}(a) F(x, y)
///   right-algebra  (F o a)(x, y) = F(x, y) alpha_y(a)
///   left-crossed   (H o F)(x, y) = int alpha_{-x}(H(z)) F(x - z, y) dz
///   right-crossed  (F o H)(x, y) = int F(x, z) alpha_z(H(y - z)) dz
BiSampledFunction act_left_algebra(const Action& action, const Matrix& a, const BiSampledFunction& F);
BiSampledFunction act_right_algebra(const Action& action, const BiSampledFunction& F, const Matrix& a);
BiSampledFunction act_left_crossed(const Action& action, const SampledFunction& H,
                                   const BiSampledFunction& F, Path path = Path::fast);
BiSampledFunction act_right_crossed(const Action& action, const BiSampledFunction& F,
                                    const SampledFunction& H, Path path = Path::fast);

/// Circular convolution along an axis placed on the lattice (h and index
/// shift on the line, 1/N on the circle): sum_a f(z_a) . F(x - z_a) on x, or
/// on y; `f_on_left` fixes the order of the matrix product.
BiSampledFunction lattice_convolution(const SampledFunction& f, const BiSampledFunction& F,
                                      Axis axis, bool f_on_left);

}  // namespace schwartzlab
