#pragma once

#include "schwartzlab/field.hpp"

namespace schwartzlab::spectral {

/// Unnormalized in-place DFT of `howmany` sequences of length n, element k of
/// sequence m at base[m*dist + k*stride]. forward uses exp(-2 pi i jk/n).
/// Plans are cached (FFTW, unaligned, estimate) behind a mutex; execution is
/// re-entrant.
void dft(cplx* base, int n, int howmany, int stride, int dist, bool forward);

enum class Axis { x, y };

/// Transform every entry line of a field along one axis.
void dft(SampledFunction& f, bool forward);
void dft(BiSampledFunction& f, Axis axis, bool forward);

/// Multiply DFT mode k by mult(k) and scale by 1/N, in place, for data that
/// has already been forward-transformed along the given direction.
template <class Mult>
void scale_modes(cplx* base, int n, int howmany, int stride, int dist, Mult&& mult) {
  for (int k = 0; k < n; ++k) {
    const cplx m = mult(k) / static_cast<double>(n);
    for (int h = 0; h < howmany; ++h) base[static_cast<long>(h) * dist + static_cast<long>(k) * stride] *= m;
  }
}

/// Fourier multiplier i*kappa_k with the Nyquist mode zeroed.
cplx derivative_symbol(const Grid& g, int k);

/// Spectral derivative along an axis (no decay checks).
SampledFunction derivative(const SampledFunction& f);
BiSampledFunction derivative(const BiSampledFunction& f, Axis axis);

/// Circular matrix convolution c_k = sum_j a_j b_{k-j} of node blocks.
SampledFunction circular_convolution(const SampledFunction& a, const SampledFunction& b);

/// Circular convolution along one axis of a bi-function with a 1-D function.
/// f_on_left: c(i,j) = sum f(.)*F(.) with f multiplying from the left.
BiSampledFunction circular_convolution(const SampledFunction& f, const BiSampledFunction& F,
                                       Axis axis, bool f_on_left);

}  // namespace schwartzlab::spectral
