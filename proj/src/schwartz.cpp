#include "schwartzlab/schwartz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "schwartzlab/algebra.hpp"
#include "schwartzlab/errors.hpp"

namespace schwartzlab {

namespace {

double node_norm(const cplx* p, int d) { return seminorm(ConstMatrixMap(p, d, d)); }

std::string ratio_text(double edge, double peak) {
  return std::to_string(edge) + " vs max " + std::to_string(peak);
}

bool is_edge(int i, int n) { return i < 2 || i >= n - 2; }

Matrix fourier_kernel(const Grid& g, bool forward) {
  const int n = g.size();
  const double sign = forward ? -1.0 : 1.0;
  Matrix k(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      k(a, b) = g.spacing() * std::polar(1.0, sign * 2.0 * std::numbers::pi * g.node(a) * g.node(b));
  return k;
}

}  // namespace

void check_decay(const SampledFunction& f, double tol) {
  if (f.grid().group() != Group::line) return;
  const int n = f.grid().size(), d = f.dim();
  double peak = 0.0, edge = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = node_norm(f.ptr(i), d);
    if (!std::isfinite(v)) throw InputError("sampled function has non-finite entries");
    peak = std::max(peak, v);
    if (is_edge(i, n)) edge = std::max(edge, v);
  }
  if (edge > tol * peak)
    throw DomainTruncationError("function does not decay at the grid boundary (" +
                                ratio_text(edge, peak) + "); increase L");
}

void check_decay(const BiSampledFunction& f, double tol) {
  if (f.grid().group() != Group::line) return;
  const int n = f.grid().size(), d = f.dim();
  double peak = 0.0, edge = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double v = node_norm(f.ptr(f.flat(i, j)), d);
      if (!std::isfinite(v)) throw InputError("sampled function has non-finite entries");
      peak = std::max(peak, v);
      if (is_edge(i, n) || is_edge(j, n)) edge = std::max(edge, v);
    }
  if (edge > tol * peak)
    throw DomainTruncationError("bi-function does not decay at the grid boundary (" +
                                ratio_text(edge, peak) + "); increase L");
}

void check_antidiagonal_support(const BiSampledFunction& f, double tol) {
  const Grid& g = f.grid();
  if (g.group() != Group::line) return;
  const int n = g.size(), d = f.dim();
  double peak = 0.0, outside = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double v = node_norm(f.ptr(f.flat(i, j)), d);
      peak = std::max(peak, v);
      if (std::abs(g.node(i) + g.node(j)) >= g.half_width()) outside = std::max(outside, v);
    }
  if (outside > tol * peak)
    throw DomainTruncationError("bi-function is not negligible where |x + y| >= L (" +
                                ratio_text(outside, peak) + ")");
}

SampledFunction differentiate(const SampledFunction& f, double decay_tol) {
  check_decay(f, decay_tol);
  return spectral::derivative(f);
}

BiSampledFunction differentiate(const BiSampledFunction& f, Axis axis, double decay_tol) {
  check_decay(f, decay_tol);
  return spectral::derivative(f, axis);
}

Matrix integrate(const SampledFunction& f) {
  const int d = f.dim();
  Matrix sum = Matrix::Zero(d, d);
  for (int i = 0; i < f.grid().size(); ++i) sum += f.at(i);
  return f.grid().spacing() * sum;
}

void antiderivative_lines(const Grid& g, cplx* base, int howmany, int stride, int dist) {
  const int n = g.size();
  const bool line = g.group() == Group::line;
  std::vector<cplx> mean(howmany);
  for (int h = 0; h < howmany; ++h) {
    cplx s = 0.0;
    for (int k = 0; k < n; ++k) s += base[static_cast<long>(h) * dist + static_cast<long>(k) * stride];
    mean[h] = s / static_cast<double>(n);
  }
  spectral::dft(base, n, howmany, stride, dist, true);
  spectral::scale_modes(base, n, howmany, stride, dist, [&](int k) -> cplx {
    if (k == 0 || k == n / 2) return 0.0;
    return 1.0 / cplx(0.0, g.wavenumber(k));
  });
  spectral::dft(base, n, howmany, stride, dist, false);
  for (int h = 0; h < howmany; ++h) {
    cplx* line_base = base + static_cast<long>(h) * dist;
    if (line) {
      const cplx pin = line_base[0];
      for (int k = 0; k < n; ++k)
        line_base[static_cast<long>(k) * stride] += mean[h] * (g.node(k) - g.origin()) - pin;
    }
    // Circle: the DC mode was dropped, so the result is already mean-free.
  }
}

SampledFunction cumulative_integral(const SampledFunction& f, double mean_zero_tol) {
  const int d = f.dim();
  double l1 = 0.0;
  for (int i = 0; i < f.grid().size(); ++i) l1 += node_norm(f.ptr(i), d);
  l1 *= f.grid().spacing();
  const double mass = seminorm(integrate(f));
  if (mass > mean_zero_tol * l1)
    throw MeanNotZeroError("cumulative_integral needs vanishing total mass (|mass| = " +
                           std::to_string(mass) + ", L1 = " + std::to_string(l1) + ")");
  check_decay(f);
  SampledFunction g = f;
  antiderivative_lines(f.grid(), g.data(), g.block(), g.block(), 1);
  return g;
}

double seminorm_kl(const SampledFunction& f, int k, int l) {
  if (k < 0 || l < 0 || k > 8 || l > 8) throw InputError("seminorm_kl needs 0 <= k, l <= 8");
  SampledFunction dk = f;
  for (int i = 0; i < k; ++i) dk = differentiate(dk);
  const Grid& g = f.grid();
  double best = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    const double w = g.group() == Group::line ? std::pow(std::abs(g.node(i)), l) : 1.0;
    best = std::max(best, w * node_norm(dk.ptr(i), f.dim()));
  }
  return best;
}

SampledFunction fourier_transform(const SampledFunction& f, bool forward, double decay_tol) {
  if (f.grid().group() != Group::line)
    throw InputError("fourier_transform is defined on the line grid");
  check_decay(f, decay_tol);
  const int n = f.grid().size(), b = f.block();
  const Matrix kernel = fourier_kernel(f.grid(), forward);
  SampledFunction out(f.grid(), f.dim());
  Eigen::Map<Matrix>(out.data(), b, n).noalias() =
      Eigen::Map<const Matrix>(f.data(), b, n) * kernel.transpose();
  try {
    check_decay(out, decay_tol);
  } catch (const DomainTruncationError& e) {
    throw GridMismatchError(std::string("Fourier transform leaves the frequency window: ") + e.what());
  }
  return out;
}

BiSampledFunction fourier_transform(const BiSampledFunction& f, bool forward, double decay_tol) {
  if (f.grid().group() != Group::line)
    throw InputError("fourier_transform is defined on the line grid");
  check_decay(f, decay_tol);
  const int n = f.grid().size(), b = f.block();
  const Matrix kt = fourier_kernel(f.grid(), forward).transpose();
  BiSampledFunction tmp(f.grid(), f.dim()), out(f.grid(), f.dim());
  // x axis: column i of the (N b) x N view holds every node with first index i.
  Eigen::Map<Matrix>(tmp.data(), n * b, n).noalias() = Eigen::Map<const Matrix>(f.data(), n * b, n) * kt;
  for (int i = 0; i < n; ++i)
    Eigen::Map<Matrix>(out.ptr(out.flat(i, 0)), b, n).noalias() =
        Eigen::Map<const Matrix>(tmp.ptr(tmp.flat(i, 0)), b, n) * kt;
  try {
    check_decay(out, decay_tol);
  } catch (const DomainTruncationError& e) {
    throw GridMismatchError(std::string("Fourier transform leaves the frequency window: ") + e.what());
  }
  return out;
}

SampledFunction reflect(const SampledFunction& f) {
  SampledFunction out(f.grid(), f.dim());
  for (int i = 0; i < f.grid().size(); ++i) out.at(i) = f.at(f.grid().neg(i));
  return out;
}

SampledFunction pointwise_multiply(const SampledFunction& f, const SampledFunction& g) {
  f.require_same(g);
  SampledFunction out(f.grid(), f.dim());
  for (int i = 0; i < f.grid().size(); ++i) block_mul(f.ptr(i), g.ptr(i), out.ptr(i), f.dim());
  return out;
}

SampledFunction lattice_convolution(const SampledFunction& f, const SampledFunction& g) {
  const Grid& grid = f.grid();
  const SampledFunction c = spectral::circular_convolution(f, g);
  if (grid.group() == Group::circle) return cplx(1.0 / grid.size()) * c;
  // x_i - x_j has index i - j + N/2, so entry i reads circular index i + N/2.
  SampledFunction out(grid, f.dim());
  const int n = grid.size();
  for (int i = 0; i < n; ++i) out.at(i) = grid.spacing() * c.at((i + n / 2) % n);
  return out;
}

SampledFunction convolve(const SampledFunction& f, const SampledFunction& g, double decay_tol) {
  f.require_same(g);
  SampledFunction out = lattice_convolution(f, g);
  if (f.grid().group() == Group::line) {
    try {
      check_decay(out, decay_tol);
    } catch (const DomainTruncationError& e) {
      throw DomainTruncationError(std::string("convolution wraparound contamination: ") + e.what());
    }
  }
  return out;
}

SampledFunction convolve_direct(const SampledFunction& f, const SampledFunction& g) {
  f.require_same(g);
  const Grid& grid = f.grid();
  const int n = grid.size(), d = f.dim();
  SampledFunction out(grid, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) block_mul_add(grid.spacing(), f.ptr(j), g.ptr(grid.sub(i, j)), out.ptr(i), d);
  return out;
}

BiSampledFunction multiply_x_minus_y(const BiSampledFunction& f) {
  const Grid& g = f.grid();
  BiSampledFunction out = f;
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) out.at(i, j) *= g.node(i) - g.node(j);
  return out;
}

BiSampledFunction hadamard_divide(const BiSampledFunction& f, double diag_tol) {
  const Grid& g = f.grid();
  if (g.group() != Group::line) throw InputError("hadamard_divide is defined on the line grid");
  const int n = g.size();
  double diag = 0.0;
  for (int i = 0; i < n; ++i) diag = std::max(diag, node_norm(f.ptr(f.flat(i, i)), f.dim()));
  const double total = sup_norm(f);
  if (diag > diag_tol * total)
    throw NotInIdealError("function does not vanish on the diagonal (" + ratio_text(diag, total) + ")");
  BiSampledFunction out(g, f.dim());
  if (total == 0.0) return out;
  const BiSampledFunction dx = differentiate(f, Axis::x);
  const BiSampledFunction dy = differentiate(f, Axis::y);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        out.at(i, i) = 0.5 * (dx.at(i, i) - dy.at(i, i));
      else
        out.at(i, j) = f.at(i, j) / (g.node(i) - g.node(j));
    }
  return out;
}

}  // namespace schwartzlab
