#pragma once

#include <numbers>

#include "schwartzlab/types.hpp"

namespace schwartzlab {

/// Uniform grid on [-L, L) (line) or on R/Z (circle).
///
/// Line nodes are x_i = -L + h i with h = 2L/N, so x_i = h (i - N/2) and the
/// sums and differences of nodes are again nodes modulo the period 2L. Every
/// x + y, x - y, -x met by the operators therefore lands on the lattice.
class Grid {
 public:
  /// N a power of two, N >= 64, L >= 4.
  static Grid line(double half_width, int points);
  /// N a power of two, N >= 64.
  static Grid circle(int points);

  Group group() const noexcept { return group_; }
  int size() const noexcept { return n_; }
  double half_width() const noexcept { return half_width_; }
  double spacing() const noexcept { return spacing_; }
  double period() const noexcept { return group_ == Group::line ? 2.0 * half_width_ : 1.0; }
  /// Left end of the sampled interval: -L or 0.
  double origin() const noexcept { return group_ == Group::line ? -half_width_ : 0.0; }

  double node(int i) const noexcept { return origin() + spacing_ * i; }
  /// Index of x_i + x_j, x_i - x_j and -x_i on the periodic lattice.
  int add(int i, int j) const noexcept { return wrap(i + j - shift()); }
  int sub(int i, int j) const noexcept { return wrap(i - j + shift()); }
  int neg(int i) const noexcept { return wrap(2 * shift() - i); }
  /// Angular wavenumber of DFT mode k (standard FFT ordering). Nyquist mode
  /// returns its signed value -pi N / period.
  double wavenumber(int k) const noexcept {
    const int m = k < n_ / 2 ? k : k - n_;
    return 2.0 * std::numbers::pi * m / period();
  }

  bool operator==(const Grid& other) const noexcept {
    return group_ == other.group_ && n_ == other.n_ && half_width_ == other.half_width_;
  }

 private:
  Grid(Group group, double half_width, int points);
  int shift() const noexcept { return group_ == Group::line ? n_ / 2 : 0; }
  int wrap(int i) const noexcept { return ((i % n_) + n_) % n_; }

  Group group_;
  double half_width_;
  int n_;
  double spacing_;
};

}  // namespace schwartzlab
