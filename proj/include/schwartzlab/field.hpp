#pragma once

#include <cstddef>
#include <vector>

#include "schwartzlab/grid.hpp"

namespace schwartzlab {

using MatrixMap = Eigen::Map<Matrix>;
using ConstMatrixMap = Eigen::Map<const Matrix>;

/// A-valued function sampled on a grid (Rank 1) or on grid x grid (Rank 2).
/// Storage is node-major; each node holds a dim x dim column-major block.
/// For Rank 2 node (i, j) means (x_i, y_j) and sits at flat index i*N + j.
template <int Rank>
class Field {
  static_assert(Rank == 1 || Rank == 2);

 public:
  Field(Grid grid, int dim)
      : grid_(grid), dim_(dim), data_(static_cast<std::size_t>(nodes_of(grid)) * dim * dim) {}

  const Grid& grid() const noexcept { return grid_; }
  int dim() const noexcept { return dim_; }
  int block() const noexcept { return dim_ * dim_; }
  int nodes() const noexcept { return nodes_of(grid_); }

  cplx* data() noexcept { return data_.data(); }
  const cplx* data() const noexcept { return data_.data(); }
  std::vector<cplx>& storage() noexcept { return data_; }
  const std::vector<cplx>& storage() const noexcept { return data_; }

  cplx* ptr(int node) noexcept { return data_.data() + static_cast<std::size_t>(node) * block(); }
  const cplx* ptr(int node) const noexcept {
    return data_.data() + static_cast<std::size_t>(node) * block();
  }
  int flat(int i, int j) const noexcept { return i * grid_.size() + j; }

  MatrixMap at(int i) noexcept
    requires(Rank == 1)
  { return MatrixMap(ptr(i), dim_, dim_); }
  ConstMatrixMap at(int i) const noexcept
    requires(Rank == 1)
  { return ConstMatrixMap(ptr(i), dim_, dim_); }
  MatrixMap at(int i, int j) noexcept
    requires(Rank == 2)
  { return MatrixMap(ptr(flat(i, j)), dim_, dim_); }
  ConstMatrixMap at(int i, int j) const noexcept
    requires(Rank == 2)
  { return ConstMatrixMap(ptr(flat(i, j)), dim_, dim_); }

  Field& operator+=(const Field& o) {
    require_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Field& operator-=(const Field& o) {
    require_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Field& operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  friend Field operator+(Field a, const Field& b) { return a += b; }
  friend Field operator-(Field a, const Field& b) { return a -= b; }
  friend Field operator*(cplx s, Field a) { return a *= s; }
  Field operator-() const { return cplx(-1.0) * *this; }

  bool compatible(const Field& o) const noexcept { return grid_ == o.grid_ && dim_ == o.dim_; }
  void require_same(const Field& o) const;

 private:
  static int nodes_of(const Grid& g) { return Rank == 1 ? g.size() : g.size() * g.size(); }

  Grid grid_;
  int dim_;
  std::vector<cplx> data_;
};

using SampledFunction = Field<1>;
using BiSampledFunction = Field<2>;

/// max over nodes of the operator norm.
template <int Rank>
double sup_norm(const Field<Rank>& f);

/// c = a * b for dim x dim column-major blocks; c must not alias a or b.
void block_mul(const cplx* a, const cplx* b, cplx* c, int d) noexcept;
/// c += s * a * b.
void block_mul_add(cplx s, const cplx* a, const cplx* b, cplx* c, int d) noexcept;
/// c = u * a * v, using scratch of d*d entries.
void block_sandwich(const cplx* u, const cplx* a, const cplx* v, cplx* c, cplx* scratch,
                    int d) noexcept;

/// Sample a scalar function times a fixed matrix.
template <class Fn>
SampledFunction sample(const Grid& grid, const Matrix& a, Fn&& fn) {
  SampledFunction f(grid, static_cast<int>(a.rows()));
  for (int i = 0; i < grid.size(); ++i) f.at(i) = fn(grid.node(i)) * a;
  return f;
}

template <class Fn>
BiSampledFunction sample2(const Grid& grid, const Matrix& a, Fn&& fn) {
  BiSampledFunction f(grid, static_cast<int>(a.rows()));
  for (int i = 0; i < grid.size(); ++i)
    for (int j = 0; j < grid.size(); ++j) f.at(i, j) = fn(grid.node(i), grid.node(j)) * a;
  return f;
}

}  // namespace schwartzlab
