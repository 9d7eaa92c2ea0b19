#include "schwartzlab/crossed.hpp"

#include <string>

#include "schwartzlab/errors.hpp"

namespace schwartzlab {

NodePropagators node_propagators(const Action& action, const Grid& grid) {
  NodePropagators p{SampledFunction(grid, action.dim()), SampledFunction(grid, action.dim())};
  for (int i = 0; i < grid.size(); ++i) {
    Propagator u = action.propagator(grid.node(i));
    p.forward.at(i) = u.forward;
    p.inverse.at(i) = u.inverse;
  }
  return p;
}

void require_compatible(const Action& action, const Grid& grid, int dim) {
  if (action.group() != grid.group())
    throw StructuralError("action group (" + std::string(to_string(action.group())) +
                          ") does not match grid (" + std::string(to_string(grid.group())) + ")");
  if (action.dim() != dim) throw StructuralError("action dimension does not match the function");
}

namespace {

// w(x) * f(x) * m for every node (m multiplies on the right).
SampledFunction weighted_right(const SampledFunction& f, const SeparableTerm& t, const Matrix& m,
                               double sign = 1.0) {
  SampledFunction out(f.grid(), f.dim());
  for (int i = 0; i < f.grid().size(); ++i)
    out.at(i).noalias() = t.weight(sign * f.grid().node(i)) * (f.at(i) * m);
  return out;
}

SampledFunction weighted_left(const SampledFunction& f, const SeparableTerm& t, const Matrix& m,
                              double sign = 1.0) {
  SampledFunction out(f.grid(), f.dim());
  for (int i = 0; i < f.grid().size(); ++i)
    out.at(i).noalias() = t.weight(sign * f.grid().node(i)) * (m * f.at(i));
  return out;
}

void check_output(const SampledFunction& out, double decay_tol) {
  if (out.grid().group() != Group::line) return;
  try {
    check_decay(out, decay_tol);
  } catch (const DomainTruncationError& e) {
    throw DomainTruncationError(std::string("convolution wraparound contamination: ") + e.what());
  }
}

}  // namespace

SampledFunction twisted_convolve(const Action& action, const SampledFunction& f,
                                 const SampledFunction& g, Path path, double decay_tol) {
  f.require_same(g);
  require_compatible(action, f.grid(), f.dim());
  const Grid& grid = f.grid();
  const int n = grid.size(), d = f.dim();
  SampledFunction out(grid, d);
  if (path == Path::oracle) {
    const NodePropagators u = node_propagators(action, grid);
    std::vector<cplx> s1(d * d), s2(d * d);
    const double w = grid.spacing();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        block_sandwich(u.forward.ptr(j), g.ptr(grid.sub(i, j)), u.inverse.ptr(j), s1.data(), s2.data(), d);
        block_mul_add(w, f.ptr(j), s1.data(), out.ptr(i), d);
      }
  } else {
    // sum_r [(w_r f L_r) conv g] R_r
    for (const SeparableTerm& t : action.separable_terms()) {
      const SampledFunction c = lattice_convolution(weighted_right(f, t, t.left), g);
      for (int i = 0; i < n; ++i) out.at(i) += c.at(i) * t.right;
    }
  }
  check_output(out, decay_tol);
  return out;
}

SampledFunction twisted_convolve_alt(const Action& action, const SampledFunction& f,
                                     const SampledFunction& g, Path path, double decay_tol) {
  f.require_same(g);
  require_compatible(action, f.grid(), f.dim());
  const Grid& grid = f.grid();
  const int n = grid.size(), d = f.dim();
  SampledFunction out(grid, d);
  if (path == Path::oracle) {
    const NodePropagators u = node_propagators(action, grid);
    std::vector<cplx> s1(d * d), s2(d * d);
    const double w = grid.spacing();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        block_sandwich(u.inverse.ptr(j), f.ptr(grid.sub(i, j)), u.forward.ptr(j), s1.data(), s2.data(), d);
        block_mul_add(w, s1.data(), g.ptr(j), out.ptr(i), d);
      }
  } else {
    // sum_r L_r [f conv (w_r(-.) R_r g)]
    for (const SeparableTerm& t : action.separable_terms()) {
      const SampledFunction c = lattice_convolution(f, weighted_left(g, t, t.right, -1.0));
      for (int i = 0; i < n; ++i) out.at(i) += t.left * c.at(i);
    }
  }
  check_output(out, decay_tol);
  return out;
}

SampledFunction op_T(const Action& action, const SampledFunction& f, bool forward) {
  require_compatible(action, f.grid(), f.dim());
  if (action.kind() == ActionKind::trivial) return f;
  const NodePropagators u = node_propagators(action, f.grid());
  const int d = f.dim();
  SampledFunction out(f.grid(), d);
  std::vector<cplx> s(d * d);
  for (int i = 0; i < f.grid().size(); ++i) {
    if (forward)
      block_sandwich(u.forward.ptr(i), f.ptr(i), u.inverse.ptr(i), out.ptr(i), s.data(), d);
    else
      block_sandwich(u.inverse.ptr(i), f.ptr(i), u.forward.ptr(i), out.ptr(i), s.data(), d);
  }
  return out;
}

SampledFunction iso_i(const Action& action, const SampledFunction& f, bool forward) {
  return op_T(action, f, !forward);
}

SampledFunction derivation(const Action& action, const SampledFunction& f) {
  require_compatible(action, f.grid(), f.dim());
  SampledFunction out(f.grid(), f.dim());
  if (action.kind() == ActionKind::trivial) return out;
  for (int i = 0; i < f.grid().size(); ++i) out.at(i) = action.derivation(f.at(i));
  return out;
}

SampledFunction d_alpha(const Action& action, const SampledFunction& f, double decay_tol) {
  return differentiate(f, decay_tol) - derivation(action, f);
}

SampledFunction module_act_algebra(const Action& action, Side side, const Matrix& a,
                                   const SampledFunction& f) {
  require_compatible(action, f.grid(), f.dim());
  if (a.rows() != f.dim() || a.cols() != f.dim()) throw StructuralError("algebra element dimension mismatch");
  SampledFunction out(f.grid(), f.dim());
  for (int i = 0; i < f.grid().size(); ++i) {
    if (side == Side::left)
      out.at(i).noalias() = a * f.at(i);
    else
      out.at(i).noalias() = f.at(i) * act(action, f.grid().node(i), a);
  }
  return out;
}

BiSampledFunction act_left_algebra(const Action& action, const Matrix& a, const BiSampledFunction& F) {
  require_compatible(action, F.grid(), F.dim());
  if (a.rows() != F.dim() || a.cols() != F.dim()) throw StructuralError("algebra element dimension mismatch");
  const int n = F.grid().size();
  BiSampledFunction out(F.grid(), F.dim());
  for (int i = 0; i < n; ++i) {
    const Matrix ai = act(action, -F.grid().node(i), a);
    for (int j = 0; j < n; ++j) out.at(i, j).noalias() = ai * F.at(i, j);
  }
  return out;
}

BiSampledFunction act_right_algebra(const Action& action, const BiSampledFunction& F, const Matrix& a) {
  require_compatible(action, F.grid(), F.dim());
  if (a.rows() != F.dim() || a.cols() != F.dim()) throw StructuralError("algebra element dimension mismatch");
  const int n = F.grid().size();
  std::vector<Matrix> aj(n);
  for (int j = 0; j < n; ++j) aj[j] = act(action, F.grid().node(j), a);
  BiSampledFunction out(F.grid(), F.dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j).noalias() = F.at(i, j) * aj[j];
  return out;
}

BiSampledFunction lattice_convolution(const SampledFunction& f, const BiSampledFunction& F,
                                      Axis axis, bool f_on_left) {
  const BiSampledFunction c = spectral::circular_convolution(f, F, axis, f_on_left);
  const Grid& g = F.grid();
  if (g.group() == Group::circle) return cplx(1.0 / g.size()) * c;
  const int n = g.size();
  BiSampledFunction out(g, F.dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int si = axis == Axis::x ? (i + n / 2) % n : i;
      const int sj = axis == Axis::y ? (j + n / 2) % n : j;
      out.at(i, j) = g.spacing() * c.at(si, sj);
    }
  return out;
}

BiSampledFunction act_left_crossed(const Action& action, const SampledFunction& H,
                                   const BiSampledFunction& F, Path path) {
  if (!(H.grid() == F.grid()) || H.dim() != F.dim()) throw StructuralError("grid or dimension mismatch");
  require_compatible(action, F.grid(), F.dim());
  const Grid& g = F.grid();
  const int n = g.size(), d = F.dim();
  BiSampledFunction out(g, d);
  if (path == Path::oracle) {
    const NodePropagators u = node_propagators(action, g);
    std::vector<cplx> s1(d * d), s2(d * d);
    for (int i = 0; i < n; ++i)
      for (int z = 0; z < n; ++z) {
        block_sandwich(u.inverse.ptr(i), H.ptr(z), u.forward.ptr(i), s1.data(), s2.data(), d);
        const int xi = g.sub(i, z);
        for (int j = 0; j < n; ++j)
          block_mul_add(g.spacing(), s1.data(), F.ptr(F.flat(xi, j)), out.ptr(out.flat(i, j)), d);
      }
    return out;
  }
  // sum_r w_r(-x) L_r [H conv_x (R_r F)]
  for (const SeparableTerm& t : action.separable_terms()) {
    BiSampledFunction rf(g, d);
    for (int k = 0; k < F.nodes(); ++k)
      MatrixMap(rf.ptr(k), d, d).noalias() = t.right * ConstMatrixMap(F.ptr(k), d, d);
    const BiSampledFunction c = lattice_convolution(H, rf, Axis::x, true);
    for (int i = 0; i < n; ++i) {
      const Matrix li = t.weight(-g.node(i)) * t.left;
      for (int j = 0; j < n; ++j) out.at(i, j).noalias() += li * c.at(i, j);
    }
  }
  return out;
}

BiSampledFunction act_right_crossed(const Action& action, const BiSampledFunction& F,
                                    const SampledFunction& H, Path path) {
  if (!(H.grid() == F.grid()) || H.dim() != F.dim()) throw StructuralError("grid or dimension mismatch");
  require_compatible(action, F.grid(), F.dim());
  const Grid& g = F.grid();
  const int n = g.size(), d = F.dim();
  BiSampledFunction out(g, d);
  if (path == Path::oracle) {
    const NodePropagators u = node_propagators(action, g);
    std::vector<cplx> s1(d * d), s2(d * d);
    for (int z = 0; z < n; ++z)
      for (int j = 0; j < n; ++j) {
        block_sandwich(u.forward.ptr(z), H.ptr(g.sub(j, z)), u.inverse.ptr(z), s1.data(), s2.data(), d);
        for (int i = 0; i < n; ++i)
          block_mul_add(g.spacing(), F.ptr(F.flat(i, z)), s1.data(), out.ptr(out.flat(i, j)), d);
      }
    return out;
  }
  // sum_r [(F w_r L_r) conv_y H] R_r
  for (const SeparableTerm& t : action.separable_terms()) {
    BiSampledFunction fl(g, d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) fl.at(i, j).noalias() = t.weight(g.node(j)) * (F.at(i, j) * t.left);
    const BiSampledFunction c = lattice_convolution(H, fl, Axis::y, false);
    for (int k = 0; k < F.nodes(); ++k)
      MatrixMap(out.ptr(k), d, d).noalias() += ConstMatrixMap(c.ptr(k), d, d) * t.right;
  }
  return out;
}

}  // namespace schwartzlab
