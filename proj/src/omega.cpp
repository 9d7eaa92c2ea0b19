#include "schwartzlab/omega.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "schwartzlab/errors.hpp"

namespace schwartzlab {

std::string_view to_string(BumpKind k) noexcept {
  switch (k) {
    case BumpKind::gaussian: return "gaussian";
    case BumpKind::compact: return "compact";
    case BumpKind::von_mises: return "von-mises";
  }
  return "?";
}

BumpKind bump_kind_from_string(std::string_view name) {
  if (name == "gaussian") return BumpKind::gaussian;
  if (name == "compact") return BumpKind::compact;
  if (name == "von-mises") return BumpKind::von_mises;
  throw InputError("unknown bump '" + std::string(name) + "' (gaussian|compact|von-mises)");
}

Bump Bump::make(BumpKind kind, const Grid& grid) {
  const int n = grid.size();
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) {
    double t = grid.node(i);
    if (grid.group() == Group::circle && t >= 0.5) t -= 1.0;
    switch (kind) {
      case BumpKind::gaussian: {
        constexpr double width = 0.25;
        v[i] = std::exp(-t * t / (2.0 * width * width));
        break;
      }
      case BumpKind::compact: {
        if (grid.group() == Group::circle) t *= 2.0;
        v[i] = std::abs(t) < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0;
        break;
      }
      case BumpKind::von_mises: {
        constexpr double kappa = 4.0;
        v[i] = std::exp(kappa * (std::cos(2.0 * std::numbers::pi * t) - 1.0));
        break;
      }
    }
  }
  double mass = 0.0;
  for (double x : v) mass += x;
  mass *= grid.spacing();
  for (double& x : v) x /= mass;
  return Bump(kind, grid, std::move(v));
}

Bump Bump::standard(const Grid& grid) {
  return make(grid.group() == Group::line ? BumpKind::gaussian : BumpKind::von_mises, grid);
}

double Bump::mass() const {
  double m = 0.0;
  for (double x : values_) m += x;
  return m * grid_.spacing();
}

namespace {

const Grid& tensor_grid(const TensorElement& t) {
  if (t.terms.empty()) throw InputError("tensor element has no terms");
  return t.terms.front().first.grid();
}

void require_bump(const Bump& phi, const Grid& g) {
  if (!(phi.grid() == g)) throw StructuralError("bump function lives on a different grid");
}

}  // namespace

BiSampledFunction iso_I1(const Action& action, const TensorElement& t) {
  const Grid& g = tensor_grid(t);
  const int d = action.dim(), n = g.size();
  BiSampledFunction out(g, d);
  for (const auto& [F, G] : t.terms) {
    F.require_same(G);
    require_compatible(action, F.grid(), F.dim());
    const SampledFunction tf = op_T(action, F, false);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) block_mul_add(1.0, tf.ptr(i), G.ptr(j), out.ptr(out.flat(i, j)), d);
  }
  return out;
}

SampledFunction tensor_m(const Action& action, const TensorElement& t, Path path, double decay_tol) {
  SampledFunction out(tensor_grid(t), action.dim());
  for (const auto& [F, G] : t.terms) out += twisted_convolve(action, F, G, path, decay_tol);
  return out;
}

TensorElement tensor_j(const Action& action, const TensorElement& t, double decay_tol) {
  TensorElement out;
  for (const auto& [F, G] : t.terms) {
    out.terms.emplace_back(differentiate(F, decay_tol), G);
    out.terms.emplace_back(-F, d_alpha(action, G, decay_tol));
  }
  return out;
}

BiSampledFunction map_iota(const Action& action, const BiSampledFunction& F, double decay_tol) {
  require_compatible(action, F.grid(), F.dim());
  BiSampledFunction out = differentiate(F, Axis::x, decay_tol);
  out -= spectral::derivative(F, Axis::y);
  if (action.kind() != ActionKind::trivial) {
    const int d = F.dim();
    for (int k = 0; k < F.nodes(); ++k)
      MatrixMap(out.ptr(k), d, d) += action.derivation(ConstMatrixMap(F.ptr(k), d, d));
  }
  return out;
}

SampledFunction map_pi(const Action& action, const BiSampledFunction& F, double decay_tol) {
  require_compatible(action, F.grid(), F.dim());
  check_antidiagonal_support(F, decay_tol);
  const Grid& g = F.grid();
  const int n = g.size(), d = F.dim();
  const NodePropagators u = node_propagators(action, g);
  SampledFunction out(g, d);
  std::vector<cplx> s1(d * d), s2(d * d);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      block_sandwich(u.forward.ptr(j), F.ptr(F.flat(j, g.sub(i, j))), u.inverse.ptr(j), s1.data(),
                     s2.data(), d);
      cplx* o = out.ptr(i);
      for (int k = 0; k < d * d; ++k) o[k] += g.spacing() * s1[k];
    }
  return out;
}

BiSampledFunction sect_rho(const Action& action, Axis axis, const SampledFunction& f, const Bump& phi) {
  require_compatible(action, f.grid(), f.dim());
  require_bump(phi, f.grid());
  const Grid& g = f.grid();
  const int n = g.size(), d = f.dim();
  const NodePropagators u = node_propagators(action, g);
  BiSampledFunction out(g, d);
  std::vector<cplx> s(d * d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double w = phi[axis == Axis::x ? j : i];
      cplx* o = out.ptr(out.flat(i, j));
      block_sandwich(u.inverse.ptr(i), f.ptr(g.add(i, j)), u.forward.ptr(i), o, s.data(), d);
      for (int k = 0; k < d * d; ++k) o[k] *= w;
    }
  return out;
}

BiSampledFunction homotopy_beta(const Action& action, Axis axis, const BiSampledFunction& F,
                                const Bump& phi, double mean_zero_tol, double decay_tol) {
  require_compatible(action, F.grid(), F.dim());
  require_bump(phi, F.grid());
  const Grid& g = F.grid();
  const int n = g.size(), d = F.dim(), b = d * d;
  const SampledFunction pf = map_pi(action, F, decay_tol);
  const NodePropagators u = node_propagators(action, g);

  // Rotated coordinates: node (k, a) of K holds s = x_k, t = x_a.
  BiSampledFunction K(g, d);
  std::vector<cplx> s(b);
  for (int k = 0; k < n; ++k) {
    Matrix mass = Matrix::Zero(d, d);
    double l1 = 0.0;
    for (int a = 0; a < n; ++a) {
      cplx* o = K.ptr(K.flat(k, a));
      block_sandwich(u.forward.ptr(a), F.ptr(F.flat(a, g.sub(k, a))), u.inverse.ptr(a), o, s.data(), d);
      const double w = phi[axis == Axis::x ? g.sub(k, a) : a];
      const cplx* p = pf.ptr(k);
      for (int e = 0; e < b; ++e) o[e] -= w * p[e];
      const ConstMatrixMap m(o, d, d);
      mass += m;
      l1 += seminorm(m);
    }
    if (seminorm(mass) > mean_zero_tol * l1)
      throw MeanNotZeroError("anti-diagonal integrand at s = " + std::to_string(g.node(k)) +
                             " has nonzero mass (" + std::to_string(seminorm(mass) * g.spacing()) + ")");
  }
  for (int k = 0; k < n; ++k) antiderivative_lines(g, K.ptr(K.flat(k, 0)), b, b, 1);

  BiSampledFunction out(g, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      block_sandwich(u.inverse.ptr(i), K.ptr(K.flat(g.add(i, j), i)), u.forward.ptr(i),
                     out.ptr(out.flat(i, j)), s.data(), d);
  return out;
}

}  // namespace schwartzlab
