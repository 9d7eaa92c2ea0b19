#include "schwartzlab/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

#include "schwartzlab/errors.hpp"

namespace schwartzlab::spectral {

namespace {

using PlanKey = std::tuple<int, int, int, int, bool>;

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, int howmany, int stride, int dist, bool forward) {
    std::lock_guard lock(mutex_);
    const PlanKey key{n, howmany, stride, dist, forward};
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    // Planning with FFTW_ESTIMATE does not touch the arrays; scratch only
    // fixes the layout, and FFTW_UNALIGNED lets the plan run on any buffer.
    const long span = static_cast<long>(howmany - 1) * dist + static_cast<long>(n - 1) * stride + 1;
    auto* scratch = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * span));
    int dims[1] = {n};
    fftw_plan plan = fftw_plan_many_dft(1, dims, howmany, scratch, nullptr, stride, dist, scratch,
                                        nullptr, stride, dist,
                                        forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    if (!plan) throw StructuralError("FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void dft(cplx* base, int n, int howmany, int stride, int dist, bool forward) {
  fftw_plan plan = cache().get(n, howmany, stride, dist, forward);
  auto* io = reinterpret_cast<fftw_complex*>(base);
  fftw_execute_dft(plan, io, io);
}

void dft(SampledFunction& f, bool forward) {
  const int b = f.block();
  dft(f.data(), f.grid().size(), b, b, 1, forward);
}

void dft(BiSampledFunction& f, Axis axis, bool forward) {
  const int n = f.grid().size(), b = f.block();
  if (axis == Axis::x) {
    dft(f.data(), n, n * b, n * b, 1, forward);
  } else {
    for (int i = 0; i < n; ++i) dft(f.ptr(f.flat(i, 0)), n, b, b, 1, forward);
  }
}

cplx derivative_symbol(const Grid& g, int k) {
  if (k == g.size() / 2) return 0.0;
  return {0.0, g.wavenumber(k)};
}

SampledFunction derivative(const SampledFunction& f) {
  SampledFunction out = f;
  const int n = f.grid().size(), b = f.block();
  dft(out, true);
  scale_modes(out.data(), n, b, b, 1, [&](int k) { return derivative_symbol(f.grid(), k); });
  dft(out, false);
  return out;
}

BiSampledFunction derivative(const BiSampledFunction& f, Axis axis) {
  BiSampledFunction out = f;
  const int n = f.grid().size(), b = f.block();
  dft(out, axis, true);
  auto symbol = [&](int k) { return derivative_symbol(f.grid(), k); };
  if (axis == Axis::x) {
    scale_modes(out.data(), n, n * b, n * b, 1, symbol);
  } else {
    for (int i = 0; i < n; ++i) scale_modes(out.ptr(out.flat(i, 0)), n, b, b, 1, symbol);
  }
  dft(out, axis, false);
  return out;
}

SampledFunction circular_convolution(const SampledFunction& a, const SampledFunction& b) {
  a.require_same(b);
  const int n = a.grid().size(), d = a.dim();
  SampledFunction fa = a, fb = b, out(a.grid(), d);
  dft(fa, true);
  dft(fb, true);
  for (int k = 0; k < n; ++k) block_mul(fa.ptr(k), fb.ptr(k), out.ptr(k), d);
  dft(out, false);
  out *= cplx(1.0 / n);
  return out;
}

BiSampledFunction circular_convolution(const SampledFunction& f, const BiSampledFunction& F,
                                       Axis axis, bool f_on_left) {
  if (!(f.grid() == F.grid()) || f.dim() != F.dim())
    throw StructuralError("grid or dimension mismatch in axis convolution");
  const int n = F.grid().size(), d = F.dim();
  SampledFunction ff = f;
  dft(ff, true);
  BiSampledFunction fF = F;
  dft(fF, axis, true);
  BiSampledFunction out(F.grid(), d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cplx* m = ff.ptr(axis == Axis::x ? i : j);
      const int node = out.flat(i, j);
      if (f_on_left)
        block_mul(m, fF.ptr(node), out.ptr(node), d);
      else
        block_mul(fF.ptr(node), m, out.ptr(node), d);
    }
  dft(out, axis, false);
  out *= cplx(1.0 / n);
  return out;
}

}  // namespace schwartzlab::spectral
