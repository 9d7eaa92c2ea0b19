#include "schwartzlab/field.hpp"

#include <algorithm>

#include "schwartzlab/algebra.hpp"
#include "schwartzlab/errors.hpp"

namespace schwartzlab {

template <int Rank>
void Field<Rank>::require_same(const Field& o) const {
  if (!(grid_ == o.grid_)) throw StructuralError("grid mismatch between sampled functions");
  if (dim_ != o.dim_) throw StructuralError("algebra dimension mismatch between sampled functions");
}

template <int Rank>
double sup_norm(const Field<Rank>& f) {
  double best = 0.0;
  const int d = f.dim();
  for (int k = 0; k < f.nodes(); ++k)
    best = std::max(best, seminorm(ConstMatrixMap(f.ptr(k), d, d)));
  return best;
}

template class Field<1>;
template class Field<2>;
template double sup_norm(const Field<1>&);
template double sup_norm(const Field<2>&);

void block_mul(const cplx* a, const cplx* b, cplx* c, int d) noexcept {
  for (int col = 0; col < d; ++col) {
    cplx* cc = c + col * d;
    std::fill(cc, cc + d, cplx(0.0));
    for (int k = 0; k < d; ++k) {
      const cplx bk = b[col * d + k];
      if (bk == cplx(0.0)) continue;
      const cplx* ak = a + k * d;
      for (int r = 0; r < d; ++r) cc[r] += ak[r] * bk;
    }
  }
}

void block_mul_add(cplx s, const cplx* a, const cplx* b, cplx* c, int d) noexcept {
  for (int col = 0; col < d; ++col) {
    cplx* cc = c + col * d;
    for (int k = 0; k < d; ++k) {
      const cplx bk = s * b[col * d + k];
      if (bk == cplx(0.0)) continue;
      const cplx* ak = a + k * d;
      for (int r = 0; r < d; ++r) cc[r] += ak[r] * bk;
    }
  }
}

void block_sandwich(const cplx* u, const cplx* a, const cplx* v, cplx* c, cplx* scratch,
                    int d) noexcept {
  block_mul(u, a, scratch, d);
  block_mul(scratch, v, c, d);
}

}  // namespace schwartzlab
