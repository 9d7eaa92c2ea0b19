#pragma once

#include <cmath>
#include <complex>

#include "schwartzlab/algebra.hpp"
#include "schwartzlab/field.hpp"
#include "schwartzlab/grid.hpp"
#include "schwartzlab/inputs.hpp"

namespace testing_support {

using namespace schwartzlab;

inline Matrix e12() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return m;
}

inline Matrix diag01() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 1) = 1.0;
  return m;
}

template <int Rank>
double diff(const Field<Rank>& a, const Field<Rank>& b) {
  return sup_norm(a - b);
}

inline Action sample_unitary(unsigned long long seed, Group g = Group::line) {
  Rng rng(seed);
  return random_action(ActionKind::unitary_conjugation, g, 2, rng);
}

}  // namespace testing_support
