#include "doctest.h"
#include "helpers.hpp"

#include <array>

#include "schwartzlab/errors.hpp"

using namespace schwartzlab;
using namespace testing_support;

TEST_CASE("trivial action fixes every element") {
  const Action t = Action::trivial(2);
  Rng rng(1);
  const Matrix a = random_matrix(rng, 2);
  CHECK(max_abs(act(t, 3.7, a) - a) == 0.0);
  CHECK(max_abs(act_generator_power(t, 1, a)) == 0.0);
  CHECK(max_abs(act_generator_power(t, 0, a) - a) == 0.0);
}

TEST_CASE("conjugation by diag(0,1) rotates E12") {
  const Action A = Action::unitary(diag01());
  for (double x : {-2.5, 0.3, 1.0, 7.0}) {
    Matrix want = Matrix::Zero(2, 2);
    want(0, 1) = std::exp(cplx(0.0, -x));
    CHECK(max_abs(act(A, x, e12()) - want) < 1e-14);
  }
  Matrix d = Matrix::Zero(2, 2);
  d(0, 1) = cplx(0.0, -1.0);
  CHECK(max_abs(act_generator_power(A, 1, e12()) - d) < 1e-15);
}

TEST_CASE("act at zero is exact and the group law holds") {
  const Action A = sample_unitary(5);
  Rng rng(2);
  const Matrix a = random_matrix(rng, 2);
  CHECK(max_abs(act(A, 0.0, a) - a) == 0.0);
  const double x = 1.3, y = -0.45;
  CHECK(seminorm(act(A, x, act(A, y, a)) - act(A, x + y, a)) < 1e-12);
}

TEST_CASE("central difference matches the generator") {
  Rng rng(3);
  const Matrix a = random_matrix(rng, 2);
  const double h = 1e-5;
  Matrix nil = Matrix::Zero(2, 2);
  nil(0, 1) = 1.0;
  for (const Action& A : {sample_unitary(9), Action::nilpotent(nil)}) {
    const Matrix fd = (act(A, h, a) - act(A, -h, a)) / (2.0 * h);
    CHECK(seminorm(fd - act_generator_power(A, 1, a)) < 1e-8);
  }
}

TEST_CASE("act_generator_power cap and input errors") {
  const Action A = sample_unitary(1);
  const Matrix a = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(act_generator_power(A, kMaxGeneratorPower + 1, a), InputError);
  CHECK_THROWS_AS(act(A, std::nan(""), a), InputError);
  CHECK_THROWS_AS(act(A, 1.0, Matrix::Identity(3, 3)), StructuralError);
}

TEST_CASE("seminorm examples") {
  CHECK(seminorm(Matrix::Identity(2, 2)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(seminorm(Matrix::Zero(2, 2)) == 0.0);
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 2.0;
  CHECK(seminorm(m) == doctest::Approx(2.0).epsilon(1e-15));
  Rng rng(4);
  const Matrix a = random_matrix(rng, 3), b = random_matrix(rng, 3);
  CHECK(seminorm(a * b) <= seminorm(a) * seminorm(b) * (1 + 1e-12));
}

TEST_CASE("action validation") {
  Matrix not_herm = e12();
  CHECK_THROWS_AS(Action::unitary(not_herm), InputError);
  CHECK_THROWS_AS(Action::nilpotent(Matrix::Identity(2, 2)), InputError);
  // gap 1 is not in 2 pi Z, so alpha_1 != id on the circle
  CHECK_THROWS_AS(Action::unitary(diag01(), Group::circle), InputError);
  Matrix h = Matrix::Zero(2, 2);
  h(1, 1) = 2.0 * std::numbers::pi;
  const Action C = Action::unitary(h, Group::circle);
  Rng rng(8);
  const Matrix a = random_matrix(rng, 2);
  CHECK(seminorm(act(C, 1.0, a) - a) < 1e-12);
  CHECK_THROWS_AS(Action::nilpotent(e12(), Group::circle), InputError);
}

TEST_CASE("tempered bounds") {
  const std::array<double, 5> xs{-9.0, -1.0, 0.0, 2.5, 9.0};
  const BoundCertificate t = verify_tempered_bounds(Action::trivial(2), xs, 4);
  REQUIRE(t.polynomial.size() == 1);
  CHECK(t.polynomial[0] == 1.0);
  for (std::size_t k = 1; k < t.derivative_constants.size(); ++k) CHECK(t.derivative_constants[k] == 0.0);

  const BoundCertificate u = verify_tempered_bounds(sample_unitary(3), xs, 8);
  CHECK(std::abs(u.measured_growth - 1.0) < 1e-10);
  CHECK(u.worst_derivative_ratio <= 1.0 + 1e-12);

  Rng rng(5);
  const Action n = random_action(ActionKind::nilpotent_conjugation, Group::line, 3, rng);
  const BoundCertificate c = verify_tempered_bounds(n, xs, 8);
  CHECK(c.worst_growth_ratio <= 1.0 + 1e-12);
  CHECK(c.measured_growth > 1.0);
  CHECK_THROWS_AS(verify_tempered_bounds(n, std::span<const double>{}, 1), InputError);
}

TEST_CASE("string round trips") {
  for (ActionKind k : {ActionKind::trivial, ActionKind::unitary_conjugation, ActionKind::nilpotent_conjugation})
    CHECK(action_kind_from_string(to_string(k)) == k);
  CHECK(group_from_string(to_string(Group::circle)) == Group::circle);
}
