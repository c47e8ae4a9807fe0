#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "holo/flat.hpp"
#include "holo/random.hpp"

#include <cmath>

using namespace holo;

TEST_CASE("matrix exponential of a rotation generator") {
  RMat a(2, 2);
  a << 0, -1, 1, 0;
  RMat r = expm(a * M_PI / 2);
  CHECK(std::abs(r(0, 0)) < 1e-12);
  CHECK(r(1, 0) == doctest::Approx(1));
}

TEST_CASE("transport around a loop is a rotation") {
  auto loop = coordinate_triangle(3, 0.5);
  RMat h = transport_loop(cartan_torsion(), loop);
  RMat id = RMat::Identity(3, 3);
  CHECK((h.transpose() * h - id).norm() < 1e-10);
  CHECK(h.determinant() == doctest::Approx(1));
  auto info = rotation_info(h);
  CHECK(info.angle > 1e-3);
  double len = std::hypot(info.axis[0], info.axis[1], info.axis[2]);
  CHECK(len == doctest::Approx(1));
}

TEST_CASE("a straight segment back and forth is trivial") {
  Point a{0, 0, 0}, b{0.3, 0.1, -0.2};
  RMat h = transport_loop(cartan_torsion(), {a, b, a});
  CHECK((h - RMat::Identity(3, 3)).norm() < 1e-12);
}

TEST_CASE("coordinate triangles generate so(3)") {
  std::vector<std::vector<Point>> loops;
  for (int axis = 1; axis <= 3; ++axis) loops.push_back(coordinate_triangle(axis, 0.5));
  auto rep = loop_holonomy_algebra(cartan_torsion(), loops);
  CHECK(rep.independent);
  CHECK(rep.closure_dim == 3);
}

TEST_CASE("parallel spinor is first order accurate") {
  Multivector T = Multivector::vector(3, {Scalar(1), Scalar(-2), Scalar(3)}) * Scalar::frac(1, 4);
  Vec psi0(spin_rep(3).dim());
  psi0[0] = 1;
  Point m{0.3, -0.2, 0.1}, dir{2.0 / 3, 1.0 / 3, 2.0 / 3};
  double r1 = finite_difference_residual(T, psi0, m, dir, 1e-2);
  double r2 = finite_difference_residual(T, psi0, m, dir, 1e-3);
  CHECK(r1 / r2 == doctest::Approx(10).epsilon(0.1));
}

TEST_CASE("precondition rejects a spinor not fixed by h*") {
  Vec psi0(spin_rep(3).dim());
  psi0[0] = 1;
  CHECK_THROWS_AS(check_parallel_precondition(cartan_torsion(), psi0),
                  FormError);
}

TEST_CASE("codifferential correction vanishes for omega = T") {
  Sampler rng(61);
  for (int i = 0; i < 10; ++i) {
    int n = rng.integer(3, 7);
    auto T = rng.nonzero_form(n, 3);
    auto dg = rng.form(n, 2);
    CHECK(codifferential_correction(T, T).is_zero());
    CHECK(nabla_codifferential(T, T, dg) == dg);
  }
}

TEST_CASE("parallel 2-form identities agree") {
  Sampler rng(62);
  for (int i = 0; i < 5; ++i) {
    auto id = parallel_two_form_identities(rng.form(6, 2), rng.form(6, 3));
    CHECK(id.consistent);
    CHECK(id.delta == id.delta_contraction);
    CHECK(id.d == id.d_coordinates);
  }
}
