#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "holo/aw_reference.hpp"
#include "holo/homogeneous.hpp"
#include "holo/random.hpp"

using namespace holo;

TEST_CASE("model consistency") {
  for (auto [s, y] : {std::pair{Scalar(1), Scalar(1)}, {Scalar::frac(2, 3), Scalar(4)}, {Scalar(3), Scalar::frac(1, 9)}}) {
    auto m = aloff_wallach_model(s, y);
    CHECK(m.n == 7);
    CHECK(m.jacobi());
    CHECK(m.reductive());
  }
  CHECK(su2_model().jacobi());
}

TEST_CASE("Levi-Civita map is skew") {
  auto m = aloff_wallach_model(Scalar::frac(3, 2), 2);
  for (auto& l : levi_civita_map(m)) CHECK(l.is_skew());
}

TEST_CASE("su(2) connections with kappa = +-1/4 are flat, Levi-Civita is not") {
  auto m = su2_model();
  auto lam = levi_civita_map(m);
  auto T = Multivector::blade(3, {1, 2, 3}, 2);
  CHECK(nomizu_curvature(m, connection_with_torsion(lam, T, Scalar::frac(1, 4))).flat);
  CHECK(nomizu_curvature(m, connection_with_torsion(lam, T, Scalar::frac(-1, 4))).flat);
  auto lc = nomizu_curvature(m, lam);
  CHECK_FALSE(lc.flat);
  CHECK(sectional_curvature(lc, 0, 1) == Scalar(1));
}

TEST_CASE("isotropy invariants") {
  auto m = aloff_wallach_model(1, 1);
  CHECK(fixed_spinors(m).size() == 4);
  CHECK(invariant_form_basis(m, 3).size() == 13);
  CHECK(invariant_form_basis(m, 4).size() == 13);
  for (auto& f : invariant_3forms()) CHECK(is_invariant(m, f));
  CHECK(invariant_3forms().size() == 13);
}

TEST_CASE("solver reproduces the closed torsion formulas") {
  Sampler rng(71);
  auto psi = probe_spinors();
  for (int i = 0; i < 3; ++i) {
    Scalar s = rng.positive_rational(), q = rng.nonzero_rational();
    AWContext ctx(s, q * q);
    for (int k = 3; k <= 6; ++k) {
      auto T = solve_torsion(ctx, psi[k - 3], ref::ansatz7());
      CHECK(T.unique);
      CHECK(T.residual_zero);
      CHECK(T.form == ref::T_k(k, s, q * q));
      auto R = solve_torsion(ctx, psi[k - 3], ref::ansatzR13());
      CHECK(R.form == ref::R_k(k, s, q * q));
    }
  }
}

TEST_CASE("opposite torsions at s = sqrt(3)/2, y = 2") {
  AWContext c(ref::s_opposite_T(), 2);
  auto psi = probe_spinors();
  auto t3 = solve_torsion(c, psi[0], ref::ansatz7()).form;
  auto t4 = solve_torsion(c, psi[1], ref::ansatz7()).form;
  CHECK(t3 == -t4);
  CHECK(t3 == ref::T_opposite());
  CHECK_FALSE(nomizu_curvature(c.model, connection_with_torsion(c.lam, t3, 1)).flat);
}

TEST_CASE("G2 types and scalar curvature") {
  auto psi = probe_spinors();
  Multivector w3 = g2_form_of_spinor(psi[0]), w5 = g2_form_of_spinor(psi[2]);
  CHECK(w3 == ref::omega3());
  CHECK(w5 == ref::omega5());
  AWContext c12(1, 2), c14(1, 4);
  auto T12 = solve_torsion(c12, psi[0], ref::ansatz7()).form * Scalar(4);
  CHECK(g2_type(c12.model, w3, T12).type == G2Type::W1);
  CHECK(scalars_from_torsion(w3, T12).riemannian == Scalar(42));
  auto T14 = solve_torsion(c14, psi[0], ref::ansatz7()).form;
  auto sc = scalars_from_torsion(w3, T14 * Scalar(4));
  CHECK(sc.riemannian == Scalar(54));
  CHECK(sc.connection.is_zero());
  CHECK(sc.riemannian == ref::scal_g(1, 4));
  CHECK(square_parts(T14).t4 == coset_differential(c14.model, T14) * Scalar::frac(1, 4));
}

TEST_CASE("W3 along 2s(2+y) = 1-y") {
  auto psi = probe_spinors();
  auto w5 = g2_form_of_spinor(psi[2]);
  Scalar y = Scalar::frac(1, 4), s = (Scalar(1) - y) / (Scalar(2) * (Scalar(2) + y));
  AWContext c(s, y);
  auto T = solve_torsion(c, psi[2], ref::ansatz7()).form * Scalar(4);
  CHECK(g2_type(c.model, w5, T).type == G2Type::W3);
}

TEST_CASE("coset differential squares to zero") {
  auto m = aloff_wallach_model(Scalar::frac(1, 2), 3);
  for (auto& f : invariant_form_basis(m, 2)) CHECK(coset_differential(m, coset_differential(m, f)).is_zero());
}

TEST_CASE("root scan") {
  auto roots = scan_roots();
  REQUIRE(roots.size() == 2);
  auto& want = ref::printed_roots();
  for (size_t i = 0; i < 2; ++i) {
    CHECK(roots[i].s == doctest::Approx(want[i][0]).epsilon(1e-4));
    CHECK(roots[i].y == doctest::Approx(want[i][1]).epsilon(1e-4));
    CHECK(std::abs(roots[i].residual3) < 1e-9);
  }
}
