#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "holo/aw_reference.hpp"
#include "holo/random.hpp"
#include "holo/sasakian.hpp"

using namespace holo;

TEST_CASE("structure group fixes the contact directions") {
  auto gens = su2_structure_generators();
  for (auto& g : gens) CHECK(g.grade() == 2);
  for (int j : {1, 2, 7}) CHECK(su2_invariant(contact_form_differential(j)));
  CHECK(su2_fixed_spinors().size() == 4);
  for (auto& f : su2_family_3forms()) CHECK(su2_invariant(f));
  CHECK(su2_family_3forms().size() == 10);
  CHECK(su2_family_4forms().size() == 10);
}

TEST_CASE("Veronese closed form matches the solver") {
  Sampler rng(81);
  for (int i = 0; i < 10; ++i) {
    Vec v = rng.nonzero_vector(4);
    auto sol = veronese_torsion(v[0], v[1], v[2], v[3]);
    CHECK(sol.agree);
    CHECK(sol.solved.unique);
    CHECK(sol.solved.coeffs[9] == Scalar::frac(-1, 6));
    Scalar sum;
    for (int k = 0; k < 9; ++k) sum += sol.solved.coeffs[k] * sol.solved.coeffs[k];
    CHECK(sum == Scalar::frac(1, 12));
    Vec psi = fixed_spinor(v[0], v[1], v[2], v[3]);
    CHECK(killing_to_parallel_check(psi, sol.solved.form));
  }
}

TEST_CASE("4-form family solve is unique") {
  auto sol = veronese_4form(1, 2, 3, 4);
  CHECK(sol.unique);
  CHECK(sol.residual_zero);
}

TEST_CASE("family has three dimensional image") {
  auto rep = family_dimension_report(7, 6);
  CHECK(rep.jacobian_rank == 3);
  CHECK(rep.sphere_constant);
  CHECK(rep.sphere_invariant == Scalar::frac(1, 12));
}

TEST_CASE("third su(2) generator is read as e36 + e45") {
  auto p = ref::su2_generators_printed(), c = ref::su2_generators();
  CHECK(p[2] != c[2]);
  CHECK(c[2] == su2_structure_generators()[2]);
}

TEST_CASE("flat holonomy of a Veronese torsion is all of so(7)") {
  auto inc = holonomy_inclusion(1, 0, 0, 0);
  CHECK(inc.g2_dim == 14);
  CHECK(inc.holonomy_dim == 21);
  CHECK_FALSE(inc.contained);
}

TEST_CASE("Veronese torsion holonomy lies in g2" * doctest::should_fail()) {
  CHECK(holonomy_inclusion(1, 2, 3, 4).contained);
}
