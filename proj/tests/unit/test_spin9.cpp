#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "holo/random.hpp"
#include "holo/spin9.hpp"

using namespace holo;

TEST_CASE("equation table") {
  auto tr = spin9_transcription();
  CHECK(tr.first == 56);
  CHECK(tr.second == 28);
  CHECK(tr.pattern_ok);
  CHECK(tr.checksum_ok);
  auto& eqs = spin9_equations();
  auto one = parse_spin9_table("T1 1 9 = + 8 16\n");
  REQUIRE(one.size() == 1);
  CHECK(one[0].table == 1);
  CHECK(one[0].rhs.size() == 1);
  CHECK(!eqs.front().text.empty());
  CHECK(spin9_checksum("T1 1 9 = + 8 16\n") != spin9_checksum("T1 1 9 = - 8 16\n"));
  CHECK_THROWS(parse_spin9_table("T3 1 2 = + 3 4\n"));
}

TEST_CASE("basis is a compact irreducible 36-dimensional algebra") {
  auto basis = spin9_basis();
  CHECK(basis.size() == 36);
  CHECK(is_bracket_closed(basis));
  for (auto& b : basis) CHECK(spin9_membership(b).member);
  auto irr = invariant_subspace_search(basis);
  CHECK(irr.irreducible);
  CHECK(irr.proved);
  CHECK(spin9_from_vectors().dim == 36);
  CHECK(spin9_invariant_two_forms().empty());
}

TEST_CASE("random so(16) element is rejected") {
  Sampler rng(91);
  Mat m(16, 16);
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b) {
      m(b, a) = rng.rational();
      m(a, b) = -m(b, a);
    }
  auto rep = spin9_membership(m);
  CHECK_FALSE(rep.member);
  CHECK_FALSE(rep.violated.empty());
}

TEST_CASE("prolongation vanishes") {
  auto p = spin9_prolongation();
  CHECK(p.direct_dim == 0);
  CHECK(p.functional_dim == 0);
  CHECK(p.stage1_dim == 112);
  CHECK(p.stage1_kills_8_alpha);
  CHECK(p.stage2_dim == 91);
  CHECK(p.stage2_e8_free);
  CHECK(p.transitive_zero);
}
