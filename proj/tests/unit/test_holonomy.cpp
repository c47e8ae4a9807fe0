#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "holo/holonomy.hpp"
#include "holo/random.hpp"

using namespace holo;

namespace {
Multivector e(int n, std::vector<int> idx, Scalar c = 1) { return Multivector::blade(n, idx, c); }
Multivector g2_form() {
  return e(7, {1, 2, 7}) + e(7, {1, 3, 5}) - e(7, {1, 4, 6}) - e(7, {2, 3, 6}) - e(7, {2, 4, 5}) + e(7, {3, 4, 7}) +
         e(7, {5, 6, 7});
}
AnalyzeOptions fast() {
  AnalyzeOptions o;
  o.irreducibility = false;
  return o;
}
}  // namespace

TEST_CASE("closure dimensions of basic 3-forms") {
  CHECK(g_star(e(3, {1, 2, 3}), RepMode::vector, fast()).dim == 3);
  CHECK(g_star(e(5, {1, 2, 3}) + e(5, {3, 4, 5}, 2), RepMode::vector, fast()).dim == 10);
  CHECK(g_star(g2_form(), RepMode::vector, fast()).dim == 21);
  CHECK(g_star(e(6, {1, 2, 3, 4, 5, 6}), RepMode::spinor, fast()).dim == 21);
  CHECK_THROWS(g_star(Multivector(5), RepMode::vector, fast()));
}

TEST_CASE("G2 form: isotropy, invariant spinor, prolongation") {
  auto iso = isotropy_algebra(g2_form());
  CHECK(iso.size() == 14);
  std::vector<Mat> g;
  for (auto& w : iso) g.push_back(skew_of(w));
  CHECK(bracket_closure(g).size() == 14);
  CHECK(antisym_prolongation(g, 7).empty());
  CHECK(invariant_forms(g, 7, 3).size() == 1);
  CHECK(invariant_forms(g, 7, 4).size() == 1);
}

TEST_CASE("derivation action matches commutator on 2-forms") {
  Sampler rng(51);
  auto a = rng.form(5, 2), w = rng.form(5, 2);
  Mat A = skew_of(a);
  CHECK(skew_of(derivation_action(A, w)) == commutator(A, skew_of(w)));
}

TEST_CASE("random 3-forms: semisimple, perfect, no invariant spinor") {
  Sampler rng(52);
  for (int n : {5, 6, 7})
    for (int k = 0; k < 4; ++k) {
      auto T = rng.nonzero_form(n, 3);
      auto rep = g_star(T, RepMode::vector, fast());
      CHECK(rep.semisimple);
      CHECK(rep.derived_dim == rep.dim);
      CHECK(invariant_spinors(T).empty());
    }
}

TEST_CASE("annihilating forms are annihilating") {
  Sampler rng(53);
  auto plus = half_spinors(8);
  CHECK(plus.size() == 8);
  Vec psi = rng.combination(plus);
  auto forms = annihilating_forms(psi, 8, 4);
  const SpinRep& r = spin_rep(8);
  for (auto& f : forms)
    for (int i = 1; i <= 8; ++i) CHECK(is_zero(r.act(contract(i, f), psi)));
  // computed value; the claimed 7 is tracked separately
  CHECK(forms.size() == 27);
}

TEST_CASE("annihilating 4-forms of a generic positive spinor have dimension 7" * doctest::should_fail()) {
  Sampler rng(54);
  Vec psi = rng.combination(half_spinors(8));
  CHECK(annihilating_forms(psi, 8, 4).size() == 7);
}

TEST_CASE("support reduction drops the kernel") {
  auto T = e(5, {1, 2, 3});
  auto s = support_reduction(T);
  CHECK(s.dim == 3);
  CHECK(s.kernel.size() == 2);
}

TEST_CASE("split of a sum on orthogonal supports") {
  auto T = e(6, {1, 2, 3}) + e(6, {4, 5, 6}, 2);
  auto sp = split_torsion(T);
  CHECK(sp.resums);
  CHECK(sp.components.size() == 2);
}

TEST_CASE("torsion decomposition") {
  Sampler rng(55);
  Tensor3 t(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        if (i != j) {
          Scalar v = rng.rational();
          t(i, j, k) += v;
          t(j, i, k) -= v;
        }
  auto d = decompose_torsion(t);
  CHECK(d.resums);
  CHECK(d.orthogonal);
  CHECK(trace_contraction(d.prime_part) == Vec(4));
  CHECK(phi(phi_inverse(t)) == t);
  auto pure = decompose_torsion(tensor_of_form(e(4, {1, 2, 3})));
  CHECK(pure.classes == std::set<std::string>{"skew"});
  auto vec = decompose_torsion(vector_torsion({1, 0, 0, 0}));
  CHECK(vec.classes == std::set<std::string>{"vectorial"});
}

TEST_CASE("pair index and 2-form coordinates") {
  CHECK(pair_index(4, 1, 2) == 0);
  CHECK(pair_index(4, 3, 4) == 5);
  Sampler rng(56);
  auto w = rng.form(6, 2);
  CHECK(two_form_from_coords(6, two_form_coords(w)) == w);
}
