#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "holo/clifford.hpp"
#include "holo/lie.hpp"
#include "holo/random.hpp"

using namespace holo;

namespace {
Mat E(int n, int a, int b) {  // e_ab as a skew matrix
  return skew_of(Multivector::blade(n, {a, b}));
}
std::vector<Mat> so(int n) {
  std::vector<Mat> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back(E(n, a, b));
  return out;
}
}  // namespace

TEST_CASE("closure of two rotations in R^3 is so(3)") {
  auto basis = bracket_closure({E(3, 1, 2), E(3, 2, 3)});
  CHECK(basis.size() == 3);
  CHECK(is_bracket_closed(basis));
}

TEST_CASE("so(n) reports") {
  for (int n = 3; n <= 5; ++n) {
    auto rep = analyze(so(n));
    CHECK(rep.dim == n * (n - 1) / 2);
    CHECK(rep.derived_dim == rep.dim);
    CHECK(rep.center_dim == 0);
    CHECK(rep.semisimple);
    CHECK(rep.compact);
    CHECK(rep.centralizer_dim == n / 2);
    REQUIRE(rep.irreducibility);
    CHECK(rep.irreducibility->irreducible);
    CHECK(rep.irreducibility->proved);
  }
}

TEST_CASE("so(4) block reductions") {
  // u(1) + u(1) acting on R^2 + R^2: abelian, reducible
  auto rep = analyze({E(4, 1, 2), E(4, 3, 4)});
  CHECK(rep.dim == 2);
  CHECK(rep.center_dim == 2);
  CHECK_FALSE(rep.semisimple);
  REQUIRE(rep.irreducibility);
  CHECK_FALSE(rep.irreducibility->irreducible);
  CHECK_FALSE(rep.irreducibility->witness.empty());
}

TEST_CASE("Killing form of so(3)") {
  auto k = killing_form(so(3));
  CHECK(k.rank == 3);
  // B(X, X) = (n - 2) tr(X^2) = -2 on a unit rotation
  CHECK(k.form(0, 0) == Scalar(-2));
}

TEST_CASE("non-compact algebra: sl(2) inside gl(2)") {
  Mat h = Mat::from_rows({{1, 0}, {0, -1}}), e = Mat::from_rows({{0, 1}, {0, 0}}), f = Mat::from_rows({{0, 0}, {1, 0}});
  auto rep = analyze({e, f}, {false, true, 1});
  CHECK(rep.dim == 3);
  CHECK(rep.semisimple);
  CHECK_FALSE(rep.compact);
  MatrixSpan span(2);
  for (auto& b : rep.basis) span.insert(b);
  CHECK(span.contains(h));
}

TEST_CASE("reduced basis spans the same space") {
  Sampler rng(41);
  auto gens = std::vector<Mat>{skew_of(rng.form(5, 2)), skew_of(rng.form(5, 2))};
  auto basis = bracket_closure(gens);
  auto red = reduced_basis(basis);
  CHECK(red.size() == basis.size());
  MatrixSpan s(5);
  for (auto& b : red) s.insert(b);
  for (auto& b : basis) CHECK(s.contains(b));
}

TEST_CASE("ad is a representation") {
  auto basis = so(4);
  auto ad = adjoint_matrices(basis);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      auto c = MatrixSpan(4, true);
      for (auto& b : basis) c.insert(b);
      auto co = c.coordinates(commutator(basis[i], basis[j]));
      REQUIRE(co);
      Mat lhs = commutator(ad[i], ad[j]);
      Mat rhs(ad[0].rows(), ad[0].cols());
      for (size_t k = 0; k < basis.size(); ++k) rhs += ad[k] * (*co)[k];
      CHECK(lhs == rhs);
    }
}

TEST_CASE("rational eigenspaces") {
  Mat s = Mat::from_rows({{2, 1}, {1, 2}});
  auto eig = rational_eigenspaces(s);
  REQUIRE(eig.size() == 2);
  int total = 0;
  for (auto& [v, space] : eig) {
    total += static_cast<int>(space.size());
    for (auto& x : space) CHECK(s.apply(x) == scale(x, v));
  }
  CHECK(total == 2);
  CHECK(rationalize(0.3333333333) == mpq_class(1, 3));
}
