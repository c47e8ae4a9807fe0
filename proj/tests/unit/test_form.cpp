#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "holo/form.hpp"
#include "holo/random.hpp"

using namespace holo;

namespace {
Multivector e(int n, std::vector<int> idx, Scalar c = 1) { return Multivector::blade(n, idx, c); }
}  // namespace

TEST_CASE("blade ordering signs") {
  CHECK(e(3, {2, 1}) == -e(3, {1, 2}));
  CHECK(e(3, {3, 1, 2}) == e(3, {1, 2, 3}));
  CHECK(e(3, {1, 1}).is_zero());
  CHECK(permutation_sign({2, 1, 3}) == -1);
  CHECK(permutation_sign({1, 1}) == 0);
}

TEST_CASE("wedge is graded commutative") {
  Sampler rng(3);
  for (int i = 0; i < 30; ++i) {
    int n = rng.integer(3, 6), p = rng.integer(1, 3), q = rng.integer(1, 3);
    auto a = rng.form(n, p), b = rng.form(n, q);
    Scalar sign = (p * q) % 2 ? Scalar(-1) : Scalar(1);
    CHECK(wedge(a, b) == wedge(b, a) * sign);
  }
}

TEST_CASE("contraction is an antiderivation") {
  Sampler rng(4);
  for (int i = 0; i < 30; ++i) {
    int n = 5, p = rng.integer(2, 3);
    auto x = Multivector::vector(n, rng.vector(n));
    auto a = rng.form(n, p), b = rng.form(n, 2);
    if (x.is_zero()) continue;
    Scalar sign = p % 2 ? Scalar(-1) : Scalar(1);
    CHECK(contract(x, wedge(a, b)) == wedge(contract(x, a), b) + wedge(a, contract(x, b)) * sign);
    CHECK(contract(x, contract(x, a)).is_zero());
  }
}

TEST_CASE("hodge star") {
  CHECK(hodge_star(e(3, {1})) == e(3, {2, 3}));
  CHECK(hodge_star(e(4, {1, 2})) == e(4, {3, 4}));
  Sampler rng(5);
  auto a = rng.form(5, 2), b = rng.form(5, 2);
  // a ^ *b = (a,b) vol
  CHECK(wedge(a, hodge_star(b)) == e(5, {1, 2, 3, 4, 5}, form_inner(a, b)));
}

TEST_CASE("clifford product with e_i^2 = -1") {
  auto e1 = Multivector::basis_vector(3, 1), e2 = Multivector::basis_vector(3, 2);
  CHECK(clifford_product(e1, e1) == Multivector::scalar(3, -1));
  CHECK(clifford_product(e1, e2) == e(3, {1, 2}));
  CHECK(clifford_product(e2, e1) == -e(3, {1, 2}));
  CHECK(clifford_product(e(3, {1, 2}), e(3, {1, 2})) == Multivector::scalar(3, -1));
  // associativity on random elements
  Sampler rng(6);
  for (int i = 0; i < 10; ++i) {
    auto a = rng.form(4, 1) + rng.form(4, 2), b = rng.form(4, 2), c = rng.form(4, 3);
    CHECK(clifford_product(clifford_product(a, b), c) == clifford_product(a, clifford_product(b, c)));
  }
}

TEST_CASE("evaluation of a 2-form") {
  auto w = e(3, {1, 2}, 3);
  CHECK(evaluate(w, {{1, 0, 0}, {0, 1, 0}}) == Scalar(3));
  CHECK(evaluate(w, {{0, 1, 0}, {1, 0, 0}}) == Scalar(-3));
  CHECK(norm2(w) == Scalar(9));
}

TEST_CASE("grades") {
  auto mixed = e(4, {1}) + e(4, {1, 2});
  CHECK(mixed.grade() == -1);
  CHECK(mixed.part(2) == e(4, {1, 2}));
  CHECK(Multivector(4).grade() == 0);
}
