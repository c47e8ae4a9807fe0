#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "holo/linalg.hpp"
#include "holo/random.hpp"

using namespace holo;

namespace {
Mat random_mat(Sampler& rng, int r, int c) {
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rng.rational();
  return m;
}
}  // namespace

TEST_CASE("determinant and inverse") {
  Mat m = Mat::from_rows({{2, 1}, {1, 1}});
  CHECK(determinant(m) == Scalar(1));
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == Mat::identity(2));
  CHECK_FALSE(inverse(Mat::from_rows({{1, 2}, {2, 4}})));
}

TEST_CASE("random inverses") {
  Sampler rng(21);
  for (int k = 0; k < 20; ++k) {
    Mat m = random_mat(rng, 4, 4);
    auto inv = inverse(m);
    if (determinant(m).is_zero()) {
      CHECK_FALSE(inv);
      continue;
    }
    REQUIRE(inv);
    CHECK(*inv * m == Mat::identity(4));
    CHECK(determinant(m) * determinant(*inv) == Scalar(1));
  }
}

TEST_CASE("rank nullity") {
  Sampler rng(22);
  for (int k = 0; k < 20; ++k) {
    Mat a = random_mat(rng, 3, 2), b = random_mat(rng, 2, 5);
    Mat m = a * b;  // rank <= 2
    auto ker = kernel(m);
    CHECK(rank(m) + static_cast<int>(ker.size()) == 5);
    CHECK(rank(m) <= 2);
    for (auto& v : ker) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("linear solve") {
  Mat a = Mat::from_rows({{1, 1}, {1, -1}});
  auto sol = solve_linear(a, {3, 1});
  CHECK(sol.consistent);
  CHECK(sol.unique);
  CHECK(sol.particular == Vec{2, 1});
  auto bad = solve_linear(Mat::from_rows({{1, 1}, {1, 1}}), {1, 2});
  CHECK_FALSE(bad.consistent);
  auto free = solve_linear(Mat::from_rows({{1, 1}}), {1});
  CHECK(free.consistent);
  CHECK(free.kernel.size() == 1);
}

TEST_CASE("echelon coordinates") {
  Echelon e(3, true);
  CHECK(e.insert(to_sparse({1, 0, 1})));
  CHECK(e.insert(to_sparse({0, 1, 1})));
  CHECK_FALSE(e.insert(to_sparse({1, 1, 2})));
  auto c = e.coordinates(to_sparse({2, 3, 5}));
  REQUIRE(c);
  CHECK(*c == Vec{2, 3});
  CHECK_FALSE(e.coordinates(to_sparse({0, 0, 1})));
  auto k = e.kernel();
  REQUIRE(k.size() == 1);
  CHECK(dot(to_dense(k[0], 3), {1, 0, 1}).is_zero());
}

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(Mat::from_rows({{2, 1}, {1, 2}})));
  CHECK_FALSE(is_positive_definite(Mat::from_rows({{1, 2}, {2, 1}})));
  CHECK_FALSE(is_positive_definite(Mat::from_rows({{0, 0}, {0, 1}})));
}

TEST_CASE("sqrt entries") {
  Scalar r = Scalar::sqrt_of(2);
  Mat m = Mat::from_rows({{r, 1}, {1, r}});
  CHECK(determinant(m) == Scalar(1));
  CHECK(rank(m) == 2);
}
