#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "holo/random.hpp"
#include "holo/scalar.hpp"

using holo::Scalar;

TEST_CASE("rational arithmetic is exact") {
  Scalar a = Scalar::frac(1, 3), b = Scalar::frac(1, 6);
  CHECK(a + b == Scalar::frac(1, 2));
  CHECK(a * b == Scalar::frac(1, 18));
  CHECK(a / b == Scalar(2));
  CHECK((a - a).is_zero());
  CHECK(Scalar::frac(2, -4) == Scalar::frac(-1, 2));
}

TEST_CASE("square roots are reduced") {
  Scalar r = Scalar::sqrt_of(12);
  CHECK(r.root() == 3);
  CHECK(r.root_coeff() == 2);
  CHECK(r * r == Scalar(12));
  CHECK(Scalar::sqrt_of(9) == Scalar(3));
  CHECK(Scalar::sqrt_of(0).is_zero());
}

TEST_CASE("quadratic field operations") {
  Scalar x = Scalar(1) + Scalar::sqrt_of(2);
  CHECK(x * x.conj() == Scalar(-1));
  CHECK(x / x == Scalar(1));
  CHECK((Scalar(1) / x) == Scalar::sqrt_of(2) - Scalar(1));
  CHECK(pow(x, 2) == Scalar(3) + Scalar::sqrt_of(2) * Scalar(2));
}

TEST_CASE("different radicals do not mix") {
  CHECK_THROWS_AS(Scalar::sqrt_of(2) + Scalar::sqrt_of(3), holo::ScalarError);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), holo::ScalarError);
}

TEST_CASE("sign of a + b sqrt d") {
  CHECK((Scalar::sqrt_of(2) - Scalar::frac(141, 100)).sign() == 1);
  CHECK((Scalar::sqrt_of(2) - Scalar::frac(142, 100)).sign() == -1);
  CHECK((Scalar(3) - Scalar::sqrt_of(3) * Scalar(2)).sign() == -1);
  CHECK(Scalar::sqrt_of(5) / Scalar(2) > Scalar(1));
}

TEST_CASE("parse and print round trip") {
  for (const char* t : {"3/4", "-1/2", "0", "7"}) CHECK(Scalar::parse(t).str() == t);
  Scalar s = Scalar::parse("sqrt(5)/2");
  CHECK(s * s == Scalar::frac(5, 4));
  CHECK(Scalar::parse(Scalar::parse("-1/2*sqrt(3)").str()) == Scalar::parse("-1/2*sqrt(3)"));
  CHECK_THROWS(Scalar::parse("1/0"));
  CHECK_THROWS(Scalar::parse("abc"));
}

TEST_CASE("field axioms on random samples") {
  holo::Sampler rng(11);
  for (int i = 0; i < 200; ++i) {
    Scalar a = rng.rational() + rng.rational() * Scalar::sqrt_of(7);
    Scalar b = rng.rational() + rng.rational() * Scalar::sqrt_of(7);
    Scalar c = rng.rational();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(std::abs((a * b).to_double() - a.to_double() * b.to_double()) < 1e-9);
  }
}
