#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "holo/form.hpp"
#include "holo/linalg.hpp"

namespace holo {

// Rationals p/q with p in [-9,9], q in [-9,9] \ {0}; fixed seeds everywhere.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Scalar rational() {
    std::uniform_int_distribution<int> num(-9, 9), den(-9, 8);
    int q = den(rng_);
    if (q >= 0) ++q;
    return Scalar::frac(num(rng_), q);
  }
  Scalar nonzero_rational() {
    for (;;) {
      Scalar r = rational();
      if (!r.is_zero()) return r;
    }
  }
  Scalar positive_rational() { return nonzero_rational().abs(); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Vec vector(int n) {
    Vec v(n);
    for (auto& x : v) x = rational();
    return v;
  }
  Vec nonzero_vector(int n) {
    for (;;) {
      Vec v = vector(n);
      if (!is_zero(v)) return v;
    }
  }
  // every blade of grade k gets a random coefficient
  Multivector form(int n, int k) {
    Multivector f(n);
    for (Mask m = 0; m < (Mask(1) << n); ++m)
      if (popcount(m) == k) f.add(m, rational());
    return f;
  }
  Multivector nonzero_form(int n, int k) {
    for (;;) {
      Multivector f = form(n, k);
      if (!f.is_zero()) return f;
    }
  }
  Vec combination(const std::vector<Vec>& basis) {
    if (basis.empty()) return {};
    Vec v(basis[0].size());
    for (auto& b : basis) {
      Scalar c = rational();
      for (size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
    }
    return v;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace holo
