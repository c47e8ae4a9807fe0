#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "holo/scalar.hpp"

namespace holo {

using Mask = std::uint32_t;

constexpr int kMaxDim = 16;

int popcount(Mask m);
Mask mask_of(const std::vector<int>& idx);  // 1-based indices, order ignored
std::vector<int> indices_of(Mask m);        // increasing, 1-based
// sign of e_A ^ e_B rewritten in increasing order (0 if they overlap)
int wedge_sign(Mask a, Mask b);
// e_A * e_B = clifford_sign(a,b) e_{A xor B}, with e_i e_i = -1
int clifford_sign(Mask a, Mask b);
// sign of the permutation sorting idx (0 if repeated)
int permutation_sign(const std::vector<int>& idx);

// Element of the exterior algebra of R^n; the same container serves as a Clifford
// algebra element. Zero coefficients are never stored.
class Multivector {
 public:
  Multivector() = default;
  explicit Multivector(int n);

  static Multivector scalar(int n, const Scalar& c);
  static Multivector vector(int n, const std::vector<Scalar>& comps);
  static Multivector basis_vector(int n, int i);
  // e_{i1} ^ ... ^ e_{ik}; indices may be unsorted (sign applied)
  static Multivector blade(int n, const std::vector<int>& idx, const Scalar& c = Scalar(1));

  int dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  // common grade, -1 if mixed, 0 for the zero element
  int grade() const;
  bool is_homogeneous() const;
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  Scalar coeff(Mask m) const;
  Scalar coeff(const std::vector<int>& idx) const;
  void add(Mask m, const Scalar& c);
  Multivector part(int k) const;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(const Scalar& c);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const Scalar& c) { return a *= c; }
  friend Multivector operator*(const Scalar& c, Multivector a) { return a *= c; }
  friend bool operator==(const Multivector& a, const Multivector& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  // "e135*(1/6) + ..." style, for messages
  std::string str() const;

 private:
  int n_ = 0;
  std::map<Mask, Scalar> terms_;
};

using KForm = Multivector;
using CliffordElement = Multivector;

struct FormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Multivector wedge(const Multivector& a, const Multivector& b);
// x must be a 1-form; a must not be of pure grade 0
Multivector contract(const Multivector& x, const Multivector& a);
Multivector contract(int i, const Multivector& a);  // e_i, 1-based
Multivector hodge_star(const Multivector& a);
Scalar form_inner(const Multivector& a, const Multivector& b);
Scalar norm2(const Multivector& a);
Multivector clifford_product(const Multivector& a, const Multivector& b);
Multivector clifford_commutator(const Multivector& a, const Multivector& b);
// evaluate a k-form on k vectors (rows of vecs)
Scalar evaluate(const Multivector& a, const std::vector<std::vector<Scalar>>& vecs);

}  // namespace holo
