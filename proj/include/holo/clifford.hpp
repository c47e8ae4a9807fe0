#pragma once

#include <cstdint>
#include <vector>

#include "holo/form.hpp"
#include "holo/linalg.hpp"

namespace holo {

// Signed permutation matrix: (M v)[r] = sign[r] * v[col[r]].
struct Monomial {
  std::vector<int> col;
  std::vector<int8_t> sign;

  int size() const { return static_cast<int>(col.size()); }
  static Monomial identity(int n);
  Monomial operator-() const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.col == b.col && a.sign == b.sign; }
  Vec apply(const Vec& v) const;
  Mat to_mat() const;
};

// Complex signed permutation; phase k means i^k.
struct CMonomial {
  std::vector<int> col;
  std::vector<int8_t> phase;
  int size() const { return static_cast<int>(col.size()); }
  static CMonomial identity(int n);
  friend CMonomial operator*(const CMonomial& a, const CMonomial& b);
  friend CMonomial kron(const CMonomial& a, const CMonomial& b);
  Monomial realify() const;  // z = x + iy at real indices (2p, 2p+1)
};

Monomial kron(const Monomial& a, const Monomial& b);

// Real matrix realization of Cl(R^n) generators, gamma_i^2 = -1. For n <= 5 and
// n >= 9 the real space is a realified complex one.
class SpinRep {
 public:
  int n() const { return n_; }
  int dim() const { return static_cast<int>(gens_.empty() ? 0 : gens_[0].size()); }
  int complex_dim() const { return complex_dim_; }
  bool realified() const { return realified_; }

  const Monomial& generator(int i) const { return gens_.at(i - 1); }  // 1-based
  Monomial blade(Mask m) const;                                      // gamma_a1 ... gamma_ak, a1 < ... < ak
  Mat matrix(const Multivector& a) const;
  Vec act(const Multivector& a, const Vec& psi) const;
  // spin lift of a skew matrix M: sum_{a<b} 1/2 M[b][a] gamma_a gamma_b
  Mat lift(const Mat& skew) const;

  friend SpinRep build_spin_rep(int n);

 private:
  int n_ = 0;
  int complex_dim_ = 0;
  bool realified_ = false;
  std::vector<Monomial> gens_;
};

SpinRep build_spin_rep(int n);
// built once per n and shared read-only
const SpinRep& spin_rep(int n);

// 2-form <-> skew matrix: omega_ab (a<b) = M[b][a], so M e_a = sum_b omega_ab e_b
Mat skew_of(const Multivector& two_form);
Multivector two_form_of(const Mat& skew);

// sigma_T = 1/2 sum_k (e_k -| T) ^ (e_k -| T)
Multivector sigma_T(const Multivector& T);

struct SquareParts {
  Scalar t0;            // degree 0 part of T.T
  Multivector t4;       // degree 4 part
  Multivector full;     // T.T
  Scalar t0_formula;    // 1/6 sum_ij |T(e_i,e_j)|^2
  bool only_0_and_4 = false;
};
SquareParts square_parts(const Multivector& T);

// Determinant of a + omega + f e1234 on the complex 4-dim spinor space.
struct Det4Report {
  Scalar direct;        // complex determinant
  Scalar real_det;      // determinant of the realified 8x8 matrix
  Scalar closed_form;   // [(a+f)^2 + 2|w-|^2][(a-f)^2 + 2|w+|^2]
  Scalar printed_form;  // [(a+f)^2 + 4|w+|^2][(a-f)^2 + 4|w-|^2]
  bool agree = false;   // direct == closed_form
  bool real_is_square = false;
};
Det4Report det4(const Scalar& a, const Multivector& omega, const Scalar& f);

// determinant of a realified complex-linear matrix, as (re, im); entries must be rational
std::pair<Scalar, Scalar> complex_determinant(const Mat& realified);

}  // namespace holo
