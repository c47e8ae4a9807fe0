#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "holo/clifford.hpp"
#include "holo/form.hpp"
#include "holo/lie.hpp"

namespace holo {

enum class RepMode { vector, spinor };

// generators of the algebra g*_T: skew(e_i -| T) in so(n) (grade 3 only) or the
// spin images of e_i -| T
std::vector<Mat> g_star_generators(const Multivector& T, RepMode mode);
ClosureReport g_star(const Multivector& T, RepMode mode, const AnalyzeOptions& opt = {});

// natural action of a skew matrix on forms: sum_i (M e_i) ^ (e_i -| T)
Multivector derivation_action(const Mat& skew, const Multivector& T);
// 2-forms whose derivation action kills T
std::vector<Multivector> isotropy_algebra(const Multivector& T);
// k-forms on R^n killed by the derivation action of every given skew matrix
std::vector<Multivector> invariant_forms(const std::vector<Mat>& skews, int n, int k);

// joint kernel of (e_i -| T) on the real spinor space
std::vector<Vec> invariant_spinors(const Multivector& T);
// k-forms T on R^n with (e_i -| T).psi = 0 for all i
std::vector<Multivector> annihilating_forms(const Vec& psi, int n, int k);
// +1 eigenspace of the volume element (n even)
std::vector<Vec> half_spinors(int n);

// index of e_a ^ e_b (a<b, 1-based) among the C(n,2) coordinates, lexicographic
int pair_index(int n, int a, int b);
Vec two_form_coords(const Multivector& w);
Multivector two_form_from_coords(int n, const Vec& c);

// 3-forms T with skew(e_i -| T) in span(g) for every i
std::vector<Multivector> antisym_prolongation(const std::vector<Mat>& g, int n);
// same, with g given by the linear functionals cutting it out of Lambda^2
std::vector<Multivector> prolongation_from_functionals(const std::vector<SparseVec>& functionals, int n);

struct SupportReport {
  int dim = 0;                     // n - dim ker(X -> X -| T)
  std::vector<Vec> kernel;         // vectors X with X -| T = 0
  std::vector<Vec> support_basis;  // orthogonal complement of the kernel
};
SupportReport support_reduction(const Multivector& T);

struct SplitComponent {
  std::vector<Vec> subspace;
  Multivector form;
};
struct SplitReport {
  std::vector<SplitComponent> components;
  bool resums = false;    // components add up to T
  bool complete = false;  // eigen-decomposition of the commutant succeeded
};
SplitReport split_torsion(const Multivector& T, std::uint64_t seed = 1);

struct TwoFormReport {
  std::vector<Multivector> commutant;  // 2-forms commuting with g*_T
  bool nondegenerate_found = false;
  int max_rank = 0;
};
TwoFormReport invariant_two_forms(const Multivector& T, std::uint64_t seed = 1);

// (3,0)-tensor on R^n, dense
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(int n) : n_(n), a_(static_cast<size_t>(n) * n * n) {}
  int dim() const { return n_; }
  Scalar& operator()(int i, int j, int k) { return a_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
  const Scalar& operator()(int i, int j, int k) const { return a_[(static_cast<size_t>(i) * n_ + j) * n_ + k]; }
  bool is_zero() const;
  bool antisymmetric_in_first_two() const;
  bool antisymmetric_in_last_two() const;
  bool totally_antisymmetric() const;
  Tensor3 operator-() const;
  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(Tensor3 a, const Scalar& s);
  friend bool operator==(const Tensor3& a, const Tensor3& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  int n_ = 0;
  std::vector<Scalar> a_;
};

Scalar tensor_inner(const Tensor3& a, const Tensor3& b);
Tensor3 tensor_of_form(const Multivector& T3);
Multivector form_of_tensor(const Tensor3& T);  // requires total antisymmetry
// T_V(X,Y,Z) = g(X,Z) V_Y - g(Y,Z) V_X
Tensor3 vector_torsion(const Vec& v);
// c(T)(Z) = sum_i T(e_i, Z, e_i)
Vec trace_contraction(const Tensor3& T);
// 1/3 cyclic sum
Tensor3 cyclic_part(const Tensor3& T);

struct TorsionDecomposition {
  Vec vector;              // V with vector part T_V
  Tensor3 vector_part;
  Multivector skew;        // 3-form part
  Tensor3 skew_part;
  Tensor3 prime_part;
  std::set<std::string> classes;  // subset of {vectorial, skew, prime}
  bool resums = false;
  bool orthogonal = false;
};
TorsionDecomposition decompose_torsion(const Tensor3& T);

// Phi(A)(X,Y,Z) = A(X,Y,Z) - A(Y,X,Z); inverse 2 Phi^-1(T) = T(X,Y,Z) - T(Y,Z,X) + T(Z,X,Y)
Tensor3 phi(const Tensor3& A);
Tensor3 phi_inverse(const Tensor3& T);

}  // namespace holo
