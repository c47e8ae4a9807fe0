#pragma once

#include <array>
#include <string>
#include <vector>

#include "holo/clifford.hpp"
#include "holo/form.hpp"
#include "holo/linalg.hpp"

namespace holo {

// g = h + m with an orthonormal frame X_1..X_n of m and a basis H_1..H_r of h.
//   [X_i, X_j] = sum_k cm[i][j][k] X_k + sum_a ch[i][j][a] H_a
//   [H_a, X_j] = sum_k adh[a](k, j) X_k,   [H_a, H_b] = 0 (h abelian here)
struct ReductiveModel {
  int n = 0;
  int nh = 0;
  std::vector<std::vector<Vec>> cm;
  std::vector<std::vector<Vec>> ch;
  std::vector<Mat> adh;

  Vec bracket_m(int i, int j) const { return cm[i][j]; }
  // Jacobi identity and Ad(h)-invariance of the bracket and the metric
  bool jacobi() const;
  bool reductive() const;
};

// Aloff-Wallach N(1,1) = SU(3)/S^1 with metric g_{s,y};
// X1 = A12, X2 = A~12, X3..X6 = sqrt(y) A13, A~13, A23, A~23, X7 = s L / 3, h = span(H).
// Structure constants are rational functions of (s, y); sqrt(y) never appears.
ReductiveModel aloff_wallach_model(const Scalar& s, const Scalar& y);
// su(2) with [e1,e2] = 2 e3 (cyclic), biinvariant metric, h = 0
ReductiveModel su2_model();

// Levi-Civita map: column y of lam[x] is Lambda(X_x) X_y
std::vector<Mat> levi_civita_map(const ReductiveModel& m);
// Lambda + 2 kappa skew(X -| T): the linear connection of the spinor term kappa (X -| T)
std::vector<Mat> connection_with_torsion(const std::vector<Mat>& lam, const Multivector& T, const Scalar& kappa);

struct CurvatureReport {
  std::vector<std::vector<Mat>> R;  // R[i][j], i < j filled
  bool flat = false;
};
// R(X,Y) = [L(X), L(Y)] - L([X,Y]_m) - ad([X,Y]_h)
CurvatureReport nomizu_curvature(const ReductiveModel& m, const std::vector<Mat>& lam);
// <R(X_i,X_j) X_j, X_i>
Scalar sectional_curvature(const CurvatureReport& c, int i, int j);

// kernel of the lifted isotropy action on Delta_n
std::vector<Vec> fixed_spinors(const ReductiveModel& m);
// k-forms on m annihilated by every ad(H_a)
std::vector<Multivector> invariant_form_basis(const ReductiveModel& m, int k);
bool is_invariant(const ReductiveModel& m, const Multivector& a);
// d a(Z0..Zk) = sum_{i<j} (-1)^{i+j} a([Zi,Zj]_m, Z0, .., Zk without Zi, Zj); invariant input only
Multivector coset_differential(const ReductiveModel& m, const Multivector& a);

// Solve sum_k c_k kappa rho(e_i -| F_k) psi = -M_i psi for i = 1..n.
struct SpinorSolution {
  bool consistent = false;
  bool unique = false;
  int rank = 0;
  int unknowns = 0;
  std::vector<Scalar> coeffs;
  Multivector form;
  bool residual_zero = false;
  bool invariant = false;  // set by solvers that know the isotropy
};
SpinorSolution solve_spinor_system(const Vec& psi, const std::vector<Multivector>& ansatz, const std::vector<Mat>& M,
                                   const Scalar& kappa);

// Aloff-Wallach spinor equation Lambda~(X) psi + (X -| T) psi = 0
struct AWContext {
  Scalar s, y;
  ReductiveModel model;
  std::vector<Mat> lam;
  std::vector<Mat> lifts;  // Lambda~(X_i) on Delta_7
  AWContext(const Scalar& s, const Scalar& y);
};
SpinorSolution solve_torsion(const AWContext& ctx, const Vec& psi, const std::vector<Multivector>& ansatz);
std::vector<Multivector> invariant_3forms();  // thirteen, in the fixed printed order
std::vector<Multivector> invariant_4forms();  // thirteen, in the fixed printed order

// Fixed spinors identified with the printed psi_3..psi_6 up to sign: kernels of the printed
// T_3..T_6 equations at (s,y) = (2,4), rescaled to equal norm. Signs are fixed in sasakian.
std::array<Vec, 4> probe_spinors();

// omega(X,Y,Z) = -<X.Y.Z.psi, psi> / |psi|^2
Multivector g2_form_of_spinor(const Vec& psi);

enum class G2Type { W1, W3, W1_W3, other };
std::string to_string(G2Type t);
struct G2Report {
  G2Type type = G2Type::other;
  Scalar pairing;     // (T, omega)
  bool cocalibrated;  // d * omega = 0
};
// T is the characteristic torsion (4T for the spinor term (X -| T))
G2Report g2_type(const ReductiveModel& m, const Multivector& omega, const Multivector& T);
G2Type g2_class(const Multivector& omega, const Multivector& T);

struct ScalarCurvatures {
  Scalar riemannian;  // 2 (T,w)^2 - 1/2 |T|^2
  Scalar connection;  // 2 (T,w)^2 - 2 |T|^2
};
ScalarCurvatures scalars_from_torsion(const Multivector& omega, const Multivector& T);
// Ric(X_i, X_j) = 1/2 (X_i -| dT, X_j -| *omega)
Mat ricci_characteristic(const Multivector& omega, const Multivector& dT);

struct Root {
  double s = 0, y = 0;
  double residual3 = 0, residual5 = 0;
};
// common zeros of the two scalar-curvature polynomials in [0.1, 3]^2
std::vector<Root> scan_roots(double lo = 0.1, double hi = 3.0, double step = 0.01);

}  // namespace holo
