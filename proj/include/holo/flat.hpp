#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "holo/clifford.hpp"
#include "holo/holonomy.hpp"

namespace holo {

using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Point = std::vector<double>;

RMat to_real(const Mat& m);
RVec to_real(const Vec& v);
RMat expm(const RMat& a);

// Throws FormError naming an element of h*_T that does not kill psi0.
void check_parallel_precondition(const Multivector& T, const Vec& psi0);

// psi(m) = Exp(-m -| T) psi0; spinor term (X -| T)
RVec parallel_spinor_field(const Multivector& T, const Vec& psi0, const Point& m, bool check = true);
// |(psi(m + h X) - psi(m)) / h + (X -| T) psi(m)|
double finite_difference_residual(const Multivector& T, const Vec& psi0, const Point& m, const Point& dir, double h);

// Linear connection A(X) = 2 skew(X -| T) for the spinor term (X -| T); transport along
// a straight edge of length L in unit direction u is exp(-L A(u)).
RMat edge_transport(const Multivector& T, const Point& from, const Point& to);
RMat transport_loop(const Multivector& T, const std::vector<Point>& loop);

struct RotationInfo {
  double angle = 0;
  std::array<double, 3> axis{};
};
RotationInfo rotation_info(const RMat& r);

// -1/2 e123: the spinor-normalized form of the cross-product connection on R^3
Multivector cartan_torsion();
// right triangle with legs of length size in the coordinate plane orthogonal to e_axis
std::vector<Point> coordinate_triangle(int axis, double size);

struct LoopAlgebraReport {
  std::vector<RMat> transports;
  std::vector<Mat> generators;  // rational approximations of the rotation generators
  double axis_det = 0;
  bool independent = false;
  int closure_dim = 0;
};
LoopAlgebraReport loop_holonomy_algebra(const Multivector& T, const std::vector<std::vector<Point>>& loops);

struct IntegrabilityReport {
  Mat endomorphism;
  Scalar real_det;
  std::optional<std::pair<Scalar, Scalar>> complex_det;
  std::optional<Det4Report> lemma;  // n = 4 only
  bool lemma_agrees = false;
};
// 3s dT - 8 s^2 sigma + 2 s deltaT + 1/4 scal_s acting on spinors
IntegrabilityReport integrability_endomorphism(const Multivector& dT, const Multivector& sigma, const Multivector& deltaT,
                                               const Scalar& scal_s, const Scalar& s);

struct ParameterConstraint {
  enum class Kind { quotient, quadratic, unconstrained, inconsistent } kind = Kind::unconstrained;
  Scalar s;          // quotient branch
  Scalar s_squared;  // quadratic branch
  Scalar sigma_mean;
  Scalar dT_mean;
  std::string describe() const;
};
ParameterConstraint parameter_constraints(const Multivector& T, const Multivector& dT, const Vec& psi, const Scalar& scal_g);

// -1/2 sum_ij (e_i -| e_j -| T) ^ (e_i -| e_j -| omega)
Multivector codifferential_correction(const Multivector& T, const Multivector& omega);
Multivector nabla_codifferential(const Multivector& T, const Multivector& omega, const Multivector& delta_g_omega);

struct TwoFormIdentities {
  Multivector delta;              // 1/4 sum Omega_bj T_bjg e_g
  Multivector delta_contraction;  // 1/2 (Omega -| T)
  Multivector d;                  // sum_j (e_j -| Omega) ^ (e_j -| T)
  Multivector d_coordinates;      // coordinate formula
  Scalar bochner;
  std::optional<Scalar> bochner_adapted;  // when Omega = sum A_k e_{2k-1,2k}
  bool consistent = false;
};
TwoFormIdentities parallel_two_form_identities(const Multivector& omega, const Multivector& T);

}  // namespace holo
