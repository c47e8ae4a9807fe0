#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "holo/form.hpp"
#include "holo/homogeneous.hpp"
#include "holo/linalg.hpp"

namespace holo {

// su(2) acting on span(e3..e6): e34 + e56, e35 - e46, e36 + e45
std::array<Multivector, 3> su2_structure_generators();
// de1 = e35 + e46, de2 = e45 - e36, de7 = e34 - e56
Multivector contact_form_differential(int j);

// x11 x12 x17 x21 x22 x27 x71 x72 x77 w: sum x_ij e_i ^ de_j + w e127
std::vector<Multivector> su2_family_3forms();
// x_{ij,k} e_i ^ e_j ^ de_k for ij in {12, 17, 27}, k in {1, 2, 7} (pair-major), then w e3456
std::vector<Multivector> su2_family_4forms();
bool su2_invariant(const Multivector& f);
// joint kernel of the su(2) spin action: Delta_7^0
std::vector<Vec> su2_fixed_spinors();

// psi3..psi6 with signs fixed so that the Veronese solver reproduces the closed form
const std::array<Vec, 4>& aligned_fixed_spinors();
Vec fixed_spinor(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

struct VeroneseSolution {
  std::array<Scalar, 10> closed_form;
  SpinorSolution solved;
  bool agree = false;
};
// (X - 2 X -| T) psi = 0 over the 3-form family
VeroneseSolution veronese_torsion(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);
// same over the 4-form family; no closed form
SpinorSolution veronese_4form(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);
Multivector family_form(const std::array<Scalar, 10>& x);

// (X - 2 X -| T) psi = 0 for every basis vector X
bool killing_to_parallel_check(const Vec& psi, const Multivector& T);

struct FamilyReport {
  int jacobian_rank = 0;     // generic rank of the Veronese differential
  Scalar sphere_invariant;   // sum x_ij^2 (w excluded)
  bool sphere_constant = false;
  int samples = 0;
};
FamilyReport family_dimension_report(std::uint64_t seed = 7, int samples = 20);

// g*_{2T} in so(7) against the G2 form of psi: every generator must preserve it
struct InclusionReport {
  int holonomy_dim = 0;
  int g2_dim = 0;                // isotropy algebra of omega_psi
  bool contained = false;        // g*_{2T} inside g_2(omega_psi)
};
InclusionReport holonomy_inclusion(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

}  // namespace holo
