#pragma once

#include <array>
#include <vector>

#include "holo/form.hpp"

// Closed-form expressions as printed, used as oracles by tests and the acceptance run.
// Nothing here is computed from the model; every function transcribes a formula.
namespace holo::ref {

Multivector X(std::initializer_list<int> idx, const Scalar& c = Scalar(1));  // blade in R^7

// lift of the Levi-Civita map: coefficients of e_a . e_b (a < b)
Multivector lambda_tilde(int i, const Scalar& s, const Scalar& y);

// seven-term Ansatz alpha..eta: X135, X146, X245, X236, X127, X347, X567
std::vector<Multivector> ansatz7();
Multivector T3(const Scalar& s, const Scalar& y);
Multivector T4(const Scalar& s, const Scalar& y);
Multivector T5(const Scalar& s, const Scalar& y);
Multivector T6(const Scalar& s, const Scalar& y);
Multivector T_k(int k, const Scalar& s, const Scalar& y);
// the four linear systems in alpha..eta (k = 3..6); returns the seven left-hand sides
std::vector<Scalar> system(int k, const Scalar& s, const Scalar& y, const std::vector<Scalar>& c);
// coefficients of T_k in the seven-term Ansatz
std::vector<Scalar> T_coeffs(int k, const Scalar& s, const Scalar& y);
Multivector T_undeformed();  // s = y = 1
Multivector T_opposite();    // sqrt(3)/6 (X135 + X146 - X245 + X236), at (sqrt(3)/2, 2)
Scalar s_opposite_T();       // sqrt(3)/2

// thirteen invariant 3-forms in printed order
std::vector<Multivector> ansatz13();
Multivector T_ab(const Scalar& a, const Scalar& b, const Scalar& s);
Scalar P3(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y);
Scalar Q3(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y);
Multivector T_abc_printed(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y);
// same with the Q(a,c,b) bracket read as X367 - X457 + X234 - X256
Multivector T_abc_corrected(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y);

Multivector omega3();
Multivector omega5();
Multivector omega_ab(const Scalar& a, const Scalar& b);
Scalar pairing_T3_omega3(const Scalar& s, const Scalar& y);
Scalar pairing_T5_omega5(const Scalar& s, const Scalar& y);
Scalar pairing_Tab_omegaab(const Scalar& a, const Scalar& b, const Scalar& s);

Scalar scal_g(const Scalar& s, const Scalar& y);
Scalar scal3(const Scalar& s, const Scalar& y);
Scalar scal5(const Scalar& s, const Scalar& y);
// the bracketed polynomials (Scal = -4/(3 s^2) * poly)
double poly3(double s, double y);
double poly5(double s, double y);
std::array<double, 2> grad_poly3(double s, double y);
std::array<double, 2> grad_poly5(double s, double y);
const std::array<std::array<double, 2>, 2>& printed_roots();

Multivector dX(int i, const Scalar& s, const Scalar& y);  // i in {1, 2, 7}
Multivector T3_via_dX(const Scalar& s, const Scalar& y);
Multivector T3_at_1_4();      // -1/4 X2 ^ dX2
Multivector dT3_at_1_4();     // 8 X3456 - 4 X1457 + 4 X1367
Scalar s_example();           // sqrt(3/2)
Multivector T3_at_example();  // 1/4 X7 ^ dX7 at (sqrt(3/2), 2)
Multivector dT3_at_example(); // 4/3 (X1234 - X1256 - X3456)

// thirteen-term 4-form Ansatz alpha..rho in printed order
std::vector<Multivector> ansatzR13();
Multivector R3(const Scalar& s, const Scalar& y);
Multivector R4(const Scalar& s, const Scalar& y);
Multivector R5(const Scalar& s, const Scalar& y);
Multivector R6(const Scalar& s, const Scalar& y);
Multivector R_k(int k, const Scalar& s, const Scalar& y);
Multivector R_opposite();  // -sqrt(5)/10 [(X1457 - X1367) + (X2357 + X2467)]
Scalar s_opposite_R();     // sqrt(5)/2
Scalar P4(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y);
Scalar Q4(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y);
Multivector R_abc(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y);

// su(2) generators fixing e1, e2, e7; the third is printed as e36 + e56
std::array<Multivector, 3> su2_generators_printed();
std::array<Multivector, 3> su2_generators();  // third read as e36 + e45
Multivector de(int j);                        // j in {1, 2, 7}

// x11 x12 x17 x21 x22 x27 x71 x72 x77 w
std::array<Scalar, 10> veronese(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

}  // namespace holo::ref
