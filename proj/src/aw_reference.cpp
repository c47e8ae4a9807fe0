#include "holo/aw_reference.hpp"

#include <stdexcept>

namespace holo::ref {

namespace {

Scalar q(long p, long d) { return Scalar::frac(p, d); }

}  // namespace

Multivector X(std::initializer_list<int> idx, const Scalar& c) { return Multivector::blade(7, std::vector<int>(idx), c); }

Multivector lambda_tilde(int i, const Scalar& s, const Scalar& y) {
  Scalar one = 1, half = q(1, 2);
  Scalar a = one / (Scalar(2) * s);       // 1/(2s)
  Scalar b = half - y * q(1, 4);          // 1/2 - y/4
  Scalar c = y / (Scalar(4) * s);         // y/(4s)
  Scalar d = y * q(1, 4);                 // y/4
  switch (i) {
    case 1:
      return X({2, 7}, a) - (X({3, 5}) + X({4, 6})) * b;
    case 2:
      return X({1, 7}, -a) - (X({4, 5}) - X({3, 6})) * b;
    case 3:
      return X({4, 7}, c) - (X({2, 6}) - X({1, 5})) * d;
    case 4:
      return X({3, 7}, -c) + (X({1, 6}) + X({2, 5})) * d;
    case 5:
      return X({6, 7}, -c) - (X({1, 3}) + X({2, 4})) * d;
    case 6:
      return X({5, 7}, c) - (X({1, 4}) - X({2, 3})) * d;
    case 7:
      return (X({1, 2}, 2) + X({3, 4}) - X({5, 6})) * (s * half) - X({1, 2}, a) - X({3, 4}, c) + X({5, 6}, c);
  }
  throw std::out_of_range("lambda_tilde index");
}

std::vector<Multivector> ansatz7() {
  return {X({1, 3, 5}), X({1, 4, 6}), X({2, 4, 5}), X({2, 3, 6}), X({1, 2, 7}), X({3, 4, 7}), X({5, 6, 7})};
}

std::vector<Scalar> T_coeffs(int k, const Scalar& s, const Scalar& y) {
  Scalar half = q(1, 2);
  if (k == 3 || k == 4) {
    Scalar a = half - y * q(1, 4) + (Scalar(1) + y) / (Scalar(6) * s) - s * q(1, 3);
    Scalar b = half - y * q(1, 4) - (Scalar(1) + y) / (Scalar(6) * s) + s * q(1, 3);
    if (k == 4) std::swap(a, b);
    Scalar C = (Scalar(2) * y - 1) / (Scalar(6) * s) - s * q(2, 3);
    Scalar D = (Scalar(4) + y) / (Scalar(12) * s) - s * q(2, 3);
    return {a, a, b, -b, C, D, -D};
  }
  if (k == 5 || k == 6) {
    Scalar sg = k == 5 ? 1 : -1;
    Scalar a = q(1, 6) + y * q(1, 12) + sg * (y - 1) / (Scalar(6) * s);
    Scalar C = sg * (q(2, 3) - y * q(2, 3)) - (Scalar(2) * y + 1) / (Scalar(6) * s);
    Scalar D = sg * (q(1, 3) - y * q(1, 3)) - (Scalar(4) - y) / (Scalar(12) * s);
    return {a, a, a, -a, C, D, -D};
  }
  throw std::out_of_range("T_coeffs: k must be 3..6");
}

Multivector T_k(int k, const Scalar& s, const Scalar& y) {
  auto c = T_coeffs(k, s, y);
  auto b = ansatz7();
  Multivector f(7);
  for (size_t i = 0; i < b.size(); ++i) f += b[i] * c[i];
  return f;
}

Multivector T3(const Scalar& s, const Scalar& y) { return T_k(3, s, y); }
Multivector T4(const Scalar& s, const Scalar& y) { return T_k(4, s, y); }
Multivector T5(const Scalar& s, const Scalar& y) { return T_k(5, s, y); }
Multivector T6(const Scalar& s, const Scalar& y) { return T_k(6, s, y); }

std::vector<Scalar> system(int k, const Scalar& s, const Scalar& y, const std::vector<Scalar>& c) {
  if (c.size() != 7) throw std::invalid_argument("system: seven coefficients expected");
  const Scalar &al = c[0], &be = c[1], &ga = c[2], &de = c[3], &mu = c[4], &nu = c[5], &eta = c[6];
  Scalar one = 1;
  Scalar i2s = one / (Scalar(2) * s), y4s = y / (Scalar(4) * s), y2 = y * q(1, 2);
  switch (k) {
    case 3:
      return {i2s + 1 - y2 - al - be + mu,  -i2s + 1 - y2 - ga + de - mu, y4s - al - de + nu, y4s - be + ga + nu,
              -y4s + al - ga + eta,         -y4s + be + de + eta,
              Scalar(2) * s - (one + y) / (Scalar(2) * s) + mu + nu - eta};
    case 4:
      return {i2s - 1 + y2 + al + be + mu, i2s + 1 - y2 - ga + de + mu, y4s + al + de + nu, y4s + be - ga + nu,
              y4s + al - ga - eta,         y4s + be + de - eta,
              Scalar(-2) * s + (one + y) / (Scalar(2) * s) - mu - nu + eta};
    case 5:
      return {y4s + y2 - al + de + nu, y4s + y2 - be - ga + nu, y4s + y2 - al - ga - eta, y4s + y2 - be + de - eta,
              i2s - 1 + y2 + ga - de + mu, i2s - 1 + y2 + al + be + mu, (y - 1) / (Scalar(2) * s) + mu - nu + eta};
    case 6:
      return {y4s - y2 + al - de + nu, y4s - y2 + be + ga + nu, y4s - y2 + al + ga - eta, y4s - y2 + be - de - eta,
              -i2s - 1 + y2 + ga - de - mu, -i2s - 1 + y2 + al + be - mu, (one - y) / (Scalar(2) * s) - mu + nu - eta};
  }
  throw std::out_of_range("system: k must be 3..6");
}

Multivector T_undeformed() {
  return (X({1, 3, 5}) + X({1, 4, 6}) + X({2, 4, 5}) - X({2, 3, 6})) * q(1, 4) - X({1, 2, 7}, q(1, 2)) -
         (X({3, 4, 7}) - X({5, 6, 7})) * q(1, 4);
}

Multivector T_opposite() {
  Scalar c = Scalar::sqrt_of(3) * q(1, 6);
  return (X({1, 3, 5}) + X({1, 4, 6}) - X({2, 4, 5}) + X({2, 3, 6})) * c;
}

Scalar s_opposite_T() { return Scalar::sqrt_of(3) * q(1, 2); }

std::vector<Multivector> ansatz13() {
  return {X({1, 3, 5}) + X({1, 4, 6}), X({2, 3, 5}) + X({2, 4, 6}), X({3, 5, 7}) + X({4, 6, 7}),
          X({1, 4, 5}) - X({1, 3, 6}), X({2, 4, 5}) - X({2, 3, 6}), X({4, 5, 7}) - X({3, 6, 7}),
          X({1, 2, 7}),                X({3, 4, 7}),                X({5, 6, 7}),
          X({1, 3, 4}),                X({2, 3, 4}),                X({1, 5, 6}),
          X({2, 5, 6})};
}

Multivector T_ab(const Scalar& a, const Scalar& b, const Scalar& s) {
  Scalar a2 = a * a, b2 = b * b, N = a2 + b2, s2 = s * s;
  Scalar c1 = (a2 * (Scalar(-7) * s2 + Scalar(8) * s + 2) + b2 * (s2 + Scalar(4) * s - 2)) / (Scalar(12) * s * N);
  Scalar c2 = (s2 + Scalar(4) * s - 2) / (Scalar(12) * s);
  Scalar c3 = (a2 * (Scalar(-8) * s2 + s + 4) + b2 * (Scalar(-4) * s2 + Scalar(5) * s - 4)) / (Scalar(12) * s * N);
  Scalar c4 = (Scalar(-4) * s2 + Scalar(2) * s - 1) / (Scalar(6) * s);
  Scalar c5 = a * b * (Scalar(-2) * s2 + s + 1) / (Scalar(3) * s * N);
  Scalar c6 = a * b * (s2 + s - 2) / (Scalar(3) * s * N);
  return (X({1, 3, 5}) + X({1, 4, 6})) * c1 + (X({2, 4, 5}) - X({2, 3, 6})) * c2 + (X({3, 4, 7}) - X({5, 6, 7})) * c3 +
         X({1, 2, 7}, c4) + (X({1, 3, 4}) - X({1, 5, 6})) * c5 + (X({3, 5, 7}) + X({4, 6, 7})) * c6;
}

Scalar P3(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y) {
  return ((a * a + b * b) * (Scalar(4) - y) + c * c * (Scalar(8) - Scalar(5) * y)) / (Scalar(12) * (a * a + b * b + c * c));
}

Scalar Q3(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y) {
  return a * b * (y - 1) / (Scalar(3) * (a * a + b * b + c * c));
}

namespace {

Multivector T_abc_impl(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y, bool corrected) {
  Multivector last = corrected ? X({3, 6, 7}) - X({4, 5, 7}) + X({2, 3, 4}) - X({2, 5, 6})
                               : X({4, 5, 7}) - X({3, 6, 7}) + X({2, 3, 4}) - X({2, 5, 6});
  return (X({5, 6, 7}) - X({3, 4, 7})) * P3(a, b, c, y) + (X({1, 3, 5}) + X({1, 4, 6})) * P3(a, c, b, y) +
         (X({2, 4, 5}) - X({2, 3, 6})) * P3(b, c, a, y) +
         (X({2, 3, 5}) + X({2, 4, 6}) + X({1, 4, 5}) - X({1, 3, 6})) * Q3(a, b, c, y) +
         (X({3, 5, 7}) + X({4, 6, 7}) + X({1, 5, 6}) - X({1, 3, 4})) * Q3(b, c, a, y) + last * Q3(a, c, b, y) +
         X({1, 2, 7}, (Scalar(2) * y - 5) * q(1, 6));
}

}  // namespace

Multivector T_abc_printed(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y) {
  return T_abc_impl(a, b, c, y, false);
}

Multivector T_abc_corrected(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y) {
  return T_abc_impl(a, b, c, y, true);
}

Multivector omega3() {
  return -X({1, 2, 7}) + X({1, 3, 5}) + X({1, 4, 6}) + X({2, 3, 6}) - X({2, 4, 5}) - X({3, 4, 7}) + X({5, 6, 7});
}

Multivector omega5() {
  return -X({1, 2, 7}) - X({1, 3, 5}) - X({1, 4, 6}) + X({2, 3, 6}) - X({2, 4, 5}) + X({3, 4, 7}) - X({5, 6, 7});
}

Multivector omega_ab(const Scalar& a, const Scalar& b) {
  return (X({1, 2, 7}) - X({2, 3, 6}) + X({2, 4, 5})) * (-(a * a + b * b)) +
         (X({1, 3, 4}) - X({1, 5, 6}) + X({3, 5, 7}) + X({4, 6, 7})) * (Scalar(2) * a * b) +
         (X({1, 3, 5}) + X({1, 4, 6}) - X({3, 4, 7}) + X({5, 6, 7})) * (a * a - b * b);
}

Scalar pairing_T3_omega3(const Scalar& s, const Scalar& y) { return (Scalar(4) * s * s + y + 1) / (Scalar(6) * s); }

Scalar pairing_T5_omega5(const Scalar& s, const Scalar& y) {
  return -(Scalar(4) * s + Scalar(2) * s * y + y - 1) / (Scalar(6) * s);
}

Scalar pairing_Tab_omegaab(const Scalar& a, const Scalar& b, const Scalar& s) {
  return (b * b * (Scalar(1) - Scalar(5) * s - Scalar(2) * s * s) + a * a * (Scalar(1) + s + Scalar(4) * s * s)) /
         (Scalar(6) * s);
}

Scalar scal_g(const Scalar& s, const Scalar& y) {
  return Scalar(8) + Scalar(24) * y - Scalar(2) * y * y - (Scalar(2) + y * y) / (s * s);
}

Scalar scal3(const Scalar& s, const Scalar& y) {
  Scalar s2 = s * s;
  Scalar p = Scalar(8) + Scalar(32) * s2 * s2 + Scalar(4) * y + Scalar(5) * y * y +
             Scalar(2) * s2 * (Scalar(-4) - Scalar(28) * y + Scalar(3) * y * y);
  return Scalar(-4) / (Scalar(3) * s2) * p;
}

Scalar scal5(const Scalar& s, const Scalar& y) {
  Scalar s2 = s * s;
  Scalar p = Scalar(8) - Scalar(4) * y + Scalar(5) * y * y + Scalar(8) * s * (Scalar(-2) + y + y * y) +
             Scalar(2) * s2 * (Scalar(4) - Scalar(20) * y + Scalar(7) * y * y);
  return Scalar(-4) / (Scalar(3) * s2) * p;
}

double poly3(double s, double y) {
  double s2 = s * s;
  return 8 + 32 * s2 * s2 + 4 * y + 5 * y * y + 2 * s2 * (-4 - 28 * y + 3 * y * y);
}

double poly5(double s, double y) {
  return 8 - 4 * y + 5 * y * y + 8 * s * (-2 + y + y * y) + 2 * s * s * (4 - 20 * y + 7 * y * y);
}

std::array<double, 2> grad_poly3(double s, double y) {
  return {128 * s * s * s + 4 * s * (-4 - 28 * y + 3 * y * y), 4 + 10 * y + 2 * s * s * (-28 + 6 * y)};
}

std::array<double, 2> grad_poly5(double s, double y) {
  return {8 * (-2 + y + y * y) + 4 * s * (4 - 20 * y + 7 * y * y), -4 + 10 * y + 8 * s * (1 + 2 * y) + 2 * s * s * (-20 + 14 * y)};
}

const std::array<std::array<double, 2>, 2>& printed_roots() {
  static const std::array<std::array<double, 2>, 2> r{{{0.62066, 0.852508}, {1.49934, 1.66564}}};
  return r;
}

Multivector dX(int i, const Scalar& s, const Scalar& y) {
  switch (i) {
    case 1:
      return X({2, 7}, Scalar(-2) * s) + (X({3, 5}) + X({4, 6})) * y;
    case 2:
      return X({1, 7}, Scalar(2) * s) + (X({4, 5}) - X({3, 6})) * y;
    case 7:
      return X({1, 2}, Scalar(-2) / s) - (X({3, 4}) - X({5, 6})) * (y / s);
  }
  throw std::out_of_range("dX: index must be 1, 2 or 7");
}

Multivector T3_via_dX(const Scalar& s, const Scalar& y) {
  Scalar half = q(1, 2);
  Scalar c127 = -(y - 2) * (Scalar(5) * s * s - 1 - y) / (Scalar(3) * s * y);
  Scalar c1 = (half - y * q(1, 4) + (Scalar(1) + y) / (Scalar(6) * s) - s * q(1, 3)) / y;
  Scalar c2 = (half - y * q(1, 4) - (Scalar(1) + y) / (Scalar(6) * s) + s * q(1, 3)) / y;
  Scalar c7 = -(s / y) * ((Scalar(4) + y) / (Scalar(12) * s) - s * q(2, 3));
  return X({1, 2, 7}, c127) + wedge(X({1}), dX(1, s, y)) * c1 + wedge(X({2}), dX(2, s, y)) * c2 +
         wedge(X({7}), dX(7, s, y)) * c7;
}

Multivector T3_at_1_4() { return wedge(X({2}), dX(2, 1, 4)) * q(-1, 4); }

Multivector dT3_at_1_4() { return X({3, 4, 5, 6}, 8) - X({1, 4, 5, 7}, 4) + X({1, 3, 6, 7}, 4); }

Scalar s_example() { return Scalar::quad(0, mpq_class(1, 2), 6); }

Multivector T3_at_example() { return wedge(X({7}), dX(7, s_example(), 2)) * q(1, 4); }

Multivector dT3_at_example() { return (X({1, 2, 3, 4}) - X({1, 2, 5, 6}) - X({3, 4, 5, 6})) * q(4, 3); }

std::vector<Multivector> ansatzR13() {
  return {X({1, 2, 3, 4}),
          X({1, 2, 5, 6}),
          X({3, 4, 5, 6}),
          X({1, 3, 4, 7}),
          X({1, 5, 6, 7}),
          X({2, 3, 4, 7}),
          X({2, 5, 6, 7}),
          X({1, 2, 3, 5}) + X({1, 2, 4, 6}),
          X({1, 3, 5, 7}) + X({1, 4, 6, 7}),
          X({1, 2, 4, 5}) - X({1, 2, 3, 6}),
          X({1, 4, 5, 7}) - X({1, 3, 6, 7}),
          X({2, 4, 5, 7}) - X({2, 3, 6, 7}),
          X({2, 3, 5, 7}) + X({2, 4, 6, 7})};
}

Multivector R_k(int k, const Scalar& s, const Scalar& y) {
  Scalar half = q(1, 2);
  Multivector A = X({1, 4, 5, 7}) - X({1, 3, 6, 7});
  Multivector B = X({2, 3, 5, 7}) + X({2, 4, 6, 7});
  Multivector C = X({1, 2, 3, 4}) - X({1, 2, 5, 6});
  Multivector D = X({3, 4, 5, 6});
  if (k == 3 || k == 4) {
    Scalar sg = k == 3 ? 1 : -1;
    Scalar t = (Scalar(1) + y) / (Scalar(8) * s) - s * half;
    return A * (y * q(1, 4) - half + sg * t) + B * (half - y * q(1, 4) + sg * t) +
           C * (-s * half + (y + 3) / (Scalar(8) * s)) + D * (s * half + (Scalar(1) - Scalar(3) * y) / (Scalar(8) * s));
  }
  if (k == 5 || k == 6) {
    Scalar sg = k == 5 ? 1 : -1;
    return C * (sg * (half - y * q(1, 4)) + (y - 3) / (Scalar(8) * s)) +
           D * (sg * (-half + y * q(3, 4)) + (Scalar(1) + Scalar(3) * y) / (Scalar(8) * s)) +
           (A - B) * (sg * (Scalar(1) - y) / (Scalar(8) * s));
  }
  throw std::out_of_range("R_k: k must be 3..6");
}

Multivector R3(const Scalar& s, const Scalar& y) { return R_k(3, s, y); }
Multivector R4(const Scalar& s, const Scalar& y) { return R_k(4, s, y); }
Multivector R5(const Scalar& s, const Scalar& y) { return R_k(5, s, y); }
Multivector R6(const Scalar& s, const Scalar& y) { return R_k(6, s, y); }

Multivector R_opposite() {
  Scalar c = Scalar::sqrt_of(5) * q(-1, 10);
  return (X({1, 4, 5, 7}) - X({1, 3, 6, 7}) + X({2, 3, 5, 7}) + X({2, 4, 6, 7})) * c;
}

Scalar s_opposite_R() { return Scalar::sqrt_of(5) * q(1, 2); }

Scalar P4(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y) {
  return ((a * a + b * b) * (y - 1) + c * c * (Scalar(3) * y - 7)) / (Scalar(8) * (a * a + b * b + c * c));
}

Scalar Q4(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y) {
  return a * b * (y - 3) / (Scalar(4) * (a * a + b * b + c * c));
}

Multivector R_abc(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& y) {
  return (X({1, 2, 3, 4}) - X({1, 2, 5, 6})) * P4(a, b, c, y) - (X({2, 4, 6, 7}) + X({2, 3, 5, 7})) * P4(a, c, b, y) +
         (X({1, 4, 5, 7}) - X({1, 3, 6, 7})) * P4(b, c, a, y) +
         ((X({2, 4, 5, 7}) - X({2, 3, 6, 7})) - (X({1, 3, 5, 7}) + X({1, 4, 6, 7}))) * Q4(a, b, c, y) +
         ((X({1, 2, 3, 5}) + X({1, 2, 4, 6})) + (X({2, 5, 6, 7}) - X({2, 3, 4, 7}))) * Q4(b, c, a, y) +
         ((X({1, 5, 6, 7}) - X({1, 3, 4, 7})) - (X({1, 2, 4, 5}) - X({1, 2, 3, 6}))) * Q4(a, c, b, y) +
         X({3, 4, 5, 6}, (Scalar(5) - Scalar(3) * y) * q(1, 8));
}

std::array<Multivector, 3> su2_generators_printed() {
  return {X({3, 4}) + X({5, 6}), X({3, 5}) - X({4, 6}), X({3, 6}) + X({5, 6})};
}

std::array<Multivector, 3> su2_generators() { return {X({3, 4}) + X({5, 6}), X({3, 5}) - X({4, 6}), X({3, 6}) + X({4, 5})}; }

Multivector de(int j) {
  switch (j) {
    case 1:
      return X({3, 5}) + X({4, 6});
    case 2:
      return X({4, 5}) - X({3, 6});
    case 7:
      return X({3, 4}) - X({5, 6});
  }
  throw std::out_of_range("de: index must be 1, 2 or 7");
}

std::array<Scalar, 10> veronese(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  Scalar N = a * a + b * b + c * c + d * d;
  if (N.is_zero()) throw std::invalid_argument("veronese: zero point");
  Scalar s6 = Scalar(6) * N, s3 = Scalar(3) * N;
  return {(a * a - b * b - c * c + d * d) / s6, (a * b + c * d) / s3,  (a * c - b * d) / s3,
          (a * b - c * d) / s3,                 (-a * a + b * b - c * c + d * d) / s6, (b * c + a * d) / s3,
          (a * c + b * d) / s3,                 (b * c - a * d) / s3,  (-a * a - b * b + c * c + d * d) / s6,
          q(-1, 6)};
}

}  // namespace holo::ref
