#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace holo {

// a + b*sqrt(d), d square-free; d == 0 marks a plain rational.
// Two values with different nonzero d never mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}
  Scalar(long v) : a_(v) {}
  Scalar(const mpq_class& q) : a_(q) { a_.canonicalize(); }

  static Scalar frac(long p, long q);
  static Scalar quad(const mpq_class& a, const mpq_class& b, long d);
  // sqrt of a non-negative integer, square factors pulled out
  static Scalar sqrt_of(long d);
  static Scalar parse(const std::string& text);

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  const mpq_class& rational_part() const { return a_; }
  const mpq_class& root_coeff() const { return b_; }
  long root() const { return d_; }
  // throws if not rational
  const mpq_class& as_rational() const;

  int sign() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  Scalar conj() const;  // a - b sqrt(d)
  double to_double() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return (x - y).sign() >= 0; }

 private:
  void join(const Scalar& o);
  void normalize();

  mpq_class a_{0};
  mpq_class b_{0};
  long d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Scalar pow(const Scalar& x, int e);

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace holo
