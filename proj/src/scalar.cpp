#include "holo/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace holo {

namespace {

// d = f^2 * r with r square-free
void split_square(long d, long& f, long& r) {
  f = 1;
  r = d;
  for (long p = 2; p * p <= r; ++p) {
    while (r % (p * p) == 0) {
      r /= p * p;
      f *= p;
    }
  }
}

}  // namespace

Scalar Scalar::frac(long p, long q) {
  if (q == 0) throw ScalarError("zero denominator");
  mpq_class v(p, q);
  v.canonicalize();
  return Scalar(v);
}

Scalar Scalar::quad(const mpq_class& a, const mpq_class& b, long d) {
  if (d < 0) throw ScalarError("negative radicand");
  long f, r;
  split_square(d, f, r);
  Scalar s;
  s.a_ = a;
  s.a_.canonicalize();
  if (r == 1) {
    s.a_ += b * f;
  } else if (r != 0) {
    s.b_ = b * f;
    s.b_.canonicalize();
    s.d_ = r;
  }
  s.normalize();
  return s;
}

Scalar Scalar::sqrt_of(long d) { return quad(0, 1, d); }

const mpq_class& Scalar::as_rational() const {
  if (!is_rational()) throw ScalarError("irrational value where a rational is required: " + str());
  return a_;
}

void Scalar::normalize() {
  if (sgn(b_) == 0) d_ = 0;
}

void Scalar::join(const Scalar& o) {
  if (o.d_ == 0 || o.d_ == d_) return;
  if (d_ == 0) {
    d_ = o.d_;
    return;
  }
  throw ScalarError("mixing sqrt(" + std::to_string(d_) + ") and sqrt(" + std::to_string(o.d_) + ")");
}

int Scalar::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  mpq_class lhs = a_ * a_, rhs = b_ * b_ * d_;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // cannot happen for square-free d
  return c > 0 ? sa : sb;
}

Scalar Scalar::conj() const {
  Scalar r = *this;
  r.b_ = -r.b_;
  return r;
}

double Scalar::to_double() const {
  double v = a_.get_d();
  if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::string Scalar::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string rb = b_.get_str() + "*" + root;
  if (sgn(a_) == 0) return rb;
  std::string out = a_.get_str();
  if (sgn(b_) > 0) out += "+";
  return out + rb;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  join(o);
  a_ += o.a_;
  if (o.d_ != 0) b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  join(o);
  a_ -= o.a_;
  if (o.d_ != 0) b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (d_ == 0 && o.d_ == 0) {
    a_ *= o.a_;
    return *this;
  }
  join(o);
  mpq_class na = a_ * o.a_ + b_ * o.b_ * d_;
  mpq_class nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ScalarError("division by zero");
  if (o.d_ == 0) {
    a_ /= o.a_;
    if (d_ != 0) b_ /= o.a_;
    return *this;
  }
  // multiply by conjugate
  mpq_class den = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
  *this *= o.conj();
  a_ /= den;
  b_ /= den;
  normalize();
  return *this;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.d_ != y.d_) return x.is_rational() && y.is_rational() && x.a_ == y.a_;
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar pow(const Scalar& x, int e) {
  if (e < 0) return Scalar(1) / pow(x, -e);
  Scalar r(1), b = x;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Grammar: sum of terms, term := [sign] rational ['*' 'sqrt(' int ')'] | [sign] 'sqrt(' int ')' ['/' int]
Scalar Scalar::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ScalarError("empty number");
  size_t i = 0;
  auto fail = [&](const std::string& why) { throw ScalarError("bad number '" + text + "': " + why); };
  auto read_int = [&]() -> std::string {
    size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) fail("digits expected");
    return s.substr(st, i - st);
  };
  auto read_sqrt = [&]() -> long {
    if (s.compare(i, 5, "sqrt(") != 0) fail("sqrt( expected");
    i += 5;
    std::string d = read_int();
    if (i >= s.size() || s[i] != ')') fail(") expected");
    ++i;
    return std::stol(d);
  };
  Scalar total;
  bool first = true;
  while (i < s.size()) {
    int sg = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sg = -1;
      ++i;
    } else if (!first) {
      fail("operator expected");
    }
    first = false;
    Scalar term;
    if (i < s.size() && s[i] == 's') {
      long d = read_sqrt();
      mpq_class den(1);
      if (i < s.size() && s[i] == '/') {
        ++i;
        den = mpq_class(read_int());
      }
      if (den == 0) fail("zero denominator");
      term = quad(0, mpq_class(1) / den, d);
    } else {
      std::string num = read_int();
      mpq_class q(num);
      if (i < s.size() && s[i] == '/') {
        ++i;
        mpz_class den(read_int());
        if (den == 0) fail("zero denominator");
        q = mpq_class(mpz_class(num), den);
        q.canonicalize();
      }
      if (i < s.size() && s[i] == '.') fail("decimals are not exact; use p/q");
      term = Scalar(q);
      if (i < s.size() && s[i] == '*') {
        ++i;
        long d = read_sqrt();
        term = quad(0, q, d);
      }
    }
    total += sg > 0 ? term : -term;
  }
  return total;
}

}  // namespace holo
