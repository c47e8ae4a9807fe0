#include "holo/clifford.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace holo {

Monomial Monomial::identity(int n) {
  Monomial m;
  m.col.resize(n);
  m.sign.assign(n, 1);
  for (int i = 0; i < n; ++i) m.col[i] = i;
  return m;
}

Monomial Monomial::operator-() const {
  Monomial m = *this;
  for (auto& s : m.sign) s = static_cast<int8_t>(-s);
  return m;
}

// (AB v)[r] = sa[r] * (B v)[ca[r]] = sa[r] sb[ca[r]] v[cb[ca[r]]]
Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw LinalgError("monomial size mismatch");
  Monomial m;
  int n = a.size();
  m.col.resize(n);
  m.sign.resize(n);
  for (int r = 0; r < n; ++r) {
    int c = a.col[r];
    m.col[r] = b.col[c];
    m.sign[r] = static_cast<int8_t>(a.sign[r] * b.sign[c]);
  }
  return m;
}

Vec Monomial::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != size()) throw LinalgError("spinor length mismatch");
  Vec out(size());
  for (int r = 0; r < size(); ++r) out[r] = sign[r] > 0 ? v[col[r]] : -v[col[r]];
  return out;
}

Mat Monomial::to_mat() const {
  Mat m(size(), size());
  for (int r = 0; r < size(); ++r) m(r, col[r]) = Scalar(sign[r]);
  return m;
}

Monomial kron(const Monomial& a, const Monomial& b) {
  Monomial m;
  int nb = b.size();
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < nb; ++j) {
      m.col.push_back(a.col[i] * nb + b.col[j]);
      m.sign.push_back(static_cast<int8_t>(a.sign[i] * b.sign[j]));
    }
  return m;
}

CMonomial CMonomial::identity(int n) {
  CMonomial m;
  m.col.resize(n);
  m.phase.assign(n, 0);
  for (int i = 0; i < n; ++i) m.col[i] = i;
  return m;
}

CMonomial operator*(const CMonomial& a, const CMonomial& b) {
  CMonomial m;
  int n = a.size();
  m.col.resize(n);
  m.phase.resize(n);
  for (int r = 0; r < n; ++r) {
    int c = a.col[r];
    m.col[r] = b.col[c];
    m.phase[r] = static_cast<int8_t>((a.phase[r] + b.phase[c]) % 4);
  }
  return m;
}

CMonomial kron(const CMonomial& a, const CMonomial& b) {
  CMonomial m;
  int nb = b.size();
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < nb; ++j) {
      m.col.push_back(a.col[i] * nb + b.col[j]);
      m.phase.push_back(static_cast<int8_t>((a.phase[i] + b.phase[j]) % 4));
    }
  return m;
}

// entry i^k at (r,c) becomes the 2x2 block [[Re,-Im],[Im,Re]]
Monomial CMonomial::realify() const {
  Monomial m;
  int n = size();
  m.col.resize(2 * n);
  m.sign.resize(2 * n);
  for (int r = 0; r < n; ++r) {
    int c = col[r];
    switch (phase[r]) {
      case 0:
        m.col[2 * r] = 2 * c, m.sign[2 * r] = 1;
        m.col[2 * r + 1] = 2 * c + 1, m.sign[2 * r + 1] = 1;
        break;
      case 1:
        m.col[2 * r] = 2 * c + 1, m.sign[2 * r] = -1;
        m.col[2 * r + 1] = 2 * c, m.sign[2 * r + 1] = 1;
        break;
      case 2:
        m.col[2 * r] = 2 * c, m.sign[2 * r] = -1;
        m.col[2 * r + 1] = 2 * c + 1, m.sign[2 * r + 1] = -1;
        break;
      default:
        m.col[2 * r] = 2 * c + 1, m.sign[2 * r] = 1;
        m.col[2 * r + 1] = 2 * c, m.sign[2 * r + 1] = -1;
        break;
    }
  }
  return m;
}

namespace {

CMonomial cmono(std::vector<int> col, std::vector<int8_t> phase) {
  CMonomial m;
  m.col = std::move(col);
  m.phase = std::move(phase);
  return m;
}

// Pauli-type generators for n <= 5, complex dimension 2^(n/2)
std::vector<CMonomial> pauli_generators(int n) {
  int m = n / 2;
  CMonomial i_s1 = cmono({1, 0}, {1, 1});  // i sigma1
  CMonomial i_s2 = cmono({1, 0}, {0, 2});  // i sigma2 = [[0,1],[-1,0]]
  CMonomial s3 = cmono({0, 1}, {0, 2});
  CMonomial id2 = CMonomial::identity(2);
  auto chain = [&](int j, const CMonomial& mid) {
    CMonomial out = CMonomial::identity(1);
    for (int k = 1; k <= m; ++k) out = kron(out, k < j ? s3 : (k == j ? mid : id2));
    return out;
  };
  std::vector<CMonomial> g;
  for (int j = 1; j <= m; ++j) {
    g.push_back(chain(j, i_s1));
    g.push_back(chain(j, i_s2));
  }
  if (n % 2) {
    CMonomial last = cmono({0}, {1});
    for (int k = 1; k <= m; ++k) last = kron(last, s3);
    g.push_back(last);
  }
  return g;
}

// left multiplication by imaginary octonion units, negated
std::vector<Monomial> octonion_generators() {
  static const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
  int table[8][8], sgn[8][8];
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (i == 0) table[i][j] = j, sgn[i][j] = 1;
      else if (j == 0) table[i][j] = i, sgn[i][j] = 1;
      else if (i == j) table[i][j] = 0, sgn[i][j] = -1;
    }
  for (auto& t : triples)
    for (int r = 0; r < 3; ++r) {
      int a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
      table[a][b] = c, sgn[a][b] = 1;
      table[b][a] = c, sgn[b][a] = -1;
    }
  std::vector<Monomial> g;
  for (int i = 1; i <= 7; ++i) {
    Monomial m;
    m.col.assign(8, -1);
    m.sign.assign(8, 0);
    for (int j = 0; j < 8; ++j) {
      int k = table[i][j];
      m.col[k] = j;
      m.sign[k] = static_cast<int8_t>(-sgn[i][j]);
    }
    g.push_back(m);
  }
  return g;
}

std::vector<Monomial> eight_generators() {
  auto l = octonion_generators();
  std::vector<Monomial> g;
  for (auto& li : l) {
    Monomial m;
    m.col.resize(16);
    m.sign.resize(16);
    for (int r = 0; r < 8; ++r) {
      m.col[r] = 8 + li.col[r], m.sign[r] = li.sign[r];
      m.col[8 + r] = li.col[r], m.sign[8 + r] = li.sign[r];
    }
    g.push_back(m);
  }
  Monomial last;
  last.col.resize(16);
  last.sign.resize(16);
  for (int r = 0; r < 8; ++r) {
    last.col[r] = 8 + r, last.sign[r] = 1;
    last.col[8 + r] = r, last.sign[8 + r] = -1;
  }
  g.push_back(last);
  return g;
}

std::vector<Monomial> generators_for(int n) {
  if (n <= 5) {
    std::vector<Monomial> g;
    for (auto& c : pauli_generators(n)) g.push_back(c.realify());
    return g;
  }
  if (n == 6) {
    auto g = octonion_generators();
    g.pop_back();
    return g;
  }
  if (n == 7) return octonion_generators();
  if (n == 8) return eight_generators();
  auto inner = generators_for(n - 8);
  auto g8 = eight_generators();
  Monomial chi = Monomial::identity(16);
  for (auto& x : g8) chi = chi * x;
  std::vector<Monomial> g;
  for (auto& a : inner) g.push_back(kron(a, chi));
  Monomial id = Monomial::identity(inner[0].size());
  for (auto& b : g8) g.push_back(kron(id, b));
  return g;
}

}  // namespace

SpinRep build_spin_rep(int n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("spin representation dimension out of range: " + std::to_string(n));
  SpinRep r;
  r.n_ = n;
  r.gens_ = generators_for(n);
  r.complex_dim_ = 1 << (n / 2);
  r.realified_ = r.dim() == 2 * r.complex_dim_;
  return r;
}

const SpinRep& spin_rep(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SpinRep>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<SpinRep>(build_spin_rep(n));
  return *slot;
}

Monomial SpinRep::blade(Mask m) const {
  Monomial out = Monomial::identity(dim());
  for (int i : indices_of(m)) {
    if (i > n_) throw FormError("blade index beyond spin representation dimension");
    out = out * gens_[i - 1];
  }
  return out;
}

Mat SpinRep::matrix(const Multivector& a) const {
  if (a.dim() != n_) throw FormError("form dimension does not match spin representation");
  Mat m(dim(), dim());
  for (auto& [mask, c] : a.terms()) {
    Monomial b = blade(mask);
    for (int r = 0; r < dim(); ++r) m(r, b.col[r]) += b.sign[r] > 0 ? c : -c;
  }
  return m;
}

Vec SpinRep::act(const Multivector& a, const Vec& psi) const {
  if (a.dim() != n_) throw FormError("form dimension does not match spin representation");
  if (static_cast<int>(psi.size()) != dim()) throw FormError("spinor length does not match representation");
  Vec out(dim());
  for (auto& [mask, c] : a.terms()) {
    Monomial b = blade(mask);
    for (int r = 0; r < dim(); ++r) {
      const Scalar& x = psi[b.col[r]];
      if (x.is_zero()) continue;
      out[r] += b.sign[r] > 0 ? c * x : -(c * x);
    }
  }
  return out;
}

Mat SpinRep::lift(const Mat& skew) const {
  if (skew.rows() != n_ || skew.cols() != n_) throw FormError("lift: matrix size must equal n");
  Multivector w(n_);
  Scalar half = Scalar::frac(1, 2);
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (!skew(b, a).is_zero()) w.add((Mask(1) << a) | (Mask(1) << b), half * skew(b, a));
  return matrix(w);
}

Mat skew_of(const Multivector& w) {
  if (!w.is_zero() && w.grade() != 2) throw FormError("skew_of: expected a 2-form");
  int n = w.dim();
  Mat m(n, n);
  for (auto& [mask, c] : w.terms()) {
    auto idx = indices_of(mask);
    int a = idx[0] - 1, b = idx[1] - 1;
    m(b, a) = c;
    m(a, b) = -c;
  }
  return m;
}

Multivector two_form_of(const Mat& m) {
  if (!m.is_skew()) throw FormError("two_form_of: matrix is not skew");
  Multivector w(m.rows());
  for (int a = 0; a < m.rows(); ++a)
    for (int b = a + 1; b < m.rows(); ++b) w.add((Mask(1) << a) | (Mask(1) << b), m(b, a));
  return w;
}

Multivector sigma_T(const Multivector& T) {
  if (!T.is_zero() && T.grade() != 3) throw FormError("sigma_T expects a 3-form");
  Multivector s(T.dim());
  for (int k = 1; k <= T.dim(); ++k) {
    Multivector c = contract(k, T);
    s += wedge(c, c);
  }
  return s * Scalar::frac(1, 2);
}

SquareParts square_parts(const Multivector& T) {
  if (!T.is_zero() && T.grade() != 3) throw FormError("square_parts expects a 3-form");
  SquareParts p;
  p.full = clifford_product(T, T);
  p.t0 = p.full.coeff(Mask(0));
  p.t4 = p.full.part(4);
  p.only_0_and_4 = (p.full - p.full.part(0) - p.t4).is_zero();
  int n = T.dim();
  Scalar acc;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      acc += norm2(contract(j, contract(i, T)));
    }
  p.t0_formula = acc * Scalar::frac(1, 6);
  return p;
}

namespace {

struct GQ {
  mpq_class re, im;
  bool zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};
GQ operator*(const GQ& a, const GQ& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
GQ operator-(const GQ& a, const GQ& b) { return {a.re - b.re, a.im - b.im}; }
GQ inv(const GQ& a) {
  mpq_class d = a.re * a.re + a.im * a.im;
  return {a.re / d, -a.im / d};
}

}  // namespace

std::pair<Scalar, Scalar> complex_determinant(const Mat& r) {
  int n = r.rows() / 2;
  if (r.rows() != r.cols() || r.rows() % 2) throw LinalgError("complex_determinant: bad size");
  std::vector<std::vector<GQ>> m(n, std::vector<GQ>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      m[p][q] = {r(2 * p, 2 * q).as_rational(), r(2 * p + 1, 2 * q).as_rational()};
      // complex-linearity check on the 2x2 block
      if (r(2 * p + 1, 2 * q + 1) != r(2 * p, 2 * q) || r(2 * p, 2 * q + 1) != -r(2 * p + 1, 2 * q))
        throw LinalgError("complex_determinant: matrix is not complex-linear");
    }
  GQ det{1, 0};
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!m[i][k].zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return {Scalar(0), Scalar(0)};
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = GQ{-det.re, -det.im};
    }
    det = det * m[k][k];
    GQ pi = inv(m[k][k]);
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k].zero()) continue;
      GQ f = m[i][k] * pi;
      for (int j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
    }
  }
  return {Scalar(det.re), Scalar(det.im)};
}

Det4Report det4(const Scalar& a, const Multivector& omega, const Scalar& f) {
  if (omega.dim() != 4) throw FormError("det4: omega must live in R^4");
  if (!omega.is_zero() && omega.grade() != 2) throw FormError("det4: omega must be a 2-form");
  static const SpinRep rep = build_spin_rep(4);
  Multivector e(4);
  e.add(Mask(0), a);
  e += omega;
  e.add(mask_of({1, 2, 3, 4}), f);
  Mat m = rep.matrix(e);
  Det4Report r;
  auto [re, im] = complex_determinant(m);
  if (!im.is_zero()) throw LinalgError("det4: complex determinant is not real");
  r.direct = re;
  r.real_det = determinant(m);
  r.real_is_square = r.real_det == r.direct * r.direct;
  Multivector star = hodge_star(omega);
  Multivector plus = (omega + star) * Scalar::frac(1, 2);
  Multivector minus = (omega - star) * Scalar::frac(1, 2);
  Scalar np = norm2(plus), nm = norm2(minus);
  r.closed_form = ((a + f) * (a + f) + Scalar(2) * nm) * ((a - f) * (a - f) + Scalar(2) * np);
  r.printed_form = ((a + f) * (a + f) + Scalar(4) * np) * ((a - f) * (a - f) + Scalar(4) * nm);
  r.agree = r.direct == r.closed_form;
  return r;
}

}  // namespace holo
