#include "holo/homogeneous.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "holo/aw_reference.hpp"
#include "holo/holonomy.hpp"

namespace holo {

namespace {

// 3x3 matrices over Q(i)
struct Gauss {
  mpq_class re{0}, im{0};
};
using M3 = std::array<std::array<Gauss, 3>, 3>;

M3 zero3() { return M3{}; }

M3 mul3(const M3& a, const M3& b) {
  M3 c = zero3();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        c[i][j].re += a[i][k].re * b[k][j].re - a[i][k].im * b[k][j].im;
        c[i][j].im += a[i][k].re * b[k][j].im + a[i][k].im * b[k][j].re;
      }
  return c;
}

M3 bracket3(const M3& a, const M3& b) {
  M3 p = mul3(a, b), q = mul3(b, a);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      p[i][j].re -= q[i][j].re;
      p[i][j].im -= q[i][j].im;
    }
  return p;
}

// su(3) basis: A12, A~12, A13, A~13, A23, A~23, L, H
std::array<M3, 8> su3_basis() {
  std::array<M3, 8> b{};
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int p = 0; p < 3; ++p) {
    int i = pairs[p][0], j = pairs[p][1];
    b[2 * p][i][j].re = 1;
    b[2 * p][j][i].re = -1;
    b[2 * p + 1][i][j].im = 1;
    b[2 * p + 1][j][i].im = 1;
  }
  b[6][0][0].im = 3;
  b[6][1][1].im = -3;
  b[7][0][0].im = 1;
  b[7][1][1].im = 1;
  b[7][2][2].im = -2;
  return b;
}

std::array<mpq_class, 8> su3_coords(const M3& m) {
  std::array<mpq_class, 8> c;
  c[0] = m[0][1].re;
  c[1] = m[0][1].im;
  c[2] = m[0][2].re;
  c[3] = m[0][2].im;
  c[4] = m[1][2].re;
  c[5] = m[1][2].im;
  mpq_class d1 = m[0][0].im, d2 = m[1][1].im, d3 = m[2][2].im;
  c[7] = -d3 / 2;
  c[6] = (d1 - d2) / 6;
  // reconstruct and compare
  auto b = su3_basis();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      mpq_class re = 0, im = 0;
      for (int k = 0; k < 8; ++k) {
        re += c[k] * b[k][i][j].re;
        im += c[k] * b[k][i][j].im;
      }
      if (re != m[i][j].re || im != m[i][j].im) throw FormError("su3_coords: matrix is not in su(3)");
    }
  return c;
}

// frame scale c_k = r * s^ps * y^(hy/2)
struct FrameScale {
  mpq_class r;
  int ps;
  int hy;
};

const std::array<FrameScale, 8>& aw_scales() {
  static const std::array<FrameScale, 8> sc{{{1, 0, 0},
                                             {1, 0, 0},
                                             {1, 0, 1},
                                             {1, 0, 1},
                                             {1, 0, 1},
                                             {1, 0, 1},
                                             {mpq_class(1, 3), 1, 0},
                                             {1, 0, 0}}};
  return sc;
}

Scalar scale_factor(const mpq_class& r, int ps, int hy, const Scalar& s, const Scalar& y) {
  if (hy % 2 != 0) throw FormError("aloff_wallach_model: odd power of sqrt(y) in a structure constant");
  return Scalar(r) * pow(s, ps) * pow(y, hy / 2);
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  mpz_class rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return mpq_class(rn, rd);
}

Multivector single_blade(int n, Mask m) {
  Multivector f(n);
  f.add(m, Scalar(1));
  return f;
}

}  // namespace

bool ReductiveModel::jacobi() const {
  // [[Xi,Xj],Xk] as (m part, h part)
  auto nested = [&](int i, int j, int k) {
    Vec vm(n), vh(nh);
    for (int l = 0; l < n; ++l) {
      const Scalar& c = cm[i][j][l];
      if (c.is_zero()) continue;
      for (int p = 0; p < n; ++p) vm[p] += c * cm[l][k][p];
      for (int a = 0; a < nh; ++a) vh[a] += c * ch[l][k][a];
    }
    for (int a = 0; a < nh; ++a) {
      const Scalar& c = ch[i][j][a];
      if (c.is_zero()) continue;
      for (int p = 0; p < n; ++p) vm[p] += c * adh[a](p, k);
    }
    return std::make_pair(vm, vh);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        auto a = nested(i, j, k), b = nested(j, k, i), c = nested(k, i, j);
        if (!is_zero(add(add(a.first, b.first), c.first)) || !is_zero(add(add(a.second, b.second), c.second)))
          return false;
      }
  return reductive();
}

bool ReductiveModel::reductive() const {
  for (int a = 0; a < nh; ++a) {
    const Mat& h = adh[a];
    if (!h.is_skew()) return false;
    // ad(H) is a derivation: [H,[Xi,Xj]] = [[H,Xi],Xj] + [Xi,[H,Xj]]
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec lhs = h.apply(cm[i][j]);
        Vec rhs(n), rh(nh);
        for (int l = 0; l < n; ++l) {
          if (!h(l, i).is_zero()) {
            rhs = add(rhs, scale(cm[l][j], h(l, i)));
            rh = add(rh, scale(ch[l][j], h(l, i)));
          }
          if (!h(l, j).is_zero()) {
            rhs = add(rhs, scale(cm[i][l], h(l, j)));
            rh = add(rh, scale(ch[i][l], h(l, j)));
          }
        }
        if (lhs != rhs || !is_zero(rh)) return false;
      }
  }
  return true;
}

ReductiveModel aloff_wallach_model(const Scalar& s, const Scalar& y) {
  if (s.sign() <= 0 || y.sign() <= 0) throw FormError("metric parameters must be positive");
  auto basis = su3_basis();
  const auto& sc = aw_scales();
  ReductiveModel m;
  m.n = 7;
  m.nh = 1;
  m.cm.assign(7, std::vector<Vec>(7, Vec(7)));
  m.ch.assign(7, std::vector<Vec>(7, Vec(1)));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      auto c = su3_coords(bracket3(basis[i], basis[j]));
      for (int k = 0; k < 7; ++k)
        if (sgn(c[k]) != 0)
          m.cm[i][j][k] = scale_factor(c[k] * sc[i].r * sc[j].r / sc[k].r, sc[i].ps + sc[j].ps - sc[k].ps,
                                       sc[i].hy + sc[j].hy - sc[k].hy, s, y);
      if (sgn(c[7]) != 0)
        m.ch[i][j][0] = scale_factor(c[7] * sc[i].r * sc[j].r, sc[i].ps + sc[j].ps, sc[i].hy + sc[j].hy, s, y);
    }
  Mat h(7, 7);
  for (int j = 0; j < 7; ++j) {
    auto c = su3_coords(bracket3(basis[7], basis[j]));
    if (sgn(c[7]) != 0) throw FormError("aloff_wallach_model: [h, m] has an h component");
    for (int k = 0; k < 7; ++k)
      if (sgn(c[k]) != 0) h(k, j) = scale_factor(c[k] * sc[j].r / sc[k].r, sc[j].ps - sc[k].ps, sc[j].hy - sc[k].hy, s, y);
  }
  m.adh.push_back(h);
  return m;
}

ReductiveModel su2_model() {
  ReductiveModel m;
  m.n = 3;
  m.nh = 0;
  m.cm.assign(3, std::vector<Vec>(3, Vec(3)));
  m.ch.assign(3, std::vector<Vec>(3, Vec()));
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    m.cm[i][j][k] = 2;
    m.cm[j][i][k] = -2;
  }
  return m;
}

std::vector<Mat> levi_civita_map(const ReductiveModel& m) {
  int n = m.n;
  std::vector<Mat> lam(n, Mat(n, n));
  Scalar half = Scalar::frac(1, 2);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Scalar v = m.cm[x][y][z] + m.cm[z][x][y] + m.cm[z][y][x];
        if (!v.is_zero()) lam[x](z, y) = half * v;
      }
  return lam;
}

std::vector<Mat> connection_with_torsion(const std::vector<Mat>& lam, const Multivector& T, const Scalar& kappa) {
  std::vector<Mat> out = lam;
  if (T.is_zero()) return out;
  for (size_t x = 0; x < lam.size(); ++x) {
    Multivector c = contract(static_cast<int>(x) + 1, T);
    if (!c.is_zero()) out[x] += skew_of(c) * (Scalar(2) * kappa);
  }
  return out;
}

CurvatureReport nomizu_curvature(const ReductiveModel& m, const std::vector<Mat>& lam) {
  int n = m.n;
  CurvatureReport r;
  r.R.assign(n, std::vector<Mat>(n, Mat(n, n)));
  r.flat = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat c = commutator(lam[i], lam[j]);
      for (int k = 0; k < n; ++k)
        if (!m.cm[i][j][k].is_zero()) c -= lam[k] * m.cm[i][j][k];
      for (int a = 0; a < m.nh; ++a)
        if (!m.ch[i][j][a].is_zero()) c -= m.adh[a] * m.ch[i][j][a];
      if (!c.is_zero()) r.flat = false;
      r.R[j][i] = -c;
      r.R[i][j] = std::move(c);
    }
  return r;
}

Scalar sectional_curvature(const CurvatureReport& c, int i, int j) { return c.R[i][j](i, j); }

std::vector<Vec> fixed_spinors(const ReductiveModel& m) {
  const SpinRep& rep = spin_rep(m.n);
  std::vector<Mat> ms;
  for (auto& h : m.adh) ms.push_back(rep.lift(h));
  if (ms.empty()) ms.push_back(Mat(rep.dim(), rep.dim()));
  return joint_kernel(ms);
}

std::vector<Multivector> invariant_form_basis(const ReductiveModel& m, int k) { return invariant_forms(m.adh, m.n, k); }

bool is_invariant(const ReductiveModel& m, const Multivector& a) {
  for (auto& h : m.adh)
    if (!derivation_action(h, a).is_zero()) return false;
  return true;
}

Multivector coset_differential(const ReductiveModel& m, const Multivector& a) {
  int n = m.n;
  if (a.dim() != n) throw FormError("coset_differential: dimension mismatch");
  Multivector out(n);
  if (a.is_zero()) return out;
  if (!a.is_homogeneous()) throw FormError("coset_differential: form must be homogeneous");
  if (!is_invariant(m, a)) throw FormError("coset_differential: form is not isotropy invariant");
  int k = a.grade();
  if (k == 0 || k >= n) return out;
  for (Mask t = 0; t < (Mask(1) << n); ++t) {
    if (popcount(t) != k + 1) continue;
    auto idx = indices_of(t);
    Scalar total;
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        const Vec& br = m.cm[idx[i] - 1][idx[j] - 1];
        if (is_zero(br)) continue;
        std::vector<Vec> vecs{br};
        for (int l = 0; l <= k; ++l)
          if (l != i && l != j) {
            Vec e(n);
            e[idx[l] - 1] = 1;
            vecs.push_back(e);
          }
        Scalar v = evaluate(a, vecs);
        total += (i + j) % 2 ? -v : v;
      }
    if (!total.is_zero()) out.add(t, total);
  }
  return out;
}

SpinorSolution solve_spinor_system(const Vec& psi, const std::vector<Multivector>& ansatz, const std::vector<Mat>& M,
                                   const Scalar& kappa) {
  if (is_zero(psi)) throw FormError("solve_spinor_system: psi must be nonzero");
  int n = static_cast<int>(M.size());
  const SpinRep& rep = spin_rep(n);
  int d = rep.dim(), K = static_cast<int>(ansatz.size());
  Mat A(n * d, K);
  Vec b(n * d);
  for (int i = 0; i < n; ++i) {
    Vec mi = M[i].apply(psi);
    for (int r = 0; r < d; ++r) b[i * d + r] = -mi[r];
    for (int k = 0; k < K; ++k) {
      Multivector c = contract(i + 1, ansatz[k]);
      if (c.is_zero()) continue;
      Vec v = rep.act(c, psi);
      for (int r = 0; r < d; ++r)
        if (!v[r].is_zero()) A(i * d + r, k) = kappa * v[r];
    }
  }
  auto ls = solve_linear(A, b);
  SpinorSolution out;
  out.unknowns = K;
  out.rank = ls.rank;
  out.consistent = ls.consistent;
  out.unique = ls.consistent && ls.unique;
  if (!ls.consistent) return out;
  out.coeffs = ls.particular;
  out.form = Multivector(n);
  for (int k = 0; k < K; ++k)
    if (!out.coeffs[k].is_zero()) out.form += ansatz[k] * out.coeffs[k];
  out.residual_zero = true;
  for (int i = 0; i < n && out.residual_zero; ++i) {
    Vec r = M[i].apply(psi);
    if (!out.form.is_zero()) {
      Multivector c = contract(i + 1, out.form);
      if (!c.is_zero()) r = add(r, scale(rep.act(c, psi), kappa));
    }
    out.residual_zero = is_zero(r);
  }
  return out;
}

AWContext::AWContext(const Scalar& s_, const Scalar& y_) : s(s_), y(y_), model(aloff_wallach_model(s_, y_)) {
  lam = levi_civita_map(model);
  const SpinRep& rep = spin_rep(7);
  for (auto& l : lam) lifts.push_back(rep.lift(l));
}

SpinorSolution solve_torsion(const AWContext& ctx, const Vec& psi, const std::vector<Multivector>& ansatz) {
  // the seven-term Ansatz is not termwise invariant; the solution is checked instead
  auto sol = solve_spinor_system(psi, ansatz, ctx.lifts, Scalar(1));
  if (sol.consistent) sol.invariant = is_invariant(ctx.model, sol.form);
  return sol;
}

std::vector<Multivector> invariant_3forms() { return ref::ansatz13(); }
std::vector<Multivector> invariant_4forms() { return ref::ansatzR13(); }

std::array<Vec, 4> probe_spinors() {
  static const std::array<Vec, 4> cached = [] {
    AWContext ctx(Scalar(2), Scalar(4));
    const SpinRep& rep = spin_rep(7);
    std::array<Vec, 4> out;
    for (int k = 3; k <= 6; ++k) {
      Multivector T = ref::T_k(k, ctx.s, ctx.y);
      std::vector<Mat> ops;
      for (int i = 0; i < 7; ++i) ops.push_back(ctx.lifts[i] + rep.matrix(contract(i + 1, T)));
      auto ker = joint_kernel(ops);
      if (ker.size() != 1) throw FormError("probe_spinors: expected a one-dimensional solution space");
      out[k - 3] = ker[0];
    }
    Scalar n0 = dot(out[0], out[0]);
    for (int k = 1; k < 4; ++k) {
      auto r = rational_sqrt((n0 / dot(out[k], out[k])).as_rational());
      if (!r) throw FormError("probe_spinors: norms differ by a non-square factor");
      out[k] = scale(out[k], Scalar(*r));
    }
    return out;
  }();
  return cached;
}

Multivector g2_form_of_spinor(const Vec& psi) {
  const SpinRep& rep = spin_rep(7);
  if (static_cast<int>(psi.size()) != rep.dim()) throw FormError("g2_form_of_spinor: expects a spinor of Delta_7");
  Scalar nrm = dot(psi, psi);
  if (nrm.is_zero()) throw FormError("g2_form_of_spinor: psi must be nonzero");
  Multivector w(7);
  for (Mask t = 0; t < (Mask(1) << 7); ++t) {
    if (popcount(t) != 3) continue;
    Scalar v = -dot(rep.act(single_blade(7, t), psi), psi) / nrm;
    if (!v.is_zero()) w.add(t, v);
  }
  return w;
}

std::string to_string(G2Type t) {
  switch (t) {
    case G2Type::W1:
      return "W1";
    case G2Type::W3:
      return "W3";
    case G2Type::W1_W3:
      return "W1+W3";
    case G2Type::other:
      return "other";
  }
  return "other";
}

G2Type g2_class(const Multivector& omega, const Multivector& T) {
  if (T.is_zero()) return G2Type::other;
  Multivector so = hodge_star(omega);
  for (int i = 1; i <= 7; ++i)
    if (!form_inner(T, contract(i, so)).is_zero()) return G2Type::other;
  Scalar p = form_inner(T, omega);
  if (T * norm2(omega) == omega * p) return G2Type::W1;
  if (p.is_zero()) return G2Type::W3;
  return G2Type::W1_W3;
}

G2Report g2_type(const ReductiveModel& m, const Multivector& omega, const Multivector& T) {
  G2Report r;
  r.type = g2_class(omega, T);
  r.pairing = form_inner(T, omega);
  r.cocalibrated = coset_differential(m, hodge_star(omega)).is_zero();
  return r;
}

ScalarCurvatures scalars_from_torsion(const Multivector& omega, const Multivector& T) {
  Scalar p = form_inner(T, omega), t2 = norm2(T);
  return {Scalar(2) * p * p - Scalar::frac(1, 2) * t2, Scalar(2) * p * p - Scalar(2) * t2};
}

Mat ricci_characteristic(const Multivector& omega, const Multivector& dT) {
  int n = omega.dim();
  Mat r(n, n);
  if (dT.is_zero()) return r;
  Multivector so = hodge_star(omega);
  for (int i = 1; i <= n; ++i) {
    Multivector a = contract(i, dT);
    for (int j = 1; j <= n; ++j) r(i - 1, j - 1) = Scalar::frac(1, 2) * form_inner(a, contract(j, so));
  }
  return r;
}

std::vector<Root> scan_roots(double lo, double hi, double step) {
  std::vector<Root> roots;
  int cells = static_cast<int>(std::lround((hi - lo) / step));
  auto sign_change = [](double a, double b, double c, double d) {
    double mn = std::min({a, b, c, d}), mx = std::max({a, b, c, d});
    return mn <= 0 && mx >= 0;
  };
  for (int i = 0; i < cells; ++i)
    for (int j = 0; j < cells; ++j) {
      double s0 = lo + i * step, y0 = lo + j * step, s1 = s0 + step, y1 = y0 + step;
      if (!sign_change(ref::poly3(s0, y0), ref::poly3(s1, y0), ref::poly3(s0, y1), ref::poly3(s1, y1))) continue;
      if (!sign_change(ref::poly5(s0, y0), ref::poly5(s1, y0), ref::poly5(s0, y1), ref::poly5(s1, y1))) continue;
      double s = 0.5 * (s0 + s1), y = 0.5 * (y0 + y1);
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        double f = ref::poly3(s, y), g = ref::poly5(s, y);
        auto a = ref::grad_poly3(s, y), b = ref::grad_poly5(s, y);
        double det = a[0] * b[1] - a[1] * b[0];
        if (std::fabs(det) < 1e-300) break;
        double ds = (f * b[1] - g * a[1]) / det, dy = (a[0] * g - b[0] * f) / det;
        s -= ds;
        y -= dy;
        if (std::fabs(ds) + std::fabs(dy) < 1e-15) {
          ok = true;
          break;
        }
      }
      double r3 = std::fabs(ref::poly3(s, y)), r5 = std::fabs(ref::poly5(s, y));
      if (!ok && (r3 > 1e-9 || r5 > 1e-9)) continue;
      if (s < lo || s > hi || y < lo || y > hi) continue;
      bool dup = false;
      for (auto& r : roots)
        if (std::fabs(r.s - s) < 1e-6 && std::fabs(r.y - y) < 1e-6) dup = true;
      if (!dup) roots.push_back({s, y, r3, r5});
    }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.s < b.s; });
  return roots;
}

}  // namespace holo
