#include "holo/flat.hpp"

#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace holo {

RMat to_real(const Mat& m) {
  RMat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_double();
  return r;
}

RVec to_real(const Vec& v) {
  RVec r(static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) r(static_cast<int>(i)) = v[i].to_double();
  return r;
}

RMat expm(const RMat& a) { return a.exp(); }

namespace {

// spin images of e_i -| T as doubles
std::vector<RMat> spin_images(const Multivector& T) {
  const SpinRep& rep = spin_rep(T.dim());
  std::vector<RMat> out;
  for (int i = 1; i <= T.dim(); ++i) out.push_back(to_real(rep.matrix(contract(i, T))));
  return out;
}

RMat combine(const std::vector<RMat>& ms, const Point& c) {
  RMat r = RMat::Zero(ms[0].rows(), ms[0].cols());
  for (size_t i = 0; i < ms.size(); ++i) r += c[i] * ms[i];
  return r;
}

void require_point(const Point& p, int n) {
  if (static_cast<int>(p.size()) != n) throw FormError("point has wrong dimension");
}

}  // namespace

void check_parallel_precondition(const Multivector& T, const Vec& psi0) {
  if (T.is_zero()) return;
  AnalyzeOptions opt;
  opt.irreducibility = false;
  opt.killing = false;
  auto g = g_star(T, RepMode::spinor, opt);
  auto h = derived_algebra(g.basis);
  for (size_t k = 0; k < h.size(); ++k)
    if (!is_zero(h[k].apply(psi0))) {
      std::ostringstream os;
      os << "precondition violated: element " << k << " of the h*_T basis (dim " << h.size() << ") does not annihilate psi0";
      throw FormError(os.str());
    }
}

RVec parallel_spinor_field(const Multivector& T, const Vec& psi0, const Point& m, bool check) {
  int n = T.dim();
  require_point(m, n);
  if (check) check_parallel_precondition(T, psi0);
  RVec p0 = to_real(psi0);
  if (T.is_zero()) return p0;
  return expm(-combine(spin_images(T), m)) * p0;
}

double finite_difference_residual(const Multivector& T, const Vec& psi0, const Point& m, const Point& dir, double h) {
  int n = T.dim();
  require_point(m, n);
  require_point(dir, n);
  auto ims = spin_images(T);
  RVec p0 = to_real(psi0);
  Point mh = m;
  for (int i = 0; i < n; ++i) mh[i] += h * dir[i];
  RVec a = expm(-combine(ims, m)) * p0;
  RVec b = expm(-combine(ims, mh)) * p0;
  RVec r = (b - a) / h + combine(ims, dir) * a;
  return r.norm();
}

RMat edge_transport(const Multivector& T, const Point& from, const Point& to) {
  int n = T.dim();
  require_point(from, n);
  require_point(to, n);
  if (T.grade() != 3 && !T.is_zero()) throw FormError("vector transport needs a 3-form");
  Point d(n);
  for (int i = 0; i < n; ++i) d[i] = to[i] - from[i];
  if (T.is_zero()) return RMat::Identity(n, n);
  // L * A(u) = A(d) by linearity
  RMat a = RMat::Zero(n, n);
  for (int i = 1; i <= n; ++i) a += 2.0 * d[i - 1] * to_real(skew_of(contract(i, T)));
  return expm(-a);
}

RMat transport_loop(const Multivector& T, const std::vector<Point>& loop) {
  int n = T.dim();
  if (loop.size() < 2) throw FormError("loop needs at least two points");
  const Point& a = loop.front();
  const Point& b = loop.back();
  require_point(a, n);
  require_point(b, n);
  for (int i = 0; i < n; ++i)
    if (std::fabs(a[i] - b[i]) > 1e-12) throw FormError("loop is not closed");
  RMat r = RMat::Identity(n, n);
  for (size_t k = 0; k + 1 < loop.size(); ++k) r = edge_transport(T, loop[k], loop[k + 1]) * r;
  return r;
}

RotationInfo rotation_info(const RMat& r) {
  if (r.rows() != 3 || r.cols() != 3) throw FormError("rotation_info expects a 3x3 matrix");
  RotationInfo info;
  double c = std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0);
  info.angle = std::acos(c);
  Eigen::Vector3d ax(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1));
  double nrm = ax.norm();
  if (nrm > 1e-14) ax /= nrm;
  info.axis = {ax(0), ax(1), ax(2)};
  return info;
}

Multivector cartan_torsion() { return Multivector::blade(3, {1, 2, 3}, Scalar::frac(-1, 2)); }

std::vector<Point> coordinate_triangle(int axis, double size) {
  if (axis < 1 || axis > 3) throw FormError("axis must be 1, 2 or 3");
  int u = axis == 1 ? 1 : 0, v = axis == 3 ? 1 : 2;
  Point o(3, 0.0), p(3, 0.0), q(3, 0.0);
  p[u] = size;
  q[v] = size;
  return {o, p, q, o};
}

LoopAlgebraReport loop_holonomy_algebra(const Multivector& T, const std::vector<std::vector<Point>>& loops) {
  LoopAlgebraReport r;
  int n = T.dim();
  std::vector<Eigen::Vector3d> axes;
  for (auto& loop : loops) {
    RMat h = transport_loop(T, loop);
    r.transports.push_back(h);
    RMat s = 0.5 * (h - h.transpose());
    double mx = s.cwiseAbs().maxCoeff();
    if (mx < 1e-12) continue;
    s /= mx;
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Scalar q(rationalize(s(i, j)));
        g(i, j) = q;
        g(j, i) = -q;
      }
    r.generators.push_back(g);
    if (n == 3) axes.emplace_back(s(2, 1), s(0, 2), s(1, 0));
  }
  if (axes.size() >= 3) {
    Eigen::Matrix3d m;
    for (int k = 0; k < 3; ++k) m.col(k) = axes[k].normalized();
    r.axis_det = m.determinant();
    r.independent = std::fabs(r.axis_det) > 1e-6;
  }
  r.closure_dim = static_cast<int>(bracket_closure(r.generators).size());
  return r;
}

IntegrabilityReport integrability_endomorphism(const Multivector& dT, const Multivector& sigma, const Multivector& deltaT,
                                               const Scalar& scal_s, const Scalar& s) {
  int n = dT.dim();
  if (sigma.dim() != n || deltaT.dim() != n) throw FormError("integrability_endomorphism: dimension mismatch");
  Multivector e = dT * (Scalar(3) * s) - sigma * (Scalar(8) * s * s) + deltaT * (Scalar(2) * s) +
                  Multivector::scalar(n, scal_s * Scalar::frac(1, 4));
  const SpinRep& rep = spin_rep(n);
  IntegrabilityReport r;
  r.endomorphism = rep.matrix(e);
  r.real_det = determinant(r.endomorphism);
  if (rep.realified()) r.complex_det = complex_determinant(r.endomorphism);
  if (n == 4) {
    Multivector top = e.part(4);
    Scalar f = top.coeff(mask_of({1, 2, 3, 4}));
    r.lemma = det4(e.part(0).coeff(0), e.part(2), f);
    r.lemma_agrees = r.complex_det && r.complex_det->second.is_zero() && r.complex_det->first == r.lemma->direct &&
                     r.lemma->agree && e.part(1).is_zero() && e.part(3).is_zero();
  }
  return r;
}

std::string ParameterConstraint::describe() const {
  switch (kind) {
    case Kind::quotient:
      return "s = " + s.str();
    case Kind::quadratic:
      return "s^2 = " + s_squared.str();
    case Kind::unconstrained:
      return "unconstrained";
    case Kind::inconsistent:
      return "no admissible s";
  }
  return "";
}

ParameterConstraint parameter_constraints(const Multivector& T, const Multivector& dT, const Vec& psi, const Scalar& scal_g) {
  int n = T.dim();
  if (is_zero(psi)) throw FormError("parameter_constraints: psi must be nonzero");
  const SpinRep& rep = spin_rep(n);
  Scalar norm = dot(psi, psi);
  ParameterConstraint c;
  Multivector sigma = T.is_zero() ? Multivector(n) : sigma_T(T);
  c.sigma_mean = dot(rep.act(sigma, psi), psi) / norm;
  c.dT_mean = dT.is_zero() ? Scalar(0) : dot(rep.act(dT, psi), psi) / norm;
  if (!c.sigma_mean.is_zero()) {
    c.kind = ParameterConstraint::Kind::quotient;
    c.s = c.dT_mean / (Scalar(8) * c.sigma_mean);
    return c;
  }
  Scalar t0 = T.is_zero() ? Scalar(0) : square_parts(T).t0;
  if (!t0.is_zero()) {
    c.s_squared = scal_g / (Scalar(24) * t0);
    c.kind = c.s_squared.sign() >= 0 ? ParameterConstraint::Kind::quadratic : ParameterConstraint::Kind::inconsistent;
    return c;
  }
  c.kind = scal_g.is_zero() ? ParameterConstraint::Kind::unconstrained : ParameterConstraint::Kind::inconsistent;
  return c;
}

Multivector codifferential_correction(const Multivector& T, const Multivector& omega) {
  int n = T.dim();
  if (omega.dim() != n) throw FormError("codifferential_correction: dimension mismatch");
  Multivector out(n);
  if (T.is_zero() || omega.is_zero() || T.grade() < 2 || omega.grade() < 2) return out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Multivector tj = contract(j, T);
      if (tj.is_zero()) continue;
      Multivector tij = contract(i, tj);
      Multivector oj = contract(j, omega);
      if (tij.is_zero() || oj.is_zero()) continue;
      Multivector oij = contract(i, oj);
      if (oij.is_zero()) continue;
      out += wedge(tij, oij);
    }
  return out * Scalar::frac(-1, 2);
}

Multivector nabla_codifferential(const Multivector& T, const Multivector& omega, const Multivector& delta_g_omega) {
  return delta_g_omega + codifferential_correction(T, omega);
}

TwoFormIdentities parallel_two_form_identities(const Multivector& omega, const Multivector& T) {
  int n = T.dim();
  if (omega.dim() != n) throw FormError("parallel_two_form_identities: dimension mismatch");
  if (!omega.is_zero() && omega.grade() != 2) throw FormError("Omega must be a 2-form");
  if (!T.is_zero() && T.grade() != 3) throw FormError("T must be a 3-form");
  Mat w(n, n);
  for (auto& [m, v] : omega.terms()) {
    auto ix = indices_of(m);
    w(ix[0] - 1, ix[1] - 1) = v;
    w(ix[1] - 1, ix[0] - 1) = -v;
  }
  Tensor3 t = T.is_zero() ? Tensor3(n) : tensor_of_form(T);
  TwoFormIdentities r;
  r.delta = Multivector(n);
  r.delta_contraction = Multivector(n);
  for (int g = 0; g < n; ++g) {
    Scalar acc;
    for (int b = 0; b < n; ++b)
      for (int j = 0; j < n; ++j) acc += w(b, j) * t(b, j, g);
    if (!acc.is_zero()) r.delta.add(Mask(1) << g, acc * Scalar::frac(1, 4));
  }
  if (!T.is_zero())
    for (auto& [m, v] : omega.terms()) {
      auto ix = indices_of(m);
      Multivector c = contract(ix[0], T);
      if (c.is_zero()) continue;
      c = contract(ix[1], c);
      r.delta_contraction += c * (v * Scalar::frac(1, 2));
    }
  r.d = Multivector(n);
  if (!T.is_zero() && !omega.is_zero())
    for (int j = 1; j <= n; ++j) {
      Multivector a = contract(j, omega), b = contract(j, T);
      if (!a.is_zero() && !b.is_zero()) r.d += wedge(a, b);
    }
  r.d_coordinates = Multivector(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Scalar acc;
        for (int j = 0; j < n; ++j) acc += w(a, j) * t(b, j, c) - w(b, j) * t(a, j, c) + w(c, j) * t(a, j, b);
        if (!acc.is_zero()) r.d_coordinates.add(mask_of({a + 1, b + 1, c + 1}), acc);
      }
  Scalar boch;
  for (int al = 0; al < n; ++al)
    for (int ga = 0; ga < n; ++ga) {
      if (w(al, ga).is_zero()) continue;
      for (int k = 0; k < n; ++k) {
        if (w(al, k).is_zero()) continue;
        Scalar tt;
        for (int b = 0; b < n; ++b)
          for (int j = 0; j < n; ++j) tt += t(b, j, k) * t(b, j, ga);
        boch += w(al, ga) * w(al, k) * tt;
      }
    }
  r.bochner = boch * Scalar::frac(1, 2);
  bool adapted = true;
  for (auto& [m, v] : omega.terms()) {
    auto ix = indices_of(m);
    if (!(ix[0] % 2 == 1 && ix[1] == ix[0] + 1)) adapted = false;
  }
  if (adapted) {
    Scalar acc;
    for (int k = 1; 2 * k <= n; ++k) {
      Scalar a = omega.coeff(mask_of({2 * k - 1, 2 * k}));
      if (a.is_zero()) continue;
      Scalar tt;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tt += t(i, j, 2 * k - 2) * t(i, j, 2 * k - 2) + t(i, j, 2 * k - 1) * t(i, j, 2 * k - 1);
      acc += tt * a * a;
    }
    r.bochner_adapted = acc * Scalar::frac(1, 2);
  }
  r.consistent = r.delta == r.delta_contraction && r.d == r.d_coordinates && (!r.bochner_adapted || *r.bochner_adapted == r.bochner);
  return r;
}

}  // namespace holo
