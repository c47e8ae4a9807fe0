#include "holo/lie.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <deque>
#include <map>

#include "holo/random.hpp"

namespace holo {

bool MatrixSpan::insert(const Mat& x) {
  if (x.rows() != m_ || x.cols() != m_) throw LieError("matrix size mismatch in span");
  if (!ech_.insert(x.flatten())) return false;
  basis_.push_back(x);
  return true;
}

bool MatrixSpan::contains(const Mat& x) const { return ech_.contains(x.flatten()); }

std::optional<Vec> MatrixSpan::coordinates(const Mat& x) const { return ech_.coordinates(x.flatten()); }

namespace {

// rational matrices rescaled to coprime integer entries; keeps coefficients small
Mat primitive(const Mat& x) {
  mpz_class num = 0, den = 1;
  for (auto& v : x.data()) {
    if (v.is_zero()) continue;
    if (!v.is_rational()) return x;
    const mpq_class& q = v.as_rational();
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  }
  if (num == 0) return x;
  return x * Scalar(mpq_class(den, num));
}

}  // namespace

std::vector<Mat> bracket_closure(const std::vector<Mat>& gens) {
  if (gens.empty()) return {};
  int m = gens[0].rows();
  for (auto& g : gens)
    if (g.rows() != m || g.cols() != m) throw LieError("generators must be square of equal size");
  MatrixSpan span(m);
  bool skew = true;
  for (auto& g : gens) skew = skew && g.is_skew();
  // nothing can be added once the span fills so(m) (or gl(m))
  int full = skew ? m * (m - 1) / 2 : m * m;
  std::deque<Mat> work(gens.begin(), gens.end());
  while (!work.empty() && span.dim() < full) {
    Mat x = primitive(work.front());
    work.pop_front();
    if (x.is_zero() || !span.insert(x)) continue;
    // bracket the newcomer with everything already present
    int last = span.dim() - 1;
    for (int i = 0; i < last; ++i) work.push_back(commutator(span.basis()[last], span.basis()[i]));
  }
  return span.basis();
}

namespace {

struct Structure {
  std::vector<Mat> ad;  // ad[i](k, j) = coefficient of b_k in [b_i, b_j]
};

Structure structure_of(const std::vector<Mat>& basis) {
  int d = static_cast<int>(basis.size());
  Structure s;
  s.ad.assign(d, Mat(d, d));
  if (d == 0) return s;
  MatrixSpan span(basis[0].rows(), true);
  for (auto& b : basis)
    if (!span.insert(b)) throw LieError("basis is linearly dependent");
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto c = span.coordinates(commutator(basis[i], basis[j]));
      if (!c) throw LieError("span is not closed under the bracket");
      for (int k = 0; k < d; ++k) {
        if ((*c)[k].is_zero()) continue;
        s.ad[i](k, j) = (*c)[k];
        s.ad[j](k, i) = -(*c)[k];
      }
    }
  return s;
}

int derived_dim_of(const Structure& s) {
  int d = static_cast<int>(s.ad.size());
  Echelon e(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) e.insert(to_sparse(s.ad[i].column(j)));
  return e.rank();
}

int center_dim_of(const Structure& s) {
  int d = static_cast<int>(s.ad.size());
  if (d == 0) return 0;
  // sum_i c_i ad_i[:, j] = 0 for all j
  Echelon e(d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      SparseVec row;
      for (int i = 0; i < d; ++i)
        if (!s.ad[i](k, j).is_zero()) row.emplace_back(i, s.ad[i](k, j));
      if (!row.empty()) e.insert(row);
    }
  return d - e.rank();
}

KillingReport killing_of(const Structure& s) {
  int d = static_cast<int>(s.ad.size());
  KillingReport r;
  r.form = Mat(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Scalar t;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          const Scalar& x = s.ad[i](a, b);
          if (x.is_zero()) continue;
          const Scalar& y = s.ad[j](b, a);
          if (!y.is_zero()) t += x * y;
        }
      r.form(i, j) = t;
      r.form(j, i) = t;
    }
  r.rank = rank(r.form);
  r.semisimple = d > 0 && r.rank == d;
  r.compact = r.semisimple && is_positive_definite(-r.form);
  return r;
}

}  // namespace

bool is_bracket_closed(const std::vector<Mat>& basis) {
  try {
    structure_of(basis);
    return true;
  } catch (const LieError&) {
    return false;
  }
}

std::vector<Mat> derived_algebra(const std::vector<Mat>& basis) {
  if (basis.empty()) return {};
  if (!is_bracket_closed(basis)) throw LieError("derived_algebra: input is not closed under the bracket");
  MatrixSpan span(basis[0].rows());
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) span.insert(commutator(basis[i], basis[j]));
  return span.basis();
}

int center_dim(const std::vector<Mat>& basis) { return center_dim_of(structure_of(basis)); }

KillingReport killing_form(const std::vector<Mat>& basis) { return killing_of(structure_of(basis)); }

std::vector<Mat> adjoint_matrices(const std::vector<Mat>& basis) { return structure_of(basis).ad; }

namespace {

// unknown matrix S = sum_u x_u B_u; kind 0 = all, 1 = symmetric, 2 = skew
std::vector<Mat> commutant_impl(const std::vector<Mat>& gens, int kind, int n) {
  // param(i,j) -> (unknown index, sign) or (-1, 0)
  std::vector<int> idx(n * n, -1), sg(n * n, 0);
  int nu = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (kind == 0) {
        idx[i * n + j] = nu++;
        sg[i * n + j] = 1;
      } else if (i <= j) {
        if (kind == 2 && i == j) continue;
        idx[i * n + j] = idx[j * n + i] = nu++;
        sg[i * n + j] = 1;
        sg[j * n + i] = kind == 1 ? 1 : -1;
      }
    }
  Echelon e(nu);
  for (auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw LieError("commutant: size mismatch");
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        std::map<int, Scalar> row;
        for (int k = 0; k < n; ++k) {
          const Scalar& a = g(r, k);
          if (!a.is_zero() && idx[k * n + c] >= 0) {
            Scalar& t = row[idx[k * n + c]];
            t += sg[k * n + c] > 0 ? a : -a;
          }
          const Scalar& b = g(k, c);
          if (!b.is_zero() && idx[r * n + k] >= 0) {
            Scalar& t = row[idx[r * n + k]];
            t -= sg[r * n + k] > 0 ? b : -b;
          }
        }
        SparseVec sv;
        for (auto& [j, v] : row)
          if (!v.is_zero()) sv.emplace_back(j, v);
        if (!sv.empty()) e.insert(sv);
        if (e.rank() == nu) return {};
      }
  }
  std::vector<Mat> out;
  for (auto& k : e.kernel()) {
    Vec x = to_dense(k, nu);
    Mat s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (idx[i * n + j] >= 0) s(i, j) = sg[i * n + j] > 0 ? x[idx[i * n + j]] : -x[idx[i * n + j]];
    out.push_back(s);
  }
  return out;
}

int size_of(const std::vector<Mat>& gens) { return gens.empty() ? 0 : gens[0].rows(); }

}  // namespace

std::vector<Mat> commutant(const std::vector<Mat>& gens) { return commutant_impl(gens, 0, size_of(gens)); }
std::vector<Mat> symmetric_commutant(const std::vector<Mat>& gens) { return commutant_impl(gens, 1, size_of(gens)); }
std::vector<Mat> skew_commutant(const std::vector<Mat>& gens) { return commutant_impl(gens, 2, size_of(gens)); }

std::vector<Vec> saturate(const std::vector<Mat>& gens, const std::vector<Vec>& start) {
  if (start.empty()) return {};
  int n = static_cast<int>(start[0].size());
  Echelon e(n);
  std::vector<Vec> out;
  std::deque<Vec> work(start.begin(), start.end());
  while (!work.empty()) {
    Vec v = std::move(work.front());
    work.pop_front();
    if (!e.insert(to_sparse(v))) continue;
    out.push_back(v);
    if (e.rank() == n) break;
    for (auto& g : gens) work.push_back(g.apply(v));
  }
  return out;
}

// continued-fraction approximation with bounded denominator
mpq_class rationalize(double x, long max_den) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(v);
    long ai = static_cast<long>(a);
    long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    double frac = v - a;
    if (std::fabs(frac) < 1e-12) break;
    v = 1.0 / frac;
  }
  mpq_class r(p1, q1);
  r.canonicalize();
  return r;
}

namespace {

Eigen::MatrixXd to_eigen(const Mat& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j).to_double();
  return e;
}

std::vector<Vec> proper_saturation(const std::vector<Mat>& gens, int n, std::uint64_t seed) {
  for (int j = 0; j < n; ++j) {
    Vec v(n);
    v[j] = Scalar(1);
    auto w = saturate(gens, {v});
    if (static_cast<int>(w.size()) < n) return w;
  }
  Sampler rng(seed);
  for (int t = 0; t < 8; ++t) {
    auto w = saturate(gens, {rng.nonzero_vector(n)});
    if (static_cast<int>(w.size()) < n) return w;
  }
  return {};
}

}  // namespace

std::vector<std::pair<Scalar, std::vector<Vec>>> rational_eigenspaces(const Mat& s) {
  int n = s.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(s));
  std::vector<std::pair<Scalar, std::vector<Vec>>> out;
  for (int k = 0; k < n; ++k) {
    Scalar lam(rationalize(es.eigenvalues()(k)));
    bool seen = false;
    for (auto& [l, v] : out) seen = seen || l == lam;
    if (seen) continue;
    auto ker = kernel(s - Mat::identity(n) * lam);
    if (!ker.empty()) out.emplace_back(lam, ker);
  }
  return out;
}

IrreducibilityReport invariant_subspace_search(const std::vector<Mat>& gens, std::uint64_t seed) {
  IrreducibilityReport r;
  int n = size_of(gens);
  if (n == 0) throw LieError("invariant_subspace_search: no matrices");
  bool skew = true;
  for (auto& g : gens) skew = skew && g.is_skew();
  if (n == 1) {
    r.irreducible = r.proved = true;
    r.method = "one-dimensional";
    return r;
  }
  if (skew) {
    auto sym = symmetric_commutant(gens);
    r.symmetric_commutant_dim = static_cast<int>(sym.size());
    r.proved = true;
    if (sym.size() == 1) {
      r.irreducible = true;
      r.method = "symmetric commutant is scalar";
      return r;
    }
    r.irreducible = false;
    r.method = "symmetric commutant has dimension " + std::to_string(sym.size());
    r.witness = proper_saturation(gens, n, seed);
    if (!r.witness.empty()) return r;
    // eigenspace of a random commutant element with a rational eigenvalue
    Sampler rng(seed + 17);
    for (int t = 0; t < 8 && r.witness.empty(); ++t) {
      Mat s(n, n);
      for (auto& b : sym) s += b * rng.rational();
      for (auto& [lam, ker] : rational_eigenspaces(s))
        if (static_cast<int>(ker.size()) < n) {
          r.witness = ker;
          break;
        }
    }
    return r;
  }
  r.witness = proper_saturation(gens, n, seed);
  r.irreducible = r.witness.empty();
  r.proved = !r.irreducible;  // a witness is exact; its absence is only evidence
  r.method = "saturation from coordinate and random vectors";
  return r;
}

int generic_centralizer_dim(const std::vector<Mat>& basis, std::uint64_t seed) {
  if (basis.empty()) return 0;
  auto ad = adjoint_matrices(basis);
  Sampler rng(seed);
  int d = static_cast<int>(basis.size());
  Mat x(d, d);
  for (auto& a : ad) x += a * rng.nonzero_rational();
  return d - rank(x);
}

ClosureReport analyze_basis(const std::vector<Mat>& basis, const AnalyzeOptions& opt) {
  ClosureReport r;
  r.basis = basis;
  r.dim = static_cast<int>(basis.size());
  if (r.dim == 0) return r;
  Structure s = structure_of(basis);
  r.derived_dim = derived_dim_of(s);
  r.center_dim = center_dim_of(s);
  if (opt.killing) {
    KillingReport k = killing_of(s);
    r.semisimple = k.semisimple;
    r.compact = k.compact;
    r.killing_rank = k.rank;
    Sampler rng(opt.seed);
    Mat x(r.dim, r.dim);
    for (auto& a : s.ad) x += a * rng.nonzero_rational();
    r.centralizer_dim = r.dim - rank(x);
  }
  if (opt.irreducibility) r.irreducibility = invariant_subspace_search(basis, opt.seed);
  return r;
}

std::vector<Mat> reduced_basis(const std::vector<Mat>& span) {
  if (span.empty()) return {};
  int m = span[0].rows();
  std::vector<Vec> rows;
  for (auto& x : span) rows.push_back(x.data());
  int cols = m * m, r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(rows.size()) && rows[p][c].is_zero()) ++p;
    if (p == static_cast<int>(rows.size())) continue;
    std::swap(rows[p], rows[r]);
    rows[r] = scale(rows[r], Scalar(1) / rows[r][c]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(i) != r && !rows[i][c].is_zero()) rows[i] = sub(rows[i], scale(rows[r], rows[i][c]));
    ++r;
  }
  std::vector<Mat> out;
  for (int i = 0; i < r; ++i) out.push_back(unflatten(to_sparse(rows[i]), m, m));
  return out;
}

ClosureReport analyze(const std::vector<Mat>& gens, const AnalyzeOptions& opt) {
  return analyze_basis(reduced_basis(bracket_closure(gens)), opt);
}

}  // namespace holo
