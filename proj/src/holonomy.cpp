#include "holo/holonomy.hpp"

#include <map>
#include <tuple>

#include "holo/random.hpp"

namespace holo {

namespace {

std::vector<Mask> blades_of_grade(int n, int k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask(1) << n); ++m)
    if (popcount(m) == k) out.push_back(m);
  return out;
}

Multivector single(int n, Mask m, const Scalar& c = Scalar(1)) {
  Multivector f(n);
  f.add(m, c);
  return f;
}

// columns of a linear map into forms, flattened over a shared mask index
struct FormColumns {
  std::map<Mask, int> row_of;
  std::vector<Multivector> cols;
  Mat matrix() {
    for (auto& c : cols)
      for (auto& [m, v] : c.terms()) row_of.emplace(m, 0);
    int r = 0;
    for (auto& [m, idx] : row_of) idx = r++;
    Mat a(r, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
      for (auto& [m, v] : cols[j].terms()) a(row_of[m], static_cast<int>(j)) = v;
    return a;
  }
};

std::vector<Vec> kernel_of_columns(std::vector<Multivector> cols) {
  int nc = static_cast<int>(cols.size());
  FormColumns fc;
  fc.cols = std::move(cols);
  Mat a = fc.matrix();
  if (a.rows() == 0) {
    std::vector<Vec> out;
    for (int j = 0; j < nc; ++j) {
      Vec e(nc);
      e[j] = 1;
      out.push_back(e);
    }
    return out;
  }
  return kernel(a);
}

Mat projector(const std::vector<Vec>& basis) {
  Mat b = Mat::from_columns(basis);
  auto g = inverse(b.transpose() * b);
  if (!g) throw LinalgError("projector: basis is dependent");
  return b * (*g) * b.transpose();
}

void require_grade3(const Multivector& T, const char* what) {
  if (T.grade() != 3 || T.is_zero()) throw FormError(std::string(what) + ": a nonzero 3-form is required");
}

}  // namespace

std::vector<Mat> g_star_generators(const Multivector& T, RepMode mode) {
  int n = T.dim();
  std::vector<Mat> out;
  if (mode == RepMode::vector) {
    require_grade3(T, "vector representation");
    for (int i = 1; i <= n; ++i) out.push_back(skew_of(contract(i, T)));
  } else {
    if (T.is_zero() || !T.is_homogeneous() || T.grade() < 1) throw FormError("spinor generators need a nonzero form of positive degree");
    const SpinRep& rep = spin_rep(n);
    for (int i = 1; i <= n; ++i) out.push_back(rep.matrix(contract(i, T)));
  }
  return out;
}

ClosureReport g_star(const Multivector& T, RepMode mode, const AnalyzeOptions& opt) {
  return analyze(g_star_generators(T, mode), opt);
}

Multivector derivation_action(const Mat& skew, const Multivector& T) {
  int n = T.dim();
  if (skew.rows() != n) throw FormError("derivation_action: size mismatch");
  Multivector out(n);
  if (T.is_zero() || T.grade() == 0) return out;
  for (int i = 1; i <= n; ++i) {
    Multivector c = contract(i, T);
    if (c.is_zero()) continue;
    out += wedge(Multivector::vector(n, skew.column(i - 1)), c);
  }
  return out;
}

std::vector<Multivector> isotropy_algebra(const Multivector& T) {
  int n = T.dim();
  auto pairs = blades_of_grade(n, 2);
  std::vector<Multivector> cols;
  for (Mask p : pairs) cols.push_back(derivation_action(skew_of(single(n, p)), T));
  std::vector<Multivector> out;
  for (auto& k : kernel_of_columns(std::move(cols))) {
    Multivector w(n);
    for (size_t j = 0; j < pairs.size(); ++j)
      if (!k[j].is_zero()) w.add(pairs[j], k[j]);
    out.push_back(w);
  }
  return out;
}

std::vector<Multivector> invariant_forms(const std::vector<Mat>& skews, int n, int k) {
  auto blades = blades_of_grade(n, k);
  int nb = static_cast<int>(blades.size());
  // one equation per (generator, output blade)
  std::map<std::pair<size_t, Mask>, std::map<int, Scalar>> eqs;
  for (int t = 0; t < nb; ++t)
    for (size_t g = 0; g < skews.size(); ++g) {
      Multivector img = derivation_action(skews[g], single(n, blades[t]));
      for (auto& [m, v] : img.terms()) eqs[{g, m}][t] += v;
    }
  Echelon e(nb);
  for (auto& [key, row] : eqs) {
    SparseVec r;
    for (auto& [t, v] : row)
      if (!v.is_zero()) r.emplace_back(t, v);
    if (!r.empty()) e.insert(r);
  }
  std::vector<Multivector> out;
  for (auto& kv : e.kernel()) {
    Multivector f(n);
    for (auto& [t, v] : kv) f.add(blades[t], v);
    out.push_back(f);
  }
  return out;
}

std::vector<Vec> invariant_spinors(const Multivector& T) {
  int n = T.dim();
  const SpinRep& rep = spin_rep(n);
  std::vector<Mat> ms;
  for (int i = 1; i <= n; ++i) {
    Multivector c = contract(i, T);
    if (!c.is_zero()) ms.push_back(rep.matrix(c));
  }
  if (ms.empty()) ms.push_back(Mat(rep.dim(), rep.dim()));
  return joint_kernel(ms);
}

std::vector<Multivector> annihilating_forms(const Vec& psi, int n, int k) {
  if (k < 1 || k > n) throw FormError("annihilating_forms: degree out of range");
  const SpinRep& rep = spin_rep(n);
  if (static_cast<int>(psi.size()) != rep.dim()) throw FormError("spinor length does not match representation");
  auto blades = blades_of_grade(n, k);
  int nb = static_cast<int>(blades.size());
  // images[i][t] = rho(e_i -| e_t) psi
  std::vector<std::vector<Vec>> img(n, std::vector<Vec>(nb));
  for (int i = 1; i <= n; ++i)
    for (int t = 0; t < nb; ++t)
      if (blades[t] & (Mask(1) << (i - 1))) img[i - 1][t] = rep.act(contract(i, single(n, blades[t])), psi);
  Echelon e(nb);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < rep.dim(); ++r) {
      SparseVec row;
      for (int t = 0; t < nb; ++t)
        if (!img[i][t].empty() && !img[i][t][r].is_zero()) row.emplace_back(t, img[i][t][r]);
      if (!row.empty()) e.insert(row);
    }
  std::vector<Multivector> out;
  for (auto& kv : e.kernel()) {
    Multivector f(n);
    for (auto& [t, v] : kv) f.add(blades[t], v);
    out.push_back(f);
  }
  return out;
}

std::vector<Vec> half_spinors(int n) {
  const SpinRep& rep = spin_rep(n);
  Mat vol = rep.blade((Mask(1) << n) - 1).to_mat();
  Mat id = Mat::identity(rep.dim());
  if (vol * vol != id) throw FormError("volume element does not square to 1 in this dimension");
  return kernel(vol - id);
}

int pair_index(int n, int a, int b) {
  if (!(1 <= a && a < b && b <= n)) throw FormError("pair_index: need 1 <= a < b <= n");
  int idx = 0;
  for (int x = 1; x < a; ++x) idx += n - x;
  return idx + (b - a - 1);
}

Vec two_form_coords(const Multivector& w) {
  int n = w.dim();
  Vec c(n * (n - 1) / 2);
  for (auto& [m, v] : w.terms()) {
    if (popcount(m) != 2) throw FormError("two_form_coords: not a 2-form");
    auto ix = indices_of(m);
    c[pair_index(n, ix[0], ix[1])] = v;
  }
  return c;
}

Multivector two_form_from_coords(int n, const Vec& c) {
  Multivector w(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      const Scalar& v = c.at(pair_index(n, a, b));
      if (!v.is_zero()) w.add(mask_of({a, b}), v);
    }
  return w;
}

std::vector<Multivector> antisym_prolongation(const std::vector<Mat>& g, int n) {
  std::vector<Vec> rows;
  for (auto& m : g) {
    if (!m.is_skew() || m.rows() != n) throw FormError("antisym_prolongation: expects skew n x n matrices");
    rows.push_back(two_form_coords(two_form_of(m)));
  }
  int np = n * (n - 1) / 2;
  std::vector<SparseVec> fs;
  if (rows.empty()) {
    for (int p = 0; p < np; ++p) fs.push_back({{p, Scalar(1)}});
  } else {
    for (auto& k : kernel(Mat::from_rows(rows))) fs.push_back(to_sparse(k));
  }
  return prolongation_from_functionals(fs, n);
}

std::vector<Multivector> prolongation_from_functionals(const std::vector<SparseVec>& functionals, int n) {
  auto triples = blades_of_grade(n, 3);
  int nt = static_cast<int>(triples.size());
  // contr[i] = list of (triple index, pair index, sign) for e_i -| e_t
  std::vector<std::vector<std::tuple<int, int, int>>> contr(n);
  for (int t = 0; t < nt; ++t) {
    auto ix = indices_of(triples[t]);
    for (int i : ix) {
      Multivector c = contract(i, single(n, triples[t]));
      auto& [m, v] = *c.terms().begin();
      auto jx = indices_of(m);
      contr[i - 1].emplace_back(t, pair_index(n, jx[0], jx[1]), v.sign());
    }
  }
  Echelon e(nt);
  for (auto& phi : functionals) {
    std::map<int, Scalar> fp(phi.begin(), phi.end());
    for (int i = 0; i < n; ++i) {
      std::map<int, Scalar> row;
      for (auto& [t, p, s] : contr[i]) {
        auto it = fp.find(p);
        if (it == fp.end()) continue;
        row[t] += s > 0 ? it->second : -it->second;
      }
      SparseVec sv;
      for (auto& [t, v] : row)
        if (!v.is_zero()) sv.emplace_back(t, v);
      if (!sv.empty()) e.insert(sv);
    }
  }
  std::vector<Multivector> out;
  for (auto& kv : e.kernel()) {
    Multivector f(n);
    for (auto& [t, v] : kv) f.add(triples[t], v);
    out.push_back(f);
  }
  return out;
}

SupportReport support_reduction(const Multivector& T) {
  int n = T.dim();
  if (T.is_zero() || T.grade() < 1) throw FormError("support_reduction: need a nonzero form");
  std::vector<Multivector> cols;
  for (int i = 1; i <= n; ++i) cols.push_back(contract(i, T));
  SupportReport r;
  r.kernel = kernel_of_columns(std::move(cols));
  r.dim = n - static_cast<int>(r.kernel.size());
  if (r.kernel.empty()) {
    for (int i = 0; i < n; ++i) {
      Vec e(n);
      e[i] = 1;
      r.support_basis.push_back(e);
    }
  } else {
    r.support_basis = kernel(Mat::from_rows(r.kernel));
  }
  return r;
}

SplitReport split_torsion(const Multivector& T, std::uint64_t seed) {
  require_grade3(T, "split_torsion");
  int n = T.dim();
  auto gens = g_star_generators(T, RepMode::vector);
  auto sc = symmetric_commutant(gens);
  SplitReport r;
  std::vector<std::vector<Vec>> spaces;
  if (sc.size() <= 1) {
    std::vector<Vec> all;
    for (int i = 0; i < n; ++i) {
      Vec e(n);
      e[i] = 1;
      all.push_back(e);
    }
    spaces.push_back(all);
    r.complete = true;
  } else {
    Sampler smp(seed);
    for (int attempt = 0; attempt < 8 && !r.complete; ++attempt) {
      Mat s(n, n);
      for (auto& b : sc) s += b * smp.rational();
      auto es = rational_eigenspaces(s);
      size_t total = 0;
      for (auto& [lam, v] : es) total += v.size();
      if (static_cast<int>(total) != n) continue;
      spaces.clear();
      for (auto& [lam, v] : es) spaces.push_back(v);
      r.complete = true;
    }
  }
  if (!r.complete) return r;
  Multivector sum(n);
  for (auto& sp : spaces) {
    Mat p = projector(sp);
    Multivector f(n);
    for (Mask m : blades_of_grade(n, 3)) {
      auto ix = indices_of(m);
      Scalar c = evaluate(T, {p.row(ix[0] - 1), p.row(ix[1] - 1), p.row(ix[2] - 1)});
      if (!c.is_zero()) f.add(m, c);
    }
    if (f.is_zero()) continue;
    sum += f;
    r.components.push_back({sp, f});
  }
  r.resums = sum == T;
  return r;
}

TwoFormReport invariant_two_forms(const Multivector& T, std::uint64_t seed) {
  require_grade3(T, "invariant_two_forms");
  int n = T.dim();
  auto gens = g_star_generators(T, RepMode::vector);
  TwoFormReport r;
  auto sk = skew_commutant(gens);
  for (auto& m : sk) r.commutant.push_back(two_form_of(m));
  if (sk.empty()) return r;
  Sampler smp(seed);
  for (int k = 0; k < 8; ++k) {
    Mat s(n, n);
    for (auto& b : sk) s += b * smp.nonzero_rational();
    r.max_rank = std::max(r.max_rank, rank(s));
  }
  r.nondegenerate_found = r.max_rank == n;
  return r;
}

// ---- tensors

bool Tensor3::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Tensor3::antisymmetric_in_first_two() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if ((*this)(i, j, k) != -(*this)(j, i, k)) return false;
  return true;
}

bool Tensor3::antisymmetric_in_last_two() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if ((*this)(i, j, k) != -(*this)(i, k, j)) return false;
  return true;
}

bool Tensor3::totally_antisymmetric() const { return antisymmetric_in_first_two() && antisymmetric_in_last_two(); }

Tensor3 Tensor3::operator-() const {
  Tensor3 t = *this;
  for (auto& x : t.a_) x = -x;
  return t;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (o.n_ != n_) throw FormError("tensor size mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (o.n_ != n_) throw FormError("tensor size mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Tensor3 operator*(Tensor3 a, const Scalar& s) {
  for (auto& x : a.a_) x *= s;
  return a;
}

Scalar tensor_inner(const Tensor3& a, const Tensor3& b) {
  int n = a.dim();
  if (b.dim() != n) throw FormError("tensor size mismatch");
  Scalar s;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) s += a(i, j, k) * b(i, j, k);
  return s;
}

Tensor3 tensor_of_form(const Multivector& T3) {
  int n = T3.dim();
  Tensor3 t(n);
  for (auto& [m, v] : T3.terms()) {
    if (popcount(m) != 3) throw FormError("tensor_of_form: not a 3-form");
    auto ix = indices_of(m);
    int p[3] = {ix[0] - 1, ix[1] - 1, ix[2] - 1};
    // all six orderings
    int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    for (int q = 0; q < 6; ++q) t(p[perm[q][0]], p[perm[q][1]], p[perm[q][2]]) = q < 3 ? v : -v;
  }
  return t;
}

Multivector form_of_tensor(const Tensor3& T) {
  if (!T.totally_antisymmetric()) throw FormError("form_of_tensor: tensor is not totally antisymmetric");
  int n = T.dim();
  Multivector f(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (!T(a, b, c).is_zero()) f.add(mask_of({a + 1, b + 1, c + 1}), T(a, b, c));
  return f;
}

Tensor3 vector_torsion(const Vec& v) {
  int n = static_cast<int>(v.size());
  Tensor3 t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      t(i, j, i) += v[j];
      t(i, j, j) -= v[i];
    }
  return t;
}

Vec trace_contraction(const Tensor3& T) {
  int n = T.dim();
  Vec c(n);
  for (int z = 0; z < n; ++z)
    for (int i = 0; i < n; ++i) c[z] += T(i, z, i);
  return c;
}

Tensor3 cyclic_part(const Tensor3& T) {
  int n = T.dim();
  Tensor3 r(n);
  Scalar third = Scalar::frac(1, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r(i, j, k) = third * (T(i, j, k) + T(j, k, i) + T(k, i, j));
  return r;
}

TorsionDecomposition decompose_torsion(const Tensor3& T) {
  int n = T.dim();
  if (n < 2) throw FormError("decompose_torsion: dimension too small");
  if (!T.antisymmetric_in_first_two()) throw FormError("decompose_torsion: torsion must be antisymmetric in its first two slots");
  TorsionDecomposition d;
  d.vector = scale(trace_contraction(T), Scalar::frac(1, n - 1));
  d.vector_part = vector_torsion(d.vector);
  Tensor3 rest = T - d.vector_part;
  d.skew_part = cyclic_part(rest);
  d.skew = form_of_tensor(d.skew_part);
  d.prime_part = rest - d.skew_part;
  if (!d.vector_part.is_zero()) d.classes.insert("vectorial");
  if (!d.skew_part.is_zero()) d.classes.insert("skew");
  if (!d.prime_part.is_zero()) d.classes.insert("prime");
  d.resums = d.vector_part + d.skew_part + d.prime_part == T;
  d.orthogonal = tensor_inner(d.vector_part, d.skew_part).is_zero() && tensor_inner(d.vector_part, d.prime_part).is_zero() &&
                 tensor_inner(d.skew_part, d.prime_part).is_zero();
  return d;
}

Tensor3 phi(const Tensor3& A) {
  int n = A.dim();
  Tensor3 r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r(i, j, k) = A(i, j, k) - A(j, i, k);
  return r;
}

Tensor3 phi_inverse(const Tensor3& T) {
  if (!T.antisymmetric_in_first_two()) throw FormError("phi_inverse: input must be antisymmetric in its first two slots");
  int n = T.dim();
  Tensor3 r(n);
  Scalar half = Scalar::frac(1, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r(i, j, k) = half * (T(i, j, k) - T(j, k, i) + T(k, i, j));
  return r;
}

}  // namespace holo
