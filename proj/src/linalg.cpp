#include "holo/linalg.hpp"

#include <algorithm>
#include <map>

namespace holo {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.r_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.c_) throw LinalgError("ragged rows");
    for (int j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) { return from_rows(cols).transpose(); }

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_skew() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = i; j < c_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

bool Mat::is_symmetric() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = i + 1; j < c_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Scalar Mat::trace() const {
  Scalar t;
  for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

Vec Mat::row(int i) const { return Vec(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_); }

Vec Mat::column(int j) const {
  Vec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != c_) throw LinalgError("apply: size mismatch");
  Vec out(r_);
  for (int i = 0; i < r_; ++i) {
    Scalar s;
    for (int j = 0; j < c_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero() && !v[j].is_zero()) s += a * v[j];
    }
    out[i] = s;
  }
  return out;
}

SparseVec Mat::flatten() const { return to_sparse(a_); }

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw LinalgError("size mismatch in +");
  for (size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw LinalgError("size mismatch in -");
  for (size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& x : a_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.c_ != b.r_) throw LinalgError("size mismatch in *");
  Mat m(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat vstack(const std::vector<Mat>& blocks) {
  if (blocks.empty()) return Mat();
  int rows = 0, c = blocks[0].cols();
  for (auto& b : blocks) {
    if (b.cols() != c) throw LinalgError("vstack: column mismatch");
    rows += b.rows();
  }
  Mat m(rows, c);
  int off = 0;
  for (auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < c; ++j) m(off + i, j) = b(i, j);
    off += b.rows();
  }
  return m;
}

Mat unflatten(const SparseVec& v, int r, int c) {
  Mat m(r, c);
  for (auto& [i, x] : v) m(i / c, i % c) = x;
  return m;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

Vec to_dense(const SparseVec& v, int n) {
  Vec d(n);
  for (auto& [i, x] : v) d.at(i) = x;
  return d;
}

Scalar dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw LinalgError("dot: size mismatch");
  Scalar s;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
  return r;
}

Vec scale(const Vec& a, const Scalar& s) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const Vec& v) {
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

using Work = std::map<int, Scalar>;

void axpy(Work& w, const Scalar& f, const SparseVec& y) {
  for (auto& [j, c] : y) {
    auto it = w.find(j);
    if (it == w.end()) {
      w.emplace(j, f * c);
    } else {
      it->second += f * c;
      if (it->second.is_zero()) w.erase(it);
    }
  }
}

SparseVec from_work(const Work& w) { return SparseVec(w.begin(), w.end()); }

SparseVec sparse_axpy(const SparseVec& x, const Scalar& f, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i >= x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, f * y[j].second);
      ++j;
    } else {
      Scalar v = x[i].second + f * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Echelon::Echelon(int ncols, bool track) : n_(ncols), track_(track), row_of_col_(ncols, -1) {}

SparseVec Echelon::reduce_impl(const SparseVec& v, Vec* combo) const {
  Work w(v.begin(), v.end());
  Work cw;
  auto it = w.begin();
  while (it != w.end()) {
    int col = it->first;
    if (col >= n_) throw LinalgError("echelon: column out of range");
    int r = row_of_col_[col];
    if (r < 0) {
      ++it;
      continue;
    }
    Scalar f = it->second;
    axpy(w, -f, rows_[r]);
    if (combo) {
      const Vec& c = combos_[r];
      for (int j = 0; j < static_cast<int>(c.size()); ++j)
        if (!c[j].is_zero()) {
          Scalar& t = cw[j];
          t -= f * c[j];
        }
    }
    it = w.lower_bound(col);
  }
  if (combo) {
    combo->assign(inserted_ + 1, Scalar(0));
    for (auto& [j, c] : cw) (*combo)[j] = c;
  }
  return from_work(w);
}

SparseVec Echelon::reduce(const SparseVec& v) const { return reduce_impl(v, nullptr); }

bool Echelon::insert(const SparseVec& v) {
  Vec combo;
  SparseVec r = reduce_impl(v, track_ ? &combo : nullptr);
  if (r.empty()) return false;
  Scalar lead = r.front().second;
  Scalar inv = Scalar(1) / lead;
  for (auto& [j, c] : r) c *= inv;
  if (track_) {
    combo[inserted_] += Scalar(1);
    for (auto& c : combo) c *= inv;
  }
  row_of_col_[r.front().first] = static_cast<int>(rows_.size());
  pivcol_.push_back(r.front().first);
  rows_.push_back(std::move(r));
  if (track_) combos_.push_back(std::move(combo));
  ++inserted_;
  return true;
}

std::optional<Vec> Echelon::coordinates(const SparseVec& v) const {
  if (!track_) throw LinalgError("coordinates need a tracking echelon");
  Vec combo;
  SparseVec r = reduce_impl(v, &combo);
  if (!r.empty()) return std::nullopt;
  combo.resize(inserted_);
  for (auto& c : combo) c = -c;
  return combo;
}

std::vector<SparseVec> Echelon::kernel() const {
  // reduced echelon copy, pivots processed from the right
  std::vector<SparseVec> rr = rows_;
  std::vector<int> order(rr.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivcol_[a] > pivcol_[b]; });
  for (size_t oi = 0; oi < order.size(); ++oi) {
    int p = order[oi];
    int pc = pivcol_[p];
    for (size_t oj = oi + 1; oj < order.size(); ++oj) {
      int q = order[oj];
      auto& row = rr[q];
      auto it = std::lower_bound(row.begin(), row.end(), pc, [](const auto& e, int c) { return e.first < c; });
      if (it == row.end() || it->first != pc) continue;
      Scalar f = it->second;
      row = sparse_axpy(row, -f, rr[p]);
    }
  }
  std::vector<bool> is_pivot(n_, false);
  for (int c : pivcol_) is_pivot[c] = true;
  // column -> list of (pivot col, coefficient)
  std::vector<std::vector<std::pair<int, Scalar>>> by_col(n_);
  for (size_t i = 0; i < rr.size(); ++i)
    for (auto& [j, c] : rr[i])
      if (!is_pivot[j]) by_col[j].emplace_back(pivcol_[i], c);
  std::vector<SparseVec> out;
  for (int f = 0; f < n_; ++f) {
    if (is_pivot[f]) continue;
    Work w;
    w.emplace(f, Scalar(1));
    for (auto& [pc, c] : by_col[f]) w.emplace(pc, -c);
    out.push_back(from_work(w));
  }
  return out;
}

int rank(const Mat& m) {
  Echelon e(m.cols());
  for (int i = 0; i < m.rows(); ++i) e.insert(to_sparse(m.row(i)));
  return e.rank();
}

Scalar determinant(const Mat& m0) {
  if (m0.rows() != m0.cols()) throw LinalgError("determinant of non-square matrix");
  Mat m = m0;
  int n = m.rows();
  Scalar det(1);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (!m(i, k).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      det = -det;
    }
    Scalar piv = m(k, k);
    det *= piv;
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Scalar f = m(i, k) / piv;
      for (int j = k; j < n; ++j)
        if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

std::vector<Vec> kernel(const Mat& m) {
  Echelon e(m.cols());
  for (int i = 0; i < m.rows(); ++i) e.insert(to_sparse(m.row(i)));
  std::vector<Vec> out;
  for (auto& k : e.kernel()) out.push_back(to_dense(k, m.cols()));
  return out;
}

std::vector<Vec> joint_kernel(const std::vector<Mat>& ms) {
  if (ms.empty()) return {};
  return kernel(vstack(ms));
}

std::vector<Vec> row_basis(const std::vector<Vec>& rows) {
  std::vector<Vec> out;
  if (rows.empty()) return out;
  Echelon e(static_cast<int>(rows[0].size()));
  for (auto& r : rows)
    if (e.insert(to_sparse(r))) out.push_back(r);
  return out;
}

std::optional<Mat> inverse(const Mat& m0) {
  int n = m0.rows();
  if (n != m0.cols()) throw LinalgError("inverse of non-square matrix");
  Mat m = m0, inv = Mat::identity(n);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (!m(i, k).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      std::swap(m(p, j), m(k, j));
      std::swap(inv(p, j), inv(k, j));
    }
    Scalar pi = Scalar(1) / m(k, k);
    for (int j = 0; j < n; ++j) {
      m(k, j) *= pi;
      inv(k, j) *= pi;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || m(i, k).is_zero()) continue;
      Scalar f = m(i, k);
      for (int j = 0; j < n; ++j) {
        if (!m(k, j).is_zero()) m(i, j) -= f * m(k, j);
        if (!inv(k, j).is_zero()) inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

LinearSolution solve_linear(const Mat& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw LinalgError("solve_linear: size mismatch");
  int n = a.cols();
  Echelon e(n + 1);
  Echelon plain(n);
  for (int i = 0; i < a.rows(); ++i) {
    Vec r = a.row(i);
    plain.insert(to_sparse(r));
    r.push_back(b[i]);
    e.insert(to_sparse(r));
  }
  LinearSolution sol;
  sol.rank = plain.rank();
  for (int c : e.pivots())
    if (c == n) return sol;  // inconsistent
  sol.consistent = true;
  for (auto& k : e.kernel()) {
    Vec d = to_dense(k, n + 1);
    if (!d[n].is_zero()) {
      Scalar t = d[n];
      Vec x(n);
      for (int j = 0; j < n; ++j) x[j] = -d[j] / t;
      sol.particular = x;
    } else {
      d.pop_back();
      sol.kernel.push_back(d);
    }
  }
  sol.unique = sol.kernel.empty();
  return sol;
}

bool is_positive_definite(const Mat& s0) {
  if (!s0.is_symmetric()) return false;
  Mat s = s0;
  int n = s.rows();
  for (int k = 0; k < n; ++k) {
    if (s(k, k).sign() <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      if (s(i, k).is_zero()) continue;
      Scalar f = s(i, k) / s(k, k);
      for (int j = k; j < n; ++j)
        if (!s(k, j).is_zero()) s(i, j) -= f * s(k, j);
    }
  }
  return true;
}

}  // namespace holo
