#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "holo/scalar.hpp"

namespace holo {

using Vec = std::vector<Scalar>;
using SparseVec = std::vector<std::pair<int, Scalar>>;  // sorted by index, no zeros

struct LinalgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Mat {
 public:
  Mat() = default;
  Mat(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c) {}
  static Mat identity(int n);
  static Mat zero(int r, int c) { return Mat(r, c); }
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_columns(const std::vector<Vec>& cols);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }
  const std::vector<Scalar>& data() const { return a_; }

  Mat transpose() const;
  bool is_zero() const;
  bool is_skew() const;
  bool is_symmetric() const;
  Scalar trace() const;
  Vec row(int i) const;
  Vec column(int j) const;
  Vec apply(const Vec& v) const;
  SparseVec flatten() const;

  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Scalar& s) { return a *= s; }
  friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

Mat commutator(const Mat& a, const Mat& b);
Mat vstack(const std::vector<Mat>& blocks);
Mat unflatten(const SparseVec& v, int r, int c);

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, int n);
Scalar dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& s);
bool is_zero(const Vec& v);

// Incremental row echelon form over exact scalars. Rows are kept with leading
// coefficient 1; with tracking, each stored row remembers its expression in terms of
// the inserted vectors, which gives coordinates of members of the span.
class Echelon {
 public:
  explicit Echelon(int ncols, bool track = false);

  int ncols() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  int inserted() const { return inserted_; }

  SparseVec reduce(const SparseVec& v) const;
  bool insert(const SparseVec& v);  // true if independent of previous rows
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  // coordinates w.r.t. the independent inserted vectors (tracking required)
  std::optional<Vec> coordinates(const SparseVec& v) const;
  // basis of {x : row . x = 0 for all rows}
  std::vector<SparseVec> kernel() const;
  std::vector<int> pivots() const { return pivcol_; }

 private:
  SparseVec reduce_impl(const SparseVec& v, Vec* combo) const;

  int n_;
  bool track_;
  int inserted_ = 0;
  std::vector<int> row_of_col_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivcol_;
  std::vector<Vec> combos_;
};

int rank(const Mat& m);
Scalar determinant(const Mat& m);
std::vector<Vec> kernel(const Mat& m);
std::vector<Vec> joint_kernel(const std::vector<Mat>& ms);
// basis of the row space (independent rows)
std::vector<Vec> row_basis(const std::vector<Vec>& rows);
std::optional<Mat> inverse(const Mat& m);

struct LinearSolution {
  bool consistent = false;
  bool unique = false;
  int rank = 0;
  Vec particular;           // one solution if consistent
  std::vector<Vec> kernel;  // homogeneous solutions
};
LinearSolution solve_linear(const Mat& a, const Vec& b);

// positive definiteness by pivots of symmetric elimination (no row swaps)
bool is_positive_definite(const Mat& s);

}  // namespace holo
