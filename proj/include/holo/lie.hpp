#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "holo/linalg.hpp"

namespace holo {

struct LieError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Span of square matrices with exact membership and coordinates.
class MatrixSpan {
 public:
  explicit MatrixSpan(int m, bool track = false) : m_(m), ech_(m * m, track) {}
  int size() const { return m_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Mat>& basis() const { return basis_; }
  bool insert(const Mat& x);
  bool contains(const Mat& x) const;
  std::optional<Vec> coordinates(const Mat& x) const;

 private:
  int m_;
  Echelon ech_;
  std::vector<Mat> basis_;
};

// smallest bracket-closed span containing the generators; deterministic order
std::vector<Mat> bracket_closure(const std::vector<Mat>& generators);
bool is_bracket_closed(const std::vector<Mat>& basis);
// reduced row echelon basis of the same span (entries flattened row-major)
std::vector<Mat> reduced_basis(const std::vector<Mat>& span);
std::vector<Mat> derived_algebra(const std::vector<Mat>& basis);
int center_dim(const std::vector<Mat>& basis);

struct KillingReport {
  Mat form;
  bool semisimple = false;  // nondegenerate
  bool compact = false;     // negative definite
  int rank = 0;             // rank of the Killing matrix
};
KillingReport killing_form(const std::vector<Mat>& basis);

// ad matrices in the given basis: column j of ad(i) = coordinates of [b_i, b_j]
std::vector<Mat> adjoint_matrices(const std::vector<Mat>& basis);

// matrices commuting with all of gens (symmetric / skew / all)
std::vector<Mat> commutant(const std::vector<Mat>& gens);
std::vector<Mat> symmetric_commutant(const std::vector<Mat>& gens);
std::vector<Mat> skew_commutant(const std::vector<Mat>& gens);

// smallest invariant subspace containing the start vectors
std::vector<Vec> saturate(const std::vector<Mat>& gens, const std::vector<Vec>& start);

// continued-fraction approximation with denominator at most max_den
mpq_class rationalize(double x, long max_den = 2000);

// exact eigenspaces of a symmetric matrix for eigenvalues that turn out rational
// (numeric eigenvalues are rounded to nearby fractions and then checked exactly)
std::vector<std::pair<Scalar, std::vector<Vec>>> rational_eigenspaces(const Mat& sym);

struct IrreducibilityReport {
  bool irreducible = false;
  bool proved = false;        // exact certificate (skew family: symmetric commutant)
  int symmetric_commutant_dim = -1;
  std::vector<Vec> witness;   // proper invariant subspace when reducible
  std::string method;
};
IrreducibilityReport invariant_subspace_search(const std::vector<Mat>& gens, std::uint64_t seed = 1);

// dimension of the centralizer of a random element (the rank for reductive algebras)
int generic_centralizer_dim(const std::vector<Mat>& basis, std::uint64_t seed = 1);

struct ClosureReport {
  std::vector<Mat> basis;
  int dim = 0;
  int derived_dim = 0;
  int center_dim = 0;
  bool semisimple = false;
  bool compact = false;
  int killing_rank = 0;
  int centralizer_dim = 0;
  std::optional<IrreducibilityReport> irreducibility;
};

struct AnalyzeOptions {
  bool irreducibility = true;
  bool killing = true;
  std::uint64_t seed = 1;
};
ClosureReport analyze(const std::vector<Mat>& generators, const AnalyzeOptions& opt = {});
// same, for a basis already known to be closed
ClosureReport analyze_basis(const std::vector<Mat>& basis, const AnalyzeOptions& opt = {});

}  // namespace holo
