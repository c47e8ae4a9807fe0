#pragma once

#include <string>
#include <vector>

#include "holo/form.hpp"
#include "holo/lie.hpp"
#include "holo/linalg.hpp"

namespace holo {

// One row of the tables: first kind w(i,a) = sign w(p,q); second kind 2 w(i,j) = sum sign w(p,q)
struct Spin9Equation {
  int table = 1;
  int i = 0, j = 0;
  std::vector<std::pair<int, std::pair<int, int>>> rhs;  // (sign, (p, q))
  std::string text;
  SparseVec functional() const;  // on the 120 coordinates w(a,b), a<b, lexicographic
};

// parses the compiled-in table and verifies its checksum
const std::vector<Spin9Equation>& spin9_equations();
std::vector<Spin9Equation> parse_spin9_table(const std::string& text);
std::string spin9_checksum(const std::string& text);  // fnv1a64 over the equation lines

struct TranscriptionReport {
  int first = 0, second = 0;
  bool pattern_ok = false;  // first kind: two coordinates; second kind: one w(i,j), i,j <= 8, four w(a,b), a,b >= 9
  bool checksum_ok = false;
};
TranscriptionReport spin9_transcription();

// skew 16x16 matrices with w(a,b) = M[b][a]
std::vector<Mat> spin9_basis();
Mat spin9_matrix(const Vec& coords);

struct MembershipReport {
  bool member = false;
  std::vector<std::string> violated;
};
MembershipReport spin9_membership(const Mat& skew);

struct StagedProlongation {
  int direct_dim = -1;           // via the basis
  int functional_dim = -1;       // via the table functionals
  int stage1_dim = 0;            // prolongation of the first-kind relations alone
  bool stage1_kills_8_alpha = false;  // T(i,8,a) = T(8,a,b) = 0 on that space (a,b >= 9)
  int stage2_dim = 0;            // adding the second-kind relations on components through 8
  bool stage2_e8_free = false;   // e8 -| T = 0 on the stage-2 space
  bool transitive_zero = false;  // e8 -| T = 0 and spin(9)-invariance force T = 0
};
StagedProlongation spin9_prolongation();

// closure of the spin images of e1..e8 on Delta_8 = R^16
ClosureReport spin9_from_vectors();
// 2-forms on R^16 commuting with the algebra
std::vector<Mat> spin9_invariant_two_forms();

}  // namespace holo
