#include "holo/spin9.hpp"

#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>

#include "holo/clifford.hpp"
#include "holo/holonomy.hpp"

namespace holo {

namespace {

#include "spin9_table.inc"

constexpr int kN = 16;

int coord(int a, int b) { return pair_index(kN, a, b); }

std::pair<int, int> pair_of(int p) {
  static const std::vector<std::pair<int, int>> table = [] {
    std::vector<std::pair<int, int>> t;
    for (int a = 1; a <= kN; ++a)
      for (int b = a + 1; b <= kN; ++b) t.emplace_back(a, b);
    return t;
  }();
  return table.at(p);
}

std::string checksum_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("# fnv1a64 ", 0) == 0) return line.substr(10);
  return "";
}

// 3-forms on R^16 whose contraction with e_i satisfies the functionals of rows[i]
std::vector<Multivector> prolongation_per_vector(const std::vector<std::vector<SparseVec>>& rows) {
  std::vector<Mask> triples;
  for (Mask m = 0; m < (Mask(1) << kN); ++m)
    if (popcount(m) == 3) triples.push_back(m);
  std::map<Mask, int> tix;
  for (size_t t = 0; t < triples.size(); ++t) tix[triples[t]] = static_cast<int>(t);
  Echelon e(static_cast<int>(triples.size()));
  for (int i = 1; i <= kN; ++i) {
    Mask bit = Mask(1) << (i - 1);
    for (auto& phi : rows[i - 1]) {
      std::map<int, Scalar> row;
      for (auto& [p, v] : phi) {
        auto [a, b] = pair_of(p);
        Mask pm = (Mask(1) << (a - 1)) | (Mask(1) << (b - 1));
        if (pm & bit) continue;
        Mask t = pm | bit;
        Multivector c = contract(i, Multivector::blade(kN, indices_of(t)));
        Scalar sg = c.coeff(pm);
        row[tix[t]] += v * sg;
      }
      SparseVec r;
      for (auto& [k, v] : row)
        if (!v.is_zero()) r.emplace_back(k, v);
      if (!r.empty()) e.insert(r);
    }
  }
  std::vector<Multivector> out;
  for (auto& kv : e.kernel()) {
    Multivector f(kN);
    for (auto& [t, v] : kv) f.add(triples[t], v);
    out.push_back(f);
  }
  return out;
}

std::vector<SparseVec> functionals_of(int table) {
  std::vector<SparseVec> out;
  for (auto& eq : spin9_equations())
    if (table == 0 || eq.table == table) out.push_back(eq.functional());
  return out;
}

}  // namespace

SparseVec Spin9Equation::functional() const {
  std::map<int, Scalar> f;
  f[coord(i, j)] += table == 1 ? 1 : 2;
  for (auto& [s, pq] : rhs) f[coord(pq.first, pq.second)] -= s;
  SparseVec out;
  for (auto& [k, v] : f)
    if (!v.is_zero()) out.emplace_back(k, v);
  return out;
}

std::string spin9_checksum(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] != 'T') continue;
    line += '\n';
    for (unsigned char c : line) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::vector<Spin9Equation> parse_spin9_table(const std::string& text) {
  std::vector<Spin9Equation> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind, eq;
    Spin9Equation e;
    ls >> kind >> e.i >> e.j >> eq;
    if ((kind != "T1" && kind != "T2") || eq != "=" || !ls)
      throw FormError("spin9 table line " + std::to_string(lineno) + ": malformed");
    e.table = kind == "T1" ? 1 : 2;
    std::string sg;
    int p, q;
    while (ls >> sg >> p >> q) {
      if (sg != "+" && sg != "-") throw FormError("spin9 table line " + std::to_string(lineno) + ": bad sign");
      e.rhs.push_back({sg == "+" ? 1 : -1, {p, q}});
    }
    std::ostringstream os;
    os << (e.table == 1 ? "" : "2*") << "w(" << e.i << "," << e.j << ") =";
    for (size_t k = 0; k < e.rhs.size(); ++k)
      os << (e.rhs[k].first > 0 ? (k ? " + " : " ") : (k ? " - " : " -")) << "w(" << e.rhs[k].second.first << ","
         << e.rhs[k].second.second << ")";
    e.text = os.str();
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<Spin9Equation>& spin9_equations() {
  static const std::vector<Spin9Equation> eqs = [] {
    std::string text = kSpin9Table;
    std::string want = checksum_line(text);
    if (want.empty() || want != spin9_checksum(text)) throw FormError("spin9 table: checksum mismatch");
    return parse_spin9_table(text);
  }();
  return eqs;
}

TranscriptionReport spin9_transcription() {
  TranscriptionReport r;
  std::string text = kSpin9Table;
  r.checksum_ok = checksum_line(text) == spin9_checksum(text);
  r.pattern_ok = true;
  for (auto& e : spin9_equations()) {
    if (e.table == 1) {
      ++r.first;
      if (e.rhs.size() != 1) r.pattern_ok = false;
    } else {
      ++r.second;
      if (e.rhs.size() != 4 || e.i > 8 || e.j > 8) r.pattern_ok = false;
      for (auto& [s, pq] : e.rhs)
        if (pq.first < 9 || pq.second < 9) r.pattern_ok = false;
    }
  }
  return r;
}

Mat spin9_matrix(const Vec& coords) { return skew_of(two_form_from_coords(kN, coords)); }

std::vector<Mat> spin9_basis() {
  static const std::vector<Mat> basis = [] {
    int np = kN * (kN - 1) / 2;
    Echelon e(np);
    for (auto& f : functionals_of(0)) e.insert(f);
    std::vector<Mat> out;
    for (auto& k : e.kernel()) out.push_back(spin9_matrix(to_dense(k, np)));
    return out;
  }();
  return basis;
}

MembershipReport spin9_membership(const Mat& skew) {
  if (skew.rows() != kN || skew.cols() != kN || !skew.is_skew()) throw FormError("membership expects a skew 16x16 matrix");
  Vec c = two_form_coords(two_form_of(skew));
  MembershipReport r;
  for (auto& e : spin9_equations()) {
    Scalar v;
    for (auto& [k, x] : e.functional()) v += x * c[k];
    if (!v.is_zero()) r.violated.push_back(e.text);
  }
  r.member = r.violated.empty();
  return r;
}

StagedProlongation spin9_prolongation() {
  StagedProlongation r;
  r.direct_dim = static_cast<int>(antisym_prolongation(spin9_basis(), kN).size());
  auto all = functionals_of(0), first = functionals_of(1);
  r.functional_dim = static_cast<int>(prolongation_from_functionals(all, kN).size());

  // stage 1: first-kind relations for every e_i
  std::vector<std::vector<SparseVec>> rows(kN, first);
  auto s1 = prolongation_per_vector(rows);
  r.stage1_dim = static_cast<int>(s1.size());
  r.stage1_kills_8_alpha = true;
  for (auto& t : s1)
    for (auto& [m, v] : t.terms()) {
      auto ix = indices_of(m);
      bool has8 = (m >> 7) & 1;
      bool high = ix[2] > 8;
      if (has8 && high) r.stage1_kills_8_alpha = false;
    }

  // stage 2: additionally e8 -| T satisfies every relation
  rows[7] = all;
  auto s2 = prolongation_per_vector(rows);
  r.stage2_dim = static_cast<int>(s2.size());
  r.stage2_e8_free = true;
  for (auto& t : s2)
    if (!contract(8, t).is_zero()) r.stage2_e8_free = false;

  // the orbit of e8 is open in the sphere: {A e8 : A in spin(9)} spans e8^perp
  std::vector<Vec> tangent;
  for (auto& a : spin9_basis()) tangent.push_back(a.column(7));
  bool transitive = static_cast<int>(row_basis(tangent).size()) == kN - 1;
  r.transitive_zero = transitive && r.stage2_e8_free && r.direct_dim == 0;
  return r;
}

ClosureReport spin9_from_vectors() {
  const SpinRep& rep = spin_rep(8);
  std::vector<Mat> gens;
  for (int i = 1; i <= 8; ++i) gens.push_back(rep.matrix(Multivector::basis_vector(8, i)));
  return analyze(gens);
}

std::vector<Mat> spin9_invariant_two_forms() { return skew_commutant(spin9_basis()); }

}  // namespace holo
