#include "holo/form.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace holo {

int popcount(Mask m) { return std::popcount(m); }

Mask mask_of(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) {
    if (i < 1 || i > kMaxDim) throw FormError("index out of range: " + std::to_string(i));
    m |= Mask(1) << (i - 1);
  }
  return m;
}

std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (m & (Mask(1) << i)) out.push_back(i + 1);
  return out;
}

namespace {
// parity of #{(i in a, j in b) : i > j}
int reorder_parity(Mask a, Mask b) {
  int s = 0;
  Mask x = a >> 1;
  while (x) {
    s += std::popcount(x & b);
    x >>= 1;
  }
  return s & 1;
}
}  // namespace

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  return reorder_parity(a, b) ? -1 : 1;
}

int clifford_sign(Mask a, Mask b) {
  int p = reorder_parity(a, b) + std::popcount(a & b);
  return (p & 1) ? -1 : 1;
}

int permutation_sign(const std::vector<int>& idx) {
  int s = 1;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) s = -s;
    }
  return s;
}

Multivector::Multivector(int n) : n_(n) {
  if (n < 0 || n > kMaxDim) throw FormError("dimension out of range: " + std::to_string(n));
}

Multivector Multivector::scalar(int n, const Scalar& c) {
  Multivector m(n);
  m.add(0, c);
  return m;
}

Multivector Multivector::vector(int n, const std::vector<Scalar>& comps) {
  if (static_cast<int>(comps.size()) != n) throw FormError("vector length does not match dimension");
  Multivector m(n);
  for (int i = 0; i < n; ++i) m.add(Mask(1) << i, comps[i]);
  return m;
}

Multivector Multivector::basis_vector(int n, int i) { return blade(n, {i}); }

Multivector Multivector::blade(int n, const std::vector<int>& idx, const Scalar& c) {
  Multivector m(n);
  for (int i : idx)
    if (i < 1 || i > n) throw FormError("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  int s = permutation_sign(idx);
  if (s == 0) return m;
  m.add(mask_of(idx), s > 0 ? c : -c);
  return m;
}

int Multivector::grade() const {
  if (terms_.empty()) return 0;
  int g = popcount(terms_.begin()->first);
  for (auto& [k, v] : terms_)
    if (popcount(k) != g) return -1;
  return g;
}

bool Multivector::is_homogeneous() const { return grade() >= 0; }

Scalar Multivector::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Multivector::coeff(const std::vector<int>& idx) const {
  int s = permutation_sign(idx);
  if (s == 0) return Scalar(0);
  Scalar c = coeff(mask_of(idx));
  return s > 0 ? c : -c;
}

void Multivector::add(Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  if (n_ < 32 && (m >> n_) != 0) throw FormError("blade outside ambient dimension");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Multivector Multivector::part(int k) const {
  Multivector r(n_);
  for (auto& [m, c] : terms_)
    if (popcount(m) == k) r.terms_.emplace(m, c);
  return r;
}

Multivector Multivector::operator-() const {
  Multivector r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (o.n_ != n_) throw FormError("dimension mismatch");
  for (auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  if (o.n_ != n_) throw FormError("dimension mismatch");
  for (auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Multivector& Multivector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string Multivector::str() const {
  if (terms_.empty()) return "0";
  // lexicographic order of index tuples reads better than mask order
  std::vector<std::pair<std::vector<int>, Scalar>> items;
  for (auto& [m, c] : terms_) items.push_back({indices_of(m), c});
  std::sort(items.begin(), items.end(), [](auto& x, auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [idx, c] : items) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!idx.empty()) {
      os << "*e";
      for (size_t j = 0; j < idx.size(); ++j) os << (j ? "," : "") << idx[j];
    }
  }
  return os.str();
}

static void check_same(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw FormError("dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  check_same(a, b);
  Multivector r(a.dim());
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      r.add(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  return r;
}

Multivector contract(int i, const Multivector& a) {
  if (i < 1 || i > a.dim()) throw FormError("contract: index out of range");
  if (!a.is_zero() && a.grade() == 0) throw FormError("contract: grade-0 input");
  Multivector r(a.dim());
  Mask bit = Mask(1) << (i - 1);
  for (auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    int before = popcount(m & (bit - 1));
    r.add(m & ~bit, (before & 1) ? -c : c);
  }
  return r;
}

Multivector contract(const Multivector& x, const Multivector& a) {
  check_same(x, a);
  if (!x.is_zero() && x.grade() != 1) throw FormError("contract: first argument must be a vector");
  if (!a.is_zero() && a.grade() == 0) throw FormError("contract: grade-0 input");
  Multivector r(a.dim());
  for (auto& [m, c] : x.terms()) {
    int i = indices_of(m)[0];
    r += contract(i, a) * c;
  }
  return r;
}

Multivector hodge_star(const Multivector& a) {
  int n = a.dim();
  Mask full = n == 32 ? ~Mask(0) : ((Mask(1) << n) - 1);
  Multivector r(n);
  for (auto& [m, c] : a.terms()) {
    Mask comp = full & ~m;
    // e_t ^ e_comp = sign * vol
    int s = wedge_sign(m, comp);
    r.add(comp, s > 0 ? c : -c);
  }
  return r;
}

Scalar form_inner(const Multivector& a, const Multivector& b) {
  check_same(a, b);
  if (!a.is_zero() && !b.is_zero()) {
    int ga = a.grade(), gb = b.grade();
    if (ga >= 0 && gb >= 0 && ga != gb) throw FormError("form_inner: grade mismatch");
  }
  Scalar s;
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = &small == &a ? b : a;
  for (auto& [m, c] : small.terms()) {
    auto it = large.terms().find(m);
    if (it != large.terms().end()) s += c * it->second;
  }
  return s;
}

Scalar norm2(const Multivector& a) { return form_inner(a, a); }

Multivector clifford_product(const Multivector& a, const Multivector& b) {
  check_same(a, b);
  Multivector r(a.dim());
  for (auto& [ma, ca] : a.terms())
    for (auto& [mb, cb] : b.terms()) {
      Scalar p = ca * cb;
      r.add(ma ^ mb, clifford_sign(ma, mb) > 0 ? p : -p);
    }
  return r;
}

Multivector clifford_commutator(const Multivector& a, const Multivector& b) {
  return clifford_product(a, b) - clifford_product(b, a);
}

Scalar evaluate(const Multivector& a, const std::vector<std::vector<Scalar>>& vecs) {
  int k = static_cast<int>(vecs.size());
  if (!a.is_zero() && a.grade() != k) throw FormError("evaluate: grade does not match number of vectors");
  Scalar total;
  for (auto& [m, c] : a.terms()) {
    auto idx = indices_of(m);
    // determinant of the k x k minor by permutation expansion (k <= 4 in practice)
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    Scalar det;
    do {
      Scalar term(permutation_sign(p));
      for (int r = 0; r < k && !term.is_zero(); ++r) term *= vecs[r][idx[p[r]] - 1];
      det += term;
    } while (std::next_permutation(p.begin(), p.end()));
    total += c * det;
  }
  return total;
}

}  // namespace holo
