#include "holo/sasakian.hpp"

#include <algorithm>

#include "holo/aw_reference.hpp"
#include "holo/clifford.hpp"
#include "holo/holonomy.hpp"
#include "holo/lie.hpp"
#include "holo/random.hpp"

namespace holo {

namespace {

Multivector e(std::initializer_list<int> idx) { return Multivector::blade(7, std::vector<int>(idx)); }

const int kContact[3] = {1, 2, 7};

std::vector<Mat> vector_images() {
  const SpinRep& rep = spin_rep(7);
  std::vector<Mat> out;
  for (int i = 1; i <= 7; ++i) out.push_back(rep.matrix(Multivector::basis_vector(7, i)));
  return out;
}

// Veronese numerators times |v|^2 are quadratic; central differences of step 1 are exact
std::array<Scalar, 10> numerators(const Vec& v) {
  auto x = ref::veronese(v[0], v[1], v[2], v[3]);
  Scalar N = dot(v, v);
  for (auto& c : x) c *= N;
  return x;
}

}  // namespace

std::array<Multivector, 3> su2_structure_generators() { return {e({3, 4}) + e({5, 6}), e({3, 5}) - e({4, 6}), e({3, 6}) + e({4, 5})}; }

Multivector contact_form_differential(int j) {
  switch (j) {
    case 1:
      return e({3, 5}) + e({4, 6});
    case 2:
      return e({4, 5}) - e({3, 6});
    case 7:
      return e({3, 4}) - e({5, 6});
  }
  throw FormError("contact_form_differential: index must be 1, 2 or 7");
}

std::vector<Multivector> su2_family_3forms() {
  std::vector<Multivector> out;
  for (int i : kContact)
    for (int j : kContact) out.push_back(wedge(Multivector::basis_vector(7, i), contact_form_differential(j)));
  out.push_back(e({1, 2, 7}));
  return out;
}

std::vector<Multivector> su2_family_4forms() {
  std::vector<Multivector> out;
  const int pairs[3][2] = {{1, 2}, {1, 7}, {2, 7}};
  for (auto& p : pairs)
    for (int k : kContact) out.push_back(wedge(e({p[0], p[1]}), contact_form_differential(k)));
  out.push_back(e({3, 4, 5, 6}));
  return out;
}

bool su2_invariant(const Multivector& f) {
  for (auto& g : su2_structure_generators())
    if (!derivation_action(skew_of(g), f).is_zero()) return false;
  return true;
}

std::vector<Vec> su2_fixed_spinors() {
  const SpinRep& rep = spin_rep(7);
  std::vector<Mat> ms;
  for (auto& g : su2_structure_generators()) ms.push_back(rep.matrix(g));
  return joint_kernel(ms);
}

Multivector family_form(const std::array<Scalar, 10>& x) {
  auto fam = su2_family_3forms();
  Multivector f(7);
  for (int k = 0; k < 10; ++k)
    if (!x[k].is_zero()) f += fam[k] * x[k];
  return f;
}

const std::array<Vec, 4>& aligned_fixed_spinors() {
  static const std::array<Vec, 4> aligned = [] {
    auto base = probe_spinors();
    auto fam = su2_family_3forms();
    auto M = vector_images();
    const int anchors[2][4] = {{1, 2, 3, 4}, {2, -1, 1, 3}};
    for (int signs = 0; signs < 8; ++signs) {
      std::array<Vec, 4> cand = base;
      for (int k = 0; k < 3; ++k)
        if (signs & (1 << k)) cand[k + 1] = scale(cand[k + 1], Scalar(-1));
      bool ok = true;
      for (auto& p : anchors) {
        Vec psi(cand[0].size());
        for (int k = 0; k < 4; ++k) psi = add(psi, scale(cand[k], Scalar(p[k])));
        auto sol = solve_spinor_system(psi, fam, M, Scalar(-2));
        auto want = ref::veronese(p[0], p[1], p[2], p[3]);
        if (!sol.unique || !std::equal(want.begin(), want.end(), sol.coeffs.begin())) {
          ok = false;
          break;
        }
      }
      if (ok) return cand;
    }
    throw FormError("aligned_fixed_spinors: no sign choice reproduces the closed form");
  }();
  return aligned;
}

Vec fixed_spinor(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  const auto& p = aligned_fixed_spinors();
  Vec psi = add(add(scale(p[0], a), scale(p[1], b)), add(scale(p[2], c), scale(p[3], d)));
  if (is_zero(psi)) throw FormError("fixed_spinor: zero point");
  return psi;
}

VeroneseSolution veronese_torsion(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  VeroneseSolution out;
  out.closed_form = ref::veronese(a, b, c, d);
  out.solved = solve_spinor_system(fixed_spinor(a, b, c, d), su2_family_3forms(), vector_images(), Scalar(-2));
  out.solved.invariant = out.solved.consistent && su2_invariant(out.solved.form);
  out.agree = out.solved.unique &&
              std::equal(out.closed_form.begin(), out.closed_form.end(), out.solved.coeffs.begin());
  return out;
}

SpinorSolution veronese_4form(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  auto sol = solve_spinor_system(fixed_spinor(a, b, c, d), su2_family_4forms(), vector_images(), Scalar(-2));
  sol.invariant = sol.consistent && su2_invariant(sol.form);
  return sol;
}

bool killing_to_parallel_check(const Vec& psi, const Multivector& T) {
  const SpinRep& rep = spin_rep(7);
  for (int i = 1; i <= 7; ++i) {
    Vec r = rep.act(Multivector::basis_vector(7, i), psi);
    if (!T.is_zero()) {
      Multivector ct = contract(i, T);
      if (!ct.is_zero()) r = sub(r, scale(rep.act(ct, psi), Scalar(2)));
    }
    if (!is_zero(r)) return false;
  }
  return true;
}

FamilyReport family_dimension_report(std::uint64_t seed, int samples) {
  FamilyReport rep;
  Sampler rng(seed);
  rep.sphere_constant = true;
  rep.samples = samples;
  for (int t = 0; t < samples; ++t) {
    Vec v = rng.nonzero_vector(4);
    auto x = ref::veronese(v[0], v[1], v[2], v[3]);
    Scalar sum;
    for (int k = 0; k < 9; ++k) sum += x[k] * x[k];
    if (t == 0)
      rep.sphere_invariant = sum;
    else if (sum != rep.sphere_invariant)
      rep.sphere_constant = false;
    // d(Q/N) = (dQ N - Q dN) / N^2, 9 x 4
    Scalar N = dot(v, v);
    auto Q = numerators(v);
    Mat J(9, 4);
    for (int k = 0; k < 4; ++k) {
      Vec vp = v, vm = v;
      vp[k] += 1;
      vm[k] -= 1;
      auto Qp = numerators(vp), Qm = numerators(vm);
      for (int r = 0; r < 9; ++r) {
        Scalar dq = (Qp[r] - Qm[r]) * Scalar::frac(1, 2);
        J(r, k) = (dq * N - Q[r] * Scalar(2) * v[k]) / (N * N);
      }
    }
    rep.jacobian_rank = std::max(rep.jacobian_rank, rank(J));
  }
  return rep;
}

InclusionReport holonomy_inclusion(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  InclusionReport r;
  Vec psi = fixed_spinor(a, b, c, d);
  Multivector T = family_form(ref::veronese(a, b, c, d)) * Scalar(2);
  Multivector omega = g2_form_of_spinor(psi);
  AnalyzeOptions opt;
  opt.irreducibility = false;
  opt.killing = false;
  auto g = g_star(T, RepMode::vector, opt);
  r.holonomy_dim = g.dim;
  r.g2_dim = static_cast<int>(isotropy_algebra(omega).size());
  r.contained = true;
  for (auto& m : g.basis)
    if (!derivation_action(m, omega).is_zero()) r.contained = false;
  return r;
}

}  // namespace holo
