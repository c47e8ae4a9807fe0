#include "holo/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>

#include "holo/acceptance.hpp"
#include "holo/aw_reference.hpp"
#include "holo/clifford.hpp"
#include "holo/flat.hpp"
#include "holo/holonomy.hpp"
#include "holo/homogeneous.hpp"
#include "holo/random.hpp"
#include "holo/sasakian.hpp"
#include "holo/spin9.hpp"
#include "holo/textio.hpp"

namespace holo {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a failed verification: the report is still printed, exit status 1
struct Verdict {
  json report;
  bool ok = true;
};

struct Config {
  std::string form_path;
  std::string loop_path;
  int dim = 0;
  int grade = 0;
  std::string s, y, point;
  std::string mode = "exact";
  std::string rep;
  std::uint64_t seed = kAcceptanceSeed;
  bool json_out = false;
  int spinor = 3;
  bool four_form = false;
  bool verify_all = false;
  bool check_all = false;
  NumberMode num() const { return mode == "float" ? NumberMode::floating : NumberMode::exact; }
};

json header(const std::string& command, const Config& c) {
  json j;
  j["schema"] = 1;
  j["command"] = command;
  j["mode"] = c.mode;
  return j;
}

Scalar scalar_arg(const std::string& name, const std::string& text) {
  if (text.empty()) throw UsageError("missing --" + name);
  try {
    return parse_scalar(text);
  } catch (const ScalarError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

Scalar positive_arg(const std::string& name, const std::string& text) {
  Scalar v = scalar_arg(name, text);
  if (v.sign() <= 0) throw UsageError("--" + name + " must be positive");
  return v;
}

Multivector load_form(const Config& c) {
  if (c.form_path.empty()) throw UsageError("missing --form");
  return read_form_file(c.form_path, c.dim);
}

json vec_json(const Vec& v, NumberMode m) { return to_json(v, m); }

json two_forms_json(const std::vector<Multivector>& fs, NumberMode m) {
  json a = json::array();
  for (auto& f : fs) a.push_back(to_json(f, m));
  return a;
}

// the report shared by holonomy, prolong, classify-torsion and annihilators
json algebra_report(const Multivector& T, const Config& c, json j) {
  int n = T.dim();
  j["n"] = n;
  j["grade"] = T.grade();
  if (T.is_zero() || n == 0) {
    j["rep"] = c.rep.empty() ? "vector" : c.rep;
    j["dim"] = 0;
    j["derived_dim"] = 0;
    j["center_dim"] = 0;
    j["semisimple"] = false;
    j["compact"] = false;
    j["irreducible"] = nullptr;
    j["support_dim"] = 0;
    return j;
  }
  if (!T.is_homogeneous() || T.grade() < 1) throw FormError("expected a homogeneous form of positive grade");
  std::string rep = c.rep.empty() ? (T.grade() == 3 ? "vector" : "spinor") : c.rep;
  if (rep == "vector" && T.grade() != 3) throw FormError("vector representation needs a 3-form");
  AnalyzeOptions opt;
  opt.seed = c.seed;
  auto r = g_star(T, rep == "vector" ? RepMode::vector : RepMode::spinor, opt);
  j["rep"] = rep;
  j["dim"] = r.dim;
  j["derived_dim"] = r.derived_dim;
  j["center_dim"] = r.center_dim;
  j["semisimple"] = r.semisimple;
  j["compact"] = r.compact;
  if (r.irreducibility) {
    j["irreducible"] = r.irreducibility->irreducible;
    j["irreducible_proved"] = r.irreducibility->proved;
  } else {
    j["irreducible"] = nullptr;
  }
  j["killing_rank"] = r.killing_rank;
  j["centralizer_dim"] = r.centralizer_dim;
  j["support_dim"] = support_reduction(T).dim;
  return j;
}

// ---------------------------------------------------------------------------

Verdict cmd_holonomy(const Config& c) {
  Multivector T = load_form(c);
  json j = algebra_report(T, c, header("holonomy", c));
  if (!T.is_zero() && T.dim() > 0) {
    j["isotropy_dim"] = isotropy_algebra(T).size();
    j["invariant_spinors_dim"] = invariant_spinors(T).size();
  }
  return {j};
}

Verdict cmd_prolong(const Config& c) {
  Multivector T = load_form(c);
  json j = algebra_report(T, c, header("prolong", c));
  if (T.dim() > 0) {
    // prolongation of the isotropy algebra of T
    std::vector<Mat> g;
    for (auto& w : isotropy_algebra(T)) g.push_back(skew_of(w));
    auto p = antisym_prolongation(g, T.dim());
    j["isotropy_dim"] = g.size();
    j["prolongation_dim"] = p.size();
    j["prolongation"] = two_forms_json(p, c.num());
  }
  return {j};
}

Verdict cmd_classify(const Config& c) {
  Multivector T = load_form(c);
  if (T.is_zero() || T.grade() != 3) throw FormError("classify-torsion needs a nonzero 3-form");
  json j = algebra_report(T, c, header("classify-torsion", c));
  auto dec = decompose_torsion(tensor_of_form(T));
  j["classes"] = std::vector<std::string>(dec.classes.begin(), dec.classes.end());
  auto sup = support_reduction(T);
  json kern = json::array();
  for (auto& v : sup.kernel) kern.push_back(vec_json(v, c.num()));
  j["kernel"] = kern;
  auto split = split_torsion(T, c.seed);
  json comps = json::array();
  for (auto& comp : split.components) comps.push_back({{"dim", comp.subspace.size()}, {"form", to_json(comp.form, c.num())}});
  j["split"] = {{"complete", split.complete}, {"resums", split.resums}, {"components", comps}};
  auto tw = invariant_two_forms(T, c.seed);
  j["invariant_two_forms"] = {{"dim", tw.commutant.size()},
                              {"nondegenerate_found", tw.nondegenerate_found},
                              {"max_rank", tw.max_rank}};
  return {j};
}

Verdict cmd_annihilators(const Config& c) {
  if (!c.form_path.empty()) {
    Multivector T = load_form(c);
    json j = algebra_report(T, c, header("annihilators", c));
    if (T.dim() > 0) {
      auto iso = isotropy_algebra(T);
      j["isotropy_dim"] = iso.size();
      j["isotropy"] = two_forms_json(iso, c.num());
    }
    return {j};
  }
  if (c.dim < 1 || c.grade < 1 || c.grade > c.dim) throw UsageError("annihilators needs --form, or --dim and --grade");
  json j = header("annihilators", c);
  Sampler rng(c.seed);
  std::vector<Vec> space;
  if (c.dim % 2 == 0) {
    try {
      space = half_spinors(c.dim);
      j["spinor_space"] = "positive half";
    } catch (const FormError&) {
    }
  }
  if (space.empty()) {
    int d = spin_rep(c.dim).dim();
    for (int i = 0; i < d; ++i) {
      Vec e(d);
      e[i] = 1;
      space.push_back(e);
    }
    j["spinor_space"] = "full";
  }
  Vec psi;
  do psi = rng.combination(space);
  while (is_zero(psi));
  auto forms = annihilating_forms(psi, c.dim, c.grade);
  j["n"] = c.dim;
  j["grade"] = c.grade;
  j["spinor"] = vec_json(psi, c.num());
  j["annihilating_dim"] = forms.size();
  j["annihilating_forms"] = two_forms_json(forms, c.num());
  return {j};
}

json matrix_json(const RMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int k = 0; k < m.cols(); ++k) r.push_back(m(i, k));
    rows.push_back(r);
  }
  return rows;
}

Verdict cmd_transport(const Config& c) {
  if (c.loop_path.empty()) throw UsageError("missing --loop");
  Multivector T = c.form_path.empty() ? cartan_torsion() : load_form(c);
  std::vector<Point> loop;
  try {
    loop = parse_points(read_text_file(c.loop_path));
  } catch (const ParseError& e) {
    throw ParseError(e.line, e.reason, c.loop_path);
  }
  if (loop.size() < 2) throw UsageError("loop needs at least two vertices");
  for (auto& p : loop)
    if (static_cast<int>(p.size()) != T.dim())
      throw UsageError("loop vertices must have " + std::to_string(T.dim()) + " coordinates");
  RMat h = transport_loop(T, loop);
  json j = header("transport", c);
  j["mode"] = "float";
  j["n"] = T.dim();
  j["torsion"] = to_json(T, c.num());
  j["vertices"] = loop.size();
  j["matrix"] = matrix_json(h);
  j["orthogonality_defect"] = (h.transpose() * h - RMat::Identity(h.rows(), h.cols())).norm();
  if (T.dim() == 3) {
    auto rot = rotation_info(h);
    j["angle"] = rot.angle;
    j["axis"] = {rot.axis[0], rot.axis[1], rot.axis[2]};
  }
  return {j};
}

Verdict cmd_square_parts(const Config& c) {
  Multivector T = load_form(c);
  if (T.is_zero() || T.grade() != 3) throw FormError("square-parts needs a nonzero 3-form");
  auto sp = square_parts(T);
  json j = header("square-parts", c);
  j["n"] = T.dim();
  j["t0"] = to_json(sp.t0, c.num());
  j["t0_formula"] = to_json(sp.t0_formula, c.num());
  j["t4"] = to_json(sp.t4, c.num());
  j["sigma"] = to_json(sigma_T(T), c.num());
  j["t4_equals_minus_2_sigma"] = sp.t4 == sigma_T(T) * Scalar(-2);
  j["only_0_and_4"] = sp.only_0_and_4;
  return {j, sp.only_0_and_4 && sp.t0 == sp.t0_formula};
}

Verdict cmd_det4(const Config& c) {
  Config c4 = c;
  c4.dim = 4;
  Multivector e = load_form(c4);
  for (auto& [m, v] : e.terms()) {
    int g = popcount(m);
    if (g != 0 && g != 2 && g != 4) throw FormError("det4 takes parts of degree 0, 2 and 4 only");
  }
  Scalar a = e.coeff(Mask(0)), f = e.coeff(mask_of({1, 2, 3, 4}));
  auto r = det4(a, e.part(2), f);
  json j = header("det4", c);
  j["a"] = to_json(a, c.num());
  j["omega"] = to_json(e.part(2), c.num());
  j["f"] = to_json(f, c.num());
  j["det"] = to_json(r.direct, c.num());
  j["closed_form"] = to_json(r.closed_form, c.num());
  j["printed_form"] = to_json(r.printed_form, c.num());
  j["agree"] = r.agree;
  j["printed_agrees"] = r.direct == r.printed_form;
  j["real_det_is_square"] = r.real_is_square;
  return {j, r.agree};
}

// ---------------------------------------------------------------------------

Verdict cmd_aw_solve(const Config& c) {
  if (c.spinor < 3 || c.spinor > 6) throw UsageError("--spinor must be 3, 4, 5 or 6");
  Scalar s = positive_arg("s", c.s), y = positive_arg("y", c.y);
  AWContext ctx(s, y);
  auto psi = probe_spinors();
  auto ansatz = c.four_form ? invariant_4forms() : ref::ansatz7();
  auto sol = solve_torsion(ctx, psi[c.spinor - 3], ansatz);
  json j = header("aw solve", c);
  j["s"] = to_json(s, c.num());
  j["y"] = to_json(y, c.num());
  j["spinor"] = c.spinor;
  j["degree"] = c.four_form ? 4 : 3;
  j["consistent"] = sol.consistent;
  j["unique"] = sol.unique;
  j["rank"] = sol.rank;
  j["unknowns"] = sol.unknowns;
  if (sol.consistent) {
    j["coefficients"] = to_json(sol.coeffs, c.num());
    j["form"] = to_json(sol.form, c.num());
    j["residual_zero"] = sol.residual_zero;
    j["invariant"] = sol.invariant;
    Multivector want = c.four_form ? ref::R_k(c.spinor, s, y) : ref::T_k(c.spinor, s, y);
    j["matches_closed_form"] = sol.form == want;
  }
  return {j, sol.consistent};
}

Verdict cmd_aw_classify(const Config& c) {
  Scalar s = positive_arg("s", c.s), y = positive_arg("y", c.y);
  AWContext ctx(s, y);
  auto psi = probe_spinors();
  json j = header("aw classify", c);
  j["s"] = to_json(s, c.num());
  j["y"] = to_json(y, c.num());
  json list = json::array();
  for (int k : {3, 5}) {
    auto sol = solve_torsion(ctx, psi[k - 3], ref::ansatz7());
    if (!sol.unique) throw FormError("torsion is not unique at this point");
    Multivector omega = g2_form_of_spinor(psi[k - 3]);
    Multivector T4 = sol.form * Scalar(4);
    auto g2 = g2_type(ctx.model, omega, T4);
    auto sc = scalars_from_torsion(omega, T4);
    list.push_back({{"spinor", k},
                    {"type", to_string(g2.type)},
                    {"pairing", to_json(form_inner(sol.form, omega), c.num())},
                    {"cocalibrated", g2.cocalibrated},
                    {"scal_riemannian", to_json(sc.riemannian, c.num())},
                    {"scal_connection", to_json(sc.connection, c.num())},
                    {"torsion_4T", to_json(T4, c.num())}});
  }
  j["structures"] = list;
  return {j};
}

Verdict cmd_aw_roots(const Config& c) {
  json j = header("aw scan-roots", c);
  j["mode"] = "float";
  json list = json::array();
  for (auto& r : scan_roots())
    list.push_back({{"s", r.s}, {"y", r.y}, {"residual3", r.residual3}, {"residual5", r.residual5}});
  j["roots"] = list;
  json printed = json::array();
  for (auto& p : ref::printed_roots()) printed.push_back({p[0], p[1]});
  j["printed"] = printed;
  return {j};
}

Verdict cmd_aw_fixtures(const Config& c) {
  std::vector<std::pair<Scalar, Scalar>> points;
  if (!c.s.empty() || !c.y.empty()) {
    points.emplace_back(positive_arg("s", c.s), positive_arg("y", c.y));
  } else {
    Sampler rng(c.seed);
    int count = c.verify_all ? 25 : 5;
    for (int i = 0; i < count; ++i) {
      Scalar s = rng.positive_rational(), q = rng.nonzero_rational();
      points.emplace_back(s, q * q);
    }
  }
  auto psi = probe_spinors();
  int sys_ok = 0, solve_ok = 0, total = 0;
  json fails = json::array();
  for (auto& [s, y] : points) {
    AWContext ctx(s, y);
    for (int k = 3; k <= 6; ++k) {
      ++total;
      bool zero = true;
      for (auto& v : ref::system(k, s, y, ref::T_coeffs(k, s, y))) zero &= v.is_zero();
      auto sol = solve_torsion(ctx, psi[k - 3], ref::ansatz7());
      bool match = sol.unique && sol.form == ref::T_k(k, s, y);
      sys_ok += zero;
      solve_ok += match;
      if (!zero || !match)
        fails.push_back({{"s", to_json(s, c.num())}, {"y", to_json(y, c.num())}, {"k", k}, {"system", zero}, {"solver", match}});
    }
  }
  json j = header("aw fixtures", c);
  j["points"] = points.size();
  j["systems_satisfied"] = sys_ok;
  j["solver_matches"] = solve_ok;
  j["checks"] = total;
  j["failures"] = fails;
  bool ok = sys_ok == total && solve_ok == total;
  j["ok"] = ok;
  return {j, ok};
}

Verdict cmd_veronese(const Config& c) {
  if (c.point.empty()) throw UsageError("missing --point a,b,c,d");
  std::vector<Scalar> p;
  try {
    p = parse_scalar_list(c.point);
  } catch (const ScalarError& e) {
    throw UsageError(std::string("--point: ") + e.what());
  }
  if (p.size() != 4) throw UsageError("--point needs four values");
  if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero() && p[3].is_zero()) throw UsageError("--point must be nonzero");
  json j = header("sasakian veronese", c);
  j["point"] = to_json(p, c.num());
  if (c.four_form) {
    auto sol = veronese_4form(p[0], p[1], p[2], p[3]);
    j["degree"] = 4;
    j["unique"] = sol.unique;
    j["rank"] = sol.rank;
    j["unknowns"] = sol.unknowns;
    if (sol.consistent) {
      j["coefficients"] = to_json(sol.coeffs, c.num());
      j["form"] = to_json(sol.form, c.num());
      j["residual_zero"] = sol.residual_zero;
      j["invariant"] = sol.invariant;
    }
    return {j, sol.consistent};
  }
  auto v = veronese_torsion(p[0], p[1], p[2], p[3]);
  j["degree"] = 3;
  std::vector<Scalar> cf(v.closed_form.begin(), v.closed_form.end());
  j["closed_form"] = to_json(cf, c.num());
  j["unique"] = v.solved.unique;
  if (v.solved.consistent) {
    j["coefficients"] = to_json(v.solved.coeffs, c.num());
    j["form"] = to_json(v.solved.form, c.num());
    Scalar sum;
    for (int k = 0; k < 9; ++k) sum += v.solved.coeffs[k] * v.solved.coeffs[k];
    j["w"] = to_json(v.solved.coeffs[9], c.num());
    j["sum_x_squared"] = to_json(sum, c.num());
    j["residual_zero"] = v.solved.residual_zero;
  }
  j["agree"] = v.agree;
  return {j, v.agree};
}

Verdict cmd_sasakian_family(const Config& c) {
  auto r = family_dimension_report(c.seed, 20);
  json j = header("sasakian family", c);
  j["samples"] = r.samples;
  j["jacobian_rank"] = r.jacobian_rank;
  j["sum_x_squared"] = to_json(r.sphere_invariant, c.num());
  j["sum_constant"] = r.sphere_constant;
  j["fixed_spinors"] = su2_fixed_spinors().size();
  return {j};
}

Verdict cmd_spin9(const Config& c) {
  json j = header("spin9", c);
  auto tr = spin9_transcription();
  j["equations"] = {{"first_kind", tr.first}, {"second_kind", tr.second}, {"pattern_ok", tr.pattern_ok}, {"checksum_ok", tr.checksum_ok}};
  auto basis = spin9_basis();
  j["dim"] = basis.size();
  bool ok = tr.checksum_ok && tr.pattern_ok && basis.size() == 36;
  if (c.check_all) {
    bool closed = is_bracket_closed(basis);
    auto k = killing_form(basis);
    auto irr = invariant_subspace_search(basis, c.seed);
    auto sp = spin9_prolongation();
    auto gen = spin9_from_vectors();
    auto inv = spin9_invariant_two_forms();
    j["bracket_closed"] = closed;
    j["compact"] = k.compact;
    j["irreducible"] = irr.irreducible;
    j["irreducible_proved"] = irr.proved;
    j["prolongation_dim"] = sp.direct_dim;
    j["prolongation_from_equations_dim"] = sp.functional_dim;
    j["staged"] = {{"stage1_dim", sp.stage1_dim},
                   {"stage1_kills_8_alpha", sp.stage1_kills_8_alpha},
                   {"stage2_dim", sp.stage2_dim},
                   {"stage2_e8_free", sp.stage2_e8_free},
                   {"transitive_zero", sp.transitive_zero}};
    j["generated_by_vectors_dim"] = gen.dim;
    j["invariant_two_forms"] = inv.size();
    ok = ok && closed && k.compact && irr.irreducible && sp.direct_dim == 0 && sp.functional_dim == 0 &&
         sp.transitive_zero && gen.dim == 36 && inv.empty();
  }
  j["ok"] = ok;
  return {j, ok};
}

Verdict cmd_verify(const Config& c) {
  auto results = run_acceptance(c.seed);
  json j = header("verify-paper", c);
  json list = json::array();
  int passed = 0;
  for (auto& r : results) {
    passed += r.pass;
    list.push_back({{"id", r.id}, {"label", r.label}, {"pass", r.pass}, {"detail", r.detail}});
  }
  j["criteria"] = list;
  j["passed"] = passed;
  j["total"] = results.size();
  return {j, passed == static_cast<int>(results.size())};
}

// ---------------------------------------------------------------------------

void render_text(const json& j, std::ostream& out, const std::string& prefix) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    std::string key = prefix + it.key();
    if (v.is_object()) {
      render_text(v, out, key + ".");
    } else if (v.is_string()) {
      out << key << ": " << v.get<std::string>() << "\n";
    } else {
      out << key << ": " << v.dump() << "\n";
    }
  }
}

void render_verify(const json& j, std::ostream& out) {
  for (auto& r : j["criteria"]) {
    out << std::setw(2) << r["id"].get<int>() << "  " << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
        << std::left << std::setw(46) << r["label"].get<std::string>() << std::right << "  "
        << r["detail"].get<std::string>() << "\n";
  }
  out << j["passed"].get<int>() << "/" << j["total"].get<int>() << " criteria pass\n";
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--form", c.form_path, "form file: one 'i j k : p/q [* sqrt(d)]' per line");
  sub->add_option("--dim", c.dim, "ambient dimension (default: largest index)")->check(CLI::Range(0, kMaxDim));
  sub->add_option("--mode", c.mode, "number output")->check(CLI::IsMember({"exact", "float"}));
  sub->add_option("--seed", c.seed, "sampling seed");
  sub->add_flag("--json", c.json_out, "JSON output");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"holonomy and parallel-spinor computations", "holo"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all");

  std::function<Verdict(const Config&)> action;
  std::string command;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Verdict(const Config&)> fn) {
    sub->callback([&action, &command, name, fn] {
      command = name;
      action = fn;
    });
  };

  auto* hol = app.add_subcommand("holonomy", "algebra generated by the contractions of a form");
  add_common(hol, c);
  hol->add_option("--rep", c.rep, "vector (3-forms) or spinor")->check(CLI::IsMember({"vector", "spinor"}));
  bind(hol, "holonomy", cmd_holonomy);

  auto* pro = app.add_subcommand("prolong", "antisymmetric prolongation of the isotropy algebra of a form");
  add_common(pro, c);
  pro->add_option("--rep", c.rep)->check(CLI::IsMember({"vector", "spinor"}));
  bind(pro, "prolong", cmd_prolong);

  auto* cls = app.add_subcommand("classify-torsion", "support, splitting and invariant 2-forms of a 3-form");
  add_common(cls, c);
  bind(cls, "classify-torsion", cmd_classify);

  auto* ann = app.add_subcommand("annihilators", "isotropy algebra of a form, or forms annihilating a random spinor");
  add_common(ann, c);
  ann->add_option("--grade", c.grade, "degree of the annihilating forms");
  ann->add_option("--rep", c.rep)->check(CLI::IsMember({"vector", "spinor"}));
  bind(ann, "annihilators", cmd_annihilators);

  auto* tra = app.add_subcommand("transport", "vector transport around a polygon (default torsion: Cartan's)");
  add_common(tra, c);
  tra->add_option("--loop", c.loop_path, "file of vertex rows");
  bind(tra, "transport", cmd_transport);

  auto* sq = app.add_subcommand("square-parts", "degree 0 and 4 parts of T.T");
  add_common(sq, c);
  bind(sq, "square-parts", cmd_square_parts);

  auto* d4 = app.add_subcommand("det4", "determinant of a + omega + f e1234 on spinors of R^4");
  add_common(d4, c);
  bind(d4, "det4", cmd_det4);

  auto* aw = app.add_subcommand("aw", "Aloff-Wallach space N(1,1)");
  aw->require_subcommand(1, 1);
  auto* aws = aw->add_subcommand("solve", "torsion making a fixed spinor parallel");
  add_common(aws, c);
  aws->add_option("--spinor", c.spinor, "3..6");
  aws->add_option("--s", c.s);
  aws->add_option("--y", c.y);
  aws->add_flag("--four-form", c.four_form, "use the 4-form ansatz");
  bind(aws, "aw solve", cmd_aw_solve);
  auto* awc = aw->add_subcommand("classify", "G2 types of the omega_3 and omega_5 structures");
  add_common(awc, c);
  awc->add_option("--s", c.s);
  awc->add_option("--y", c.y);
  bind(awc, "aw classify", cmd_aw_classify);
  auto* awr = aw->add_subcommand("scan-roots", "common zeros of the two scalar curvatures");
  add_common(awr, c);
  bind(awr, "aw scan-roots", cmd_aw_roots);
  auto* awf = aw->add_subcommand("fixtures", "printed linear systems and solutions");
  add_common(awf, c);
  awf->add_option("--s", c.s);
  awf->add_option("--y", c.y);
  awf->add_flag("--verify-all", c.verify_all, "25 sampled points");
  bind(awf, "aw fixtures", cmd_aw_fixtures);

  auto* sas = app.add_subcommand("sasakian", "3-Sasakian model");
  sas->require_subcommand(1, 1);
  auto* ver = sas->add_subcommand("veronese", "torsion for the fixed spinor at a projective point");
  add_common(ver, c);
  ver->add_option("--point", c.point, "a,b,c,d");
  ver->add_flag("--four-form", c.four_form, "solve over the 4-form family");
  bind(ver, "sasakian veronese", cmd_veronese);
  auto* fam = sas->add_subcommand("family", "rank and sphere invariant of the Veronese family");
  add_common(fam, c);
  bind(fam, "sasakian family", cmd_sasakian_family);

  auto* s9 = app.add_subcommand("spin9", "spin(9) in so(16) from the equation tables");
  add_common(s9, c);
  s9->add_flag("--check-all", c.check_all, "closure, irreducibility and prolongation");
  bind(s9, "spin9", cmd_spin9);

  auto* ver_all = app.add_subcommand("verify-paper", "full acceptance suite");
  add_common(ver_all, c);
  bind(ver_all, "verify-paper", cmd_verify);

  if (argc > 1 && argv[1][0] != '-' && app.get_subcommand_no_throw(argv[1]) == nullptr) {
    err << "error: unknown subcommand '" << argv[1] << "'\n";
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Verdict v;
  try {
    v = action(c);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << command << " failed: " << e.what() << "\n";
    return 1;
  }
  if (c.json_out)
    out << v.report.dump(2) << "\n";
  else if (command == "verify-paper")
    render_verify(v.report, out);
  else
    render_text(v.report, out, "");
  return v.ok ? 0 : 1;
}

}  // namespace holo
