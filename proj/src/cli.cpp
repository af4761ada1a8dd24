#include "bihcp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"

#include "bihcp/biharmonic.hpp"
#include "bihcp/clifford.hpp"
#include "bihcp/curves.hpp"
#include "bihcp/errors.hpp"
#include "bihcp/families.hpp"
#include "bihcp/report.hpp"

namespace bihcp::cli {

namespace {

// Flag combinations the grammar cannot express; reported with exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct CurveOptions {
  std::string family;
  std::optional<int> n;
  std::optional<double> k1;
  int orientation = 1;
};

CurveFamily build_family(const CurveOptions& o) {
  if (o.family == "great-circle") return great_circle(o.n.value_or(1));
  if (o.family == "tau12-pm1") return lift_curve_tau12_pm1(o.n.value_or(1), o.orientation);
  if (o.family == "tau12-zero-circle") {
    return lift_curve_tau12_zero(Tau12ZeroKind::kCircle, 0.0, o.n.value_or(0));
  }
  if (o.family == "tau12-zero-helix") {
    if (!o.k1) throw UsageError("--family tau12-zero-helix needs --k1");
    return lift_curve_tau12_zero(Tau12ZeroKind::kHelix, *o.k1, o.n.value_or(0));
  }
  throw UsageError("unknown curve family '" + o.family + "'");
}

Json curve_inputs(const CurveOptions& o, const CurveFamily& f) {
  Json in = Json::object();
  in["family"] = o.family;
  in["n"] = f.n;
  if (o.k1) in["k1"] = *o.k1;
  if (o.family == "tau12-pm1") in["orientation"] = o.orientation;
  return in;
}

// ---- solve ----------------------------------------------------------------

Json solve_clifford(int m1, int m2, const ToleranceConfig& tol) {
  Json in = Json::object();
  in["m1"] = m1;
  in["m2"] = m2;
  Json rep = make_report("solve clifford", in, tol);

  double max_condition = 0.0;
  double max_quadratic = 0.0;
  Json candidates = Json::array();
  int index = 0;
  for (const auto& r : clifford_minus4_candidates(m1, m2, tol)) {
    Json c = Json::object();
    c["a2"] = r.a2;
    c["status"] = to_string(r.status);
    c["tension"] = r.tension;
    c["condition_residual"] = r.condition_residual;
    c["quadratic_residual"] = r.quadratic_residual;
    candidates.push_back(c);
    if (r.status == RootStatus::kExcludedMinimal) {
      add_warning(rep, "root a2 = " + fmt(r.a2) + " is minimal and excluded");
    }
    if (r.status != RootStatus::kAdmissible || std::abs(r.condition_residual) > 1e-12) continue;
    add_root(rep, "a2_" + std::to_string(++index), r.a2);
    max_condition = std::max(max_condition, std::abs(r.condition_residual));
    max_quadratic = std::max(max_quadratic, std::abs(r.quadratic_residual));
  }
  rep["residuals"]["max_condition_residual"] = max_condition;
  rep["residuals"]["max_quadratic_residual"] = max_quadratic;
  rep["details"]["quadratic"] = {2 * m1 + 2 * m2 + 4, -(3 * m1 + m2 + 4), m1};
  rep["details"]["candidates"] = candidates;
  rep["verdict"] = rederive_verdict(rep);
  return rep;
}

Json solve_zhang(int n, const ToleranceConfig& tol) {
  Json in = Json::object();
  in["n"] = n;
  Json rep = make_report("solve zhang", in, tol);
  double max_res = 0.0;
  double max_oracle = 0.0;
  Json specs = Json::array();
  for (const auto& spec : zhang_solve_two_block(n, tol)) {
    const ZhangResidual r = zhang_residual(spec, tol);
    const double oracle = torus_extrinsic_oracle(spec, -4.0, tol);
    add_root(rep, "a1^2", spec.radii[0] * spec.radii[0]);
    Json s = Json::object();
    s["radii"] = spec.radii;
    s["zhang_residual"] = r.norm;
    s["oracle_minus4"] = oracle;
    specs.push_back(s);
    max_res = std::max(max_res, r.norm);
    max_oracle = std::max(max_oracle, oracle);
  }
  rep["residuals"]["max_zhang_residual"] = max_res;
  rep["residuals"]["max_oracle_minus4"] = max_oracle;
  rep["details"]["ansatz"] = "a_1 distinct, a_2 = ... = a_{n+1}";
  rep["details"]["specs"] = specs;
  rep["verdict"] = rederive_verdict(rep);
  return rep;
}

// Grid sweeps record domain errors per point; a single solve lets them
// propagate to the exit status.
Json helix_point(double alpha0, Branch branch, const ToleranceConfig& tol, bool in_grid) {
  Json p = Json::object();
  p["alpha0"] = alpha0;
  p["discriminant"] = order4_discriminant(alpha0);
  try {
    const HelixSolution h = solve_order4_helix(alpha0, branch, tol);
    const double c = std::cos(alpha0);
    p["status"] = "solved";
    p["k1"] = h.k1;
    p["k2"] = h.k2;
    p["k3"] = h.k3;
    Json t = Json::object();
    t["t12"] = h.tau12;
    t["t13"] = h.tau13;
    t["t14"] = h.tau14;
    t["t23"] = h.tau23;
    t["t24"] = h.tau24;
    t["t34"] = h.tau34;
    p["torsions"] = t;
    p["class"] = h.class_label;
    p["cpn_bitension"] = cpn_curve_bitension(helix_apparatus(h), helix_jE1(h), tol).norm;
    p["sum_identity_defect"] = std::abs(h.k1 * h.k1 + h.k2 * h.k2 - 1.0 - 3.0 * c * c);
    p["product_identity_defect"] = std::abs(h.k2 * h.k3 + 1.5 * std::sin(2.0 * alpha0));
  } catch (const NoSolutionError& e) {
    p["status"] = "no-solution";
    p["reason"] = e.what();
  } catch (const ConstraintError& e) {
    p["status"] = "no-solution";
    p["reason"] = e.what();
  } catch (const Error& e) {
    if (!in_grid) throw;
    p["status"] = "domain-error";
    p["reason"] = e.what();
  }
  return p;
}

Json solve_helix(std::optional<double> alpha0, std::optional<int> grid, double alpha_min,
                 double alpha_max, const std::string& branch_name, const ToleranceConfig& tol) {
  if (alpha0.has_value() == grid.has_value()) {
    throw UsageError("solve helix needs exactly one of --alpha0 or --grid");
  }
  const Branch branch = branch_name == "minus" ? Branch::kMinus : Branch::kPlus;
  Json in = Json::object();
  if (alpha0) {
    in["alpha0"] = *alpha0;
  } else {
    if (*grid < 1) throw UsageError("--grid must be >= 1");
    in["grid"] = *grid;
    in["alpha_min"] = alpha_min;
    in["alpha_max"] = alpha_max;
  }
  in["branch"] = branch_name;
  Json rep = make_report("solve helix", in, tol);
  add_warning(rep, "admissible cos^2(alpha0) <= (7 - 4 sqrt3)/3 = " + fmt(order4_cos2_limit()) +
                       "; the nominal interval endpoint arccos(-(2 - sqrt3)/sqrt2) reaches "
                       "cos^2 = (7 - 4 sqrt3)/2 = " +
                       fmt(order4_cos2_nominal_endpoint()) + ", where the discriminant is negative");

  std::vector<Json> points;
  if (alpha0) {
    points.push_back(helix_point(*alpha0, branch, tol, false));
  } else {
    const int count = *grid;
    points.resize(static_cast<std::size_t>(count));
    const double step = (alpha_max - alpha_min) / count;
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = static_cast<int>(w); i < count; i += static_cast<int>(workers)) {
          points[static_cast<std::size_t>(i)] =
              helix_point(alpha_min + (i + 0.5) * step, branch, tol, true);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  int solved = 0;
  double max_cpn = 0.0;
  double max_sum = 0.0;
  double max_prod = 0.0;
  for (const auto& p : points) {
    if (p["status"] != "solved") continue;
    ++solved;
    max_cpn = std::max(max_cpn, p["cpn_bitension"].get<double>());
    max_sum = std::max(max_sum, p["sum_identity_defect"].get<double>());
    max_prod = std::max(max_prod, p["product_identity_defect"].get<double>());
  }
  rep["residuals"]["solved_count"] = solved;
  rep["residuals"]["max_cpn_bitension"] = max_cpn;
  rep["residuals"]["max_sum_identity_defect"] = max_sum;
  rep["residuals"]["max_product_identity_defect"] = max_prod;
  if (alpha0) {
    const Json& p = points.front();
    if (p["status"] == "solved") {
      add_root(rep, "k1", p["k1"].get<double>());
      add_root(rep, "k2", p["k2"].get<double>());
      add_root(rep, "k3", p["k3"].get<double>());
    }
    rep["details"] = p;
  } else {
    rep["details"]["points"] = points;
  }
  rep["verdict"] = rederive_verdict(rep);
  return rep;
}

Json bundle_json(const SphereBundleReport& r) {
  Json d = Json::object();
  d["a2"] = r.a2;
  d["mean_curvature"] = r.mean_curvature;
  d["tension"] = r.tension;
  d["biharmonic_residual"] = r.biharmonic_residual;
  d["minus4_residual"] = r.minus4_residual;
  d["minimal_in_sphere"] = r.minimal_in_sphere;
  d["proper_biharmonic_in_sphere"] = r.proper_biharmonic_in_sphere;
  d["minus4_biharmonic"] = r.minus4_biharmonic;
  d["minimal_in_clifford_torus"] = r.minimal_in_clifford_torus;
  d["frame_orthonormality_defect"] = r.frame_orthonormality_defect;
  d["frame_mean_curvature_defect"] = r.frame_mean_curvature_defect;
  d["projection_residuals"] = r.projection_residuals;
  d["projection_proper_biharmonic"] = r.projection_proper_biharmonic;
  return d;
}

Json solve_sphere_bundle(int p, std::optional<double> a2, const ToleranceConfig& tol) {
  Json in = Json::object();
  in["p"] = p;
  if (a2) in["a2"] = *a2;
  Json rep = make_report("solve sphere-bundle", in, tol);
  if (a2) {
    const SphereBundleReport r = sphere_bundle_analyze(p, *a2, tol);
    rep["residuals"]["tension"] = std::abs(r.tension);
    rep["residuals"]["bitension"] = std::abs(r.tension * r.biharmonic_residual);
    rep["residuals"]["minus4"] = std::abs(r.tension * r.minus4_residual);
    rep["details"] = bundle_json(r);
  } else {
    double worst = 0.0;
    Json at = Json::array();
    for (double t : sphere_bundle_minus4_roots(p)) {
      const SphereBundleReport r = sphere_bundle_analyze(p, t, tol);
      add_root(rep, "a2", t);
      worst = std::max(worst, std::abs(r.minus4_residual));
      at.push_back(bundle_json(r));
    }
    rep["residuals"]["max_minus4_coefficient"] = worst;
    rep["details"]["roots"] = at;
  }
  rep["details"]["closed_form_roots"] = {
      (2.0 * p + 1.0 - std::sqrt(2.0 * p + 1.0)) / (4.0 * p + 2.0),
      (2.0 * p + 1.0 + std::sqrt(2.0 * p + 1.0)) / (4.0 * p + 2.0)};
  rep["verdict"] = rederive_verdict(rep);
  return rep;
}

// ---- verify ---------------------------------------------------------------

Json verify_curve(const CurveOptions& o, int samples, const ToleranceConfig& tol) {
  if (samples < 2) throw UsageError("--samples must be >= 2");
  const CurveFamily family = build_family(o);
  Json in = curve_inputs(o, family);
  in["samples"] = samples;
  Json rep = make_report("verify curve", in, tol);

  const int max_order = 2 * family.n + 1;
  double tension = 0.0, bitension = 0.0, minus4 = 0.0, quartic = 0.0, horizontal = 0.0,
         hopf = 0.0, extrinsic = 0.0;
  double down_tension = 0.0, down_bitension = 0.0;
  Json first_sample = Json::object();
  Json first_down = Json::object();

  for (int i = 0; i < samples; ++i) {
    const double s = 2.0 * std::numbers::pi * i / (samples - 1);
    const CurveJet jet = family(s);
    const SpherePoint p(jet.position(), tol);
    const FrenetApparatus a = frenet_apparatus(family, s, max_order, tol);
    const BitensionResidual tau2 = sphere_curve_bitension(a);
    const std::vector<double> tau = tension_coefficients(a);
    tension = std::max(tension, a.curvature(1));
    bitension = std::max(bitension, tau2.norm);
    minus4 = std::max(minus4, lambda_biharmonic_residual(tau2, tau, -4.0).norm);
    quartic = std::max(quartic, quartic_ode_residual(jet));
    horizontal = std::max(horizontal, std::abs(horizontality_defect(p, jet.velocity(), tol)));
    hopf = std::max(hopf, hopf_relation_check(family, s, tol).norm);
    extrinsic = std::max(extrinsic, std::abs(extrinsic_sphere_bitension(jet).norm - tau2.norm));

    const FrenetApparatus down = downstairs_apparatus(a, p, tol);
    std::vector<double> jE1;
    const AmbientVector je1 = j_apply(down.frames[0]);
    for (const auto& e : down.frames) jE1.push_back(dot(je1, e));
    down_tension = std::max(down_tension, down.curvature(1));
    down_bitension = std::max(down_bitension, cpn_curve_bitension(down, jE1, tol).norm);

    if (i == 0) {
      first_sample["d"] = a.d;
      first_sample["curvatures"] = a.curvatures;
      first_sample["tau12"] = a.torsion(1, 2);
      first_down["d"] = down.d;
      first_down["curvatures"] = down.curvatures;
      first_down["tau12"] = down.torsion(1, 2);
    }
  }

  Json& res = rep["residuals"];
  res["tension_max"] = tension;
  res["bitension_max"] = bitension;
  res["minus4_max"] = minus4;
  res["quartic_ode_max"] = quartic;
  res["horizontality_max"] = horizontal;
  res["hopf_relation_max"] = hopf;
  res["extrinsic_agreement_max"] = extrinsic;
  rep["details"]["family"] = family.label;
  rep["details"]["apparatus_at_s0"] = first_sample;
  first_down["tension_max"] = down_tension;
  first_down["bitension_max"] = down_bitension;
  first_down["verdict"] =
      staged_verdict(down_tension, down_bitension, kInf, tol.residual, tol.minimality);
  rep["details"]["downstairs"] = first_down;
  rep["verdict"] = rederive_verdict(rep);
  return rep;
}

Json verify_torus(const std::vector<double>& radii, std::optional<double> a2,
                  std::optional<int> m1, std::optional<int> m2, std::optional<int> p,
                  std::optional<int> q, const ToleranceConfig& tol) {
  const bool zhang = !radii.empty();
  const bool product = a2 || m1 || m2;
  if (zhang == product) {
    throw UsageError("verify torus needs either --radii or --a2 with --m1 and --m2");
  }
  if (zhang) {
    Json in = Json::object();
    in["radii"] = radii;
    Json rep = make_report("verify torus", in, tol);
    const LagrangianTorusSpec spec{radii};
    const ZhangResidual r = zhang_residual(spec, tol);
    double min_defect = 0.0;
    for (double a : radii) {
      min_defect = std::max(min_defect, std::abs(a * a - 1.0 / (spec.n() + 1.0)));
    }
    rep["residuals"]["zhang_residual"] = r.norm;
    rep["residuals"]["oracle_minus4"] = torus_extrinsic_oracle(spec, -4.0, tol);
    rep["residuals"]["minimality_defect"] = min_defect;
    rep["details"]["n"] = spec.n();
    rep["details"]["residual_vector"] = r.r;
    rep["details"]["minimal"] = r.minimal;
    rep["verdict"] = rederive_verdict(rep);
    return rep;
  }
  if (!a2 || !m1 || !m2) throw UsageError("product torus needs --a2, --m1 and --m2");
  const int pp = p.value_or(std::max(0, *m1 / 2));
  const int qq = q.value_or(std::max(0, *m2 / 2));
  Json in = Json::object();
  in["a2"] = *a2;
  in["m1"] = *m1;
  in["m2"] = *m2;
  in["p"] = pp;
  in["q"] = qq;
  Json rep = make_report("verify torus", in, tol);
  const auto cfg = ProductSphereConfig::from_a2(pp, qq, *a2, *m1, *m2);
  const TensionBitension tb = clifford_tension_bitension(cfg, tol);
  rep["residuals"]["tension"] = std::abs(tb.tension);
  rep["residuals"]["bitension"] = std::abs(tb.bitension);
  rep["residuals"]["minus4"] = std::abs(tb.bitension + 4.0 * tb.tension);
  rep["details"]["n"] = pp + qq + 1;
  rep["details"]["tension_coefficient"] = tb.tension;
  rep["details"]["bitension_coefficient"] = tb.bitension;
  rep["verdict"] = rederive_verdict(rep);
  return rep;
}

Json verify_hypersurface(int n, double h2, double b2, double c, std::optional<int> mbar,
                         const ToleranceConfig& tol) {
  Json in = Json::object();
  in["n"] = n;
  in["h2"] = h2;
  in["b2"] = b2;
  in["c"] = c;
  if (mbar) in["mbar"] = *mbar;
  Json rep = make_report("verify hypersurface", in, tol);
  const HypersurfaceVerdict v = hypersurface_predicates({n, h2, b2, c, mbar}, tol);
  rep["residuals"]["second_ff_defect"] = std::abs(v.second_ff_defect);
  rep["residuals"]["mean_curvature_sq"] = h2;
  rep["details"]["mbar"] = v.mbar;
  rep["details"]["proper_biharmonic"] = v.proper_biharmonic;
  rep["details"]["scalar_curvature"] = v.scalar_curvature;
  rep["details"]["gauss_scalar_curvature"] = v.gauss_scalar_curvature;
  rep["details"]["tangent_bound"] = v.tangent_bound;
  rep["details"]["tangent_bound_ok"] = v.tangent_bound_ok;
  rep["details"]["normal_bound_ok"] = v.normal_bound_ok;
  rep["details"]["nonexistence"] = v.nonexistence;
  for (const auto& note : v.notes) add_warning(rep, note);
  rep["verdict"] = rederive_verdict(rep);
  return rep;
}

// ---- classify / sample ----------------------------------------------------

Json classify_helix(double k1, double k2, double k3, const std::vector<double>& torsions,
                    const std::string& convention, const ToleranceConfig& tol) {
  if (torsions.size() != 6) throw UsageError("--torsions takes t12,t13,t14,t23,t24,t34");
  Json in = Json::object();
  in["k1"] = k1;
  in["k2"] = k2;
  in["k3"] = k3;
  in["torsions"] = torsions;
  in["convention"] = convention;
  Json rep = make_report("classify helix", in, tol);
  const ClassificationResult r = classify_helix_cp2(
      k1, k2, k3, torsions,
      convention == "table" ? TorsionConvention::kTable : TorsionConvention::kFrenet, tol);
  Json dist = Json::object();
  double best = kInf;
  for (const auto& [label, d] : r.distances) {
    dist[label] = d;
    best = std::min(best, d);
  }
  rep["residuals"]["best_distance"] = best;
  rep["details"]["distances"] = dist;
  rep["verdict"] = rederive_verdict(rep);
  return rep;
}

void sample_curve(const CurveOptions& o, double ds, int count, std::ostream& out) {
  if (count < 1) throw UsageError("--count must be >= 1");
  const CurveFamily family = build_family(o);
  const std::size_t dim = static_cast<std::size_t>(2 * family.n + 2);
  out << "s";
  for (std::size_t k = 1; k <= dim; ++k) out << ",x" << k;
  out << "\n";
  for (int i = 0; i < count; ++i) {
    const double s = i * ds;
    const CurveJet jet = family(s);
    out << fmt(s);
    for (std::size_t k = 0; k < dim; ++k) out << "," << fmt(jet.position()[k]);
    out << "\n";
  }
}

void add_tol(CLI::App* sub, std::optional<double>& tol) {
  sub->add_option("--tol", tol, "Uniform override of every acceptance threshold")
      ->check(CLI::PositiveNumber);
}

void add_curve_options(CLI::App* sub, CurveOptions& o) {
  sub->add_option("--family", o.family, "Curve family")
      ->required()
      ->check(CLI::IsMember({"great-circle", "tau12-pm1", "tau12-zero-circle", "tau12-zero-helix"}));
  sub->add_option("--n", o.n, "Complex dimension of CP^n");
  sub->add_option("--k1", o.k1, "Curvature parameter of tau12-zero-helix");
  sub->add_option("--orientation", o.orientation, "+1 or -1 for tau12-pm1")
      ->check(CLI::IsMember({1, -1}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biharmonic curves and submanifolds in spheres and CP^n", "bihcp"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::optional<double> tol_value;

  auto* solve = app.add_subcommand("solve", "Closed-form solvers");
  solve->require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "Residual checks");
  verify->require_subcommand(1);
  auto* classify = app.add_subcommand("classify", "CP^2 holomorphic helix classes");
  classify->require_subcommand(1);
  auto* sample = app.add_subcommand("sample", "CSV curve samples");
  sample->require_subcommand(1);

  int m1 = 0, m2 = 0;
  auto* s_clifford = solve->add_subcommand("clifford", "(-4)-biharmonic radii of M1 x M2");
  s_clifford->add_option("--m1", m1)->required()->check(CLI::PositiveNumber);
  s_clifford->add_option("--m2", m2)->required()->check(CLI::PositiveNumber);
  add_tol(s_clifford, tol_value);

  int zhang_n = 0;
  auto* s_zhang = solve->add_subcommand("zhang", "Two-block Lagrangian torus radii");
  s_zhang->add_option("--n", zhang_n)->required();
  add_tol(s_zhang, tol_value);

  std::optional<double> alpha0;
  std::optional<int> grid;
  double alpha_min = 0.0;
  double alpha_max = 2.0 * std::numbers::pi;
  std::string branch = "plus";
  auto* s_helix = solve->add_subcommand("helix", "Order-4 biharmonic holomorphic helix");
  s_helix->add_option("--alpha0", alpha0, "Angle in radians");
  s_helix->add_option("--grid", grid, "Number of alpha0 cell midpoints in [alpha-min, alpha-max]");
  s_helix->add_option("--alpha-min", alpha_min);
  s_helix->add_option("--alpha-max", alpha_max);
  s_helix->add_option("--branch", branch)->check(CLI::IsMember({"plus", "minus"}));
  add_tol(s_helix, tol_value);

  int bundle_p = 0;
  std::optional<double> bundle_a2;
  auto* s_bundle = solve->add_subcommand("sphere-bundle", "Tangent sphere bundle of S^{2p+1}(a)");
  s_bundle->add_option("--p", bundle_p)->required();
  s_bundle->add_option("--a2", bundle_a2);
  add_tol(s_bundle, tol_value);

  CurveOptions curve;
  int samples = 100;
  auto* v_curve = verify->add_subcommand("curve", "Bitension of a built-in curve family");
  add_curve_options(v_curve, curve);
  v_curve->add_option("--samples", samples);
  add_tol(v_curve, tol_value);

  std::vector<double> radii;
  std::optional<double> torus_a2;
  std::optional<int> torus_m1, torus_m2, torus_p, torus_q;
  auto* v_torus = verify->add_subcommand("torus", "Lagrangian torus or Clifford product");
  v_torus->add_option("--radii", radii)->delimiter(',');
  v_torus->add_option("--a2", torus_a2);
  v_torus->add_option("--m1", torus_m1);
  v_torus->add_option("--m2", torus_m2);
  v_torus->add_option("--p", torus_p);
  v_torus->add_option("--q", torus_q);
  add_tol(v_torus, tol_value);

  int hyp_n = 0;
  double h2 = 0.0, b2 = 0.0, hyp_c = 1.0;
  std::optional<int> mbar;
  auto* v_hyp = verify->add_subcommand("hypersurface", "Hypersurface predicates in CP^n");
  v_hyp->add_option("--n", hyp_n)->required();
  v_hyp->add_option("--h2", h2, "|H|^2")->required();
  v_hyp->add_option("--b2", b2, "|B|^2")->required();
  v_hyp->add_option("--c", hyp_c, "Holomorphic sectional curvature / 4");
  v_hyp->add_option("--mbar", mbar);
  add_tol(v_hyp, tol_value);

  double k1 = 0.0, k2 = 0.0, k3 = 0.0;
  std::vector<double> torsions;
  std::string convention = "frenet";
  auto* c_helix = classify->add_subcommand("helix", "Match torsions against I1..I4, I3', I4'");
  c_helix->add_option("--k1", k1)->required();
  c_helix->add_option("--k2", k2)->required();
  c_helix->add_option("--k3", k3)->required();
  c_helix->add_option("--torsions", torsions, "t12,t13,t14,t23,t24,t34")
      ->required()
      ->delimiter(',');
  c_helix->add_option("--convention", convention)->check(CLI::IsMember({"frenet", "table"}));
  add_tol(c_helix, tol_value);

  CurveOptions sample_opts;
  double ds = 0.01;
  int count = 100;
  auto* sm_curve = sample->add_subcommand("curve", "Positions as CSV");
  add_curve_options(sm_curve, sample_opts);
  sm_curve->add_option("--ds", ds)->required();
  sm_curve->add_option("--count", count)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "bihcp: " << e.what() << "\n";
    return kExitUsage;
  }

  const ToleranceConfig tol = tol_value ? ToleranceConfig::uniform(*tol_value) : ToleranceConfig{};
  try {
    Json rep;
    if (s_clifford->parsed()) {
      rep = solve_clifford(m1, m2, tol);
    } else if (s_zhang->parsed()) {
      rep = solve_zhang(zhang_n, tol);
    } else if (s_helix->parsed()) {
      rep = solve_helix(alpha0, grid, alpha_min, alpha_max, branch, tol);
    } else if (s_bundle->parsed()) {
      rep = solve_sphere_bundle(bundle_p, bundle_a2, tol);
    } else if (v_curve->parsed()) {
      rep = verify_curve(curve, samples, tol);
    } else if (v_torus->parsed()) {
      rep = verify_torus(radii, torus_a2, torus_m1, torus_m2, torus_p, torus_q, tol);
    } else if (v_hyp->parsed()) {
      rep = verify_hypersurface(hyp_n, h2, b2, hyp_c, mbar, tol);
    } else if (c_helix->parsed()) {
      rep = classify_helix(k1, k2, k3, torsions, convention, tol);
    } else if (sm_curve->parsed()) {
      sample_curve(sample_opts, ds, count, out);
      return kExitOk;
    }
    out << render_json(rep);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "bihcp: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "bihcp: " << e.what() << "\n";
    return kExitDomain;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"bihcp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bihcp::cli
