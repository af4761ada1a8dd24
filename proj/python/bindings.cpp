#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bihcp/ambient.hpp"
#include "bihcp/biharmonic.hpp"
#include "bihcp/cli.hpp"
#include "bihcp/clifford.hpp"
#include "bihcp/curves.hpp"
#include "bihcp/errors.hpp"
#include "bihcp/families.hpp"

namespace py = pybind11;
using namespace bihcp;

namespace {

std::vector<double> coords(const AmbientVector& v) { return {v.coords().begin(), v.coords().end()}; }

CurveFamily family_by_name(const std::string& name, int n, double k1, int orientation) {
  if (name == "great-circle") return great_circle(n > 0 ? n : 1);
  if (name == "tau12-pm1") return lift_curve_tau12_pm1(n > 0 ? n : 1, orientation);
  if (name == "tau12-zero-circle") return lift_curve_tau12_zero(Tau12ZeroKind::kCircle, 0.0, n);
  if (name == "tau12-zero-helix") return lift_curve_tau12_zero(Tau12ZeroKind::kHelix, k1, n);
  throw DomainError("unknown curve family '" + name + "'");
}

py::dict apparatus_dict(const FrenetApparatus& a) {
  py::dict d;
  d["d"] = a.d;
  d["curvatures"] = a.curvatures;
  std::vector<std::vector<double>> t(static_cast<std::size_t>(a.d), std::vector<double>(a.d));
  for (int i = 0; i < a.d; ++i)
    for (int j = 0; j < a.d; ++j) t[i][j] = a.torsion(i + 1, j + 1);
  d["torsions"] = t;
  std::vector<std::vector<double>> frames;
  for (const auto& e : a.frames) frames.push_back(coords(e));
  d["frames"] = frames;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Biharmonic curves and submanifolds in spheres and CP^n";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());

  m.def("j_apply", [](const std::vector<double>& v) { return coords(j_apply(AmbientVector(v))); });
  m.def("hopf_vector_field", [](const std::vector<double>& p) {
    return coords(hopf_vector_field(SpherePoint(AmbientVector(p))));
  });

  m.def(
      "curve_position",
      [](const std::string& family, double s, int n, double k1, int orientation) {
        return coords(family_by_name(family, n, k1, orientation)(s).position());
      },
      py::arg("family"), py::arg("s"), py::arg("n") = 0, py::arg("k1") = 0.5,
      py::arg("orientation") = 1);

  m.def(
      "frenet",
      [](const std::string& family, double s, int n, double k1, int orientation) {
        const CurveFamily f = family_by_name(family, n, k1, orientation);
        return apparatus_dict(frenet_apparatus(f, s, 2 * f.n + 1));
      },
      py::arg("family"), py::arg("s"), py::arg("n") = 0, py::arg("k1") = 0.5,
      py::arg("orientation") = 1);

  m.def(
      "curve_residuals",
      [](const std::string& family, double s, int n, double k1, int orientation) {
        const CurveFamily f = family_by_name(family, n, k1, orientation);
        const FrenetApparatus a = frenet_apparatus(f, s, 2 * f.n + 1);
        const BitensionResidual tau2 = sphere_curve_bitension(a);
        py::dict d;
        d["bitension"] = tau2.norm;
        d["minus4"] = lambda_biharmonic_residual(tau2, tension_coefficients(a), -4.0).norm;
        d["quartic_ode"] = quartic_ode_residual(f(s));
        d["hopf_relation"] = hopf_relation_check(f, s).norm;
        return d;
      },
      py::arg("family"), py::arg("s"), py::arg("n") = 0, py::arg("k1") = 0.5,
      py::arg("orientation") = 1);

  m.def("clifford_minus4_solve", [](int m1, int m2) { return clifford_minus4_solve(m1, m2); },
        py::arg("m1"), py::arg("m2"));
  m.def(
      "clifford_tension_bitension",
      [](double a2, int m1, int m2, int p, int q) {
        const auto tb = clifford_tension_bitension(ProductSphereConfig::from_a2(p, q, a2, m1, m2));
        return std::make_pair(tb.tension, tb.bitension);
      },
      py::arg("a2"), py::arg("m1"), py::arg("m2"), py::arg("p"), py::arg("q"));

  m.def("zhang_residual", [](const std::vector<double>& radii) {
    const ZhangResidual r = zhang_residual({radii});
    return py::make_tuple(r.r, r.minimal);
  });
  m.def("zhang_solve_two_block", [](int n) {
    std::vector<std::vector<double>> out;
    for (const auto& s : zhang_solve_two_block(n)) out.push_back(s.radii);
    return out;
  });
  m.def(
      "torus_extrinsic_oracle",
      [](const std::vector<double>& radii, double lambda) {
        return torus_extrinsic_oracle({radii}, lambda);
      },
      py::arg("radii"), py::arg("lambda_") = -4.0);

  m.def(
      "solve_order4_helix",
      [](double alpha0, const std::string& branch) {
        const HelixSolution h =
            solve_order4_helix(alpha0, branch == "minus" ? Branch::kMinus : Branch::kPlus);
        py::dict d;
        d["k1"] = h.k1;
        d["k2"] = h.k2;
        d["k3"] = h.k3;
        d["torsions"] = h.torsions();
        d["class"] = h.class_label;
        d["cpn_bitension"] = cpn_curve_bitension(helix_apparatus(h), helix_jE1(h)).norm;
        return d;
      },
      py::arg("alpha0"), py::arg("branch") = "plus");
  m.def(
      "classify_helix_cp2",
      [](double k1, double k2, double k3, const std::vector<double>& torsions,
         const std::string& convention) {
        return classify_helix_cp2(k1, k2, k3, torsions,
                                  convention == "table" ? TorsionConvention::kTable
                                                        : TorsionConvention::kFrenet)
            .label;
      },
      py::arg("k1"), py::arg("k2"), py::arg("k3"), py::arg("torsions"),
      py::arg("convention") = "frenet");

  m.def("sphere_bundle_minus4_roots", &sphere_bundle_minus4_roots, py::arg("p"));
  m.def(
      "sphere_bundle_analyze",
      [](int p, double a2) {
        const SphereBundleReport r = sphere_bundle_analyze(p, a2);
        py::dict d;
        d["mean_curvature"] = r.mean_curvature;
        d["biharmonic_residual"] = r.biharmonic_residual;
        d["minus4_residual"] = r.minus4_residual;
        d["proper_biharmonic_in_sphere"] = r.proper_biharmonic_in_sphere;
        d["projection_proper_biharmonic"] = r.projection_proper_biharmonic;
        return d;
      },
      py::arg("p"), py::arg("a2"));

  m.def(
      "hypersurface_predicates",
      [](int n, double h2, double b2, double c) {
        const HypersurfaceVerdict v = hypersurface_predicates({n, h2, b2, c, std::nullopt});
        py::dict d;
        d["proper_biharmonic"] = v.proper_biharmonic;
        d["scalar_curvature"] = v.scalar_curvature;
        d["tangent_bound_ok"] = v.tangent_bound_ok;
        d["normal_bound_ok"] = v.normal_bound_ok;
        d["nonexistence"] = v.nonexistence;
        return d;
      },
      py::arg("n"), py::arg("h2"), py::arg("b2"), py::arg("c") = 1.0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
