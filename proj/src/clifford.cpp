#include "bihcp/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "bihcp/ambient.hpp"
#include "bihcp/errors.hpp"
#include "bihcp/roots.hpp"

namespace bihcp {

namespace {

void require_positive_dims(int m1, int m2) {
  if (m1 < 1 || m2 < 1) {
    throw DomainError("submanifold dimensions must be >= 1", std::min(m1, m2));
  }
}

double clifford_tension_at(int m1, int m2, double t) {
  const double a = std::sqrt(t);
  const double b = std::sqrt(1.0 - t);
  return (a / b) * m2 - (b / a) * m1;
}

double sphere_bundle_biharmonic_residual(int p, double a2) {
  const double r = a2 / (1.0 - a2);
  return -1.0 - 2.0 * p * (r + 1.0 / r) + (4.0 * p + 1.0);
}

}  // namespace

ProductSphereConfig ProductSphereConfig::from_a2(int p, int q, double a2, int m1, int m2) {
  if (!(a2 > 0.0 && a2 < 1.0)) throw DomainError("a^2 must lie in (0, 1)", a2);
  return {p, q, std::sqrt(a2), std::sqrt(1.0 - a2), m1, m2};
}

void ProductSphereConfig::validate(const ToleranceConfig&) const {
  if (p < 0 || q < 0) throw DomainError("factor dimensions p, q must be >= 0", std::min(p, q));
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("radii must be positive", std::min(a, b));
  const double defect = a * a + b * b - 1.0;
  if (std::abs(defect) > 1e-12) throw DomainError("a^2 + b^2 must equal 1", defect);
  if (m1 < 1 || m1 > 2 * p + 1) throw DomainError("m1 must lie in 1..2p+1", m1);
  if (m2 < 1 || m2 > 2 * q + 1) throw DomainError("m2 must lie in 1..2q+1", m2);
}

TensionBitension clifford_tension_bitension(const ProductSphereConfig& cfg,
                                            const ToleranceConfig& tol) {
  cfg.validate(tol);
  const double a2 = cfg.a * cfg.a;
  const double b2 = cfg.b * cfg.b;
  TensionBitension out;
  out.tension = (cfg.a / cfg.b) * cfg.m2 - (cfg.b / cfg.a) * cfg.m1;
  out.bitension = out.tension * (cfg.m1 + cfg.m2 - (b2 / a2) * cfg.m1 - (a2 / b2) * cfg.m2);
  return out;
}

double clifford_minus4_condition(int m1, int m2, double t) {
  const double r = t / (1.0 - t);
  return m1 / r + r * m2 - 4.0 - m1 - m2;
}

const char* to_string(RootStatus s) {
  switch (s) {
    case RootStatus::kAdmissible:
      return "admissible";
    case RootStatus::kExcludedMinimal:
      return "excluded-minimal";
    case RootStatus::kOutOfRange:
      return "out-of-range";
  }
  return "unknown";
}

RootStatus clifford_root_status(int m1, int m2, double t, const ToleranceConfig& tol) {
  require_positive_dims(m1, m2);
  if (!(t > 0.0 && t < 1.0)) return RootStatus::kOutOfRange;
  if (std::abs(clifford_tension_at(m1, m2, t)) <= tol.minimality) {
    return RootStatus::kExcludedMinimal;
  }
  return RootStatus::kAdmissible;
}

std::vector<CliffordRoot> clifford_minus4_candidates(int m1, int m2, const ToleranceConfig& tol) {
  require_positive_dims(m1, m2);
  const double qa = 2.0 * m1 + 2.0 * m2 + 4.0;
  const double qb = -(3.0 * m1 + m2 + 4.0);
  const double qc = m1;
  std::vector<CliffordRoot> out;
  for (double t : quadratic_roots(qa, qb, qc)) {
    // One Newton step on the quadratic removes the last ulp or two.
    const double slope = 2.0 * qa * t + qb;
    if (slope != 0.0) t -= ((qa * t + qb) * t + qc) / slope;
    CliffordRoot r;
    r.a2 = t;
    r.quadratic_residual = (qa * t + qb) * t + qc;
    r.status = clifford_root_status(m1, m2, t, tol);
    if (r.status != RootStatus::kOutOfRange) {
      r.tension = clifford_tension_at(m1, m2, t);
      r.condition_residual = clifford_minus4_condition(m1, m2, t);
    }
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(),
            [](const CliffordRoot& x, const CliffordRoot& y) { return x.a2 > y.a2; });
  return out;
}

std::vector<double> clifford_minus4_solve(int m1, int m2, const ToleranceConfig& tol) {
  std::vector<double> out;
  for (const auto& r : clifford_minus4_candidates(m1, m2, tol)) {
    if (r.status == RootStatus::kAdmissible && std::abs(r.condition_residual) <= 1e-12) {
      out.push_back(r.a2);
    }
  }
  return out;
}

SphereBundleReport sphere_bundle_analyze(int p, double a2, const ToleranceConfig& tol,
                                         bool frame_checks) {
  if (p < 1) throw DomainError("sphere bundle needs p >= 1", p);
  if (!(a2 > 0.0 && a2 < 1.0)) throw DomainError("a^2 must lie in (0, 1)", a2);

  SphereBundleReport rep;
  rep.p = p;
  rep.a2 = a2;
  rep.b2 = 1.0 - a2;
  const double dim = 4.0 * p + 1.0;
  rep.mean_curvature = (2.0 * p / dim) * (a2 - rep.b2) / a2;
  rep.tension = dim * rep.mean_curvature;
  rep.biharmonic_residual = sphere_bundle_biharmonic_residual(p, a2);
  rep.minus4_residual = rep.biharmonic_residual + 4.0;
  rep.minimal_in_sphere = std::abs(rep.tension) <= tol.minimality;
  rep.proper_biharmonic_in_sphere =
      !rep.minimal_in_sphere && std::abs(rep.biharmonic_residual) <= tol.residual;
  rep.minus4_biharmonic = !rep.minimal_in_sphere && std::abs(rep.minus4_residual) <= tol.residual;

  // Explicit frame at x0 = a u0, y0 = b (cos th u2 + sin th J u0) in
  // R^{4p+4} = C^{p+1} x C^{p+1}.
  const int half = 2 * p + 2;
  const double a = std::sqrt(a2);
  const double b = std::sqrt(rep.b2);
  auto concat = [&](const AmbientVector& x, const AmbientVector& y) {
    std::vector<double> v(x.coords().begin(), x.coords().end());
    v.insert(v.end(), y.coords().begin(), y.coords().end());
    return AmbientVector(std::move(v));
  };
  auto first = [&](const AmbientVector& v) {
    return AmbientVector(std::vector<double>(v.coords().begin(), v.coords().begin() + half));
  };
  auto second = [&](const AmbientVector& v) {
    return AmbientVector(std::vector<double>(v.coords().begin() + half, v.coords().end()));
  };
  const AmbientVector zero(p);

  for (double theta : {0.0, std::numbers::pi / 4.0, std::numbers::pi / 2.0}) {
    const AmbientVector u0 = AmbientVector::basis(p, 0);
    const AmbientVector u2 = AmbientVector::basis(p, 2);
    const AmbientVector x0 = a * u0;
    const AmbientVector y0 = b * (std::cos(theta) * u2 + std::sin(theta) * j_apply(u0));

    const AmbientVector eta1 = concat(y0, x0);
    const AmbientVector eta2 = concat(x0, (-a2 / rep.b2) * y0);
    const AmbientVector pos = concat(x0, y0);

    if (frame_checks) {
      // Unit vectors of R^{2p+2} orthogonal to x0 and y0.
      std::vector<AmbientVector> ys;
      for (std::size_t k = 0; k < static_cast<std::size_t>(half) && ys.size() < 2u * p; ++k) {
        AmbientVector v = AmbientVector::basis(p, k);
        for (int sweep = 0; sweep < 2; ++sweep) {
          v -= (dot(v, x0) / a2) * x0;
          v -= (dot(v, y0) / rep.b2) * y0;
          for (const auto& e : ys) v -= dot(v, e) * e;
        }
        if (v.norm() > 1e-6) ys.push_back((1.0 / v.norm()) * v);
      }

      std::vector<AmbientVector> frame;
      frame.push_back((a / b) * concat(y0, (-rep.b2 / a2) * x0));
      for (const auto& y : ys) frame.push_back(concat(y, zero));
      for (const auto& y : ys) frame.push_back(concat(zero, y));

      double ortho = 0.0;
      for (std::size_t i = 0; i < frame.size(); ++i) {
        for (std::size_t j = i; j < frame.size(); ++j) {
          ortho = std::max(ortho, std::abs(dot(frame[i], frame[j]) - (i == j ? 1.0 : 0.0)));
        }
        ortho = std::max(ortho, std::abs(dot(frame[i], eta1)));
        ortho = std::max(ortho, std::abs(dot(frame[i], eta2)));
        ortho = std::max(ortho, std::abs(dot(frame[i], pos)));
      }
      rep.frame_orthonormality_defect = std::max(rep.frame_orthonormality_defect, ortho);

      // Second fundamental form on eta_1, eta_2 coefficients.
      double tr1 = 0.0;
      double tr2 = 0.0;
      for (const auto& z : frame) {
        const AmbientVector x = first(z);
        const AmbientVector y = second(z);
        tr1 += -2.0 * dot(x, y);
        tr2 += -(rep.b2 / a2) * (dot(x, x) - (a2 / rep.b2) * dot(y, y));
      }
      rep.frame_eta1_trace = std::max(rep.frame_eta1_trace, std::abs(tr1));
      rep.frame_mean_curvature_defect =
          std::max(rep.frame_mean_curvature_defect, std::abs(tr2 / dim - rep.mean_curvature));
    }

    // CP^n side: tau_2 - 4 J (J tau)^T, with the xi component (which carries
    // the divergence term) removed.
    const AmbientVector xi = -1.0 * j_apply(pos);
    const AmbientVector jeta2 = j_apply(eta2);
    AmbientVector tangential(jeta2);
    for (const AmbientVector& nvec : {concat(x0, zero), concat(zero, y0), eta1}) {
      tangential -= (dot(tangential, nvec) / dot(nvec, nvec)) * nvec;
    }
    AmbientVector rhs = rep.tension * (rep.biharmonic_residual * eta2 - 4.0 * j_apply(tangential));
    rhs -= dot(rhs, xi) * xi;
    rep.projection_residuals.push_back(rhs.norm());
  }
  rep.minimal_in_clifford_torus = frame_checks && rep.frame_eta1_trace <= tol.residual;
  const double worst =
      *std::max_element(rep.projection_residuals.begin(), rep.projection_residuals.end());
  rep.projection_proper_biharmonic = !rep.minimal_in_sphere && worst <= tol.residual;
  return rep;
}

std::vector<double> sphere_bundle_minus4_roots(int p) {
  if (p < 1) throw DomainError("sphere bundle needs p >= 1", p);
  auto f = [p](double t) { return sphere_bundle_biharmonic_residual(p, t) + 4.0; };
  auto df = [p](double t) {
    return -2.0 * p * (1.0 / ((1.0 - t) * (1.0 - t)) - 1.0 / (t * t));
  };
  return bracketed_roots(f, df, 0.0, 1.0);
}

void LagrangianTorusSpec::validate(const ToleranceConfig&) const {
  if (radii.size() < 2) throw StructuralError("a torus spec needs at least two radii");
  double sum = 0.0;
  for (double a : radii) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("radii must be positive", a);
    sum += a * a;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw DomainError("sum of a_k^2 must equal 1", sum - 1.0);
}

ZhangResidual zhang_residual(const LagrangianTorusSpec& spec, const ToleranceConfig& tol) {
  spec.validate(tol);
  const int n = spec.n();
  double d = 0.0;
  for (double a : spec.radii) d += 1.0 / (a * a);
  ZhangResidual out;
  out.minimal = true;
  for (double a : spec.radii) {
    out.r.push_back(d * a - 1.0 / (a * a * a) -
                    (2.0 / a) * (n + 3.0) * ((n + 1.0) * a * a - 1.0));
    if (std::abs(a * a - 1.0 / (n + 1.0)) > tol.minimality) out.minimal = false;
  }
  out.norm = std::sqrt(std::inner_product(out.r.begin(), out.r.end(), out.r.begin(), 0.0));
  return out;
}

double zhang_two_block_polynomial(int n, double t) {
  const double c3 = 2.0 * (n + 3.0) * (n + 1.0);
  const double c2 = (n * n - 1.0) - 2.0 * (n + 3.0) * (n + 2.0);
  const double c1 = 2.0 * (n + 4.0);
  return ((c3 * t + c2) * t + c1) * t - 1.0;
}

std::vector<LagrangianTorusSpec> zhang_solve_two_block(int n, const ToleranceConfig& tol) {
  if (n < 2) throw DomainError("two-block ansatz needs n >= 2", n);
  const double c3 = 2.0 * (n + 3.0) * (n + 1.0);
  const double c2 = (n * n - 1.0) - 2.0 * (n + 3.0) * (n + 2.0);
  const double c1 = 2.0 * (n + 4.0);
  auto f = [n](double t) { return zhang_two_block_polynomial(n, t); };
  auto df = [&](double t) { return (3.0 * c3 * t + 2.0 * c2) * t + c1; };

  std::vector<LagrangianTorusSpec> out;
  for (double t : bracketed_roots(f, df, 0.0, 1.0)) {
    LagrangianTorusSpec spec;
    spec.radii.push_back(std::sqrt(t));
    spec.radii.insert(spec.radii.end(), static_cast<std::size_t>(n), std::sqrt((1.0 - t) / n));
    const ZhangResidual r = zhang_residual(spec, tol);
    if (!r.minimal && r.norm <= 1e-10) out.push_back(std::move(spec));
  }
  return out;
}

double torus_extrinsic_oracle(const LagrangianTorusSpec& spec, double lambda,
                              const ToleranceConfig& tol) {
  spec.validate(tol);
  const int n = spec.n();
  // Base point x = sum a_k eta_k with eta_k the real direction of the k-th
  // complex coordinate; X_k = J eta_k spans the tangent space.
  AmbientVector x(n);
  std::vector<AmbientVector> eta;
  for (int k = 0; k <= n; ++k) {
    eta.push_back(AmbientVector::basis(n, static_cast<std::size_t>(2 * k)));
    x += spec.radii[k] * eta.back();
  }
  std::vector<AmbientVector> bkk;
  AmbientVector tau(n);
  for (int k = 0; k <= n; ++k) {
    bkk.push_back((-1.0 / spec.radii[k]) * eta[k] + x);
    tau += bkk.back();
  }
  // Normal connection of the torus in the sphere is flat and tau has
  // constant coefficients, so the rough normal Laplacian term drops out.
  AmbientVector tau2 = (n + 1.0) * tau;
  for (int k = 0; k <= n; ++k) tau2 -= dot(bkk[k], tau) * bkk[k];
  return (tau2 - lambda * tau).norm();
}

HypersurfaceVerdict hypersurface_predicates(const HypersurfaceData& data,
                                            const ToleranceConfig& tol) {
  if (data.n < 1) throw DomainError("n must be >= 1", data.n);
  if (!(data.mean_curvature_sq >= 0.0)) {
    throw DomainError("|H|^2 must be nonnegative", data.mean_curvature_sq);
  }
  if (!(data.second_ff_norm_sq >= 0.0)) {
    throw DomainError("|B|^2 must be nonnegative", data.second_ff_norm_sq);
  }
  const int n = data.n;
  const int mbar = data.mbar.value_or(2 * n - 1);
  if (mbar < 1) throw DomainError("mbar must be >= 1", mbar);
  const double h2 = data.mean_curvature_sq;
  const double b2 = data.second_ff_norm_sq;
  const double m2n = (2.0 * n - 1.0) * (2.0 * n - 1.0);

  HypersurfaceVerdict v;
  v.mbar = mbar;
  v.second_ff_defect = b2 - 2.0 * data.c * (n + 1.0);
  v.proper_biharmonic = std::abs(v.second_ff_defect) <= tol.residual && h2 > 0.0;
  v.scalar_curvature = 4.0 * n * n - 2.0 * n - 4.0 + m2n * h2;
  v.gauss_scalar_curvature = data.c * (4.0 * n * n - 4.0) + m2n * h2 - b2;
  v.tangent_bound = (mbar + 3.0) / mbar;
  v.tangent_bound_ok = h2 <= v.tangent_bound;
  v.normal_bound_ok = h2 <= 1.0;
  v.nonexistence = data.c <= 0.0;

  if (v.nonexistence) {
    v.notes.push_back("c <= 0: |B|^2 = 2c(n+1) <= 0 forces B = 0, no proper-biharmonic "
                      "hypersurface exists");
  }
  if (data.c != 1.0) {
    v.notes.push_back("scalar_curvature uses the c = 1 closed form");
  }
  if (v.proper_biharmonic &&
      std::abs(v.scalar_curvature - v.gauss_scalar_curvature) > tol.residual) {
    v.notes.push_back("closed-form scalar curvature differs from the Gauss-equation trace by " +
                      std::to_string(v.scalar_curvature - v.gauss_scalar_curvature));
  }
  return v;
}

}  // namespace bihcp
