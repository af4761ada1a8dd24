#include "bihcp/biharmonic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <numeric>

#include "bihcp/errors.hpp"

namespace bihcp {

namespace {

double euclidean(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

BitensionResidual frame_residual(std::vector<double> value, std::string note) {
  BitensionResidual r;
  r.norm = euclidean(value);
  r.value = std::move(value);
  r.convention_note = std::move(note);
  return r;
}

BitensionResidual ambient_residual(const AmbientVector& v, std::string note) {
  BitensionResidual r;
  r.value.assign(v.coords().begin(), v.coords().end());
  r.norm = v.norm();
  r.ambient = true;
  r.convention_note = std::move(note);
  return r;
}

std::vector<double> sphere_coefficients(const FrenetApparatus& a) {
  if (a.d > 4 && a.curvature(4) != 0.0) {
    throw UnsupportedOrderError("bitension in Frenet form is implemented for d <= 4, got d = " +
                                std::to_string(a.d));
  }
  if (!a.curvature_derivs) {
    throw StructuralError("apparatus carries no curvature derivatives");
  }
  const auto& cd = *a.curvature_derivs;
  const double k1 = a.curvature(1);
  const double k2 = a.curvature(2);
  const double k3 = a.curvature(3);
  const double k1p = a.d >= 2 ? cd.k1_prime : 0.0;
  const double k1pp = a.d >= 2 ? cd.k1_second : 0.0;
  const double k2p = a.d >= 3 ? cd.k2_prime : 0.0;
  return {-3.0 * k1 * k1p, k1pp - k1 * k1 * k1 - k1 * k2 * k2 + k1, 2.0 * k1p * k2 + k1 * k2p,
          k1 * k2 * k3};
}

}  // namespace

std::vector<double> tension_coefficients(const FrenetApparatus& apparatus, std::size_t length) {
  if (length < 2) throw StructuralError("tension needs at least two frame slots");
  std::vector<double> t(length, 0.0);
  t[1] = apparatus.curvature(1);
  return t;
}

BitensionResidual sphere_curve_bitension(const FrenetApparatus& apparatus) {
  return frame_residual(sphere_coefficients(apparatus),
                        std::string(kLaplacianConvention) + "; unit sphere, coefficients on E1..E4");
}

BitensionResidual cpn_curve_bitension(const FrenetApparatus& apparatus,
                                      const std::vector<double>& jE1,
                                      const ToleranceConfig& tol) {
  if (jE1.size() != static_cast<std::size_t>(apparatus.d)) {
    throw StructuralError("J E_1 expansion has " + std::to_string(jE1.size()) +
                          " coefficients for a frame of order " + std::to_string(apparatus.d));
  }
  const double jnorm = euclidean(jE1);
  if (jnorm > 1.0 + tol.unit_norm) {
    throw DomainError("J E_1 expansion has norm above 1", jnorm - 1.0);
  }
  const double tau12 = apparatus.torsion(1, 2);
  if (apparatus.d >= 2 && std::abs(tau12 + jE1[1]) > tol.residual) {
    throw DomainError("J E_1 expansion disagrees with tau_12 = <E_1, J E_2>", tau12 + jE1[1]);
  }

  std::vector<double> c = sphere_coefficients(apparatus);
  const double k1 = apparatus.curvature(1);
  for (std::size_t i = 0; i < jE1.size() && i < c.size(); ++i) c[i] -= 3.0 * k1 * tau12 * jE1[i];
  const double outside = std::sqrt(std::max(0.0, 1.0 - jnorm * jnorm));
  c.push_back(3.0 * k1 * std::abs(tau12) * (jnorm > 1.0 - tol.unit_norm ? 0.0 : outside));
  return frame_residual(std::move(c),
                        std::string(kLaplacianConvention) +
                            "; CP^n with holomorphic sectional curvature 4, coefficients on "
                            "E1..E4 then the J E1 part outside the frame");
}

BitensionResidual lambda_biharmonic_residual(const BitensionResidual& tau2,
                                             const std::vector<double>& tau, double lambda) {
  if (tau.size() != tau2.value.size()) {
    throw StructuralError("tau has " + std::to_string(tau.size()) + " slots, tau_2 has " +
                          std::to_string(tau2.value.size()));
  }
  std::vector<double> v(tau2.value);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= lambda * tau[i];
  BitensionResidual r = frame_residual(std::move(v), tau2.convention_note);
  r.ambient = tau2.ambient;
  r.lambda = lambda;
  return r;
}

BitensionResidual extrinsic_sphere_bitension(const CurveJet& jet) {
  const auto v = iterated_covariant_derivatives(jet, 4);
  return ambient_residual(v[3] + v[1], std::string(kLaplacianConvention) +
                                           "; ambient coordinates, tau_2 = V4 + V2");
}

BitensionResidual hopf_relation_check(const CurveFamily& family, double s,
                                      const ToleranceConfig& tol) {
  const CurveJet jet = family(s);
  validate_jet(jet, tol);
  const SpherePoint p(jet.position(), tol);
  const double defect = horizontality_defect(p, jet.velocity(), tol);
  if (std::abs(defect) > tol.vertical_detection) {
    throw DomainError("curve is not horizontal with respect to the Hopf map", defect);
  }

  auto f_at = [&](double t) {
    const CurveJet j = family(t);
    const auto v = iterated_covariant_derivatives(j, 2);
    return dot(j_apply(v[1]), v[0]);
  };

  const auto v = iterated_covariant_derivatives(jet, 4);
  const AmbientVector& e1 = v[0];
  const AmbientVector& tau = v[1];
  const AmbientVector tau2 = v[3] + v[1];
  const AmbientVector xi = hopf_vector_field(p);
  const AmbientVector jtau = j_apply(tau);
  const double f = dot(jtau, e1);
  const AmbientVector tangential = f * e1 + dot(jtau, xi) * xi;

  const double h = tol.fd_step;
  const double f_prime =
      (f_at(s - 2 * h) - 8.0 * f_at(s - h) + 8.0 * f_at(s + h) - f_at(s + 2 * h)) / (12.0 * h);

  const AmbientVector rhs = tau2 - 4.0 * j_apply(tangential) + (2.0 * f_prime) * xi;
  return ambient_residual(rhs, std::string(kLaplacianConvention) +
                                   "; tau_2 - 4 J (J tau)^T + 2 div((J tau)^T) xi");
}

double quartic_ode_residual(const CurveJet& jet) {
  return (jet.derivs.at(4) + 6.0 * jet.derivs.at(2) + jet.derivs.at(0)).norm();
}

}  // namespace bihcp
