#pragma once

#include <string>
#include <vector>

#include "bihcp/ambient.hpp"
#include "bihcp/curves.hpp"
#include "bihcp/tolerance.hpp"

namespace bihcp {

/// tau_2 or tau_2 - lambda tau. `value` holds Frenet-frame coefficients, or
/// ambient coordinates when `ambient` is set. `norm` is the Euclidean norm of
/// `value` in both cases.
struct BitensionResidual {
  std::vector<double> value;
  double norm = 0.0;
  double lambda = 0.0;
  bool ambient = false;
  std::string convention_note;
};

/// Rough Laplacian sign used by every residual in this library.
inline constexpr const char* kLaplacianConvention =
    "Delta = -trace nabla^2; tau_2 = -Delta tau - trace R(d phi, tau) d phi";

/// Tension k_1 E_2 as frame coefficients of length `length` (>= 2).
std::vector<double> tension_coefficients(const FrenetApparatus& apparatus,
                                         std::size_t length = 4);

/// Bitension of a unit-speed curve in the unit sphere, coefficients on
/// E_1..E_4. Needs curvature derivatives; d > 4 is unsupported.
BitensionResidual sphere_curve_bitension(const FrenetApparatus& apparatus);

/// Bitension of a curve in CP^n (holomorphic sectional curvature 4) from its
/// downstairs apparatus. `jE1` is J E_1 expanded in E_1..E_d. The result has
/// five slots: E_1..E_4 and the size of the part of the J E_1 term that lies
/// outside the frame.
BitensionResidual cpn_curve_bitension(const FrenetApparatus& apparatus,
                                      const std::vector<double>& jE1,
                                      const ToleranceConfig& tol = {});

/// tau_2 - lambda tau over matching coefficient lists.
BitensionResidual lambda_biharmonic_residual(const BitensionResidual& tau2,
                                             const std::vector<double>& tau, double lambda);

/// tau_2 = nabla nabla tau + tau of a sphere curve assembled directly from
/// the jet (ambient coordinates), independent of the Frenet apparatus.
BitensionResidual extrinsic_sphere_bitension(const CurveJet& jet);

/// Right-hand side of the Hopf-lift relation for the tube over a curve whose
/// horizontal lift is `family`:
///   tau_2 - 4 J (J tau)^T + 2 div((J tau)^T) xi,
/// with ^T the projection on span{E_1, xi}. The divergence reduces to
/// d/ds <J tau, E_1>, taken by a 5-point central difference with
/// `tol.fd_step`. Ambient coordinates.
BitensionResidual hopf_relation_check(const CurveFamily& family, double s,
                                      const ToleranceConfig& tol = {});

/// |gamma'''' + 6 gamma'' + gamma|.
double quartic_ode_residual(const CurveJet& jet);

}  // namespace bihcp
