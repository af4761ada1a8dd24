#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihcp/ambient.hpp"
#include "bihcp/tolerance.hpp"

namespace bihcp {

/// Arc-length curve on S^{2n+1} evaluated at s, with derivatives
/// gamma, gamma', ..., gamma^(5).
struct CurveJet {
  static constexpr int kOrder = 5;

  double s = 0.0;
  std::vector<AmbientVector> derivs;  // size kOrder + 1

  const AmbientVector& position() const { return derivs.at(0); }
  const AmbientVector& velocity() const { return derivs.at(1); }
  int n() const { return derivs.at(0).n(); }
};

/// Throws DataError on non-finite entries and DomainError when the jet is
/// off the sphere, not unit speed, or has <gamma, gamma'> != 0.
void validate_jet(const CurveJet& jet, const ToleranceConfig& tol = {});

/// A curve given by an evaluator. Evaluators are stateless and may be called
/// concurrently.
struct CurveFamily {
  std::function<CurveJet(double)> evaluator;
  std::string label;
  std::vector<std::pair<std::string, double>> params;
  int n = 1;

  CurveJet operator()(double s) const { return evaluator(s); }
};

/// One summand cos(w s) c + sin(w s) d of a trigonometric curve.
struct TrigTerm {
  double frequency;
  AmbientVector cos_coeff;
  AmbientVector sin_coeff;
};

/// gamma(s) = constant + sum_k cos(w_k s) c_k + sin(w_k s) d_k with closed-form
/// derivatives. Every explicit family in the library is of this shape.
CurveFamily trig_curve(std::string label, AmbientVector constant, std::vector<TrigTerm> terms,
                       std::vector<std::pair<std::string, double>> params = {});

/// Curve known only through positions. Derivatives of order 1..4 use 5-point
/// central stencils with step h, order 5 the 7-point stencil.
CurveFamily sampled_curve(std::string label, int n,
                          std::function<AmbientVector(double)> position, double h);

/// Levi-Civita derivative on the unit sphere of a field along the curve:
/// field_derivative + <field_value, gamma'> gamma. The field must be tangent to
/// the sphere at gamma(s).
AmbientVector sphere_covariant_derivative(const CurveJet& jet, const AmbientVector& field_value,
                                          const AmbientVector& field_derivative,
                                          const ToleranceConfig& tol = {});

/// V_1 = gamma', V_{i+1} = nabla_{gamma'} V_i for i < count; count <= 5.
/// Computed by Leibniz-rule propagation of the jet, no differencing.
std::vector<AmbientVector> iterated_covariant_derivatives(const CurveJet& jet, int count);

struct CurvatureDerivatives {
  double k1_prime = 0.0;
  double k1_second = 0.0;
  double k2_prime = 0.0;
};

enum class DerivativeMethod {
  kJet,                // exact identities on the iterated covariant derivatives
  kCentralDifference,  // 5-point stencil over apparatus at s +- h, s +- 2h
};

/// Frenet frame E_1..E_d, curvatures k_1..k_{d-1} and complex torsions
/// tau_ij = <E_i, J E_j>. An apparatus may be abstract (no frames) when it is
/// built directly from curvature data.
struct FrenetApparatus {
  int d = 1;
  std::vector<AmbientVector> frames;
  std::vector<double> curvatures;
  std::optional<CurvatureDerivatives> curvature_derivs;
  std::vector<double> torsions;  // d x d, row major, antisymmetric

  /// k_i for 1 <= i; zero for i >= d.
  double curvature(int i) const;
  /// tau_ij, 1-based; zero outside 1..d.
  double torsion(int i, int j) const;

  /// Apparatus without frames. `upper_torsions` lists tau_12, tau_13, ...,
  /// tau_1d, tau_23, ..., tau_{d-1,d}.
  static FrenetApparatus from_curvatures(std::vector<double> curvatures,
                                         const std::vector<double>& upper_torsions,
                                         CurvatureDerivatives derivs = {});
};

FrenetApparatus frenet_apparatus(const CurveFamily& family, double s, int max_order,
                                 const ToleranceConfig& tol = {},
                                 DerivativeMethod method = DerivativeMethod::kJet);

/// Reads a horizontal-lift apparatus as the lift of the CP^n Frenet apparatus.
/// Horizontal frames pass through unchanged; a trailing vertical member
/// (E_d = +-xi) is stripped together with k_{d-1}. Other layouts are rejected.
FrenetApparatus downstairs_apparatus(const FrenetApparatus& apparatus, const SpherePoint& p,
                                     const ToleranceConfig& tol = {});

}  // namespace bihcp
