#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bihcp/tolerance.hpp"

namespace bihcp {

/// M_1 x M_2 with M_1 minimal in S^{2p+1}(a), M_2 minimal in S^{2q+1}(b),
/// a^2 + b^2 = 1, sitting in the Clifford torus of S^{2n+1}, n = p + q + 1.
struct ProductSphereConfig {
  int p = 0;
  int q = 0;
  double a = 0.0;
  double b = 0.0;
  int m1 = 1;
  int m2 = 1;

  /// a = sqrt(a2), b = sqrt(1 - a2).
  static ProductSphereConfig from_a2(int p, int q, double a2, int m1, int m2);
  /// Throws DomainError on a bad radius pair or factor dimension.
  void validate(const ToleranceConfig& tol = {}) const;
};

/// Multiples of the unit normal eta of the Clifford torus.
struct TensionBitension {
  double tension = 0.0;
  double bitension = 0.0;
};

TensionBitension clifford_tension_bitension(const ProductSphereConfig& cfg,
                                            const ToleranceConfig& tol = {});

/// (b^2/a^2) m1 + (a^2/b^2) m2 - 4 - m1 - m2 at a^2 = t.
double clifford_minus4_condition(int m1, int m2, double t);

enum class RootStatus { kAdmissible, kExcludedMinimal, kOutOfRange };
const char* to_string(RootStatus s);

struct CliffordRoot {
  double a2 = 0.0;
  double tension = 0.0;
  double condition_residual = 0.0;  // original rational condition
  double quadratic_residual = 0.0;  // cleared-denominator quadratic
  RootStatus status = RootStatus::kOutOfRange;
};

/// Status of t = a^2 for the pair (m1, m2) regardless of whether it is a root.
RootStatus clifford_root_status(int m1, int m2, double t, const ToleranceConfig& tol = {});

/// Every real root of (2m1 + 2m2 + 4) t^2 - (3m1 + m2 + 4) t + m1 = 0 with
/// its status, descending in t.
std::vector<CliffordRoot> clifford_minus4_candidates(int m1, int m2,
                                                     const ToleranceConfig& tol = {});

/// Admissible a^2 values, descending. Empty when none survive.
std::vector<double> clifford_minus4_solve(int m1, int m2, const ToleranceConfig& tol = {});

/// Tangent sphere bundle T^b S^{2p+1}(a) in S^{4p+3}. eta_2 below is
/// (x0, -(a^2/b^2) y0), of length a/b.
struct SphereBundleReport {
  int p = 1;
  double a2 = 0.0;
  double b2 = 0.0;
  double mean_curvature = 0.0;        // H = c eta_2
  double tension = 0.0;               // (4p+1) c
  double biharmonic_residual = 0.0;   // tau_2 = tension * this * eta_2
  double minus4_residual = 0.0;       // biharmonic_residual + 4
  bool minimal_in_sphere = false;
  bool proper_biharmonic_in_sphere = false;
  bool minus4_biharmonic = false;
  bool minimal_in_clifford_torus = false;
  double frame_orthonormality_defect = 0.0;
  double frame_mean_curvature_defect = 0.0;  // |trace B / (4p+1) - c|
  double frame_eta1_trace = 0.0;
  std::vector<double> projection_residuals;  // horizontal part of the CP^n bitension
  bool projection_proper_biharmonic = false;
};

/// Throws DomainError for p < 1 or a2 outside (0, 1). With `frame_checks`
/// off the frame_* fields stay zero, minimal_in_clifford_torus is false and
/// the cost drops from O(p^3) to O(p).
SphereBundleReport sphere_bundle_analyze(int p, double a2, const ToleranceConfig& tol = {},
                                         bool frame_checks = true);

/// (2p + 1 +- sqrt(2p + 1)) / (4p + 2) by root finding on the residual,
/// ascending.
std::vector<double> sphere_bundle_minus4_roots(int p);

/// Radii a_1..a_{n+1} of the torus S^1(a_1) x ... x S^1(a_{n+1}) in S^{2n+1}.
struct LagrangianTorusSpec {
  std::vector<double> radii;

  int n() const { return static_cast<int>(radii.size()) - 1; }
  void validate(const ToleranceConfig& tol = {}) const;
};

struct ZhangResidual {
  std::vector<double> r;
  double norm = 0.0;
  bool minimal = false;
};

ZhangResidual zhang_residual(const LagrangianTorusSpec& spec, const ToleranceConfig& tol = {});

/// a_1^2 = t, a_2^2 = ... = a_{n+1}^2 = (1 - t)/n reduces the system to
///   2(n+3)(n+1) t^3 + ((n^2 - 1) - 2(n+3)(n+2)) t^2 + 2(n+4) t - 1 = 0.
double zhang_two_block_polynomial(int n, double t);

/// Non-minimal two-block solutions, ascending in a_1^2.
std::vector<LagrangianTorusSpec> zhang_solve_two_block(int n, const ToleranceConfig& tol = {});

/// |tau_2 - lambda tau| for the torus, assembled from its second fundamental
/// form in S^{2n+1} at a base point.
double torus_extrinsic_oracle(const LagrangianTorusSpec& spec, double lambda,
                              const ToleranceConfig& tol = {});

/// Real hypersurface data in a complex space form of holomorphic sectional
/// curvature 4c.
struct HypersurfaceData {
  int n = 2;
  double mean_curvature_sq = 0.0;
  double second_ff_norm_sq = 0.0;
  double c = 1.0;
  std::optional<int> mbar;  // defaults to 2n - 1
};

struct HypersurfaceVerdict {
  int mbar = 0;
  double second_ff_defect = 0.0;  // |B|^2 - 2c(n+1)
  bool proper_biharmonic = false;
  double scalar_curvature = 0.0;        // 4n^2 - 2n - 4 + mbar^2 |H|^2
  double gauss_scalar_curvature = 0.0;  // 4n^2 - 4 + mbar^2 |H|^2 - |B|^2
  double tangent_bound = 0.0;           // (mbar + 3) / mbar
  bool tangent_bound_ok = false;
  bool normal_bound_ok = false;         // |H|^2 <= 1
  bool nonexistence = false;            // c <= 0
  std::vector<std::string> notes;
};

/// Throws DomainError for n < 1 or negative squared norms.
HypersurfaceVerdict hypersurface_predicates(const HypersurfaceData& data,
                                            const ToleranceConfig& tol = {});

}  // namespace bihcp
