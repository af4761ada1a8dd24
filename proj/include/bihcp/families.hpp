#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "bihcp/ambient.hpp"
#include "bihcp/curves.hpp"
#include "bihcp/tolerance.hpp"

namespace bihcp {

/// Unit-speed great circle cos(s) u + sin(s) v. The horizontal one
/// (u = first real axis, v = second real axis) lifts a CP^n geodesic; the
/// vertical one (v = J u) is a Hopf fibre.
CurveFamily great_circle(int n = 1, bool horizontal = true);

/// Constant vectors c_1..c_4 of the tau_12 = +-1 lift
///   gamma = cos(As) c_1 + sin(As) c_2 + cos(Bs) c_3 + sin(Bs) c_4,
/// A = sqrt2 + 1, B = sqrt2 - 1. orientation +1 gives c_2 = -|c_1| J e_1,
/// c_4 = |c_3| J e_3; orientation -1 the complex conjugate curve.
std::array<AmbientVector, 4> tau12_pm1_constant_vectors(const AmbientVector& e1,
                                                        const AmbientVector& e3,
                                                        int orientation = 1,
                                                        const ToleranceConfig& tol = {});

/// Default axes: e_1 and e_3 are the real directions of the first and second
/// complex coordinates, so n = 1 already works.
CurveFamily lift_curve_tau12_pm1(int n = 1, int orientation = 1);
CurveFamily lift_curve_tau12_pm1(const AmbientVector& e1, const AmbientVector& e3,
                                 int orientation = 1, const ToleranceConfig& tol = {});

/// The ten Gram conditions on c_ij = <c_i, c_j> obtained from the jet of the
/// tau_12 = +-1 lift at s = 0, as residuals (lhs - rhs).
std::array<double, 10> gram_condition_residuals(const std::array<AmbientVector, 4>& c);

enum class Tau12ZeroKind { kCircle, kHelix };

/// Lifts of proper-biharmonic CP^n curves with tau_12 = 0. The circle needs
/// n >= 2, the helix n >= 3 and k1 in (0, 1). `n = 0` picks the minimum.
/// e_i is the real direction of the i-th complex coordinate.
CurveFamily lift_curve_tau12_zero(Tau12ZeroKind kind, double k1 = 0.0, int n = 0);

enum class Branch { kPlus, kMinus };

/// Curvatures and complex torsions of a biharmonic order-4 holomorphic helix
/// with J E_1 = cos(alpha0) E_2 + sin(alpha0) E_4.
struct HelixSolution {
  double alpha0 = 0.0;
  Branch branch = Branch::kPlus;
  double k1 = 0.0;
  double k2 = 0.0;
  double k3 = 0.0;
  double tau12 = 0.0;
  double tau13 = 0.0;
  double tau14 = 0.0;
  double tau23 = 0.0;
  double tau24 = 0.0;
  double tau34 = 0.0;
  std::string class_label;

  /// (tau12, tau13, tau14, tau23, tau24, tau34)
  std::vector<double> torsions() const { return {tau12, tau13, tau14, tau23, tau24, tau34}; }
};

/// 9 cos^4 - 42 cos^2 + 1.
double order4_discriminant(double alpha0);

/// Largest cos^2(alpha0) with a nonnegative discriminant, (7 - 4 sqrt3)/3.
double order4_cos2_limit();
/// cos^2 at the endpoint arccos(-(2 - sqrt3)/sqrt2), (7 - 4 sqrt3)/2.
double order4_cos2_nominal_endpoint();

/// Throws DomainError for sin(alpha0) = 0 or cos(alpha0) = 0, NoSolutionError
/// for a negative discriminant and ConstraintError when k_2^2 leaves
/// (0, 1 + 3 cos^2) or a curvature is not positive.
HelixSolution solve_order4_helix(double alpha0, Branch branch, const ToleranceConfig& tol = {});

/// Abstract downstairs apparatus (d = 4, constant curvatures).
FrenetApparatus helix_apparatus(const HelixSolution& h);
/// J E_1 in the frame: (0, cos alpha0, 0, sin alpha0).
std::vector<double> helix_jE1(const HelixSolution& h);

/// How the torsion list handed to the classifier is signed. kFrenet: the
/// values are <E_i, J E_j> as produced by the Frenet machinery and the solver.
/// kTable: the values are already in the sign convention of the class table.
enum class TorsionConvention { kFrenet, kTable };

struct ClassificationResult {
  std::string label;  // "I1".."I4", "I3'", "I4'" or "unclassified"
  bool matched = false;
  std::vector<std::pair<std::string, double>> distances;  // max-norm per row
};

/// Matches (tau12, tau13, tau14, tau23, tau24, tau34) against the CP^2
/// holomorphic-helix classes.
ClassificationResult classify_helix_cp2(double k1, double k2, double k3,
                                        const std::vector<double>& torsions,
                                        TorsionConvention convention = TorsionConvention::kFrenet,
                                        const ToleranceConfig& tol = {});

}  // namespace bihcp
