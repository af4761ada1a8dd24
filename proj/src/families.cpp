#include "bihcp/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bihcp/errors.hpp"

namespace bihcp {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kA = kSqrt2 + 1.0;
constexpr double kB = kSqrt2 - 1.0;

// Real direction of the k-th complex coordinate (k from 1).
AmbientVector axis(int n, int k) { return AmbientVector::basis(n, static_cast<std::size_t>(2 * (k - 1))); }

void require_n(int n, int minimum, const char* what) {
  if (n < minimum) {
    throw DomainError(std::string(what) + " needs n >= " + std::to_string(minimum), n);
  }
}

}  // namespace

CurveFamily great_circle(int n, bool horizontal) {
  require_n(n, 1, "great circle");
  const AmbientVector u = axis(n, 1);
  const AmbientVector v = horizontal ? axis(n, 2) : j_apply(u);
  return trig_curve(horizontal ? "great-circle" : "hopf-fibre", AmbientVector(n),
                    {TrigTerm{1.0, u, v}}, {{"n", n}});
}

std::array<AmbientVector, 4> tau12_pm1_constant_vectors(const AmbientVector& e1,
                                                        const AmbientVector& e3, int orientation,
                                                        const ToleranceConfig& tol) {
  if (orientation != 1 && orientation != -1) {
    throw DomainError("orientation must be +1 or -1", orientation);
  }
  if (std::abs(e1.norm() - 1.0) > tol.unit_norm) throw DomainError("e1 is not unit", e1.norm() - 1.0);
  if (std::abs(e3.norm() - 1.0) > tol.unit_norm) throw DomainError("e3 is not unit", e3.norm() - 1.0);
  const AmbientVector je1 = j_apply(e1);
  const double d1 = dot(e3, e1);
  const double d2 = dot(e3, je1);
  if (std::abs(d1) > tol.orthogonality || std::abs(d2) > tol.orthogonality) {
    throw DomainError("e3 must be orthogonal to e1 and J e1",
                      std::max(std::abs(d1), std::abs(d2)));
  }
  const double alpha = std::sqrt(2.0 - kSqrt2) / 2.0;
  const double beta = std::sqrt(2.0 + kSqrt2) / 2.0;
  const double o = orientation;
  return {alpha * e1, (-o * alpha) * je1, beta * e3, (o * beta) * j_apply(e3)};
}

CurveFamily lift_curve_tau12_pm1(const AmbientVector& e1, const AmbientVector& e3, int orientation,
                                 const ToleranceConfig& tol) {
  const auto c = tau12_pm1_constant_vectors(e1, e3, orientation, tol);
  return trig_curve("tau12-pm1", AmbientVector(e1.n()),
                    {TrigTerm{kA, c[0], c[1]}, TrigTerm{kB, c[2], c[3]}},
                    {{"n", e1.n()}, {"orientation", orientation}});
}

CurveFamily lift_curve_tau12_pm1(int n, int orientation) {
  require_n(n, 1, "tau12 = +-1 lift");
  return lift_curve_tau12_pm1(axis(n, 1), axis(n, 2), orientation);
}

std::array<double, 10> gram_condition_residuals(const std::array<AmbientVector, 4>& c) {
  auto g = [&](int i, int j) { return dot(c[i - 1], c[j - 1]); };
  const double A = kA, B = kB;
  const double A2 = A * A, B2 = B * B;
  const double A3 = A2 * A, B3 = B2 * B;
  const double A4 = A2 * A2, B4 = B2 * B2;
  return {
      g(1, 1) + 2.0 * g(1, 3) + g(3, 3) - 1.0,
      A2 * g(2, 2) + 2.0 * A * B * g(2, 4) + B2 * g(4, 4) - 1.0,
      A * g(1, 2) + A * g(2, 3) + B * g(1, 4) + B * g(3, 4),
      A3 * g(1, 2) + A * B2 * g(2, 3) + A2 * B * g(1, 4) + B3 * g(3, 4),
      A4 * g(1, 1) + 2.0 * A2 * B2 * g(1, 3) + B4 * g(3, 3) - 5.0,
      A2 * g(1, 1) + (A2 + B2) * g(1, 3) + B2 * g(3, 3) - 1.0,
      A4 * g(2, 2) + (A * B3 + A3 * B) * g(2, 4) + B4 * g(4, 4) - 5.0,
      A4 * A * g(1, 2) + A3 * B2 * g(2, 3) + A2 * B3 * g(1, 4) + B4 * B * g(3, 4),
      A3 * g(1, 2) + A3 * g(2, 3) + B3 * g(1, 4) + B3 * g(3, 4),
      A3 * A3 * g(2, 2) + 2.0 * A3 * B3 * g(2, 4) + B3 * B3 * g(4, 4) - 29.0,
  };
}

CurveFamily lift_curve_tau12_zero(Tau12ZeroKind kind, double k1, int n) {
  const double r = 1.0 / kSqrt2;
  if (kind == Tau12ZeroKind::kCircle) {
    if (n == 0) n = 2;
    require_n(n, 2, "tau12 = 0 circle lift");
    return trig_curve("tau12-zero-circle", r * axis(n, 3),
                      {TrigTerm{kSqrt2, r * axis(n, 1), r * axis(n, 2)}}, {{"n", n}});
  }
  if (!(k1 > 0.0 && k1 < 1.0)) throw DomainError("helix lift needs k1 in (0, 1)", k1);
  if (n == 0) n = 3;
  require_n(n, 3, "tau12 = 0 helix lift");
  return trig_curve("tau12-zero-helix", AmbientVector(n),
                    {TrigTerm{std::sqrt(1.0 + k1), r * axis(n, 1), r * axis(n, 2)},
                     TrigTerm{std::sqrt(1.0 - k1), r * axis(n, 3), r * axis(n, 4)}},
                    {{"n", n}, {"k1", k1}});
}

double order4_discriminant(double alpha0) {
  const double c2 = std::cos(alpha0) * std::cos(alpha0);
  return 9.0 * c2 * c2 - 42.0 * c2 + 1.0;
}

double order4_cos2_limit() { return (7.0 - 4.0 * std::numbers::sqrt3) / 3.0; }

double order4_cos2_nominal_endpoint() { return (7.0 - 4.0 * std::numbers::sqrt3) / 2.0; }

HelixSolution solve_order4_helix(double alpha0, Branch branch, const ToleranceConfig& tol) {
  if (!std::isfinite(alpha0)) throw DomainError("alpha0 must be finite", alpha0);
  const double c = std::cos(alpha0);
  const double s = std::sin(alpha0);
  if (std::abs(s) < 1e-12) throw DomainError("sin(alpha0) = 0", s);
  if (std::abs(c) < 1e-12) throw DomainError("cos(alpha0) = 0: order-4 case degenerates", c);

  const double disc = order4_discriminant(alpha0);
  if (disc < 0.0) {
    throw NoSolutionError("discriminant 9cos^4 - 42cos^2 + 1 is negative", disc);
  }
  const double root = std::sqrt(disc);
  const double k2sq =
      s * s * (1.0 - 3.0 * c * c + (branch == Branch::kPlus ? root : -root)) / 2.0;
  const double upper = 1.0 + 3.0 * c * c;
  if (!(k2sq > 0.0) || !(k2sq < upper)) {
    throw ConstraintError("k2^2 = " + std::to_string(k2sq) + " outside (0, " +
                          std::to_string(upper) + ")");
  }

  HelixSolution h;
  h.alpha0 = alpha0;
  h.branch = branch;
  h.k2 = std::sqrt(k2sq);
  h.k3 = -3.0 * s * c / h.k2;
  h.k1 = -(h.k2 * c - h.k3 * s) / s;
  if (!(h.k1 > 0.0) || !(h.k3 > 0.0)) {
    throw ConstraintError("curvatures not positive (k1 = " + std::to_string(h.k1) +
                          ", k3 = " + std::to_string(h.k3) +
                          "); alpha0 must lie where sin and cos have opposite signs");
  }
  h.tau12 = -c;
  h.tau34 = c;
  h.tau14 = -s;
  h.tau23 = s;
  h.class_label = classify_helix_cp2(h.k1, h.k2, h.k3, h.torsions(), TorsionConvention::kFrenet, tol).label;
  return h;
}

FrenetApparatus helix_apparatus(const HelixSolution& h) {
  return FrenetApparatus::from_curvatures({h.k1, h.k2, h.k3},
                                          {h.tau12, h.tau13, h.tau14, h.tau23, h.tau24, h.tau34});
}

std::vector<double> helix_jE1(const HelixSolution& h) {
  return {0.0, std::cos(h.alpha0), 0.0, std::sin(h.alpha0)};
}

ClassificationResult classify_helix_cp2(double k1, double k2, double k3,
                                        const std::vector<double>& torsions,
                                        TorsionConvention convention, const ToleranceConfig& tol) {
  if (torsions.size() != 6) {
    throw StructuralError("expected 6 torsions (t12, t13, t14, t23, t24, t34), got " +
                          std::to_string(torsions.size()));
  }
  if (!(k1 > 0.0) || !(k2 > 0.0) || !(k3 > 0.0)) {
    throw DomainError("helix curvatures must be positive", std::min({k1, k2, k3}));
  }
  std::array<double, 6> t{};
  const double sign = convention == TorsionConvention::kFrenet ? -1.0 : 1.0;
  for (std::size_t i = 0; i < 6; ++i) t[i] = sign * torsions[i];

  // Rows in the order (t12, t13, t14, t23, t24, t34).
  std::vector<std::pair<std::string, std::array<double, 6>>> rows;
  const double mu = (k1 + k3) / std::hypot(k2, k1 + k3);
  const double mu23 = k2 * mu / (k1 + k3);
  rows.push_back({"I1", {mu, 0.0, mu23, mu23, 0.0, mu}});
  rows.push_back({"I2", {-mu, 0.0, -mu23, -mu23, 0.0, -mu}});
  if (std::abs(k1 - k3) > tol.classification) {
    const double nu = (k1 - k3) / std::hypot(k2, k1 - k3);
    const double nu23 = k2 * nu / (k1 - k3);
    rows.push_back({"I3", {nu, 0.0, -nu23, nu23, 0.0, -nu}});
    rows.push_back({"I4", {-nu, 0.0, nu23, -nu23, 0.0, nu}});
  } else {
    rows.push_back({"I3'", {0.0, 0.0, -1.0, 1.0, 0.0, 0.0}});
    rows.push_back({"I4'", {0.0, 0.0, 1.0, -1.0, 0.0, 0.0}});
  }

  ClassificationResult out;
  out.label = "unclassified";
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [label, row] : rows) {
    double dist = 0.0;
    for (std::size_t i = 0; i < 6; ++i) dist = std::max(dist, std::abs(t[i] - row[i]));
    out.distances.emplace_back(label, dist);
    if (dist < best) {
      best = dist;
      if (dist <= tol.classification) {
        out.label = label;
        out.matched = true;
      }
    }
  }
  return out;
}

}  // namespace bihcp
