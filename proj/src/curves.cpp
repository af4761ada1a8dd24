#include "bihcp/curves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "bihcp/errors.hpp"

namespace bihcp {

namespace {

constexpr double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Gram-Schmidt component of v orthogonal to the orthonormal set, with one
// reorthogonalization sweep.
AmbientVector orthogonal_residual(AmbientVector v, const std::vector<AmbientVector>& basis) {
  for (int sweep = 0; sweep < 2; ++sweep) {
    for (const auto& e : basis) v -= dot(v, e) * e;
  }
  return v;
}

// Covariant derivative of a field jet W^(0..m) along the curve, returned as a
// jet of length m.
std::vector<AmbientVector> covariant_derivative_jet(const CurveJet& jet,
                                                    const std::vector<AmbientVector>& w) {
  const int m = static_cast<int>(w.size()) - 1;
  std::vector<double> g(static_cast<std::size_t>(m), 0.0);  // derivatives of <W, gamma'>
  for (int i = 0; i < m; ++i) {
    for (int a = 0; a <= i; ++a) g[i] += binomial(i, a) * dot(w[a], jet.derivs[i - a + 1]);
  }
  std::vector<AmbientVector> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    AmbientVector v = w[k + 1];
    for (int i = 0; i <= k; ++i) v += (binomial(k, i) * g[i]) * jet.derivs[k - i];
    out.push_back(std::move(v));
  }
  return out;
}

struct BaseFrenet {
  std::vector<AmbientVector> frames;
  std::vector<double> curvatures;
  std::vector<AmbientVector> chain;  // V_1..V_count
};

BaseFrenet base_frenet(const CurveJet& jet, int max_order, const ToleranceConfig& tol) {
  const int count = std::min({max_order, 2 * jet.n() + 1, CurveJet::kOrder});
  BaseFrenet out;
  out.chain = iterated_covariant_derivatives(jet, std::max(count, std::min(4, CurveJet::kOrder)));

  double previous = out.chain[0].norm();
  out.frames.push_back((1.0 / previous) * out.chain[0]);
  for (int i = 2; i <= count; ++i) {
    AmbientVector u = orthogonal_residual(out.chain[i - 1], out.frames);
    const double r = u.norm();
    const double k = r / previous;
    if (!(k > tol.rank_truncation)) break;
    out.curvatures.push_back(k);
    out.frames.push_back((1.0 / r) * u);
    previous = r;
  }
  return out;
}

std::vector<double> torsion_matrix(const std::vector<AmbientVector>& frames) {
  const std::size_t d = frames.size();
  std::vector<double> t(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    const AmbientVector je = j_apply(frames[i]);
    for (std::size_t j = 0; j < d; ++j) {
      if (i != j) t[j * d + i] = dot(frames[j], je);
    }
  }
  return t;
}

// k1', k1'', k2' from d/ds <V_i, V_j> = <V_{i+1}, V_j> + <V_i, V_{j+1}> and the
// Frenet expansion V_3 = k1' E_2 - k1^2 E_1 + k1 k2 E_3.
CurvatureDerivatives jet_curvature_derivatives(const BaseFrenet& b) {
  CurvatureDerivatives out;
  const int d = static_cast<int>(b.frames.size());
  if (d < 2) return out;
  const auto& v2 = b.chain[1];
  const auto& v3 = b.chain[2];
  const auto& v4 = b.chain[3];
  const double k1 = b.curvatures[0];
  out.k1_prime = dot(v2, v3) / k1;
  out.k1_second = (dot(v3, v3) + dot(v2, v4) - out.k1_prime * out.k1_prime) / k1;
  if (d >= 3) {
    const double k2 = b.curvatures[1];
    const double q_prime = 2.0 * dot(v3, v4) - 2.0 * out.k1_prime * out.k1_second -
                           4.0 * k1 * k1 * k1 * out.k1_prime;
    out.k2_prime = (q_prime - 2.0 * k1 * out.k1_prime * k2 * k2) / (2.0 * k1 * k1 * k2);
  }
  return out;
}

double curvature_or_zero(const BaseFrenet& b, std::size_t i) {
  return i < b.curvatures.size() ? b.curvatures[i] : 0.0;
}

CurvatureDerivatives fd_curvature_derivatives(const CurveFamily& family, double s, int max_order,
                                              const ToleranceConfig& tol) {
  const double h = tol.fd_step;
  std::array<BaseFrenet, 5> at;
  for (int j = -2; j <= 2; ++j) {
    CurveJet jet = family(s + j * h);
    validate_jet(jet, tol);
    at[j + 2] = base_frenet(jet, max_order, tol);
  }
  auto first = [&](std::size_t i) {
    return (curvature_or_zero(at[0], i) - 8.0 * curvature_or_zero(at[1], i) +
            8.0 * curvature_or_zero(at[3], i) - curvature_or_zero(at[4], i)) /
           (12.0 * h);
  };
  CurvatureDerivatives out;
  out.k1_prime = first(0);
  out.k1_second = (-curvature_or_zero(at[0], 0) + 16.0 * curvature_or_zero(at[1], 0) -
                   30.0 * curvature_or_zero(at[2], 0) + 16.0 * curvature_or_zero(at[3], 0) -
                   curvature_or_zero(at[4], 0)) /
                  (12.0 * h * h);
  out.k2_prime = first(1);
  return out;
}

}  // namespace

void validate_jet(const CurveJet& jet, const ToleranceConfig& tol) {
  if (jet.derivs.size() != CurveJet::kOrder + 1) {
    throw StructuralError("curve jet must carry derivatives of order 0.." +
                          std::to_string(CurveJet::kOrder));
  }
  for (const auto& v : jet.derivs) {
    if (!v.all_finite()) throw DataError("curve jet has non-finite derivatives");
    if (v.size() != jet.position().size()) throw StructuralError("curve jet dimension mismatch");
  }
  const double radius_defect = jet.position().norm() - 1.0;
  if (std::abs(radius_defect) > tol.unit_norm) {
    throw DomainError("curve leaves the unit sphere (|gamma| - 1 = " +
                          std::to_string(radius_defect) + ")",
                      radius_defect);
  }
  const double speed_defect = jet.velocity().norm() - 1.0;
  if (std::abs(speed_defect) > tol.unit_norm) {
    throw DomainError("curve is not parametrized by arc length (|gamma'| - 1 = " +
                          std::to_string(speed_defect) + ")",
                      speed_defect);
  }
  const double radial = dot(jet.position(), jet.velocity());
  if (std::abs(radial) > tol.orthogonality) {
    throw DomainError("gamma' is not tangent to the sphere", radial);
  }
}

CurveFamily trig_curve(std::string label, AmbientVector constant, std::vector<TrigTerm> terms,
                       std::vector<std::pair<std::string, double>> params) {
  const int n = constant.n();
  for (const auto& t : terms) {
    if (t.cos_coeff.size() != constant.size() || t.sin_coeff.size() != constant.size()) {
      throw StructuralError("trigonometric curve terms disagree in dimension");
    }
  }
  CurveFamily family;
  family.label = std::move(label);
  family.params = std::move(params);
  family.n = n;
  family.evaluator = [constant = std::move(constant), terms = std::move(terms)](double s) {
    CurveJet jet;
    jet.s = s;
    jet.derivs.assign(CurveJet::kOrder + 1, AmbientVector(constant.n()));
    jet.derivs[0] = constant;
    for (const auto& t : terms) {
      const double c = std::cos(t.frequency * s);
      const double sn = std::sin(t.frequency * s);
      // d^k/ds^k of (cos, sin) cycles through (c, s), (-s, c), (-c, -s), (s, -c).
      const std::array<std::array<double, 2>, 4> phase{{{c, sn}, {-sn, c}, {-c, -sn}, {sn, -c}}};
      double scale = 1.0;
      for (int k = 0; k <= CurveJet::kOrder; ++k) {
        const auto& ph = phase[k % 4];
        jet.derivs[k] += (scale * ph[0]) * t.cos_coeff;
        jet.derivs[k] += (scale * ph[1]) * t.sin_coeff;
        scale *= t.frequency;
      }
    }
    return jet;
  };
  return family;
}

CurveFamily sampled_curve(std::string label, int n, std::function<AmbientVector(double)> position,
                          double h) {
  if (!(h > 0.0)) throw DomainError("sampling step must be positive", h);
  CurveFamily family;
  family.label = std::move(label);
  family.params = {{"h", h}};
  family.n = n;
  family.evaluator = [position = std::move(position), h](double s) {
    std::array<AmbientVector, 7> f{position(s - 3 * h), position(s - 2 * h), position(s - h),
                                   position(s),         position(s + h),     position(s + 2 * h),
                                   position(s + 3 * h)};
    auto at = [&](int j) -> const AmbientVector& { return f[j + 3]; };
    CurveJet jet;
    jet.s = s;
    jet.derivs.push_back(at(0));
    jet.derivs.push_back((1.0 / (12.0 * h)) * (at(-2) - 8.0 * at(-1) + 8.0 * at(1) - at(2)));
    jet.derivs.push_back((1.0 / (12.0 * h * h)) *
                         (-1.0 * at(-2) + 16.0 * at(-1) - 30.0 * at(0) + 16.0 * at(1) - at(2)));
    jet.derivs.push_back((1.0 / (2.0 * h * h * h)) *
                         (-1.0 * at(-2) + 2.0 * at(-1) - 2.0 * at(1) + at(2)));
    jet.derivs.push_back((1.0 / (h * h * h * h)) *
                         (at(-2) - 4.0 * at(-1) + 6.0 * at(0) - 4.0 * at(1) + at(2)));
    jet.derivs.push_back((1.0 / (2.0 * h * h * h * h * h)) *
                         (-1.0 * at(-3) + 4.0 * at(-2) - 5.0 * at(-1) + 5.0 * at(1) -
                          4.0 * at(2) + at(3)));
    return jet;
  };
  return family;
}

AmbientVector sphere_covariant_derivative(const CurveJet& jet, const AmbientVector& field_value,
                                          const AmbientVector& field_derivative,
                                          const ToleranceConfig& tol) {
  const double radial = dot(field_value, jet.position());
  if (std::abs(radial) > tol.orthogonality * std::max(1.0, field_value.norm())) {
    throw DomainError("field is not tangent to the sphere along the curve", radial);
  }
  return field_derivative + dot(field_value, jet.velocity()) * jet.position();
}

std::vector<AmbientVector> iterated_covariant_derivatives(const CurveJet& jet, int count) {
  if (count < 1 || count > CurveJet::kOrder) {
    throw UnsupportedOrderError("iterated covariant derivatives limited to 1.." +
                                std::to_string(CurveJet::kOrder));
  }
  std::vector<AmbientVector> field(jet.derivs.begin() + 1, jet.derivs.end());
  std::vector<AmbientVector> out{field[0]};
  for (int i = 1; i < count; ++i) {
    field = covariant_derivative_jet(jet, field);
    out.push_back(field[0]);
  }
  return out;
}

double FrenetApparatus::curvature(int i) const {
  if (i < 1 || i > static_cast<int>(curvatures.size())) return 0.0;
  return curvatures[static_cast<std::size_t>(i - 1)];
}

double FrenetApparatus::torsion(int i, int j) const {
  if (i < 1 || j < 1 || i > d || j > d) return 0.0;
  return torsions[static_cast<std::size_t>((i - 1) * d + (j - 1))];
}

FrenetApparatus FrenetApparatus::from_curvatures(std::vector<double> curvatures,
                                                 const std::vector<double>& upper_torsions,
                                                 CurvatureDerivatives derivs) {
  FrenetApparatus a;
  a.d = static_cast<int>(curvatures.size()) + 1;
  const std::size_t pairs = static_cast<std::size_t>(a.d * (a.d - 1) / 2);
  if (upper_torsions.size() != pairs) {
    throw StructuralError("expected " + std::to_string(pairs) + " complex torsions, got " +
                          std::to_string(upper_torsions.size()));
  }
  for (double k : curvatures) {
    if (!(k > 0.0)) throw DomainError("Frenet curvatures must be positive", k);
  }
  a.curvatures = std::move(curvatures);
  a.curvature_derivs = derivs;
  a.torsions.assign(static_cast<std::size_t>(a.d * a.d), 0.0);
  std::size_t idx = 0;
  for (int i = 0; i < a.d; ++i) {
    for (int j = i + 1; j < a.d; ++j) {
      a.torsions[static_cast<std::size_t>(i * a.d + j)] = upper_torsions[idx];
      a.torsions[static_cast<std::size_t>(j * a.d + i)] = -upper_torsions[idx];
      ++idx;
    }
  }
  return a;
}

FrenetApparatus frenet_apparatus(const CurveFamily& family, double s, int max_order,
                                 const ToleranceConfig& tol, DerivativeMethod method) {
  if (max_order < 1 || max_order > 2 * family.n + 1) {
    throw DomainError("max_order must lie in 1..2n+1 for a curve in S^{2n+1}", max_order);
  }
  const CurveJet jet = family(s);
  validate_jet(jet, tol);
  BaseFrenet base = base_frenet(jet, max_order, tol);

  FrenetApparatus out;
  out.d = static_cast<int>(base.frames.size());
  out.curvature_derivs = method == DerivativeMethod::kJet
                             ? jet_curvature_derivatives(base)
                             : fd_curvature_derivatives(family, s, max_order, tol);
  out.torsions = torsion_matrix(base.frames);
  out.frames = std::move(base.frames);
  out.curvatures = std::move(base.curvatures);
  return out;
}

FrenetApparatus downstairs_apparatus(const FrenetApparatus& apparatus, const SpherePoint& p,
                                     const ToleranceConfig& tol) {
  if (apparatus.frames.size() != static_cast<std::size_t>(apparatus.d)) {
    throw StructuralError("downstairs reading needs the upstairs frames");
  }
  const AmbientVector xi = hopf_vector_field(p);
  const double e1_vertical = dot(apparatus.frames[0], xi);
  if (std::abs(e1_vertical) > tol.vertical_detection) {
    throw DomainError("E_1 is not horizontal: not a horizontal lift", e1_vertical);
  }

  int vertical_index = -1;
  for (int i = 0; i < apparatus.d; ++i) {
    const double c = std::abs(dot(apparatus.frames[i], xi));
    if (c > 1.0 - tol.vertical_detection) {
      if (vertical_index >= 0) throw ClassificationError("more than one vertical frame member");
      vertical_index = i;
    } else if (c > tol.vertical_detection) {
      throw ClassificationError("frame member E_" + std::to_string(i + 1) +
                                " is neither horizontal nor vertical (|<E,xi>| = " +
                                std::to_string(c) + ")");
    }
  }
  if (vertical_index < 0) return apparatus;
  if (vertical_index != apparatus.d - 1 || vertical_index < 2) {
    throw ClassificationError("vertical frame member at E_" + std::to_string(vertical_index + 1) +
                              " has no lift dictionary");
  }

  FrenetApparatus out;
  out.d = apparatus.d - 1;
  out.frames.assign(apparatus.frames.begin(), apparatus.frames.begin() + out.d);
  out.curvatures.assign(apparatus.curvatures.begin(), apparatus.curvatures.begin() + (out.d - 1));
  if (apparatus.curvature_derivs) {
    CurvatureDerivatives cd = *apparatus.curvature_derivs;
    if (out.d < 3) cd.k2_prime = 0.0;
    out.curvature_derivs = cd;
  }
  out.torsions = torsion_matrix(out.frames);
  return out;
}

}  // namespace bihcp
