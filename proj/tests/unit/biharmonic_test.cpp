#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bihcp/biharmonic.hpp"
#include "bihcp/errors.hpp"
#include "bihcp/families.hpp"

using namespace bihcp;

namespace {

// Frenet coefficients pushed into ambient coordinates through the frame.
AmbientVector to_ambient(const FrenetApparatus& a, const std::vector<double>& c) {
  AmbientVector v(a.frames.front().n());
  for (int i = 0; i < a.d && i < static_cast<int>(c.size()); ++i) v += c[i] * a.frames[i];
  return v;
}

AmbientVector loxodrome(double beta, double s) {
  const double phi = s * std::cos(beta);
  const double psi = std::tan(beta) * std::atanh(std::sin(phi));
  return {std::cos(phi) * std::cos(psi), std::cos(phi) * std::sin(psi), std::sin(phi), 0.0};
}

}  // namespace

TEST(Tension, IsCurvatureOnSecondSlot) {
  const auto a = FrenetApparatus::from_curvatures({1.5, 0.2}, {0.0, 0.0, 0.0});
  const auto t = tension_coefficients(a, 5);
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t[1], 1.5);
  EXPECT_EQ(t[0] + t[2] + t[3] + t[4], 0.0);
}

TEST(SphereBitension, PmOneLiftIsMinusFourBiharmonic) {
  const CurveFamily f = lift_curve_tau12_pm1(1);
  const FrenetApparatus a = frenet_apparatus(f, 0.9, 3);
  const BitensionResidual t2 = sphere_curve_bitension(a);
  EXPECT_NEAR(t2.value[1], -8.0, 1e-8);
  const auto r = lambda_biharmonic_residual(t2, tension_coefficients(a), -4.0);
  EXPECT_LE(r.norm, 1e-8);
  EXPECT_EQ(r.lambda, -4.0);
  EXPECT_NEAR(quartic_ode_residual(f(0.9)), 0.0, 1e-12);
}

TEST(SphereBitension, ZeroFamiliesAreBiharmonicInTheSphere) {
  for (const auto& f : {lift_curve_tau12_zero(Tau12ZeroKind::kCircle),
                        lift_curve_tau12_zero(Tau12ZeroKind::kHelix, 0.35)}) {
    const FrenetApparatus a = frenet_apparatus(f, 1.2, 2 * f.n + 1);
    EXPECT_LE(sphere_curve_bitension(a).norm, 1e-8) << f.label;
    EXPECT_LE(extrinsic_sphere_bitension(f(1.2)).norm, 1e-12) << f.label;
  }
}

TEST(SphereBitension, FrameFormulaAgreesWithExtrinsicAssembly) {
  ToleranceConfig loose;
  loose.unit_norm = 1e-8;
  loose.orthogonality = 1e-8;
  const double beta = 0.7;
  const CurveFamily lox =
      sampled_curve("loxodrome", 1, [&](double s) { return loxodrome(beta, s); }, 4e-3);
  struct Case {
    CurveFamily f;
    int order;
    double bound;
  };
  const std::vector<Case> cases = {
      {lift_curve_tau12_pm1(1), 3, 1e-8},
      {lift_curve_tau12_zero(Tau12ZeroKind::kHelix, 0.8), 7, 1e-8},
      {great_circle(1), 3, 1e-12},
      {lox, 2, 2e-3},
  };
  for (const auto& c : cases) {
    for (double s : {0.3, 0.75}) {
      const FrenetApparatus a = frenet_apparatus(c.f, s, c.order, loose);
      const AmbientVector frame = to_ambient(a, sphere_curve_bitension(a).value);
      const AmbientVector ambient(extrinsic_sphere_bitension(c.f(s)).value);
      EXPECT_LE((frame - ambient).norm(), c.bound) << c.f.label << " s=" << s;
    }
  }
}

TEST(SphereBitension, ConstantHelixVanishesExactlyOnUnitCircle) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.05, std::numbers::pi / 2 - 0.05);
  for (int i = 0; i < 200; ++i) {
    const double t = angle(rng);
    const auto a = FrenetApparatus::from_curvatures({std::cos(t), std::sin(t)}, {0.0, 0.0, 0.0});
    EXPECT_LE(sphere_curve_bitension(a).norm, 1e-14);
    const double scale = 1.0 + 0.5 * angle(rng);
    const auto b = FrenetApparatus::from_curvatures({scale * std::cos(t), scale * std::sin(t)},
                                                    {0.0, 0.0, 0.0});
    EXPECT_GT(sphere_curve_bitension(b).norm, 1e-6);
  }
}

TEST(SphereBitension, RequiresDerivativesAndOrderAtMostFour) {
  FrenetApparatus a = FrenetApparatus::from_curvatures({1.0}, {0.0});
  a.curvature_derivs.reset();
  EXPECT_THROW(sphere_curve_bitension(a), StructuralError);
  const auto high = FrenetApparatus::from_curvatures({1.0, 1.0, 1.0, 0.5},
                                                     std::vector<double>(10, 0.0));
  EXPECT_THROW(sphere_curve_bitension(high), UnsupportedOrderError);
}

TEST(CpnBitension, CirclesFollowTheCurvatureRule) {
  // A CP^n circle with tau_12 = t is proper biharmonic iff t in {0, +-1} and
  // k1^2 = 1 + 3 t^2.
  for (double t : {0.0, 1.0, -1.0}) {
    const double k = std::sqrt(1.0 + 3.0 * t * t);
    const auto a = FrenetApparatus::from_curvatures({k}, {t});
    EXPECT_LE(cpn_curve_bitension(a, {0.0, -t}).norm, 1e-14) << t;
    const auto off = FrenetApparatus::from_curvatures({k * 1.1}, {t});
    EXPECT_GT(cpn_curve_bitension(off, {0.0, -t}).norm, 1e-3) << t;
  }
  const auto mid = FrenetApparatus::from_curvatures({std::sqrt(1.75)}, {0.5});
  EXPECT_GT(cpn_curve_bitension(mid, {0.0, -0.5}).norm, 1e-3);
}

TEST(CpnBitension, DownstairsPmOneLift) {
  const CurveFamily f = lift_curve_tau12_pm1(2);
  const FrenetApparatus up = frenet_apparatus(f, 0.4, 5);
  const FrenetApparatus down = downstairs_apparatus(up, SpherePoint(f(0.4).position()));
  const BitensionResidual r = cpn_curve_bitension(down, {0.0, -down.torsion(1, 2)});
  ASSERT_EQ(r.value.size(), 5u);
  EXPECT_LE(r.norm, 1e-8);
}

TEST(CpnBitension, ValidatesJE1) {
  const auto a = FrenetApparatus::from_curvatures({2.0}, {1.0});
  EXPECT_THROW(cpn_curve_bitension(a, {0.0, -1.0, 0.0}), StructuralError);
  EXPECT_THROW(cpn_curve_bitension(a, {0.0, -1.2}), DomainError);
  EXPECT_THROW(cpn_curve_bitension(a, {0.0, 1.0}), DomainError);
}

TEST(CpnBitension, SolvedHelicesAreBiharmonic) {
  std::mt19937_64 rng(5);
  const double c_max = std::sqrt(order4_cos2_limit());
  std::uniform_real_distribution<double> cosine(1e-3, c_max * (1 - 1e-9));
  for (int i = 0; i < 100; ++i) {
    const double c = cosine(rng) * (i % 2 == 0 ? 1.0 : -1.0);
    const double alpha0 = std::acos(c) + (i % 4 < 2 ? 0.0 : std::numbers::pi);
    for (Branch b : {Branch::kPlus, Branch::kMinus}) {
      HelixSolution h;
      try {
        h = solve_order4_helix(alpha0, b);
      } catch (const ConstraintError&) {
        continue;
      }
      const BitensionResidual r = cpn_curve_bitension(helix_apparatus(h), helix_jE1(h));
      EXPECT_LE(r.norm, 1e-10) << "alpha0=" << alpha0;
    }
  }
}

TEST(LambdaResidual, SubtractsScaledTension) {
  BitensionResidual t2;
  t2.value = {0.0, -8.0, 0.0, 0.0};
  const auto r = lambda_biharmonic_residual(t2, {0.0, 2.0, 0.0, 0.0}, -3.0);
  EXPECT_NEAR(r.norm, 2.0, 1e-15);
  EXPECT_THROW(lambda_biharmonic_residual(t2, {0.0, 2.0}, -4.0), StructuralError);
}

TEST(QuarticOde, GreatCircleLeavesFour) {
  // gamma'''' + 6 gamma'' + gamma = (1 - 6 + 1) gamma on a great circle.
  EXPECT_NEAR(quartic_ode_residual(great_circle(1)(0.3)), 4.0, 1e-13);
}

TEST(HopfRelation, VanishesForPmOneLiftAndGeodesic) {
  EXPECT_LE(hopf_relation_check(lift_curve_tau12_pm1(1), 0.6).norm, 1e-8);
  EXPECT_LE(hopf_relation_check(great_circle(1), 0.6).norm, 1e-8);
}

TEST(HopfRelation, VanishesForZeroCircleButNotForOtherHorizontalCircles) {
  EXPECT_LE(hopf_relation_check(lift_curve_tau12_zero(Tau12ZeroKind::kCircle), 0.6).norm, 1e-8);
  // Horizontal small circle in the real slots: a CP^2 circle of curvature
  // b/a with tau_12 = 0, biharmonic only when b = a.
  const double a = 0.6, b = 0.8;
  AmbientVector centre(2);
  centre[4] = b;
  const CurveFamily f = trig_curve(
      "small", centre, {TrigTerm{1.0 / a, a * AmbientVector::basis(2, 0), a * AmbientVector::basis(2, 2)}});
  EXPECT_GT(hopf_relation_check(f, 0.6).norm, 1e-3);
}

TEST(HopfRelation, RejectsVerticalCurve) {
  EXPECT_THROW(hopf_relation_check(great_circle(1, false), 0.0), DomainError);
}
