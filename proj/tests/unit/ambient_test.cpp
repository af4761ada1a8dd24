#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "bihcp/ambient.hpp"
#include "bihcp/errors.hpp"
#include "test_support.hpp"

using namespace bihcp;
using bihcp::testing::random_unit;
using bihcp::testing::random_vector;

TEST(AmbientVector, RejectsOddOrShortCoordinateLists) {
  EXPECT_THROW(AmbientVector({1.0, 2.0, 3.0}), StructuralError);
  EXPECT_THROW(AmbientVector({1.0, 2.0}), StructuralError);
  EXPECT_THROW(AmbientVector(0), StructuralError);
}

TEST(AmbientVector, RejectsNonFinite) {
  EXPECT_THROW(AmbientVector({1.0, std::nan(""), 0.0, 0.0}), DataError);
  EXPECT_THROW(AmbientVector({std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0}), DataError);
}

TEST(AmbientVector, DotRejectsDimensionMismatch) {
  EXPECT_THROW(dot(AmbientVector(1), AmbientVector(2)), StructuralError);
}

TEST(JApply, RotatesFirstPair) {
  const AmbientVector v = j_apply({1.0, 0.0, 0.0, 0.0});
  EXPECT_EQ(v[0], 0.0);
  EXPECT_EQ(v[1], 1.0);
  EXPECT_EQ(v[2], 0.0);
  EXPECT_EQ(v[3], 0.0);
}

TEST(JApply, SquaresToMinusIdentity) {
  const AmbientVector v{0.3, -1.2, 0.5, 2.0};
  const AmbientVector jj = j_apply(j_apply(v));
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(jj[i], -v[i]);
}

TEST(JApply, RandomVectorsKeepInnerProductsAndAreOrthogonalToImage) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    const AmbientVector x = random_vector(rng, n);
    const AmbientVector y = random_vector(rng, n);
    EXPECT_NEAR(dot(j_apply(x), j_apply(y)), dot(x, y), 1e-13 * (1.0 + x.norm() * y.norm()));
    EXPECT_LE(std::abs(dot(j_apply(x), x)), 1e-14 * dot(x, x));
    const AmbientVector jj = j_apply(j_apply(x));
    for (std::size_t i = 0; i < x.size(); ++i) EXPECT_EQ(jj[i], -x[i]);
  }
}

TEST(HopfField, AtFirstAxis) {
  const AmbientVector xi = hopf_vector_field(SpherePoint({1.0, 0.0, 0.0, 0.0}));
  EXPECT_EQ(xi[0], 0.0);
  EXPECT_EQ(xi[1], -1.0);
  EXPECT_EQ(xi[2], 0.0);
  EXPECT_EQ(xi[3], 0.0);
}

TEST(HopfField, UnitAndTangentAtRandomPoints) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const SpherePoint p(random_unit(rng, 1 + trial % 4));
    const AmbientVector xi = hopf_vector_field(p);
    EXPECT_NEAR(xi.norm(), 1.0, 1e-15);
    EXPECT_NEAR(dot(xi, p.position()), 0.0, 1e-15);
  }
}

TEST(SpherePoint, NonUnitCarriesDefect) {
  try {
    SpherePoint p({1.5, 0.0, 0.0, 0.0});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NEAR(e.defect(), 0.5, 1e-15);
  }
}

TEST(TangentProjection, KillsRadialAndFixesTangent) {
  std::mt19937_64 rng(3);
  const SpherePoint p(random_unit(rng, 2));
  EXPECT_LE(sphere_tangent_project(p, p.position()).norm(), 1e-15);
  const AmbientVector t = sphere_tangent_project(p, random_vector(rng, 2));
  const AmbientVector t2 = sphere_tangent_project(p, t);
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_NEAR(t2[i], t[i], 1e-15);
}

TEST(TangentProjection, OutputOrthogonalAndIdempotentOnRandomInput) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const SpherePoint p(random_unit(rng, n));
    const AmbientVector v = random_vector(rng, n, 3.0);
    const AmbientVector t = sphere_tangent_project(p, v);
    EXPECT_LE(std::abs(dot(t, p.position())), 1e-14 * v.norm());
    const AmbientVector tt = sphere_tangent_project(p, t);
    EXPECT_LE((tt - t).norm(), 1e-14 * v.norm());
  }
}

TEST(Horizontality, FibreDirectionIsOneZeroAndHorizontalAreZero) {
  std::mt19937_64 rng(13);
  const SpherePoint p(random_unit(rng, 2));
  const AmbientVector xi = hopf_vector_field(p);
  EXPECT_NEAR(horizontality_defect(p, xi), 1.0, 1e-15);
  EXPECT_EQ(horizontality_defect(p, AmbientVector(2)), 0.0);
  AmbientVector h = sphere_tangent_project(p, random_vector(rng, 2));
  h -= dot(h, xi) * xi;
  EXPECT_LE(std::abs(horizontality_defect(p, h)), 1e-15);
}

TEST(Horizontality, RejectsNonTangentVector) {
  const SpherePoint p({1.0, 0.0, 0.0, 0.0});
  EXPECT_THROW(horizontality_defect(p, {1.0, 0.0, 0.0, 0.0}), DomainError);
}
