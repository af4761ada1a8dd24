#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "bihcp/tolerance.hpp"

namespace bihcp {

// Coordinates of R^{2n+2} = C^{n+1}. Complex coordinate z_k occupies the
// consecutive real slots (2k-2, 2k-1) (zero based), so the complex structure
// acts as (u, v) -> (-v, u) on every pair.

/// A point or tangent vector of R^{2n+2}; n is the complex dimension of the
/// target CP^n.
class AmbientVector {
 public:
  /// Zero vector of R^{2n+2}.
  explicit AmbientVector(int n);
  /// Throws StructuralError for odd or too-short input, DataError for
  /// non-finite entries.
  explicit AmbientVector(std::vector<double> coords);
  AmbientVector(std::initializer_list<double> coords);

  /// k-th standard basis vector (zero based slot).
  static AmbientVector basis(int n, std::size_t slot);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }

  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }

  AmbientVector& operator+=(const AmbientVector& o);
  AmbientVector& operator-=(const AmbientVector& o);
  AmbientVector& operator*=(double s);

  double norm() const;
  bool all_finite() const;

 private:
  std::vector<double> coords_;
  int n_;
};

AmbientVector operator+(AmbientVector a, const AmbientVector& b);
AmbientVector operator-(AmbientVector a, const AmbientVector& b);
AmbientVector operator-(AmbientVector a);
AmbientVector operator*(double s, AmbientVector a);
AmbientVector operator*(AmbientVector a, double s);

double dot(const AmbientVector& a, const AmbientVector& b);

/// A unit vector of R^{2n+2}, i.e. a point of S^{2n+1}.
class SpherePoint {
 public:
  /// Throws DomainError carrying |p| - 1 when |p| is not 1 within
  /// `tol.unit_norm`.
  explicit SpherePoint(AmbientVector position, const ToleranceConfig& tol = {});

  const AmbientVector& position() const noexcept { return position_; }
  int n() const noexcept { return position_.n(); }

 private:
  AmbientVector position_;
};

/// Complex structure of R^{2n+2}: (u, v) -> (-v, u) on each coordinate pair.
AmbientVector j_apply(const AmbientVector& v);

/// Hopf vector field xi(p) = -J p, tangent to the fibres of S^{2n+1} -> CP^n.
AmbientVector hopf_vector_field(const SpherePoint& p);

/// Tangential part v - <v,p> p at p.
AmbientVector sphere_tangent_project(const SpherePoint& p, const AmbientVector& v);

/// <v, xi(p)>: the vertical component of a sphere-tangent vector. Throws
/// DomainError if v is not tangent to the sphere at p.
double horizontality_defect(const SpherePoint& p, const AmbientVector& v,
                            const ToleranceConfig& tol = {});

}  // namespace bihcp
