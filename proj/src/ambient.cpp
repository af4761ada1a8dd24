#include "bihcp/ambient.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "bihcp/errors.hpp"

namespace bihcp {

namespace {

void require_same_shape(const AmbientVector& a, const AmbientVector& b) {
  if (a.size() != b.size()) {
    throw StructuralError("ambient dimension mismatch: " + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()));
  }
}

}  // namespace

AmbientVector::AmbientVector(int n) : n_(n) {
  if (n < 1) throw StructuralError("complex dimension n must be positive");
  coords_.assign(static_cast<std::size_t>(2 * n + 2), 0.0);
}

AmbientVector::AmbientVector(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 4 || coords_.size() % 2 != 0) {
    throw StructuralError("ambient vector needs an even number >= 4 of coordinates, got " +
                          std::to_string(coords_.size()));
  }
  if (!all_finite()) throw DataError("ambient vector has non-finite entries");
  n_ = static_cast<int>(coords_.size() / 2) - 1;
}

AmbientVector::AmbientVector(std::initializer_list<double> coords)
    : AmbientVector(std::vector<double>(coords)) {}

AmbientVector AmbientVector::basis(int n, std::size_t slot) {
  AmbientVector e(n);
  if (slot >= e.size()) throw StructuralError("basis slot out of range");
  e[slot] = 1.0;
  return e;
}

AmbientVector& AmbientVector::operator+=(const AmbientVector& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

AmbientVector& AmbientVector::operator-=(const AmbientVector& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

AmbientVector& AmbientVector::operator*=(double s) {
  for (double& c : coords_) c *= s;
  return *this;
}

double AmbientVector::norm() const { return std::sqrt(dot(*this, *this)); }

bool AmbientVector::all_finite() const {
  for (double c : coords_) {
    if (!std::isfinite(c)) return false;
  }
  return true;
}

AmbientVector operator+(AmbientVector a, const AmbientVector& b) { return a += b; }
AmbientVector operator-(AmbientVector a, const AmbientVector& b) { return a -= b; }
AmbientVector operator-(AmbientVector a) { return a *= -1.0; }
AmbientVector operator*(double s, AmbientVector a) { return a *= s; }
AmbientVector operator*(AmbientVector a, double s) { return a *= s; }

double dot(const AmbientVector& a, const AmbientVector& b) {
  require_same_shape(a, b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

SpherePoint::SpherePoint(AmbientVector position, const ToleranceConfig& tol)
    : position_(std::move(position)) {
  const double defect = position_.norm() - 1.0;
  if (!(std::abs(defect) <= tol.unit_norm)) {
    throw DomainError("point is not on the unit sphere (|p| - 1 = " + std::to_string(defect) + ")",
                      defect);
  }
}

AmbientVector j_apply(const AmbientVector& v) {
  AmbientVector out(v.n());
  for (std::size_t k = 0; k < v.size(); k += 2) {
    out[k] = -v[k + 1];
    out[k + 1] = v[k];
  }
  return out;
}

AmbientVector hopf_vector_field(const SpherePoint& p) { return -j_apply(p.position()); }

AmbientVector sphere_tangent_project(const SpherePoint& p, const AmbientVector& v) {
  const AmbientVector& x = p.position();
  return v - dot(v, x) * x;
}

double horizontality_defect(const SpherePoint& p, const AmbientVector& v,
                            const ToleranceConfig& tol) {
  const double radial = dot(v, p.position());
  if (std::abs(radial) > tol.orthogonality * std::max(1.0, v.norm())) {
    throw DomainError("vector is not tangent to the sphere (<v,p> = " + std::to_string(radial) + ")",
                      radial);
  }
  return dot(v, hopf_vector_field(p));
}

}  // namespace bihcp
