#pragma once

#include <random>
#include <vector>

#include "bihcp/ambient.hpp"

namespace bihcp::testing {

inline AmbientVector random_vector(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  std::vector<double> c(static_cast<std::size_t>(2 * n + 2));
  for (double& x : c) x = g(rng);
  return AmbientVector(c);
}

inline AmbientVector random_unit(std::mt19937_64& rng, int n) {
  AmbientVector v = random_vector(rng, n);
  return (1.0 / v.norm()) * v;
}

}  // namespace bihcp::testing
