#include "bihcp/roots.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

namespace bihcp {

std::vector<double> quadratic_roots(double a, double b, double c) {
  if (a == 0.0) {
    if (b == 0.0) return {};
    return {-c / b};
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return {};
  if (disc == 0.0) return {-b / (2.0 * a)};
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double r1 = q / a;
  double r2 = c / q;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

std::vector<double> bracketed_roots(const std::function<double(double)>& f,
                                    const std::function<double(double)>& df, double lo, double hi,
                                    int grid) {
  std::vector<double> roots;
  const double step = (hi - lo) / grid;
  // Endpoints are pulled inside so f is never evaluated on the boundary.
  auto node = [&](int i) {
    if (i == 0) return lo + step * 1e-6;
    if (i == grid) return hi - step * 1e-6;
    return lo + i * step;
  };
  double x0 = node(0);
  double f0 = f(x0);
  for (int i = 1; i <= grid; ++i) {
    const double x1 = node(i);
    const double f1 = f(x1);
    if (f0 == 0.0) {
      roots.push_back(x0);
    } else if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0) {
      std::uintmax_t iters = 100;
      const double r = boost::math::tools::newton_raphson_iterate(
          [&](double x) { return std::make_pair(f(x), df(x)); }, 0.5 * (x0 + x1), x0, x1,
          std::numeric_limits<double>::digits, iters);
      roots.push_back(r);
    }
    x0 = x1;
    f0 = f1;
  }
  if (f0 == 0.0) roots.push_back(x0);
  return roots;
}

}  // namespace bihcp
