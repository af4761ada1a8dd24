#pragma once

#include <functional>
#include <vector>

namespace bihcp {

/// Real roots of a t^2 + b t + c, ascending, without cancellation in the
/// smaller-magnitude root. A double root is returned once.
std::vector<double> quadratic_roots(double a, double b, double c);

/// Roots of f on the open interval (lo, hi): sign changes on a uniform grid of
/// `grid` cells, each refined by safeguarded Newton inside its bracket.
/// Tangential (even multiplicity) roots are not found.
std::vector<double> bracketed_roots(const std::function<double(double)>& f,
                                    const std::function<double(double)>& df, double lo, double hi,
                                    int grid = 10000);

}  // namespace bihcp
