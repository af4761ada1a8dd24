#pragma once

namespace bihcp {

/// Every verdict produced by the library is taken against one of these
/// thresholds, and reports carry the whole struct.
struct ToleranceConfig {
  // Acceptance thresholds.
  double unit_norm = 1e-10;
  double orthogonality = 1e-10;
  double residual = 1e-8;
  double classification = 1e-6;
  double minimality = 1e-9;
  double vertical_detection = 1e-8;

  // Numerical-method parameters; `uniform` leaves these alone.
  double rank_truncation = 1e-7;
  double fd_step = 1e-4;

  /// Defaults with every acceptance threshold replaced by `tol`.
  static ToleranceConfig uniform(double tol) {
    ToleranceConfig t;
    t.unit_norm = tol;
    t.orthogonality = tol;
    t.residual = tol;
    t.classification = tol;
    t.minimality = tol;
    t.vertical_detection = tol;
    return t;
  }
};

}  // namespace bihcp
