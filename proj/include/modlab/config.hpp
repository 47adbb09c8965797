#pragma once

namespace modlab {

/// Numerical tolerances and cutoffs. Defaults are absolute on unit-scale
/// inputs; everything is overridable per call site or from the CLI config.
struct Tolerances {
  double support_cutoff = 1e-12;  // relative to the largest eigenvalue
  double hermitian_tol = 1e-10;
  double reconstruct_tol = 1e-10;
  double power_tol = 1e-10;
  double majorize_tol = 1e-8;
  double bound_tol = 1e-8;
  double kms_tol = 1e-10;
  double conv_tol = 1e-8;
  double axiom_tol = 1e-9;
  double haagerup_tol = 1e-5;
  double corr_tol = 1e-5;
  double pole_margin = 1e-3;

  Tolerances scaled(double s) const {
    Tolerances t = *this;
    t.hermitian_tol *= s;
    t.reconstruct_tol *= s;
    t.power_tol *= s;
    t.majorize_tol *= s;
    t.bound_tol *= s;
    t.kms_tol *= s;
    t.conv_tol *= s;
    t.axiom_tol *= s;
    t.haagerup_tol *= s;
    t.corr_tol *= s;
    return t;
  }
};

inline const Tolerances& default_tol() {
  static const Tolerances t{};
  return t;
}

}  // namespace modlab
