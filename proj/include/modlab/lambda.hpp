#pragma once

#include <functional>
#include <vector>

#include "modlab/grid.hpp"
#include "modlab/matrix.hpp"

namespace modlab {

/// Multiplication operator on the spectral model L^2(R, e^lambda dlambda),
/// sampled on a uniform lambda grid. The value at lambda = 0 is kept as a
/// two-sided pair (left0, right0) because the boundary operators of rational
/// interpolators jump there; values[grid.m] holds the average for display.
struct LambdaFunction {
  LambdaGrid grid;
  std::vector<cd> values;
  cd left0{0, 0};
  cd right0{0, 0};

  static LambdaFunction zero(const LambdaGrid& grid);
  /// Continuous profile: left0 = right0 = f(0).
  static LambdaFunction from_function(const LambdaGrid& grid,
                                      const std::function<cd(double)>& f);
  /// amp * e^{mu lambda} restricted to lambda <= 0 (lower) or lambda >= 0.
  static LambdaFunction indicator_exp(const LambdaGrid& grid, cd mu, cd amp,
                                      bool lower);

  LambdaFunction operator+(const LambdaFunction& o) const;
  LambdaFunction operator-(const LambdaFunction& o) const;
  LambdaFunction operator*(cd s) const;

  /// sup_j |m - o| over the grid, comparing both one-sided values at 0.
  double sup_distance(const LambdaFunction& o) const;

  /// int m(lambda) w(lambda) dlambda, composite Simpson split at lambda = 0
  /// so the jump costs no accuracy.
  cd integrate(const std::function<cd(double)>& weight) const;
};

/// |m|^2 pointwise. Magnitudes below floor_rel * max|m| are clipped to zero
/// first: the e^lambda weight of the spectral model would otherwise blow
/// discrete-Fourier roundoff at the top of the grid into a finite error.
LambdaFunction abs_squared(const LambdaFunction& m, double floor_rel = 0.0);

}  // namespace modlab
