#pragma once

#include <cmath>

#include "modlab/errors.hpp"

namespace modlab {

/// Uniform symmetric time grid: 2m+1 points t_j = (j - m) dt covering [-T, T].
struct TimeGrid {
  double T = 40.0;
  double dt = 0.01;
  int m = 4000;

  TimeGrid() = default;
  TimeGrid(double half_width, double step) : T(half_width), dt(step) {
    if (half_width <= 0 || step <= 0)
      throw ConfigInvalid("TimeGrid: T and dt must be positive");
    m = static_cast<int>(std::floor(half_width / step + 1e-9));
    if (m < 1) throw ConfigInvalid("TimeGrid: fewer than 3 points");
    T = m * dt;  // snap so the endpoints lie on the lattice
  }

  int size() const { return 2 * m + 1; }
  double t(int idx) const { return (idx - m) * dt; }

  /// Index of a lattice time; throws if t is not on the grid.
  int index(double time) const {
    double j = time / dt + m;
    int idx = static_cast<int>(std::lround(j));
    if (idx < 0 || idx >= size() || std::abs(j - idx) > 1e-6)
      throw GridMismatch("TimeGrid: time not on the lattice");
    return idx;
  }

  bool operator==(const TimeGrid& o) const {
    return m == o.m && std::abs(dt - o.dt) < 1e-15;
  }
};

/// Uniform lambda grid on [-L, L] for the spectral model L^2(R, e^lambda dlambda).
struct LambdaGrid {
  double L = 60.0;
  double dl = 0.01;
  int m = 6000;

  LambdaGrid() = default;
  LambdaGrid(double half_width, double step) : L(half_width), dl(step) {
    if (half_width <= 0 || step <= 0)
      throw ConfigInvalid("LambdaGrid: L and dlambda must be positive");
    m = static_cast<int>(std::floor(half_width / step + 1e-9));
    if (m < 1) throw ConfigInvalid("LambdaGrid: fewer than 3 points");
    L = m * dl;
  }

  int size() const { return 2 * m + 1; }
  double lambda(int idx) const { return (idx - m) * dl; }

  bool operator==(const LambdaGrid& o) const {
    return m == o.m && std::abs(dl - o.dl) < 1e-15;
  }
};

}  // namespace modlab
