#pragma once

#include <functional>
#include <vector>

#include "modlab/grid.hpp"
#include "modlab/matrix.hpp"

namespace modlab {

/// Trapezoid over the grid samples only (no tail).
cd trapezoid(const TimeGrid& grid, const std::vector<cd>& samples);

/// Integral of f over R: trapezoid on [-T, T] plus, when with_tail is set,
/// the remainder over |t| > T via the substitution t = T/u (Simpson in u).
/// The tail assumes |f| = O(1/t^2), which covers the Lorentzian boundary
/// profiles of the rational interpolators.
cd integrate_line(const TimeGrid& grid, const std::function<cd(double)>& f,
                  bool with_tail, int tail_intervals = 512);

/// Composite Simpson of the samples on a uniform step (trapezoid fallback on
/// a trailing odd interval).
cd simpson(double step, const std::vector<cd>& samples);

}  // namespace modlab
