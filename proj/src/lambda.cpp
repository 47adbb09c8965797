#include "modlab/lambda.hpp"

#include <cmath>

#include "modlab/quadrature.hpp"

namespace modlab {

LambdaFunction LambdaFunction::zero(const LambdaGrid& grid) {
  LambdaFunction m;
  m.grid = grid;
  m.values.assign(grid.size(), cd(0, 0));
  return m;
}

LambdaFunction LambdaFunction::from_function(
    const LambdaGrid& grid, const std::function<cd(double)>& f) {
  LambdaFunction m = zero(grid);
  for (int j = 0; j < grid.size(); ++j) m.values[j] = f(grid.lambda(j));
  m.left0 = m.right0 = f(0.0);
  return m;
}

LambdaFunction LambdaFunction::indicator_exp(const LambdaGrid& grid, cd mu,
                                             cd amp, bool lower) {
  LambdaFunction m = zero(grid);
  for (int j = 0; j < grid.size(); ++j) {
    const double l = grid.lambda(j);
    const bool in = lower ? l < 0 : l > 0;
    if (in) m.values[j] = amp * std::exp(mu * l);
  }
  if (lower)
    m.left0 = amp;
  else
    m.right0 = amp;
  m.values[grid.m] = 0.5 * (m.left0 + m.right0);
  return m;
}

static void check_grids(const LambdaFunction& a, const LambdaFunction& b) {
  if (!(a.grid == b.grid))
    throw GridMismatch("LambdaFunction: operands on different grids");
}

LambdaFunction LambdaFunction::operator+(const LambdaFunction& o) const {
  check_grids(*this, o);
  LambdaFunction m = *this;
  for (int j = 0; j < grid.size(); ++j) m.values[j] += o.values[j];
  m.left0 += o.left0;
  m.right0 += o.right0;
  return m;
}

LambdaFunction LambdaFunction::operator-(const LambdaFunction& o) const {
  return *this + o * cd(-1, 0);
}

LambdaFunction LambdaFunction::operator*(cd s) const {
  LambdaFunction m = *this;
  for (auto& v : m.values) v *= s;
  m.left0 *= s;
  m.right0 *= s;
  return m;
}

double LambdaFunction::sup_distance(const LambdaFunction& o) const {
  check_grids(*this, o);
  double d = 0;
  for (int j = 0; j < grid.size(); ++j) {
    if (j == grid.m) continue;
    d = std::max(d, std::abs(values[j] - o.values[j]));
  }
  d = std::max(d, std::abs(left0 - o.left0));
  d = std::max(d, std::abs(right0 - o.right0));
  return d;
}

LambdaFunction abs_squared(const LambdaFunction& m, double floor_rel) {
  double peak = std::max(std::abs(m.left0), std::abs(m.right0));
  for (const auto& v : m.values) peak = std::max(peak, std::abs(v));
  const double floor = floor_rel * peak;
  auto sq = [floor](cd v) {
    return std::abs(v) < floor ? cd(0, 0) : cd(std::norm(v), 0);
  };
  LambdaFunction out = m;
  for (auto& v : out.values) v = sq(v);
  out.left0 = sq(m.left0);
  out.right0 = sq(m.right0);
  return out;
}

cd LambdaFunction::integrate(const std::function<cd(double)>& weight) const {
  const int n = grid.size();
  std::vector<cd> lo(grid.m + 1), hi(n - grid.m);
  for (int j = 0; j < grid.m; ++j) lo[j] = values[j] * weight(grid.lambda(j));
  lo[grid.m] = left0 * weight(0.0);
  hi[0] = right0 * weight(0.0);
  for (int j = grid.m + 1; j < n; ++j)
    hi[j - grid.m] = values[j] * weight(grid.lambda(j));
  return simpson(grid.dl, lo) + simpson(grid.dl, hi);
}

}  // namespace modlab
