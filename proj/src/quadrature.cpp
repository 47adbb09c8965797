#include "modlab/quadrature.hpp"

namespace modlab {

cd trapezoid(const TimeGrid& grid, const std::vector<cd>& samples) {
  if (static_cast<int>(samples.size()) != grid.size())
    throw GridMismatch("trapezoid: sample count does not match grid");
  cd s = 0;
  for (size_t j = 1; j + 1 < samples.size(); ++j) s += samples[j];
  s += 0.5 * (samples.front() + samples.back());
  return s * grid.dt;
}

cd simpson(double step, const std::vector<cd>& samples) {
  const size_t n = samples.size();
  if (n < 2) return cd(0, 0);
  size_t intervals = n - 1;
  cd s = 0;
  size_t even_part = (intervals % 2 == 0) ? intervals : intervals - 1;
  for (size_t j = 0; j + 2 <= even_part; j += 2)
    s += (samples[j] + 4.0 * samples[j + 1] + samples[j + 2]) * (step / 3.0);
  if (intervals % 2 == 1)
    s += 0.5 * step * (samples[n - 2] + samples[n - 1]);
  return s;
}

cd integrate_line(const TimeGrid& grid, const std::function<cd(double)>& f,
                  bool with_tail, int tail_intervals) {
  std::vector<cd> core(grid.size());
  for (int j = 0; j < grid.size(); ++j) core[j] = f(grid.t(j));
  cd total = trapezoid(grid, core);
  if (with_tail) {
    // t = T/u, dt = -T/u^2 du; u = 0 endpoint evaluated near the limit
    const double T = grid.T;
    const int n = tail_intervals;
    std::vector<cd> g(n + 1);
    for (int j = 0; j <= n; ++j) {
      double u = static_cast<double>(j) / n;
      if (j == 0) u = 1e-8;
      const double t = T / u;
      g[j] = (f(t) + f(-t)) * (T / (u * u));
    }
    total += simpson(1.0 / n, g);
  }
  return total;
}

}  // namespace modlab
