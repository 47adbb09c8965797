#include "modlab/hilbert.hpp"

#include <cmath>

namespace modlab {

HilbertVector HilbertVector::from_sampler(const TimeGrid& grid,
                                          std::function<L2Vector(cd)> sampler,
                                          bool slow_decay) {
  HilbertVector v;
  v.grid = grid;
  v.values.reserve(grid.size());
  for (int j = 0; j < grid.size(); ++j) v.values.push_back(sampler(grid.t(j)));
  v.sampler = std::move(sampler);
  v.slow_decay = slow_decay;
  return v;
}

HilbertVector HilbertVector::star() const {
  HilbertVector out;
  out.grid = grid;
  out.values.reserve(values.size());
  for (size_t j = 0; j < values.size(); ++j)
    out.values.push_back(values[values.size() - 1 - j].star());
  if (sampler) {
    auto s = sampler;
    // holomorphic reflection of t -> xi(-t)^*
    out.sampler = [s](cd z) { return s(-std::conj(z)).star(); };
  }
  out.slow_decay = slow_decay;
  return out;
}

static void check_grids(const HilbertVector& a, const HilbertVector& b) {
  if (!(a.grid == b.grid))
    throw GridMismatch("HilbertVector: operands on different grids");
}

HilbertVector HilbertVector::operator+(const HilbertVector& o) const {
  check_grids(*this, o);
  HilbertVector out;
  out.grid = grid;
  out.values.reserve(values.size());
  for (size_t j = 0; j < values.size(); ++j)
    out.values.push_back(values[j] + o.values[j]);
  if (sampler && o.sampler) {
    auto s1 = sampler, s2 = o.sampler;
    out.sampler = [s1, s2](cd z) { return s1(z) + s2(z); };
  }
  out.slow_decay = slow_decay || o.slow_decay;
  return out;
}

HilbertVector HilbertVector::operator-(const HilbertVector& o) const {
  return *this + o * cd(-1, 0);
}

HilbertVector HilbertVector::operator*(cd s) const {
  HilbertVector out;
  out.grid = grid;
  out.values.reserve(values.size());
  for (const auto& v : values) out.values.push_back(v * s);
  if (sampler) {
    auto base = sampler;
    out.sampler = [base, s](cd z) { return base(z) * s; };
  }
  out.slow_decay = slow_decay;
  return out;
}

double HilbertVector::norm(const Tolerances& tol) const {
  return std::sqrt(std::max(0.0, hilbert_inner(*this, *this, tol).real()));
}

cd hilbert_inner(const HilbertVector& f, const HilbertVector& g,
                 const Tolerances& tol) {
  (void)tol;
  check_grids(f, g);
  const int n = f.grid.size();
  std::vector<cd> core(n);
  for (int j = 0; j < n; ++j) core[j] = inner(f.values[j], g.values[j]);
  cd total = trapezoid(f.grid, core);

  if (f.slow_decay || g.slow_decay) {
    if (!f.sampler || !g.sampler)
      throw NumericalFailure(
          "hilbert_inner: slow-decay vector without a sampler for the tail");
    const double T = f.grid.T;
    const int nt = 512;
    std::vector<cd> tail(nt + 1);
    for (int j = 0; j <= nt; ++j) {
      double u = static_cast<double>(j) / nt;
      if (j == 0) u = 1e-8;
      const double t = T / u;
      tail[j] = (inner(f.sampler(t), g.sampler(t)) +
                 inner(f.sampler(-t), g.sampler(-t))) *
                (T / (u * u));
    }
    total += simpson(1.0 / nt, tail);
  }
  return total;
}

HilbertVector act_left(const AlgebraElement& a, const HilbertVector& xi) {
  HilbertVector out;
  out.grid = xi.grid;
  out.values.reserve(xi.values.size());
  for (const auto& v : xi.values) out.values.push_back(act(a, v, Side::Left));
  if (xi.sampler) {
    auto s = xi.sampler;
    out.sampler = [a, s](cd z) { return act(a, s(z), Side::Left); };
  }
  out.slow_decay = xi.slow_decay;
  return out;
}

HilbertVector apply_dual_action(double s, const HilbertVector& xi) {
  HilbertVector out;
  out.grid = xi.grid;
  out.values.reserve(xi.values.size());
  for (int j = 0; j < xi.grid.size(); ++j)
    out.values.push_back(xi.values[j] * std::exp(cd(0, -s * xi.grid.t(j))));
  if (xi.sampler) {
    auto base = xi.sampler;
    out.sampler = [base, s](cd z) {
      return base(z) * std::exp(cd(0, -s) * z);
    };
  }
  out.slow_decay = xi.slow_decay;
  return out;
}

HilbertVector left_translate(const Functional& omega, double u,
                             const HilbertVector& xi, const Tolerances& tol) {
  const AlgebraElement P = omega.power(cd(0, u), tol);
  HilbertVector out;
  out.grid = xi.grid;
  if (xi.sampler) {
    auto base = xi.sampler;
    out.sampler = [base, P, u](cd z) {
      return act(P, base(z - u), Side::Left);
    };
    out.values.reserve(xi.grid.size());
    for (int j = 0; j < xi.grid.size(); ++j)
      out.values.push_back(out.sampler(xi.grid.t(j)));
  } else {
    // grid-only vector: the shift must land on the lattice
    const int shift = xi.grid.index(u) - xi.grid.m;
    out.values.assign(xi.grid.size(), L2Vector());
    for (int j = 0; j < xi.grid.size(); ++j) {
      const int src = j - shift;
      if (src >= 0 && src < xi.grid.size())
        out.values[j] = act(P, xi.values[src], Side::Left);
      else
        out.values[j] = xi.values[xi.grid.m] * cd(0, 0);
    }
  }
  out.slow_decay = xi.slow_decay;
  return out;
}

}  // namespace modlab
