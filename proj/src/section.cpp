#include "modlab/section.hpp"

#include <cmath>
#include <numbers>

#include "modlab/fft.hpp"

namespace modlab {

std::shared_ptr<const TwistCache> TwistCache::build(const Functional& ref,
                                                    const TimeGrid& grid,
                                                    const Tolerances& tol) {
  auto cache = std::make_shared<TwistCache>();
  cache->grid = grid;
  cache->powers.reserve(grid.size());
  for (int j = 0; j < grid.size(); ++j)
    cache->powers.push_back(ref.power(cd(0, grid.t(j)), tol));
  return cache;
}

GridSection::GridSection(TimeGrid g, Functional ref,
                         std::vector<AlgebraElement> vals, DecayCertificate dec,
                         const Tolerances& tol)
    : grid(g), reference(std::move(ref)), values(std::move(vals)), decay(dec) {
  if (static_cast<int>(values.size()) != grid.size())
    throw GridMismatch("GridSection: value count does not match grid");
  if (!reference.faithful(tol))
    throw NotFaithful("GridSection: reference state must be faithful");
  for (const auto& v : values)
    if (!v.compatible_with(reference.algebra()))
      throw AlgebraMismatch("GridSection: value shape mismatch");
}

double GridSection::l1_norm() const {
  double s = 0;
  for (const auto& v : values) s += v.op_norm();
  return s * grid.dt;
}

double GridSection::linf_norm() const {
  double s = 0;
  for (const auto& v : values) s = std::max(s, v.op_norm());
  return s;
}

bool GridSection::decay_holds(double slack) const {
  for (int j = 0; j < grid.size(); ++j) {
    const double t = grid.t(j);
    if (values[j].op_norm() > decay.C * std::exp(-decay.delta * t * t) + slack)
      return false;
  }
  return true;
}

GridSection scalar_section(const TimeGrid& grid, const Functional& ref,
                           const std::function<cd(double)>& envelope,
                           const AlgebraElement& value, DecayCertificate decay) {
  std::vector<AlgebraElement> vals;
  vals.reserve(grid.size());
  for (int j = 0; j < grid.size(); ++j) vals.push_back(value * envelope(grid.t(j)));
  return GridSection(grid, ref, std::move(vals), decay);
}

static void check_pair(const GridSection& f, const GridSection& g) {
  if (!(f.grid == g.grid)) throw GridMismatch("sections on different grids");
  if ((f.reference.density() - g.reference.density()).op_norm() > 1e-14)
    throw ReferenceMismatch("sections with different reference states");
}

static std::shared_ptr<const TwistCache> ensure_cache(
    const GridSection& f, std::shared_ptr<const TwistCache> cache,
    const Tolerances& tol) {
  if (cache && cache->grid == f.grid) return cache;
  return TwistCache::build(f.reference, f.grid, tol);
}

static DecayCertificate convolved_decay(const DecayCertificate& a,
                                        const DecayCertificate& b) {
  // product of Gaussian envelopes integrates to a Gaussian of exponent
  // eps*delta/(eps+delta) and amplitude C_f C_g sqrt(pi/(eps+delta))
  DecayCertificate d;
  const double sum = a.delta + b.delta;
  d.delta = a.delta * b.delta / sum;
  d.C = a.C * b.C * std::sqrt(std::numbers::pi / sum);
  return d;
}

GridSection convolve(const GridSection& f, const GridSection& g,
                     std::shared_ptr<const TwistCache> cache,
                     const Tolerances& tol) {
  check_pair(f, g);
  auto cc = ensure_cache(f, cache, tol);
  const int n = f.grid.size();
  const int m = f.grid.m;
  const auto& alg = f.algebra();

  std::vector<AlgebraElement> out(n, AlgebraElement::zero(alg));
  // rotate: ta(j) = a(t_j) rho^{i t_j}, tb likewise; then classical
  // convolution and a final rotation by rho^{-i t} per output point.
  for (int k = 0; k < alg.block_count(); ++k) {
    const int d = alg.blocks[k];
    // frequency-domain matrix convolution: FFT each entry, multiply blockwise
    size_t need = 2 * static_cast<size_t>(n) - 1;
    size_t nfft = 1;
    while (nfft < need) nfft <<= 1;

    std::vector<std::vector<cd>> fa(d * d, std::vector<cd>(nfft, cd(0, 0)));
    std::vector<std::vector<cd>> fb(d * d, std::vector<cd>(nfft, cd(0, 0)));
    for (int j = 0; j < n; ++j) {
      Mat ta = f.values[j].blocks[k] * cc->powers[j].blocks[k];
      Mat tb = g.values[j].blocks[k] * cc->powers[j].blocks[k];
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          fa[r * d + c][j] = ta(r, c);
          fb[r * d + c][j] = tb(r, c);
        }
    }
    for (auto& v : fa) fft(v, false);
    for (auto& v : fb) fft(v, false);

    std::vector<std::vector<cd>> fc(d * d, std::vector<cd>(nfft, cd(0, 0)));
    Mat A(d, d), B(d, d);
    for (size_t w = 0; w < nfft; ++w) {
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          A(r, c) = fa[r * d + c][w];
          B(r, c) = fb[r * d + c][w];
        }
      Mat C = A * B;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) fc[r * d + c][w] = C(r, c);
    }
    for (auto& v : fc) fft(v, true);

    // linear-convolution index l = j + j' maps to output index o = l - m
    for (int o = 0; o < n; ++o) {
      const int l = o + m;
      Mat C(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) C(r, c) = fc[r * d + c][l];
      // undo the rotation: multiply by rho^{-i t_o} = powers[o]^dagger
      out[o].blocks[k] = (C * cc->powers[o].blocks[k].adjoint()) * f.grid.dt;
    }
  }
  return GridSection(f.grid, f.reference, std::move(out),
                     convolved_decay(f.decay, g.decay), tol);
}

GridSection convolve_direct(const GridSection& f, const GridSection& g,
                            std::shared_ptr<const TwistCache> cache,
                            const Tolerances& tol) {
  check_pair(f, g);
  auto cc = ensure_cache(f, cache, tol);
  const int n = f.grid.size();
  const auto& alg = f.algebra();

  // skip negligible contributions
  double fmax = f.linf_norm(), gmax = g.linf_norm();
  const double eps_f = 1e-300 + 1e-18 * fmax;
  const double eps_g = 1e-300 + 1e-18 * gmax;
  std::vector<bool> fs(n), gs(n);
  for (int j = 0; j < n; ++j) {
    fs[j] = f.values[j].op_norm() > eps_f;
    gs[j] = g.values[j].op_norm() > eps_g;
  }

  std::vector<AlgebraElement> out(n, AlgebraElement::zero(alg));
  for (int o = 0; o < n; ++o) {
    for (int j = 0; j < n; ++j) {
      if (!fs[j]) continue;
      const int u = o - j + f.grid.m;  // index of t_o - t_j
      if (u < 0 || u >= n || !gs[u]) continue;
      for (int k = 0; k < alg.block_count(); ++k) {
        const Mat& P = cc->powers[j].blocks[k];
        out[o].blocks[k] +=
            f.values[j].blocks[k] *
            (P * g.values[u].blocks[k] * P.adjoint()) * f.grid.dt;
      }
    }
  }
  return GridSection(f.grid, f.reference, std::move(out),
                     convolved_decay(f.decay, g.decay), tol);
}

GridSection star(const GridSection& f, std::shared_ptr<const TwistCache> cache,
                 const Tolerances& tol) {
  auto cc = ensure_cache(f, cache, tol);
  const int n = f.grid.size();
  std::vector<AlgebraElement> out;
  out.reserve(n);
  for (int j = 0; j < n; ++j) {
    const int neg = n - 1 - j;  // index of -t_j
    AlgebraElement v = f.values[neg].adjoint();
    AlgebraElement t = AlgebraElement::zero(f.algebra());
    for (int k = 0; k < f.algebra().block_count(); ++k) {
      const Mat& P = cc->powers[j].blocks[k];
      t.blocks[k] = P * v.blocks[k] * P.adjoint();
    }
    out.push_back(std::move(t));
  }
  return GridSection(f.grid, f.reference, std::move(out), f.decay, tol);
}

GridSection scale_theta(const GridSection& f, double s) {
  std::vector<AlgebraElement> out;
  out.reserve(f.grid.size());
  for (int j = 0; j < f.grid.size(); ++j)
    out.push_back(f.values[j] * std::exp(cd(0, -s * f.grid.t(j))));
  GridSection g = f;
  g.values = std::move(out);
  return g;
}

}  // namespace modlab
