#include "modlab/interpolator.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "modlab/fft.hpp"

namespace modlab {

namespace {
constexpr double kPoleHitRadius = 1e-9;
}

Envelope Envelope::gaussian(double alpha, cd beta, cd amplitude,
                            std::vector<cd> poly) {
  if (alpha <= 0)
    throw ConfigInvalid("Envelope: gaussian_poly needs alpha > 0");
  Envelope e;
  e.kind = EnvelopeKind::GaussianPoly;
  e.alpha = alpha;
  e.beta = beta;
  e.amplitude = amplitude;
  e.poly = poly.empty() ? std::vector<cd>{cd(1, 0)} : std::move(poly);
  return e;
}

Envelope Envelope::rational(cd mu, cd amplitude) {
  Envelope e;
  e.kind = EnvelopeKind::RationalPole;
  e.mu = mu;
  e.amplitude = amplitude;
  return e;
}

cd Envelope::operator()(cd z) const {
  if (kind == EnvelopeKind::RationalPole)
    return amplitude / (mu + cd(0, 1) * z);
  cd p = 0;
  for (size_t k = poly.size(); k-- > 0;) p = p * z + poly[k];
  return amplitude * std::exp(-alpha * z * z + beta * z) * p;
}

std::optional<cd> Envelope::pole() const {
  if (kind == EnvelopeKind::RationalPole) return cd(0, 1) * mu;
  return std::nullopt;
}

Envelope Envelope::star() const {
  Envelope e = *this;
  e.amplitude = std::conj(amplitude);
  if (kind == EnvelopeKind::RationalPole) {
    e.mu = std::conj(mu);
    return e;
  }
  e.beta = -std::conj(beta);
  for (size_t k = 0; k < e.poly.size(); ++k) {
    e.poly[k] = std::conj(poly[k]);
    if (k % 2 == 1) e.poly[k] = -e.poly[k];
  }
  return e;
}

Envelope Envelope::phase(double s) const {
  if (kind == EnvelopeKind::RationalPole)
    throw UnsupportedForm("Envelope: phase twist leaves the rational library");
  Envelope e = *this;
  e.beta = beta + cd(0, -s);
  return e;
}

std::vector<cd> InterpolatorSpec::poles() const {
  std::vector<cd> out;
  for (const auto& t : terms)
    if (auto p = t.env.pole()) out.push_back(*p);
  return out;
}

bool InterpolatorSpec::gaussian_class() const {
  for (const auto& t : terms)
    if (t.env.kind == EnvelopeKind::RationalPole) return false;
  return true;
}

std::optional<Functional> InterpolatorSpec::common_state(double tol) const {
  if (terms.empty()) return std::nullopt;
  const Functional& first = terms.front().state;
  for (const auto& t : terms) {
    if (!(t.state.algebra() == first.algebra())) return std::nullopt;
    if ((t.state.density() - first.density()).op_norm() > tol)
      return std::nullopt;
  }
  return first;
}

InterpolatorSpec scalar_spec(Envelope env, const Functional& phi,
                             const AlgebraElement& left,
                             const AlgebraElement& right) {
  InterpolatorSpec spec;
  spec.terms.push_back({std::move(env), left, phi, right});
  return spec;
}

AlgebraElement evaluate_interpolator(const InterpolatorSpec& spec, cd z,
                                     const Tolerances& tol) {
  if (z.imag() > 1e-9 || z.imag() < -1.0 - 1e-9)
    throw OutOfStrip("evaluate_interpolator: Im z outside [-1, 0]");
  for (cd p : spec.poles())
    if (std::abs(z - p) < kPoleHitRadius)
      throw PoleHit("evaluate_interpolator: z hits an envelope pole");
  if (spec.terms.empty())
    throw ConfigInvalid("evaluate_interpolator: empty spec");
  AlgebraElement out = AlgebraElement::zero(spec.terms.front().state.algebra());
  for (const auto& t : spec.terms)
    out = out +
          (t.left * t.state.power(cd(0, 1) * z, tol) * t.right) * t.env(z);
  return out;
}

InterpolatorSpec star_spec(const InterpolatorSpec& spec) {
  InterpolatorSpec out;
  out.strip = spec.strip;
  for (const auto& t : spec.terms)
    out.terms.push_back(
        {t.env.star(), t.right.adjoint(), t.state, t.left.adjoint()});
  return out;
}

InterpolatorSpec theta_spec(const InterpolatorSpec& spec, double s) {
  InterpolatorSpec out;
  out.strip = spec.strip;
  for (const auto& t : spec.terms)
    out.terms.push_back({t.env.phase(s), t.left, t.state, t.right});
  return out;
}

double compatibility_residual(const InterpolatorSpec& spec,
                              const Functional& omega, double w,
                              const Tolerances& tol) {
  const AlgebraElement f = evaluate_interpolator(spec, w, tol);
  const AlgebraElement u = omega.power(cd(0, w), tol);
  const AlgebraElement ustar = omega.power(cd(0, -w), tol);
  // sigma^omega_w(omega^{-iw} f(w)) vs f(w) omega^{-iw}
  const AlgebraElement lhs = u * (ustar * f) * ustar;
  const AlgebraElement rhs = f * ustar;
  return (lhs - rhs).op_norm();
}

HilbertVector boundary_vector(const InterpolatorSpec& spec,
                              const TimeGrid& grid, const Tolerances& tol) {
  bool slow = false;
  for (const auto& t : spec.terms) {
    if (t.env.kind != EnvelopeKind::RationalPole) continue;
    slow = true;
    if (std::abs(t.env.mu.real() + 0.5) < tol.pole_margin)
      throw NotSquareIntegrable(
          "boundary_vector: rational pole on the critical line Re mu = -1/2");
  }
  auto terms = spec.terms;
  Tolerances tl = tol;
  auto sampler = [terms, tl](cd w) {
    L2Vector v;
    for (const auto& t : terms) {
      L2Vector part(t.left * t.state.power(cd(0, 1) * w + 0.5, tl) * t.right);
      part = part * t.env(w - cd(0, 0.5));
      v = v.blocks.empty() ? part : v + part;
    }
    return v;
  };
  return HilbertVector::from_sampler(grid, sampler, slow);
}

DecayCertificate derive_decay(const InterpolatorSpec& spec,
                              const TimeGrid& grid, const Tolerances& tol) {
  if (!spec.gaussian_class())
    throw NotInN("derive_decay: only gaussian-class specs carry a certificate");
  double delta = std::numeric_limits<double>::infinity();
  for (const auto& t : spec.terms) delta = std::min(delta, t.env.alpha / 2);
  DecayCertificate cert;
  cert.delta = delta;
  auto v = boundary_vector(spec, grid, tol);
  for (int j = 0; j < grid.size(); ++j) {
    const double t = grid.t(j);
    cert.C = std::max(cert.C, v.values[j].norm() * std::exp(delta * t * t));
  }
  cert.C *= 1.0 + 1e-9;
  return cert;
}

GridSection to_section(const InterpolatorSpec& spec, const TimeGrid& grid,
                       const Tolerances& tol) {
  if (!spec.gaussian_class())
    throw NotInN("to_section: rational specs are not grid sections");
  auto state = spec.common_state();
  if (!state)
    throw UnsupportedForm("to_section: terms must share one reference state");
  auto cache = TwistCache::build(*state, grid, tol);
  std::vector<AlgebraElement> vals;
  vals.reserve(grid.size());
  for (int j = 0; j < grid.size(); ++j) {
    AlgebraElement a = AlgebraElement::zero(state->algebra());
    for (const auto& t : spec.terms)
      a = a + (t.left * (cache->powers[j] * t.right *
                         cache->powers[j].adjoint())) *
                  t.env(grid.t(j));
    vals.push_back(std::move(a));
  }
  // level-0 certificate from the same fit as the boundary one
  double delta = std::numeric_limits<double>::infinity();
  for (const auto& t : spec.terms) delta = std::min(delta, t.env.alpha / 2);
  DecayCertificate cert;
  cert.delta = delta;
  for (int j = 0; j < grid.size(); ++j)
    cert.C = std::max(cert.C, vals[j].op_norm() *
                                  std::exp(delta * grid.t(j) * grid.t(j)));
  cert.C *= 1.0 + 1e-9;
  return GridSection(grid, *state, std::move(vals), cert, tol);
}

namespace {

cd scalar_of(const AlgebraElement& x, const char* where) {
  cd c = 0;
  int dim = 0;
  for (const auto& b : x.blocks) {
    c += b.trace();
    dim += static_cast<int>(b.rows());
  }
  c /= static_cast<double>(dim);
  double err = 0;
  for (const auto& b : x.blocks)
    err = std::max(err, (b - c * Mat::Identity(b.rows(), b.cols()))
                            .cwiseAbs()
                            .maxCoeff());
  if (err > 1e-10 * (1.0 + std::abs(c)))
    throw UnsupportedForm(std::string(where) +
                          ": factor is not a scalar multiple of the identity");
  return c;
}

void require_common_state(const InterpolatorSpec& spec, const char* where) {
  if (!spec.common_state())
    throw UnsupportedForm(std::string(where) +
                          ": terms must share one state for the spectral form");
}

/// m(lambda_k) = sum_j s_j e^{-i lambda_k t_j} dt via chirp-z.
std::vector<cd> fourier_lambda(const TimeGrid& tg, const std::vector<cd>& s,
                               const LambdaGrid& lg) {
  const double w = lg.dl * tg.dt;
  const int N = tg.size();
  const int K = lg.size();
  std::vector<cd> x(N);
  for (int j = 0; j < N; ++j)
    x[j] = s[j] * std::exp(cd(0, w * lg.m * j)) * tg.dt;
  auto out = czt(x, w, static_cast<size_t>(K));
  const cd fixed = std::exp(cd(0, -w * static_cast<double>(lg.m) * tg.m));
  for (int k = 0; k < K; ++k)
    out[k] *= std::exp(cd(0, w * tg.m * k)) * fixed;
  return out;
}

LambdaFunction rational_boundary(const LambdaGrid& lg, cd mu, cd amp) {
  const double two_pi = 2 * std::numbers::pi;
  auto at_shift = [&](double r) {
    if (mu.real() >= 0)
      return LambdaFunction::indicator_exp(lg, mu + r, amp * two_pi, true);
    return LambdaFunction::indicator_exp(lg, mu + r, -amp * two_pi, false);
  };
  double r0 = 1e-7;
  if (mu.real() < 0) r0 = std::min(r0, -mu.real() / 4);
  // horizontal-shift limit r -> +0, one Richardson step
  return at_shift(r0) * cd(2, 0) - at_shift(2 * r0);
}

}  // namespace

LambdaFunction boundary_operator(const InterpolatorSpec& spec,
                                 const LambdaGrid& lgrid,
                                 const TimeGrid& tgrid,
                                 const Tolerances& tol) {
  (void)tol;
  require_common_state(spec, "boundary_operator");
  LambdaFunction m = LambdaFunction::zero(lgrid);
  std::vector<cd> gaussian_profile(tgrid.size(), cd(0, 0));
  bool have_gaussian = false;
  for (const auto& t : spec.terms) {
    const cd c = scalar_of(t.left, "boundary_operator") *
                 scalar_of(t.right, "boundary_operator");
    if (t.env.kind == EnvelopeKind::RationalPole) {
      m = m + rational_boundary(lgrid, t.env.mu, c * t.env.amplitude);
    } else {
      have_gaussian = true;
      for (int j = 0; j < tgrid.size(); ++j)
        gaussian_profile[j] += c * t.env(tgrid.t(j));
    }
  }
  if (have_gaussian) {
    auto ft = fourier_lambda(tgrid, gaussian_profile, lgrid);
    LambdaFunction g = LambdaFunction::zero(lgrid);
    g.values = std::move(ft);
    g.left0 = g.right0 = g.values[lgrid.m];
    m = m + g;
  }
  return m;
}

LambdaFunction residue_operator(const InterpolatorSpec& spec,
                                const LambdaGrid& lgrid,
                                const Tolerances& tol) {
  require_common_state(spec, "residue_operator");
  LambdaFunction m = LambdaFunction::zero(lgrid);
  bool touched = false;
  for (const auto& t : spec.terms) {
    auto p = t.env.pole();
    if (!p) continue;
    const double depth = p->imag();
    if (std::abs(depth) < tol.pole_margin ||
        std::abs(depth + 0.5) < tol.pole_margin)
      throw PoleOnBoundary(
          "residue_operator: pole within pole_margin of the strip boundary");
    if (depth > 0 || depth < -0.5) continue;  // outside the strip
    const cd c = scalar_of(t.left, "residue_operator") *
                 scalar_of(t.right, "residue_operator");
    const double radius =
        std::min(0.05, 0.5 * std::min(std::abs(depth), std::abs(depth + 0.5)));
    constexpr int kPoints = 256;
    std::vector<cd> node(kPoints), weight(kPoints);
    for (int q = 0; q < kPoints; ++q) {
      const double th = 2 * std::numbers::pi * q / kPoints;
      const cd e = std::exp(cd(0, th));
      node[q] = *p + radius * e;
      weight[q] = c * t.env(node[q]) * cd(0, radius) * e *
                  (2 * std::numbers::pi / kPoints);
    }
    for (int k = 0; k < lgrid.size(); ++k) {
      const double l = lgrid.lambda(k);
      cd s = 0;
      for (int q = 0; q < kPoints; ++q)
        s += weight[q] * std::exp(cd(0, -l) * node[q]);
      m.values[k] += s;
    }
    touched = true;
  }
  if (touched) m.left0 = m.right0 = m.values[lgrid.m];
  return m;
}

std::vector<AlgebraElement> pair_profile(const InterpolatorSpec& f,
                                         const InterpolatorSpec& g,
                                         double r1, double r2,
                                         const TimeGrid& grid,
                                         const Tolerances& tol) {
  if (!f.gaussian_class() || !g.gaussian_class())
    throw NotInN("pair_profile: gaussian-class specs only");
  InterpolatorSpec joint;
  joint.terms = f.terms;
  joint.terms.insert(joint.terms.end(), g.terms.begin(), g.terms.end());
  auto state = joint.common_state();
  if (!state)
    throw UnsupportedForm("pair_profile: terms must share one state");

  const int n = grid.size();
  const int m = grid.m;
  auto cache = TwistCache::build(*state, grid, tol);
  const AlgebraElement rho_r1 = state->power(cd(r1, 0), tol);

  std::vector<AlgebraElement> out(n, AlgebraElement::zero(state->algebra()));
  std::vector<AlgebraElement> right_rot(n);
  for (int o = 0; o < n; ++o)
    right_rot[o] = cache->powers[o] * state->power(cd(r2, 0), tol);

  for (const auto& ta : f.terms) {
    for (const auto& tb : g.terms) {
      const AlgebraElement core = rho_r1 * ta.right * tb.left;
      std::vector<cd> ea(n), eb(n);
      for (int j = 0; j < n; ++j) {
        ea[j] = ta.env(grid.t(j) - cd(0, r1));
        eb[j] = tb.env(grid.t(j) - cd(0, r2));
      }
      for (int k = 0; k < state->algebra().block_count(); ++k) {
        const int d = state->algebra().blocks[k];
        // W_j = sigma_{t_j}(rho^{r1} y_a x_b), then scalar convolutions of
        // env_a(s - i r1) W(s) against env_b(s - i r2), entry by entry
        std::vector<std::vector<cd>> u(d * d, std::vector<cd>(n));
        for (int j = 0; j < n; ++j) {
          const Mat& P = cache->powers[j].blocks[k];
          Mat W = P * core.blocks[k] * P.adjoint();
          for (int r = 0; r < d; ++r)
            for (int cidx = 0; cidx < d; ++cidx)
              u[r * d + cidx][j] = ea[j] * W(r, cidx);
        }
        std::vector<std::vector<cd>> fc(d * d);
        for (int e = 0; e < d * d; ++e) fc[e] = fft_convolve(u[e], eb);
        Mat C(d, d);
        for (int o = 0; o < n; ++o) {
          for (int r = 0; r < d; ++r)
            for (int cidx = 0; cidx < d; ++cidx)
              C(r, cidx) = fc[r * d + cidx][o + m] * grid.dt;
          out[o].blocks[k] += ta.left.blocks[k] *
                              (C * right_rot[o].blocks[k]) *
                              tb.right.blocks[k];
        }
      }
    }
  }
  return out;
}

cd convolution_expectation(const InterpolatorSpec& f, const InterpolatorSpec& g,
                           const TimeGrid& grid, const Tolerances& tol) {
  if (!f.gaussian_class() || !g.gaussian_class())
    throw NotInN("convolution_expectation: gaussian-class specs only");
  const InterpolatorSpec fs = star_spec(f);
  cd total = 0;
  for (int j = 0; j < grid.size(); ++j) {
    const double s = grid.t(j);
    const AlgebraElement a = evaluate_interpolator(fs, s, tol);
    const AlgebraElement b = evaluate_interpolator(g, cd(-s, -1), tol);
    total += (a * b).trace();
  }
  return total * grid.dt;
}

}  // namespace modlab
