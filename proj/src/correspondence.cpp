#include "modlab/correspondence.hpp"

#include <cmath>
#include <numbers>

namespace modlab {

HilbertVector RelInvariantOperator::apply(const HilbertVector& xi,
                                          const Tolerances& tol) const {
  (void)tol;
  if (!xi.sampler)
    throw UnsupportedForm(
        "h_phi: the shift-by-i recipe needs a closed-form analytic vector");
  const AlgebraElement rho = phi.density();
  auto base = xi.sampler;
  auto shifted = [rho, base](cd z) {
    return act(rho, base(z + cd(0, 1)), Side::Left);
  };
  return HilbertVector::from_sampler(xi.grid, shifted, xi.slow_decay);
}

RelInvariantOperator build_h(const Functional& phi) { return {phi}; }

HilbertVector support_vector(const Functional& phi, const TimeGrid& grid,
                             const Tolerances& tol) {
  const cd amp = cd(1, 0) / (2 * std::numbers::pi);
  auto spec = scalar_spec(Envelope::rational(cd(0, 0), amp), phi,
                          AlgebraElement::identity(phi.algebra()),
                          AlgebraElement::identity(phi.algebra()));
  return boundary_vector(spec, grid, tol);
}

cd recover_functional(const RelInvariantOperator& h, const AlgebraElement& x,
                      const TimeGrid& grid, const Tolerances& tol) {
  const HilbertVector e = support_vector(h.phi, grid, tol);
  return 2 * std::numbers::pi * hilbert_inner(e, act_left(x, e), tol);
}

double verify_linearity(const Functional& phi, const Functional& psi,
                        const AlgebraElement& a,
                        const std::vector<HilbertVector>& test_vectors,
                        const Tolerances& tol) {
  const Functional sum(phi.algebra(), phi.density() + psi.density(), tol);
  const Functional conj_phi(phi.algebra(),
                            a * phi.density() * a.adjoint(), tol);
  const RelInvariantOperator h_phi = build_h(phi);
  const RelInvariantOperator h_psi = build_h(psi);
  const RelInvariantOperator h_sum = build_h(sum);
  const RelInvariantOperator h_conj = build_h(conj_phi);

  double worst = 0;
  for (const auto& xi : test_vectors) {
    const double scale = std::max(xi.norm(tol), 1e-300);
    const HilbertVector additive =
        h_sum.apply(xi, tol) - h_phi.apply(xi, tol) - h_psi.apply(xi, tol);
    worst = std::max(worst, additive.norm(tol) / scale);

    const HilbertVector via_conj =
        act_left(a, h_phi.apply(act_left(a.adjoint(), xi), tol));
    const HilbertVector direct = h_conj.apply(xi, tol);
    worst = std::max(worst, (via_conj - direct).norm(tol) / scale);
  }
  return worst;
}

namespace {

/// S = int xi(u) xi(u)^dagger du per block, trapezoid core plus the
/// substitution tail for slow-decay vectors.
std::vector<Mat> line_outer_integral(const HilbertVector& xi) {
  std::vector<Mat> S;
  const int blocks = static_cast<int>(xi.values.front().blocks.size());
  for (int k = 0; k < blocks; ++k) {
    const Mat& b = xi.values.front().blocks[k];
    S.push_back(Mat::Zero(b.rows(), b.rows()));
  }
  const int n = xi.grid.size();
  for (int j = 0; j < n; ++j) {
    const double w = (j == 0 || j == n - 1) ? 0.5 : 1.0;
    for (int k = 0; k < blocks; ++k)
      S[k] += w * xi.grid.dt * xi.values[j].blocks[k] *
              xi.values[j].blocks[k].adjoint();
  }
  if (xi.slow_decay) {
    if (!xi.sampler)
      throw NumericalFailure("line_outer_integral: missing sampler for tail");
    const double T = xi.grid.T;
    const int nt = 512;
    // Simpson weights over nt intervals in u, with u = 0 taken at the limit
    for (int j = 0; j <= nt; ++j) {
      double u = static_cast<double>(j) / nt;
      if (j == 0) u = 1e-8;
      double w;
      if (j == 0 || j == nt)
        w = 1.0 / 3;
      else
        w = (j % 2 == 1) ? 4.0 / 3 : 2.0 / 3;
      w /= nt;
      const double t = T / u;
      const double jac = T / (u * u);
      const L2Vector plus = xi.sampler(t);
      const L2Vector minus = xi.sampler(-t);
      for (int k = 0; k < blocks; ++k)
        S[k] += w * jac *
                (plus.blocks[k] * plus.blocks[k].adjoint() +
                 minus.blocks[k] * minus.blocks[k].adjoint());
    }
  }
  return S;
}

}  // namespace

LemmaCheck verify_averaging(const Functional& phi, const Functional& omega,
                            const AlgebraElement& x, double mu,
                            const TimeGrid& grid, const Tolerances& tol) {
  if (mu <= 0) throw ConfigInvalid("verify_averaging: mu must be positive");
  if (!omega.faithful(tol))
    throw NotFaithful("verify_averaging: omega must be faithful");

  const HilbertVector e = support_vector(phi, grid, tol);
  const HilbertVector xe = act_left(x, e);
  const std::vector<Mat> S = line_outer_integral(xe);

  // N(t) = || omega^{it} x e tau^{1/2} ||^2 = sum_k tr(A_k(t) S_k) with
  // A(t) = (rho^{it})^dagger rho^{it}
  auto profile = [&](double t) {
    const AlgebraElement u = omega.power(cd(0, t), tol);
    cd s = 0;
    for (size_t k = 0; k < S.size(); ++k)
      s += (u.blocks[k].adjoint() * u.blocks[k] * S[k]).trace();
    const cd g = cd(1, 0) / cd(mu / 2, t);
    return std::norm(g) * s;
  };
  LemmaCheck out;
  out.lhs = integrate_line(grid, profile, true) / (2 * std::numbers::pi);
  out.rhs = evaluate(phi, x.adjoint() * x) / (2 * std::numbers::pi * mu);
  out.rel_err = std::abs(out.lhs - out.rhs) /
                std::max(std::abs(out.rhs), 1e-300);
  return out;
}

LemmaCheck verify_inner_lemma(const Functional& phi, const Functional& omega,
                              const AlgebraElement& x, double t,
                              const TimeGrid& grid, const Tolerances& tol) {
  const HilbertVector e = support_vector(phi, grid, tol);
  const HilbertVector xe = act_left(x, e);
  const HilbertVector translated = left_translate(omega, t, xe, tol);

  LemmaCheck out;
  out.lhs = hilbert_inner(xe, translated, tol);
  const AlgebraElement y = x.adjoint() * omega.power(cd(0, t), tol) * x *
                           phi.power(cd(0, -t), tol);
  out.rhs = evaluate(phi, y) / (2 * std::numbers::pi * cd(1, -t));
  out.rel_err = std::abs(out.lhs - out.rhs) /
                std::max(std::abs(out.rhs), 1e-300);
  return out;
}

}  // namespace modlab
