#include "modlab/crossed_product.hpp"

#include <cmath>
#include <numbers>

namespace modlab {

cd trace_of_product(const InterpolatorSpec& f, const InterpolatorSpec& g,
                    const TimeGrid& grid, const Tolerances& tol) {
  if (!f.gaussian_class() || !g.gaussian_class())
    throw NotInN("trace_of_product: rational specs are not in the Hilbert algebra");
  return hilbert_inner(boundary_vector(f, grid, tol),
                       boundary_vector(g, grid, tol), tol);
}

cd spectral_model(const Functional& phi, const LambdaFunction& m,
                  const AlgebraElement& x, const Tolerances& tol) {
  (void)tol;
  const cd integral = m.integrate([](double l) { return std::exp(l); });
  // tau-integrability: the weighted profile must have died out at the top edge
  const double edge =
      (std::abs(m.values.back()) + std::abs(m.values[m.values.size() - 2])) *
      std::exp(m.grid.L);
  double scale = 1.0;
  for (const auto& v : m.values) scale = std::max(scale, std::abs(v));
  if (edge > 1e-8 * scale)
    throw NotIntegrable("spectral_model: profile not tau-integrable on the grid");
  return evaluate(phi, x) / (2 * std::numbers::pi) * integral;
}

static HilbertVector recall_vector(const Functional& omega, cd nu,
                                   const TimeGrid& grid, const Tolerances& tol) {
  // (1 v omega)^{-nu} tau^{1/2} = (1/2pi) closed section of
  // (nu/... ) -- boundary vector of (1/2pi) (nu + iz)^{-1} omega^{iz}
  const cd amp = cd(1, 0) / (2 * std::numbers::pi);
  auto spec = scalar_spec(Envelope::rational(nu, amp), omega,
                          AlgebraElement::identity(omega.algebra()),
                          AlgebraElement::identity(omega.algebra()));
  return boundary_vector(spec, grid, tol);
}

HaagerupResult haagerup_trace(const AlgebraElement& x, const Functional& omega,
                              cd mu, const TimeGrid& tgrid,
                              const LambdaGrid& lgrid, const Tolerances& tol) {
  if (mu.real() <= -1.0)
    throw DivergentTrace("haagerup_trace: Re mu <= -1, trace is infinite");
  HaagerupResult r;
  // grid route: tau(x (1v omega)^{-mu}) = (b* tau^{1/2} | x b tau^{1/2})
  // with b = (1 v omega)^{-mu/2}
  const HilbertVector left = recall_vector(omega, std::conj(mu) / 2.0, tgrid, tol);
  const HilbertVector right = recall_vector(omega, mu / 2.0, tgrid, tol);
  r.grid_route = hilbert_inner(left, act_left(x, right), tol);
  // spectral route: multiplication by 1_{lambda <= 0} e^{lambda mu}
  const LambdaFunction m =
      LambdaFunction::indicator_exp(lgrid, mu, cd(1, 0), true);
  r.spectral_route = spectral_model(omega, m, x, tol);
  r.closed_form = evaluate(omega, x) / (2 * std::numbers::pi * (mu + 1.0));
  return r;
}

HaagerupResult haagerup_trace(const AlgebraElement& x, const Weight& omega,
                              cd mu, const TimeGrid& tgrid,
                              const LambdaGrid& lgrid, const Tolerances& tol) {
  if (mu.real() <= -1.0)
    throw DivergentTrace("haagerup_trace: Re mu <= -1, trace is infinite");
  HaagerupResult total{cd(0, 0), cd(0, 0), cd(0, 0)};
  // the summands have orthogonal supports, so the traces add
  for (const auto& part : omega.summands) {
    HaagerupResult r = haagerup_trace(x, part, mu, tgrid, lgrid, tol);
    total.grid_route += r.grid_route;
    total.spectral_route += r.spectral_route;
    total.closed_form += r.closed_form;
  }
  return total;
}

TraceFormulaCheck trace_formula_theorem_check(const InterpolatorSpec& spec,
                                              const TimeGrid& tgrid,
                                              const LambdaGrid& lgrid,
                                              const Tolerances& tol) {
  auto state = spec.common_state();
  if (!state)
    throw UnsupportedForm("trace_formula_theorem_check: one common state required");

  const HilbertVector bv = boundary_vector(spec, tgrid, tol);
  TraceFormulaCheck out;
  out.rhs = hilbert_inner(bv, bv, tol);

  const LambdaFunction m = boundary_operator(spec, lgrid, tgrid, tol) +
                           residue_operator(spec, lgrid, tol);
  const LambdaFunction m2 = abs_squared(m, 1e-12);
  out.lhs = spectral_model(*state, m2,
                           AlgebraElement::identity(state->algebra()), tol);
  out.rel_err = std::abs(out.lhs - out.rhs) /
                std::max(std::abs(out.rhs), 1e-300);
  return out;
}

}  // namespace modlab
