#pragma once

#include "modlab/interpolator.hpp"

namespace modlab {

/// tau(f* g) for gaussian-class interpolators, computed as the inner product
/// of boundary vectors (f tau^{1/2} | g tau^{1/2}).
cd trace_of_product(const InterpolatorSpec& f, const InterpolatorSpec& g,
                    const TimeGrid& grid, const Tolerances& tol = default_tol());

/// tau-integral of x times the multiplication operator m(log phi) in the
/// spectral model: (phi(x)/2pi) * int m(lambda) e^lambda dlambda.
cd spectral_model(const Functional& phi, const LambdaFunction& m,
                  const AlgebraElement& x, const Tolerances& tol = default_tol());

struct HaagerupResult {
  cd grid_route;
  cd spectral_route;
  cd closed_form;  // omega(x) / (2 pi (mu + 1))
};

/// tau(x (1 v omega)^{-mu}) computed two independent ways plus the closed
/// form; Re mu <= -1 raises DivergentTrace.
HaagerupResult haagerup_trace(const AlgebraElement& x, const Functional& omega,
                              cd mu, const TimeGrid& tgrid,
                              const LambdaGrid& lgrid,
                              const Tolerances& tol = default_tol());
HaagerupResult haagerup_trace(const AlgebraElement& x, const Weight& omega,
                              cd mu, const TimeGrid& tgrid,
                              const LambdaGrid& lgrid,
                              const Tolerances& tol = default_tol());

struct TraceFormulaCheck {
  cd lhs;  // spectral route through f + R_f
  cd rhs;  // grid route: || f tau^{1/2} ||^2
  double rel_err;
};

/// The trace formula tau((f + R_f)* (f + R_f)) = (f tau^{1/2} | f tau^{1/2}),
/// lhs in the spectral model, rhs by grid quadrature.
TraceFormulaCheck trace_formula_theorem_check(const InterpolatorSpec& spec,
                                              const TimeGrid& tgrid,
                                              const LambdaGrid& lgrid,
                                              const Tolerances& tol = default_tol());

}  // namespace modlab
