#pragma once

#include "modlab/crossed_product.hpp"

namespace modlab {

/// The analytic generator h_phi of {phi^{it}}, kept as an action recipe on
/// closed-form analytic vectors: (h_phi xi)(t) = rho_phi * xi(t + i).
struct RelInvariantOperator {
  Functional phi;

  HilbertVector apply(const HilbertVector& xi,
                      const Tolerances& tol = default_tol()) const;
};

RelInvariantOperator build_h(const Functional& phi);

/// e tau^{1/2} with e = [1 v h_phi]: the bounded vector with values
/// (1/2pi)(it + 1/2)^{-1} rho_phi^{it + 1/2}.
HilbertVector support_vector(const Functional& phi, const TimeGrid& grid,
                             const Tolerances& tol = default_tol());

/// 2 pi tau(x e); equals phi(x) up to grid error.
cd recover_functional(const RelInvariantOperator& h, const AlgebraElement& x,
                      const TimeGrid& grid,
                      const Tolerances& tol = default_tol());

/// Max relative residual over the test vectors of
///   (i)  h_{phi+psi} = h_phi + h_psi
///   (ii) a h_phi a^* = h_{a phi a^*}
double verify_linearity(const Functional& phi, const Functional& psi,
                        const AlgebraElement& a,
                        const std::vector<HilbertVector>& test_vectors,
                        const Tolerances& tol = default_tol());

struct LemmaCheck {
  cd lhs;
  cd rhs;
  double rel_err;
};

/// Averaging lemma: tau(h x* (1 v omega)^{-mu} x) = phi(x*x)/(2 pi mu),
/// lhs through the Plancherel reduction (1/2pi) int |g|^2 ||omega^{it} x
/// e tau^{1/2}||^2 dt with g(t) = 1/(it + mu/2).
LemmaCheck verify_averaging(const Functional& phi, const Functional& omega,
                            const AlgebraElement& x, double mu,
                            const TimeGrid& grid,
                            const Tolerances& tol = default_tol());

/// Inner lemma: tau(e x* omega^{it} x) = phi(x* omega^{it} x phi^{-it})
/// / (2 pi (1 - it)); lhs by grid quadrature, rhs by spectral calculus.
LemmaCheck verify_inner_lemma(const Functional& phi, const Functional& omega,
                              const AlgebraElement& x, double t,
                              const TimeGrid& grid,
                              const Tolerances& tol = default_tol());

}  // namespace modlab
