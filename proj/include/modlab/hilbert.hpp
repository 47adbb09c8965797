#pragma once

#include <functional>

#include "modlab/grid.hpp"
#include "modlab/quadrature.hpp"
#include "modlab/standard_form.hpp"

namespace modlab {

/// Element of H = integral of M(it+1/2) dt in the trivialized picture: grid
/// samples of L^2(M) values, optionally backed by a closed-form sampler that
/// evaluates the analytic continuation at arbitrary complex time.
/// slow_decay marks Lorentzian (rational-envelope) profiles whose inner
/// products need the |t| > T tail of the quadrature.
struct HilbertVector {
  TimeGrid grid;
  std::vector<L2Vector> values;
  std::function<L2Vector(cd)> sampler;  // may be empty
  bool slow_decay = false;

  static HilbertVector from_sampler(const TimeGrid& grid,
                                    std::function<L2Vector(cd)> sampler,
                                    bool slow_decay);

  HilbertVector star() const;  // xi*(t) = xi(-t)^*
  HilbertVector operator+(const HilbertVector& o) const;
  HilbertVector operator-(const HilbertVector& o) const;
  HilbertVector operator*(cd s) const;

  double norm(const Tolerances& tol = default_tol()) const;
};

/// (f|g) = int <f(t)|g(t)> dt; trapezoid on the grid plus the analytic tail
/// when a slow-decay operand provides a sampler.
cd hilbert_inner(const HilbertVector& f, const HilbertVector& g,
                 const Tolerances& tol = default_tol());

/// Left action of a in M, pointwise in t.
HilbertVector act_left(const AlgebraElement& a, const HilbertVector& xi);

/// Dual-action unitary W_s: xi(t) -> e^{-ist} xi(t).
HilbertVector apply_dual_action(double s, const HilbertVector& xi);

/// Left multiplication by omega^{iu}: xi(t) -> rho_omega^{iu} xi(t - u).
/// Grid values require u on the lattice; the sampler handles any shift.
HilbertVector left_translate(const Functional& omega, double u,
                             const HilbertVector& xi,
                             const Tolerances& tol = default_tol());

}  // namespace modlab
