#pragma once

#include <functional>
#include <memory>

#include "modlab/algebra.hpp"
#include "modlab/grid.hpp"

namespace modlab {

/// Gaussian decay certificate: ||a(t)||_op <= C e^{-delta t^2}.
struct DecayCertificate {
  double C = 0.0;
  double delta = 1.0;
};

/// Table of rho_ref^{i t_j} over a grid, shared by twisted operations.
struct TwistCache {
  TimeGrid grid;
  std::vector<AlgebraElement> powers;  // powers[j] = rho^{i t_j}

  static std::shared_ptr<const TwistCache> build(const Functional& ref,
                                                 const TimeGrid& grid,
                                                 const Tolerances& tol = default_tol());
};

/// Trivialized section t -> a(t) of the convolution algebra on a uniform
/// grid: x(t) = a(t) omega^{it} with omega a faithful reference state.
struct GridSection {
  TimeGrid grid;
  Functional reference;  // faithful
  std::vector<AlgebraElement> values;
  DecayCertificate decay;

  GridSection() = default;
  GridSection(TimeGrid g, Functional ref, std::vector<AlgebraElement> vals,
              DecayCertificate dec, const Tolerances& tol = default_tol());

  const FiniteAlgebra& algebra() const { return reference.algebra(); }

  /// ||f||_1 = sum ||a(t)||_op dt and ||f||_inf = max ||a(t)||_op.
  double l1_norm() const;
  double linf_norm() const;

  /// Checks the decay certificate on every grid point.
  bool decay_holds(double slack = 1e-9) const;
};

/// Scalar-envelope section F(t) * c (c in M commuting data supplied by caller).
GridSection scalar_section(const TimeGrid& grid, const Functional& ref,
                           const std::function<cd(double)>& envelope,
                           const AlgebraElement& value, DecayCertificate decay);

/// Twisted convolution (fg)(t) = sum_s a(s) sigma^omega_s(b(t-s)) dt, computed
/// through the trivialization rotation a(s) rho^{is} as a classical matrix
/// convolution (FFT per entry). Exact up to roundoff for faithful references.
GridSection convolve(const GridSection& f, const GridSection& g,
                     std::shared_ptr<const TwistCache> cache = nullptr,
                     const Tolerances& tol = default_tol());

/// Direct O(N^2) twisted convolution with per-s cached powers; reference
/// route used by the oracle tests.
GridSection convolve_direct(const GridSection& f, const GridSection& g,
                            std::shared_ptr<const TwistCache> cache = nullptr,
                            const Tolerances& tol = default_tol());

/// Involution a*(t) = sigma^omega_t(a(-t)^dagger).
GridSection star(const GridSection& f,
                 std::shared_ptr<const TwistCache> cache = nullptr,
                 const Tolerances& tol = default_tol());

/// Scaling automorphism (theta_s f)(t) = e^{-ist} f(t).
GridSection scale_theta(const GridSection& f, double s);

}  // namespace modlab
