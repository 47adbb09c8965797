#pragma once

#include <optional>
#include <utility>

#include "modlab/hilbert.hpp"
#include "modlab/lambda.hpp"
#include "modlab/section.hpp"

namespace modlab {

enum class EnvelopeKind { GaussianPoly, RationalPole };

/// Scalar entire (or meromorphic) envelope from the closed library:
/// gaussian_poly   amplitude * e^{-alpha z^2 + beta z} * poly(z), alpha > 0
/// rational_pole   amplitude / (mu + i z), simple pole at z = i mu
struct Envelope {
  EnvelopeKind kind = EnvelopeKind::GaussianPoly;
  cd amplitude{1, 0};
  double alpha = 1.0;
  cd beta{0, 0};
  std::vector<cd> poly{cd(1, 0)};  // coefficients, constant term first
  cd mu{0, 0};

  static Envelope gaussian(double alpha, cd beta = cd(0, 0),
                           cd amplitude = cd(1, 0),
                           std::vector<cd> poly = {cd(1, 0)});
  static Envelope rational(cd mu, cd amplitude = cd(1, 0));

  cd operator()(cd z) const;
  std::optional<cd> pole() const;  // z = i mu for rational_pole

  /// env*(z) = conj(env(-conj z)); closed under the library.
  Envelope star() const;
  /// Multiplication by e^{-isz} (theta_s); gaussian_poly only.
  Envelope phase(double s) const;
};

/// One term envelope(z) * x * rho_phi^{iz} * y.
struct InterpolatorTerm {
  Envelope env;
  AlgebraElement left;
  Functional state;
  AlgebraElement right;
};

/// Closed-form interpolator f(z) = sum of terms, analytic on the tube
/// R - i[0, 1/2] off the listed poles.
struct InterpolatorSpec {
  std::vector<InterpolatorTerm> terms;
  std::pair<double, double> strip{0.0, 0.5};

  std::vector<cd> poles() const;
  bool gaussian_class() const;  // no rational_pole terms
  /// The common state of all terms; empty optional when states differ.
  std::optional<Functional> common_state(double tol = 1e-12) const;
};

/// Scalar envelope spec env(z) * x * phi^{iz} * y (single term).
InterpolatorSpec scalar_spec(Envelope env, const Functional& phi,
                             const AlgebraElement& left,
                             const AlgebraElement& right);

/// f(z) by spectral calculus. The extended range Im z in [-1, 0] is allowed
/// (finite dimensions are entire); beyond it OutOfStrip, at a pole PoleHit.
AlgebraElement evaluate_interpolator(const InterpolatorSpec& spec, cd z,
                                     const Tolerances& tol = default_tol());

/// f*(z): envelopes reflected, left/right factors swapped and adjointed.
InterpolatorSpec star_spec(const InterpolatorSpec& spec);

/// theta_s f: every envelope picks up e^{-isz} (gaussian class only).
InterpolatorSpec theta_spec(const InterpolatorSpec& spec, double s);

/// Residual of the trivialization compatibility
/// sigma^omega_w(omega^{-iw} f(w)) = f(w) omega^{-iw} at real w.
double compatibility_residual(const InterpolatorSpec& spec,
                              const Functional& omega, double w,
                              const Tolerances& tol = default_tol());

/// Boundary vector f tau^{1/2}: samples f(t - i/2) on the grid, with a
/// sampler for the analytic continuation. Rational terms are admitted away
/// from the critical line Re mu = -1/2 and mark the vector slow-decay.
HilbertVector boundary_vector(const InterpolatorSpec& spec,
                              const TimeGrid& grid,
                              const Tolerances& tol = default_tol());

/// Numerically derived Gaussian decay certificate for the boundary vector of
/// a gaussian-class spec: delta = min alpha / 2, C fitted on the grid.
DecayCertificate derive_decay(const InterpolatorSpec& spec,
                              const TimeGrid& grid,
                              const Tolerances& tol = default_tol());

/// Level-0 trivialized section a(t) = f(t) omega^{-it} (gaussian class with
/// the common state as reference).
GridSection to_section(const InterpolatorSpec& spec, const TimeGrid& grid,
                       const Tolerances& tol = default_tol());

/// Boundary operator int f(t) dt in spectral form: a function of log phi on
/// the lambda grid. Requires one common state and scalar left/right factors
/// (the operator lands in the abelian part); otherwise UnsupportedForm.
/// Rational terms use the r -> +0 horizontal-shift limit (Richardson step);
/// gaussian terms use the Fourier integral sampled by chirp-z transform on
/// the time grid.
LambdaFunction boundary_operator(const InterpolatorSpec& spec,
                                 const LambdaGrid& lgrid,
                                 const TimeGrid& tgrid,
                                 const Tolerances& tol = default_tol());

/// Residue operator R_f = sum over poles inside R - i(0, 1/2) of the contour
/// integral around the pole, in spectral form. Contours are circles with 256
/// trapezoid points, radius min(0.05, half distance to the strip boundary).
LambdaFunction residue_operator(const InterpolatorSpec& spec,
                                const LambdaGrid& lgrid,
                                const Tolerances& tol = default_tol());

/// H(t) = sum_s f(s - i r1) g(t - s - i r2) dt on the grid, the quadrature
/// behind the contour-shift (Cauchy) identity. Gaussian class, common state.
std::vector<AlgebraElement> pair_profile(const InterpolatorSpec& f,
                                         const InterpolatorSpec& g,
                                         double r1, double r2,
                                         const TimeGrid& grid,
                                         const Tolerances& tol = default_tol());

/// tr((f* g)(-i)) with f* g the convolution interpolator, evaluated from the
/// closed forms; cross-checks tau(f* g) computed from boundary vectors.
cd convolution_expectation(const InterpolatorSpec& f, const InterpolatorSpec& g,
                           const TimeGrid& grid,
                           const Tolerances& tol = default_tol());

}  // namespace modlab
