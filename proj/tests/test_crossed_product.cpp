#include <numbers>

#include "doctest.h"
#include "modlab/crossed_product.hpp"

using namespace modlab;

namespace {

Functional diag_state(double p) {
  FiniteAlgebra alg({2});
  Mat rho(2, 2);
  rho << p, 0, 0, 1 - p;
  return Functional(alg, AlgebraElement({rho}));
}

InterpolatorSpec gauss_spec(const Functional& phi, double alpha = 1.0,
                            cd beta = cd(0, 0)) {
  auto id = AlgebraElement::identity(phi.algebra());
  return scalar_spec(Envelope::gaussian(alpha, beta), phi, id, id);
}

const double kTwoPi = 2 * std::numbers::pi;

}  // namespace

TEST_CASE("tau(f* f) matches the Gaussian closed form") {
  auto phi = diag_state(0.75);
  TimeGrid grid(10.0, 0.01);
  auto spec = gauss_spec(phi);
  cd tau = trace_of_product(spec, spec, grid);
  const double want = std::exp(0.5) * std::sqrt(std::numbers::pi / 2);
  CHECK(std::abs(tau - cd(want, 0)) < 1e-10);
  // rational profiles are not in the Hilbert algebra n
  auto id = AlgebraElement::identity(phi.algebra());
  auto rat = scalar_spec(Envelope::rational(cd(1, 0)), phi, id, id);
  CHECK_THROWS_AS(trace_of_product(rat, rat, grid), NotInN);
}

TEST_CASE("convolution expectation cross-checks the boundary-vector trace") {
  Rng rng(37);
  FiniteAlgebra alg({2});
  auto phi = random_state(rng, alg);
  TimeGrid grid(10.0, 0.01);
  auto f = gauss_spec(phi, 1.0, cd(0.2, 0));
  auto g = gauss_spec(phi, 1.5);
  cd via_boundary = trace_of_product(f, g, grid);
  cd via_contour = convolution_expectation(f, g, grid);
  CHECK(std::abs(via_boundary - via_contour) /
            std::abs(via_boundary) < 1e-6);
}

TEST_CASE("spectral model integrates the indicator profiles") {
  auto phi = diag_state(0.75);
  LambdaGrid lg(60.0, 0.01);
  auto one = AlgebraElement::identity(phi.algebra());
  // m = 1_{lambda<=0}: tau = phi(1)/2pi
  auto m0 = LambdaFunction::indicator_exp(lg, cd(0, 0), cd(1, 0), true);
  CHECK(std::abs(spectral_model(phi, m0, one) - cd(1 / kTwoPi, 0)) < 1e-7);
  // m = 1_{lambda<=0} e^lambda: tau = phi(1)/4pi
  auto m1 = LambdaFunction::indicator_exp(lg, cd(1, 0), cd(1, 0), true);
  CHECK(std::abs(spectral_model(phi, m1, one) - cd(1 / (2 * kTwoPi), 0)) < 1e-7);
  // a profile that survives at the top edge is not tau-integrable
  auto flat = LambdaFunction::from_function(lg, [](double) { return cd(1, 0); });
  CHECK_THROWS_AS(spectral_model(phi, flat, one), NotIntegrable);
}

TEST_CASE("haagerup trace routes agree with the closed form") {
  auto omega = diag_state(0.75);
  TimeGrid tg(40.0, 0.01);
  LambdaGrid lg(60.0, 0.01);
  auto e11 = AlgebraElement::matrix_unit(omega.algebra(), 0, 0, 0);
  auto r = haagerup_trace(e11, omega, cd(1, 0), tg, lg);
  // omega(E11)/(2pi(mu+1)) = (3/4)/(4pi)
  CHECK(std::abs(r.closed_form - cd(0.75 / (2 * kTwoPi), 0)) < 1e-15);
  CHECK(std::abs(r.grid_route - r.closed_form) / std::abs(r.closed_form) < 1e-5);
  CHECK(std::abs(r.spectral_route - r.closed_form) / std::abs(r.closed_form) <
        1e-6);
  CHECK_THROWS_AS(
      haagerup_trace(e11, omega, cd(-1.5, 0), tg, lg), DivergentTrace);
}

TEST_CASE("haagerup trace of a weight adds over orthogonal summands") {
  FiniteAlgebra alg({2});
  Mat top(2, 2), bottom(2, 2);
  top << 0.75, 0, 0, 0;
  bottom << 0, 0, 0, 0.4;
  Functional omega(alg, AlgebraElement({top}));
  Functional chi(alg, AlgebraElement({bottom}));
  TimeGrid tg(40.0, 0.01);
  LambdaGrid lg(60.0, 0.01);
  auto x = AlgebraElement::matrix_unit(alg, 0, 0, 0);
  Weight w({omega, chi});
  auto sum = haagerup_trace(x, w, cd(0.5, 0), tg, lg);
  auto a = haagerup_trace(x, omega, cd(0.5, 0), tg, lg);
  auto b = haagerup_trace(x, chi, cd(0.5, 0), tg, lg);
  CHECK(std::abs(sum.closed_form - (a.closed_form + b.closed_form)) < 1e-15);
  CHECK(std::abs(sum.grid_route - (a.grid_route + b.grid_route)) < 1e-12);
}

TEST_CASE("trace formula with a residue term hits the pole oracle") {
  auto phi = diag_state(0.75);
  auto id = AlgebraElement::identity(phi.algebra());
  TimeGrid tg(40.0, 0.01);
  LambdaGrid lg(60.0, 0.01);
  const double beta = -0.3;
  auto spec = scalar_spec(Envelope::rational(cd(beta, 0)), phi, id, id);
  auto chk = trace_formula_theorem_check(spec, tg, lg);
  // closed form 2 pi phi(1) / (2 beta + 1)
  const cd closed(kTwoPi / (2 * beta + 1), 0);
  CHECK(std::abs(chk.rhs - closed) / std::abs(closed) < 1e-5);
  CHECK(std::abs(chk.lhs - closed) / std::abs(closed) < 1e-5);
  CHECK(chk.rel_err < 2e-5);
}

TEST_CASE("theta scales tau by e^{-s} and the dual action fixes it") {
  auto phi = diag_state(0.6);
  TimeGrid grid(10.0, 0.01);
  auto spec = gauss_spec(phi);
  cd tau = trace_of_product(spec, spec, grid);
  for (double s : {-1.0, 1.0}) {
    auto twisted = theta_spec(spec, s);
    cd scaled = trace_of_product(twisted, twisted, grid);
    CHECK(std::abs(scaled - std::exp(-s) * tau) / std::abs(tau) < 1e-8);
  }
}
