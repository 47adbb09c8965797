#include <numbers>

#include "doctest.h"
#include "modlab/interpolator.hpp"

using namespace modlab;

namespace {

Functional diag_state(double p) {
  FiniteAlgebra alg({2});
  Mat rho(2, 2);
  rho << p, 0, 0, 1 - p;
  return Functional(alg, AlgebraElement({rho}));
}

InterpolatorSpec gauss_spec(const Functional& phi, double alpha = 1.0) {
  auto id = AlgebraElement::identity(phi.algebra());
  return scalar_spec(Envelope::gaussian(alpha), phi, id, id);
}

Functional scalar_state(double value) {
  FiniteAlgebra alg({1});
  Mat rho(1, 1);
  rho << value;
  return Functional(alg, AlgebraElement({rho}));
}

}  // namespace

TEST_CASE("evaluation at -i/2 matches the closed form e^{1/4} rho^{1/2}") {
  auto phi = diag_state(0.75);
  auto spec = gauss_spec(phi);
  auto val = evaluate_interpolator(spec, cd(0, -0.5));
  auto want = std::exp(0.25) * phi.power(cd(0.5, 0));
  CHECK((val - want).op_norm() < 1e-12);
}

TEST_CASE("strip and pole guards") {
  auto phi = diag_state(0.75);
  CHECK_THROWS_AS(evaluate_interpolator(gauss_spec(phi), cd(0, 0.5)), OutOfStrip);
  auto id = AlgebraElement::identity(phi.algebra());
  auto rat = scalar_spec(Envelope::rational(cd(-0.2, 0)), phi, id, id);
  CHECK_THROWS_AS(evaluate_interpolator(rat, cd(0, -0.2)), PoleHit);
  // away from the pole the value is finite
  CHECK(evaluate_interpolator(rat, cd(1.0, -0.2)).op_norm() > 0);
}

TEST_CASE("star_spec represents the adjoint interpolator") {
  Rng rng(31);
  FiniteAlgebra alg({2});
  auto phi = random_state(rng, alg);
  auto spec = scalar_spec(Envelope::gaussian(1.0, cd(0.2, -0.3), cd(1, 2)), phi,
                          random_element(rng, alg), random_element(rng, alg));
  auto starred = star_spec(spec);
  // f*(z) = f(-conj z)^dagger, checked at a few strip points
  for (cd z : {cd(0.4, -0.1), cd(-1.2, -0.45), cd(0, 0)}) {
    auto lhs = evaluate_interpolator(starred, z);
    auto rhs = evaluate_interpolator(spec, -std::conj(z)).adjoint();
    CHECK((lhs - rhs).op_norm() < 1e-12);
  }
  // double star is the identity
  auto twice = star_spec(starred);
  auto diff = evaluate_interpolator(twice, cd(0.7, -0.2)) -
              evaluate_interpolator(spec, cd(0.7, -0.2));
  CHECK(diff.op_norm() < 1e-12);
}

TEST_CASE("theta_spec multiplies by the phase e^{-isz}") {
  auto phi = diag_state(0.6);
  auto spec = gauss_spec(phi);
  const double s = 1.3;
  const cd z(0.5, -0.25);
  auto lhs = evaluate_interpolator(theta_spec(spec, s), z);
  auto rhs = std::exp(cd(0, -s) * z) * evaluate_interpolator(spec, z);
  CHECK((lhs - rhs).op_norm() < 1e-12);
  CHECK_THROWS_AS(
      theta_spec(scalar_spec(Envelope::rational(cd(1, 0)), phi,
                             AlgebraElement::identity(phi.algebra()),
                             AlgebraElement::identity(phi.algebra())),
                 s),
      UnsupportedForm);
}

TEST_CASE("boundary vector norm matches the Gaussian oracle") {
  auto phi = diag_state(0.75);
  TimeGrid grid(10.0, 0.01);
  auto bv = boundary_vector(gauss_spec(phi), grid);
  // int e^{-2t^2 + 1/2} phi(1) dt = e^{1/2} sqrt(pi/2)
  const double want =
      std::sqrt(std::exp(0.5) * std::sqrt(std::numbers::pi / 2));
  CHECK(bv.norm() == doctest::Approx(want).epsilon(1e-10));
  CHECK_FALSE(bv.slow_decay);
}

TEST_CASE("rational boundary vectors respect the critical line") {
  auto phi = diag_state(0.75);
  auto id = AlgebraElement::identity(phi.algebra());
  TimeGrid grid(10.0, 0.01);
  auto rat = scalar_spec(Envelope::rational(cd(1, 0)), phi, id, id);
  CHECK(boundary_vector(rat, grid).slow_decay);
  auto critical = scalar_spec(Envelope::rational(cd(-0.5, 0)), phi, id, id);
  CHECK_THROWS_AS(boundary_vector(critical, grid), NotSquareIntegrable);
}

TEST_CASE("boundary operator of a scalar Gaussian is the classical transform") {
  auto phi = scalar_state(1.0);
  TimeGrid tg(40.0, 0.01);
  LambdaGrid lg(20.0, 0.05);
  const double alpha = 1.0;
  auto m = boundary_operator(gauss_spec(phi, alpha), lg, tg);
  auto want = LambdaFunction::from_function(lg, [alpha](double l) {
    return std::sqrt(std::numbers::pi / alpha) *
           std::exp(-l * l / (4 * alpha));
  });
  CHECK(m.sup_distance(want) < 1e-9);
}

TEST_CASE("boundary operator rejects non-scalar factors") {
  auto phi = diag_state(0.75);
  auto e11 = AlgebraElement::matrix_unit(phi.algebra(), 0, 0, 0);
  auto spec = scalar_spec(Envelope::gaussian(1.0), phi, e11,
                          AlgebraElement::identity(phi.algebra()));
  CHECK_THROWS_AS(
      boundary_operator(spec, LambdaGrid(20.0, 0.05), TimeGrid(10.0, 0.01)),
      UnsupportedForm);
}

TEST_CASE("residue operator matches the analytic residue") {
  auto phi = diag_state(0.75);
  auto id = AlgebraElement::identity(phi.algebra());
  LambdaGrid lg(20.0, 0.05);
  const cd beta(-0.25, 0);
  auto r = residue_operator(scalar_spec(Envelope::rational(beta), phi, id, id), lg);
  auto want = LambdaFunction::from_function(lg, [beta](double l) {
    return 2 * std::numbers::pi * std::exp(beta * l);
  });
  CHECK(r.sup_distance(want) / (2 * std::numbers::pi * std::exp(0.25 * lg.L)) <
        1e-12);
  // a pole hugging the strip boundary is rejected
  CHECK_THROWS_AS(
      residue_operator(
          scalar_spec(Envelope::rational(cd(-1e-4, 0)), phi, id, id), lg),
      PoleOnBoundary);
  // poles outside the open strip contribute nothing
  auto outside =
      residue_operator(scalar_spec(Envelope::rational(cd(1, 0)), phi, id, id), lg);
  CHECK(outside.sup_distance(LambdaFunction::zero(lg)) == 0.0);
}

TEST_CASE("derived decay certificates hold on the grid") {
  auto phi = diag_state(0.6);
  TimeGrid grid(10.0, 0.02);
  auto spec = gauss_spec(phi, 2.0);
  auto dec = derive_decay(spec, grid);
  CHECK(dec.delta == doctest::Approx(1.0));
  auto section = to_section(spec, grid);
  CHECK(section.decay_holds());
}
