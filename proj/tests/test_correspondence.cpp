#include <numbers>

#include "doctest.h"
#include "modlab/correspondence.hpp"

using namespace modlab;

namespace {

Functional diag_state(double p) {
  FiniteAlgebra alg({2});
  Mat rho(2, 2);
  rho << p, 0, 0, 1 - p;
  return Functional(alg, AlgebraElement({rho}));
}

HilbertVector analytic_vector(const Functional& phi, const TimeGrid& grid,
                              const AlgebraElement& seed) {
  auto spec = scalar_spec(Envelope::gaussian(1.0), phi, seed,
                          AlgebraElement::identity(phi.algebra()));
  return boundary_vector(spec, grid);
}

}  // namespace

TEST_CASE("recover_functional reconstructs the density on matrix units") {
  auto phi = diag_state(0.75);
  TimeGrid grid(40.0, 0.01);
  auto h = build_h(phi);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto eji = AlgebraElement::matrix_unit(phi.algebra(), 0, j, i);
      cd got = recover_functional(h, eji, grid);
      // phi(E_ji) = rho_ij
      cd want = phi.density().blocks[0](i, j);
      CHECK(std::abs(got - want) < 1e-5);
    }
}

TEST_CASE("h acts as the shift by i with a left density factor") {
  auto phi = diag_state(0.6);
  TimeGrid grid(10.0, 0.02);
  Rng rng(43);
  auto seed = random_element(rng, phi.algebra());
  auto xi = analytic_vector(phi, grid, seed);
  auto h = build_h(phi);
  auto hxi = h.apply(xi);
  // spot-check the recipe (h xi)(t) = rho_phi xi(t + i) at a grid point
  const cd t(1.5, 0);
  auto want = act(phi.density(), xi.sampler(t + cd(0, 1)), Side::Left);
  auto diff = hxi.sampler(t) - want;
  CHECK(inner(diff, diff).real() < 1e-24);
  // vectors without a sampler cannot be shifted
  HilbertVector bare;
  bare.grid = grid;
  bare.values = xi.values;
  CHECK_THROWS_AS(h.apply(bare), UnsupportedForm);
}

TEST_CASE("linearity and conjugation covariance of phi -> h_phi") {
  Rng rng(47);
  FiniteAlgebra alg({2});
  auto phi = random_state(rng, alg);
  auto psi = random_state(rng, alg);
  auto a = random_element(rng, alg);
  TimeGrid grid(10.0, 0.02);
  std::vector<HilbertVector> probes;
  for (int i = 0; i < 5; ++i)
    probes.push_back(analytic_vector(phi, grid, random_element(rng, alg)));
  CHECK(verify_linearity(phi, psi, a, probes) < 1e-8);
}

TEST_CASE("averaging lemma against the closed form") {
  Rng rng(53);
  FiniteAlgebra alg({2});
  auto phi = random_state(rng, alg);
  auto omega = diag_state(0.75);
  auto x = random_element(rng, alg);
  TimeGrid grid(40.0, 0.01);
  auto chk = verify_averaging(phi, omega, x, 1.0, grid);
  CHECK(chk.rel_err < 1e-5);
  // closed form phi(x*x)/(2 pi mu)
  cd want = evaluate(phi, x.adjoint() * x) / (2 * std::numbers::pi);
  CHECK(std::abs(chk.rhs - want) < 1e-12);
  CHECK_THROWS_AS(verify_averaging(phi, omega, x, 0.0, grid), ConfigInvalid);
}

TEST_CASE("inner lemma at lattice and zero times") {
  auto phi = diag_state(0.6);
  auto omega = diag_state(0.75);
  auto x = AlgebraElement::matrix_unit(phi.algebra(), 0, 0, 1);
  TimeGrid grid(40.0, 0.01);
  for (double t : {0.0, 1.0}) {
    auto chk = verify_inner_lemma(phi, omega, x, t, grid);
    CHECK(chk.rel_err < 1e-5);
  }
  // x = 1, t = 0 reduces to tau(e) = phi(1)/2pi
  auto one = AlgebraElement::identity(phi.algebra());
  auto chk = verify_inner_lemma(phi, omega, one, 0.0, grid);
  CHECK(std::abs(chk.rhs - cd(1 / (2 * std::numbers::pi), 0)) < 1e-12);
}

TEST_CASE("support vector matches the lambda-model trace of e") {
  auto phi = diag_state(0.75);
  TimeGrid tg(40.0, 0.01);
  LambdaGrid lg(60.0, 0.01);
  auto e = support_vector(phi, tg);
  cd grid_route = hilbert_inner(e, e);
  auto m = LambdaFunction::indicator_exp(lg, cd(0, 0), cd(1, 0), true);
  cd spectral = spectral_model(phi, m, AlgebraElement::identity(phi.algebra()));
  // tau(e* e) = tau(e) since e is a projection
  CHECK(std::abs(grid_route - spectral) / std::abs(spectral) < 1e-6);
}
