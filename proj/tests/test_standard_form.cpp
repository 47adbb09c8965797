#include "doctest.h"
#include "modlab/standard_form.hpp"

using namespace modlab;

namespace {

Functional diag_state(double p) {
  FiniteAlgebra alg({2});
  Mat rho(2, 2);
  rho << p, 0, 0, 1 - p;
  return Functional(alg, AlgebraElement({rho}));
}

}  // namespace

TEST_CASE("gns vector reproduces the state") {
  Rng rng(3);
  FiniteAlgebra alg({3});
  auto phi = random_state(rng, alg);
  auto xi = gns_vector(phi);
  auto x = random_element(rng, alg);
  // <xi | x xi> = phi(x)
  CHECK(std::abs(inner(xi, act(x, xi, Side::Left)) - evaluate(phi, x)) < 1e-12);
  CHECK(xi.norm() == doctest::Approx(std::sqrt(phi.total_mass())).epsilon(1e-12));
}

TEST_CASE("modular flow of a matrix unit is a phase") {
  const double p = 0.75, t = 0.7;
  auto phi = diag_state(p);
  auto e12 = AlgebraElement::matrix_unit(phi.algebra(), 0, 0, 1);
  auto flowed = relative_modular_flow(phi, phi, e12, cd(t, 0));
  const cd phase = std::pow(cd(p / (1 - p), 0), cd(0, t));
  CHECK((flowed - phase * e12).op_norm() < 1e-12);
}

TEST_CASE("modular extension hits the 2x2 midline oracle") {
  auto phi = diag_state(0.75);
  auto e12 = AlgebraElement::matrix_unit(phi.algebra(), 0, 0, 1);
  // z = -i/2: rho^{1/2} E12 rho^{1/2} = (sqrt(3)/4) E12
  auto mid = modular_extension(phi, phi, e12, cd(0, -0.5));
  CHECK(mid.norms().trace == doctest::Approx(std::sqrt(3.0) / 4).epsilon(1e-12));
}

TEST_CASE("interpolation bound and KMS residual on random data") {
  Rng rng(17);
  FiniteAlgebra alg({2, 3});
  for (int i = 0; i < 20; ++i) {
    auto phi = random_state(rng, alg);
    auto psi = random_state(rng, alg);
    auto a = random_element(rng, alg);
    const cd z(2 * rng.uniform() - 1, -rng.uniform());
    auto [lhs, rhs] = modular_extension_bound(phi, psi, a, z);
    CHECK(lhs <= rhs * (1 + 1e-10));
    CHECK(kms_check(phi, psi, a, 2 * rng.uniform() - 1) < 1e-10);
  }
}

TEST_CASE("relative flow requires the compressed corner") {
  Rng rng(29);
  FiniteAlgebra alg({2});
  auto phi = random_state(rng, alg, 1.0, 1);  // rank-deficient
  auto a = AlgebraElement::identity(alg);
  CHECK_THROWS_AS(relative_modular_flow(phi, phi, a, cd(0.3, 0)), NotCompressed);
}
