#include "doctest.h"
#include "modlab/algebra.hpp"

using namespace modlab;

namespace {

Functional diag_state(double p) {
  FiniteAlgebra alg({2});
  Mat rho(2, 2);
  rho << p, 0, 0, 1 - p;
  return Functional(alg, AlgebraElement({rho}));
}

}  // namespace

TEST_CASE("evaluate is the density pairing") {
  auto phi = diag_state(0.75);
  auto e11 = AlgebraElement::matrix_unit(phi.algebra(), 0, 0, 0);
  CHECK(std::abs(evaluate(phi, e11) - cd(0.75, 0)) < 1e-15);
  CHECK(phi.total_mass() == doctest::Approx(1.0));
  CHECK(phi.faithful());
}

TEST_CASE("power obeys the group law on the support") {
  Rng rng(7);
  FiniteAlgebra alg({3});
  auto phi = random_state(rng, alg);
  const cd z(0.3, -0.2), w(-0.1, 0.45);
  auto lhs = phi.power(z) * phi.power(w);
  auto rhs = phi.power(z + w);
  CHECK((lhs - rhs).op_norm() < 1e-10);
  // z = 0 is the support projection
  auto p = phi.power(cd(0, 0));
  CHECK((p * p - p).op_norm() < 1e-12);
}

TEST_CASE("random_state honours mass and rank") {
  Rng rng(11);
  FiniteAlgebra alg({3});
  auto phi = random_state(rng, alg, 2.0, 2);
  CHECK(phi.total_mass() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(phi.spectral()[0].support_rank == 2);
  CHECK_FALSE(phi.faithful());
  // identical seeds reproduce the draw exactly
  Rng rng2(11);
  auto phi2 = random_state(rng2, alg, 2.0, 2);
  CHECK((phi.density() - phi2.density()).op_norm() == 0.0);
}

TEST_CASE("majorization holds for a constructed dominating pair") {
  Rng rng(23);
  FiniteAlgebra alg({2});
  auto phi = diag_state(0.6);
  Mat g = rng.gaussian_matrix(2);
  AlgebraElement bump({(g.adjoint() * g * 0.4).eval()});
  Functional psi(alg, phi.density() + bump);
  auto res = majorization_check(phi, psi);
  REQUIRE(res.holds);
  REQUIRE(res.witness.has_value());
  // witness is a contraction reconstructing phi^{1/2} from psi^{1/2}
  auto c = *res.witness;
  CHECK(c.op_norm() <= 1.0 + 1e-10);
  auto defect = c * psi.power(cd(0.5, 0)) - phi.power(cd(0.5, 0));
  CHECK(defect.op_norm() < 1e-8);
}

TEST_CASE("majorization fails with no witness when psi - phi is not PSD") {
  auto phi = diag_state(0.6);
  auto psi = diag_state(0.5);  // psi - phi has a negative eigenvalue
  auto res = majorization_check(phi, psi);
  CHECK_FALSE(res.holds);
  CHECK_FALSE(res.witness.has_value());
}

TEST_CASE("weights demand orthogonal supports and aggregate mass") {
  FiniteAlgebra alg({2});
  Mat top(2, 2), bottom(2, 2);
  top << 0.75, 0, 0, 0;
  bottom << 0, 0, 0, 0.4;
  Functional upper(alg, AlgebraElement({top}));
  Functional lower(alg, AlgebraElement({bottom}));
  Weight w({upper, lower});
  CHECK(w.total_mass() == doctest::Approx(1.15).epsilon(1e-12));
  CHECK(w.faithful());  // the supports jointly cover the identity
  Weight partial({upper});
  CHECK_FALSE(partial.faithful());
  // overlapping supports are rejected
  CHECK_THROWS_AS(Weight({upper, diag_state(0.5)}), Error);
}
