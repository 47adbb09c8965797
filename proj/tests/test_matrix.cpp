#include "doctest.h"
#include "modlab/matrix.hpp"

using namespace modlab;

TEST_CASE("eigh matches the characteristic-polynomial roots") {
  Mat a(2, 2);
  a << 2, 1, 1, 2;
  auto d = eigh(a);
  CHECK(d.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.eigenvalues(1) == doctest::Approx(3.0).epsilon(1e-12));
  // reconstruction A = U diag U*
  Mat rec = d.eigenvectors * d.eigenvalues.asDiagonal().toDenseMatrix().cast<cd>() *
            d.eigenvectors.adjoint();
  CHECK((rec - a).norm() < 1e-12);
  CHECK((d.eigenvectors.adjoint() * d.eigenvectors - Mat::Identity(2, 2)).norm() <
        1e-12);
}

TEST_CASE("eigh rejects non-Hermitian input") {
  Mat a(2, 2);
  a << 0, 1, 0, 0;
  CHECK_THROWS_AS(eigh(a), NotHermitian);
}

TEST_CASE("complex_power agrees with the scalar oracle on a diagonal") {
  Mat rho(2, 2);
  rho << 4, 0, 0, 9;
  Mat half = complex_power(rho, cd(0.5, 0));
  CHECK(std::abs(half(0, 0) - cd(2, 0)) < 1e-12);
  CHECK(std::abs(half(1, 1) - cd(3, 0)) < 1e-12);
  // purely imaginary exponent gives a unitary on the support
  Mat u = complex_power(rho, cd(0, 1.3));
  CHECK((u.adjoint() * u - Mat::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("complex_power is a partial isometry off the support") {
  Mat rho(2, 2);
  rho << 1, 0, 0, 0;
  Mat u = complex_power(rho, cd(0, 0.7));
  CHECK(std::abs(u(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(u(1, 1)) < 1e-12);
  Mat p = support_projection(rho);
  CHECK((p * p - p).norm() < 1e-12);
  CHECK(std::abs(p.trace() - cd(1, 0)) < 1e-12);
}

TEST_CASE("norms agree with hand-computed singular values") {
  Mat a(2, 2);
  a << -2, 0, 0, 1;
  Norms n = norms(a);
  CHECK(n.op == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(n.hs == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  CHECK(n.trace == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_FALSE(is_psd(a));
  Mat b = a.adjoint() * a;
  CHECK(is_psd(b));
}
