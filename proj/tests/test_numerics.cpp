#include <numbers>

#include "doctest.h"
#include "modlab/fft.hpp"
#include "modlab/hilbert.hpp"
#include "modlab/lambda.hpp"

using namespace modlab;

TEST_CASE("trapezoid and simpson reproduce Gaussian integrals") {
  TimeGrid grid(20.0, 0.01);
  std::vector<cd> s(grid.size());
  for (int j = 0; j < grid.size(); ++j)
    s[j] = std::exp(-grid.t(j) * grid.t(j));
  const double root_pi = std::sqrt(std::numbers::pi);
  CHECK(std::abs(trapezoid(grid, s) - cd(root_pi, 0)) < 1e-12);
  CHECK(std::abs(simpson(grid.dt, s) - cd(root_pi, 0)) < 1e-12);
}

TEST_CASE("integrate_line with tail handles the Lorentzian") {
  TimeGrid grid(40.0, 0.01);
  auto lorentz = [](double t) { return cd(1.0 / (1 + t * t), 0); };
  cd full = integrate_line(grid, lorentz, true);
  CHECK(std::abs(full - cd(std::numbers::pi, 0)) < 1e-8);
  // without the tail the truncation error ~ 2/T is visible
  cd truncated = integrate_line(grid, lorentz, false);
  CHECK(std::abs(truncated - cd(std::numbers::pi, 0)) > 1e-2);
}

TEST_CASE("fft_convolve matches the schoolbook product") {
  std::vector<cd> a{1, 2, 3}, b{4, 5};
  auto c = fft_convolve(a, b);
  REQUIRE(c.size() == 4);
  CHECK(std::abs(c[0] - cd(4, 0)) < 1e-12);
  CHECK(std::abs(c[1] - cd(13, 0)) < 1e-12);
  CHECK(std::abs(c[2] - cd(22, 0)) < 1e-12);
  CHECK(std::abs(c[3] - cd(15, 0)) < 1e-12);
}

TEST_CASE("czt matches the direct sum on an off-lattice frequency step") {
  Rng rng(13);
  const size_t n = 32, K = 50;
  const double w = 0.1234;
  std::vector<cd> x(n);
  for (auto& v : x) v = rng.cnormal();
  auto out = czt(x, w, K);
  REQUIRE(out.size() == K);
  for (size_t k = 0; k < K; ++k) {
    cd direct = 0;
    for (size_t j = 0; j < n; ++j)
      direct += x[j] * std::exp(cd(0, -w * double(j) * double(k)));
    CHECK(std::abs(out[k] - direct) < 1e-10);
  }
}

TEST_CASE("lambda profiles add to a two-sided exponential") {
  LambdaGrid lg(20.0, 0.05);
  const cd beta(-0.3, 0);
  auto lower = LambdaFunction::indicator_exp(lg, beta, cd(1, 0), true);
  auto upper = LambdaFunction::indicator_exp(lg, beta, cd(1, 0), false);
  auto whole = LambdaFunction::from_function(
      lg, [&](double l) { return std::exp(beta * l); });
  CHECK((lower + upper).sup_distance(whole) < 1e-12);
}

TEST_CASE("lambda integration sees the one-sided jump exactly") {
  LambdaGrid lg(60.0, 0.01);
  auto m = LambdaFunction::indicator_exp(lg, cd(1, 0), cd(1, 0), true);
  // int_{-inf}^0 e^{2 lambda} dlambda = 1/2
  cd v = m.integrate([](double l) { return std::exp(l); });
  CHECK(std::abs(v - cd(0.5, 0)) < 1e-6);
}

TEST_CASE("abs_squared clips sub-floor noise before squaring") {
  LambdaGrid lg(1.0, 0.5);
  auto m = LambdaFunction::zero(lg);
  m.values = {cd(1, 0), cd(1e-14, 0), cd(0, -2), cd(0, 0), cd(1e-13, 1e-13)};
  auto sq = abs_squared(m, 1e-12);
  CHECK(std::abs(sq.values[0] - cd(1, 0)) < 1e-15);
  CHECK(sq.values[1] == cd(0, 0));
  CHECK(std::abs(sq.values[2] - cd(4, 0)) < 1e-15);
  CHECK(sq.values[4] == cd(0, 0));
}

TEST_CASE("dual action and left translation are isometric") {
  TimeGrid grid(20.0, 0.05);
  Rng rng(19);
  FiniteAlgebra alg({2});
  auto omega = random_state(rng, alg);
  auto seed = random_element(rng, alg);
  auto xi = HilbertVector::from_sampler(
      grid,
      [seed](cd z) { return L2Vector(std::exp(-z * z) * seed); }, false);
  const double n0 = xi.norm();
  CHECK(apply_dual_action(1.7, xi).norm() == doctest::Approx(n0).epsilon(1e-12));
  CHECK(left_translate(omega, 0.5, xi).norm() ==
        doctest::Approx(n0).epsilon(1e-8));
  // W_s is diagonal in t, so it commutes with the left action of M
  auto a = random_element(rng, alg);
  auto lhs = apply_dual_action(0.9, act_left(a, xi));
  auto rhs = act_left(a, apply_dual_action(0.9, xi));
  CHECK(std::abs(hilbert_inner(lhs - rhs, lhs - rhs)) < 1e-20);
}
