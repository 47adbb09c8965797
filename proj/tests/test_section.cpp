#include "doctest.h"
#include "modlab/section.hpp"

using namespace modlab;

namespace {

struct Fixture {
  TimeGrid grid{6.0, 0.05};
  FiniteAlgebra alg{{2}};
  Functional ref;
  GridSection f, g;

  Fixture() {
    Rng rng(41);
    ref = random_state(rng, alg);
    auto a = random_element(rng, alg);
    auto b = random_element(rng, alg);
    f = scalar_section(grid, ref, [](double t) { return std::exp(-t * t); }, a,
                       {a.op_norm() * 1.01, 1.0});
    g = scalar_section(
        grid, ref, [](double t) { return std::exp(-2 * t * t) * cd(0, 1); }, b,
        {b.op_norm() * 1.01, 2.0});
  }
};

double section_distance(const GridSection& x, const GridSection& y) {
  double d = 0;
  for (size_t j = 0; j < x.values.size(); ++j)
    d = std::max(d, (x.values[j] - y.values[j]).op_norm());
  return d;
}

}  // namespace

TEST_CASE("fft convolution matches the direct twisted convolution") {
  Fixture fx;
  auto cache = TwistCache::build(fx.ref, fx.grid);
  auto fast = convolve(fx.f, fx.g, cache);
  auto slow = convolve_direct(fx.f, fx.g, cache);
  CHECK(section_distance(fast, slow) < 1e-12);
}

TEST_CASE("star is an involution and an anti-homomorphism") {
  Fixture fx;
  auto cache = TwistCache::build(fx.ref, fx.grid);
  CHECK(section_distance(star(star(fx.f, cache), cache), fx.f) < 1e-12);
  auto lhs = star(convolve(fx.f, fx.g, cache), cache);
  auto rhs = convolve(star(fx.g, cache), star(fx.f, cache), cache);
  CHECK(section_distance(lhs, rhs) < 1e-10);
}

TEST_CASE("theta is multiplicative against the convolution") {
  Fixture fx;
  const double s = 0.8;
  auto cache = TwistCache::build(fx.ref, fx.grid);
  auto lhs = scale_theta(convolve(fx.f, fx.g, cache), s);
  auto rhs = convolve(scale_theta(fx.f, s), scale_theta(fx.g, s), cache);
  CHECK(section_distance(lhs, rhs) < 1e-10);
}

TEST_CASE("l1 norm is submultiplicative and the decay certificate holds") {
  Fixture fx;
  auto fg = convolve(fx.f, fx.g);
  CHECK(fg.l1_norm() <= fx.f.l1_norm() * fx.g.l1_norm() + 1e-9);
  CHECK(fx.f.decay_holds());
  CHECK(fx.g.decay_holds());
}
