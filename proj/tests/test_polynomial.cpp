#include <doctest.h>

#include "fanocert/json_io.hpp"
#include "fanocert/polynomial.hpp"
#include "test_util.hpp"

using namespace fanocert;
using namespace fanotest;

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("homogeneous component extraction") {
  // f = 1 + z1 + z1 z2 in two variables
  Polynomial<Rational> f = rconst(2, 1) + rvar(2, 0) + rvar(2, 0) * rvar(2, 1);
  CHECK(f.homogeneous_component(2) == rvar(2, 0) * rvar(2, 1));
  CHECK(f.homogeneous_component(0) == rconst(2, 1));
  CHECK(f.homogeneous_component(3).is_zero());

  CHECK(Polynomial<Rational>::zero(2).homogeneous_component(1).is_zero());

  // (1 + z)^3: the degree-2 piece, with the cube built by repeated products.
  Polynomial<Rational> base = rconst(1, 1) + rvar(1, 0);
  Polynomial<Rational> cube = base * base * base;
  CHECK(cube.homogeneous_component(2) == rmono(1, {2}, 3));
}

TEST_CASE("component sum reassembles the polynomial") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial<Rational> f = random_rational_poly(5, 10, rng);
    Polynomial<Rational> sum(5);
    for (unsigned d = 0; d <= 10; ++d) sum += f.homogeneous_component(d);
    CHECK(sum == f);
  }
}

TEST_CASE("ring axioms on randomized inputs") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_rational_poly(3, 4, rng);
    auto g = random_rational_poly(3, 4, rng);
    auto h = random_rational_poly(3, 4, rng);
    CHECK((f + g) * h == f * h + g * h);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
  }
  CoefficientSampler<Fp> sampler;
  sampler.p = 101;
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_homogeneous<Fp>(3, 2, rng, sampler);
    auto g = random_homogeneous<Fp>(3, 3, rng, sampler);
    auto h = random_homogeneous<Fp>(3, 2, rng, sampler);
    CHECK((f + g) * h == f * h + g * h);
  }
}

TEST_CASE("evaluation") {
  Polynomial<Rational> f = rvar(2, 0) + rvar(2, 1);
  std::vector<Rational> pt{Rational(1), Rational(2)};
  CHECK(f.evaluate(pt) == Rational(3));
  CHECK(Polynomial<Rational>::zero(2).evaluate(pt) == Rational(0));

  // z1^2 - z2 over F_7 at (3, 2): 9 - 2 = 7 = 0.
  const std::uint64_t p = 7;
  Polynomial<Fp> g = fvar(2, 0, p) * fvar(2, 0, p) - fvar(2, 1, p);
  std::vector<Fp> fpt{make_fp(3, p), make_fp(2, p)};
  CHECK(is_zero_coeff(g.evaluate(fpt)));
}

TEST_CASE("rational and F_p evaluation commute with reduction") {
  SplitMix64 rng(11);
  const std::uint64_t p = 10007;
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial<Rational> f = random_rational_poly(3, 4, rng);
    f = f.scaled_by_rational(make_rational(1, 6));  // denominators coprime to p
    std::vector<Rational> pt{make_rational(rng.in_range(-9, 9), 2),
                             make_rational(rng.in_range(-9, 9), 3),
                             Rational(rng.in_range(-9, 9))};
    const Rational exact = f.evaluate(pt);

    Polynomial<Fp> fp_poly(3);
    for (const auto& [e, c] : f.terms()) fp_poly.add_term(e, to_fp(c, p));
    std::vector<Fp> fp_pt;
    for (const auto& c : pt) fp_pt.push_back(to_fp(c, p));
    CHECK(fp_poly.evaluate(fp_pt) == to_fp(exact, p));
  }
}

TEST_CASE("dehomogenize at a point") {
  // F = x0 x1, p = (1, 0): components [0, z1, 0].
  {
    Polynomial<Rational> F = rvar(2, 0) * rvar(2, 1);
    std::vector<Rational> p{Rational(1), Rational(0)};
    auto dec = dehomogenize_at_point(F, std::span<const Rational>(p));
    REQUIRE(dec.components.size() == 3);
    CHECK(dec.components[0].is_zero());
    CHECK(dec.components[1] == rvar(1, 0));
    CHECK(dec.components[2].is_zero());
  }
  // F = x1^2, p = (1, 1): components [1, 2 z1, z1^2].
  {
    Polynomial<Rational> F = rvar(2, 1) * rvar(2, 1);
    std::vector<Rational> p{Rational(1), Rational(1)};
    auto dec = dehomogenize_at_point(F, std::span<const Rational>(p));
    REQUIRE(dec.components.size() == 3);
    CHECK(dec.components[0] == rconst(1, 1));
    CHECK(dec.components[1] == rmono(1, {1}, 2));
    CHECK(dec.components[2] == rmono(1, {2}, 1));
    CHECK(dec.sum().evaluate(std::vector<Rational>{Rational(0)}) == F.evaluate(p));
  }
  // F = x0^2 is constant in the chart.
  {
    Polynomial<Rational> F = rvar(2, 0) * rvar(2, 0);
    std::vector<Rational> p{Rational(1), Rational(5)};
    auto dec = dehomogenize_at_point(F, std::span<const Rational>(p));
    REQUIRE(dec.components.size() == 3);
    CHECK(dec.components[0] == rconst(1, 1));
    CHECK(dec.components[1].is_zero());
    CHECK(dec.components[2].is_zero());
  }
  // Vanishing first coordinate is rejected.
  {
    Polynomial<Rational> F = rvar(2, 1);
    std::vector<Rational> p{Rational(0), Rational(1)};
    CHECK_THROWS_AS((void)dehomogenize_at_point(F, std::span<const Rational>(p)),
                    std::invalid_argument);
  }
  // Component 0 is F(p) on random homogeneous inputs.
  SplitMix64 rng(3);
  CoefficientSampler<Rational> sampler;
  for (int trial = 0; trial < 25; ++trial) {
    auto F = random_homogeneous<Rational>(3, 4, rng, sampler);
    std::vector<Rational> p{Rational(1), Rational(rng.in_range(-5, 5)), Rational(rng.in_range(-5, 5))};
    auto dec = dehomogenize_at_point(F, std::span<const Rational>(p));
    Polynomial<Rational> c0 = dec.components[0];
    CHECK(c0 == Polynomial<Rational>::constant(2, F.evaluate(p)));
  }
}

TEST_CASE("force vanish at a point") {
  // F = x1^2, p = (1,1) -> x1^2 - x0^2.
  {
    Polynomial<Rational> F = rvar(2, 1) * rvar(2, 1);
    std::vector<Rational> p{Rational(1), Rational(1)};
    auto out = force_vanish_at(F, std::span<const Rational>(p));
    CHECK(out == rvar(2, 1) * rvar(2, 1) - rvar(2, 0) * rvar(2, 0));
  }
  // Already vanishing: unchanged.
  {
    Polynomial<Rational> F = rvar(2, 1);
    std::vector<Rational> p{Rational(1), Rational(0)};
    CHECK(force_vanish_at(F, std::span<const Rational>(p)) == F);
  }
  // F = x0 + x1, p = (1,2) -> x1 - 2 x0.
  {
    Polynomial<Rational> F = rvar(2, 0) + rvar(2, 1);
    std::vector<Rational> p{Rational(1), Rational(2)};
    CHECK(force_vanish_at(F, std::span<const Rational>(p)) == rvar(2, 1) - rmono(2, {1, 0}, 2));
  }
  // Random property: result vanishes at p and stays homogeneous.
  SplitMix64 rng(5);
  CoefficientSampler<Rational> sampler;
  for (int trial = 0; trial < 40; ++trial) {
    auto F = random_homogeneous<Rational>(4, 3, rng, sampler);
    std::vector<Rational> p{Rational(1), Rational(rng.in_range(-4, 4)), Rational(rng.in_range(-4, 4)),
                            Rational(rng.in_range(-4, 4))};
    auto out = force_vanish_at(F, std::span<const Rational>(p));
    CHECK(is_zero_coeff(out.evaluate(p)));
    CHECK(out.is_homogeneous());
  }
}

TEST_CASE("random sampling is deterministic in the seed") {
  CoefficientSampler<Rational> sampler;
  auto f1 = random_homogeneous<Rational>(2, 1, std::uint64_t{99}, sampler);
  auto f2 = random_homogeneous<Rational>(2, 1, std::uint64_t{99}, sampler);
  CHECK(f1 == f2);
  CHECK(f1.term_count() == 2);  // a x0 + b x1, full support

  auto c = random_homogeneous<Rational>(3, 0, std::uint64_t{1}, sampler);
  CHECK(!c.is_zero());
  CHECK(c.total_degree() == 0);

  CoefficientSampler<Fp> fp_sampler;
  fp_sampler.p = kDefaultPrime;
  auto g1 = random_homogeneous<Fp>(3, 2, std::uint64_t{123}, fp_sampler);
  auto g2 = random_homogeneous<Fp>(3, 2, std::uint64_t{123}, fp_sampler);
  CHECK(g1 == g2);
  CHECK(g1.term_count() == 6);
}

TEST_CASE("json round trip and canonical term order") {
  Polynomial<Rational> f = rvar(2, 0) * rvar(2, 0) + rvar(2, 1).scaled_by_rational(make_rational(-1, 8)) +
                           rconst(2, 3);
  Json j = polynomial_to_json(f);
  CHECK(polynomial_from_json_rational(j) == f);
  // Leading (grevlex-largest) term first.
  CHECK(j["terms"][0]["e"] == Json::array({2, 0}));
  CHECK(j["terms"][1]["c"] == "-1/8");
  CHECK(j["terms"][2]["e"] == Json::array({0, 0}));

  const std::uint64_t p = 101;
  Polynomial<Fp> g = fvar(3, 0, p) * fvar(3, 2, p) + fvar(3, 1, p).scaled(make_fp(7, p));
  CHECK(polynomial_from_json_fp(polynomial_to_json(g), p) == g);
}

TEST_SUITE_END();
