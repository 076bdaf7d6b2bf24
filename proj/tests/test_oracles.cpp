// Sanity checks for the independent test oracles themselves.

#include <vector>

#include "doctest.h"
#include "immdec/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace immdec;
using testsupport::Rng;

TEST_CASE("series inversion of a truncated total class") {
  GenSetPtr g = make_generator_set({{"x", 2}});
  const Element one = Element::unit(g);
  const Element x = Element::generator(g, 0);
  const Element x2 = mul(x, x);

  // (1 + 3 x^2)^{-1} = 1 - 3 x^2 + 9 x^4 - 27 x^6 + ...
  const auto inv = testsupport::invert_series({one, x2.scaled(Rational(3))}, 3);
  REQUIRE(inv.size() == 4);
  CHECK(inv[0] == one);
  CHECK(inv[1] == x2.scaled(Rational(-3)));
  CHECK(inv[2] == mul(x2, x2).scaled(Rational(9)));
  CHECK(inv[3] == mul(mul(x2, x2), x2).scaled(Rational(-27)));
}

TEST_CASE("series inversion with two slots") {
  GenSetPtr g = make_generator_set({{"u", 4}});
  const Element one = Element::unit(g);
  const Element u = Element::generator(g, 0);
  // (1 + 2u + 7u^2)^{-1} = 1 - 2u - 3u^2 + 20u^3 - ...
  const auto inv =
      testsupport::invert_series({one, u.scaled(Rational(2)),
                                  mul(u, u).scaled(Rational(7))}, 3);
  CHECK(inv[1] == u.scaled(Rational(-2)));
  CHECK(inv[2] == mul(u, u).scaled(Rational(-3)));
  CHECK(inv[3] == mul(mul(u, u), u).scaled(Rational(20)));
}

TEST_CASE("series inversion is a two-sided inverse on random input") {
  Rng rng(909);
  for (int trial = 0; trial < 30; ++trial) {
    GenSetPtr g = testsupport::random_generators(rng, rng.uniform(1, 3), 2, 4);
    std::vector<Element> s = {Element::unit(g)};
    const int len = rng.uniform(1, 3);
    for (int i = 1; i <= len; ++i)
      s.push_back(testsupport::random_element(rng, g, 2 * i, 3));
    const auto inv = testsupport::invert_series(s, 4);
    for (int k = 0; k <= 4; ++k) {
      Element conv(g);
      for (int i = 0; i <= k; ++i) {
        const Element& a = (i < static_cast<int>(s.size())) ? s[static_cast<std::size_t>(i)]
                                                            : Element::zero(g);
        conv += testsupport::naive_mul(a, inv[static_cast<std::size_t>(k - i)]);
      }
      CHECK(conv == ((k == 0) ? Element::unit(g) : Element::zero(g)));
    }
  }
}

TEST_CASE("series inversion rejects a non-unit head") {
  GenSetPtr g = make_generator_set({{"x", 2}});
  CHECK_THROWS_AS(testsupport::invert_series({}, 2), input_error);
  CHECK_THROWS_AS(testsupport::invert_series({Element::generator(g, 0)}, 2),
                  input_error);
  CHECK_THROWS_AS(
      testsupport::invert_series({Element::unit(g, Rational(2))}, 2), input_error);
}

TEST_CASE("odometer monomial scan on a small algebra") {
  GenSetPtr g = make_generator_set({{"x", 2}, {"y", 3}});
  CHECK(testsupport::naive_monomials(*g, 0).size() == 1);
  CHECK(testsupport::naive_monomials(*g, 1).empty());
  CHECK(testsupport::naive_monomials(*g, -1).empty());
  const auto deg7 = testsupport::naive_monomials(*g, 7);
  REQUIRE(deg7.size() == 1);
  CHECK(monomial_to_string(*g, deg7[0]) == "x^2*y");
  // The odd letter never appears squared.
  for (const auto& m : testsupport::naive_monomials(*g, 6)) CHECK(m.exps[1] <= 1);
}

TEST_CASE("independent solver handles the empty system") {
  GenSetPtr g = make_generator_set({{"x", 2}});
  const FreeCDGA alg(g, {Element::zero(g)});
  const FreeCdgaAmbient view(alg, 4);
  LinearDgaSystem s;
  s.ambient = &view;
  const auto sol = testsupport::naive_linear_solve(s);
  REQUIRE(!sol.empty());
  CHECK(sol.dim() == 0);
  CHECK(sol.point().empty());
  CHECK(same_subspace(sol, solve_linear_dga_system(s)));
}
