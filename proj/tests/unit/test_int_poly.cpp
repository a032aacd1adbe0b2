#include <doctest.h>

#include "support.hpp"

#include <cyclocert/cyclo.hpp>
#include <cyclocert/errors.hpp>
#include <cyclocert/int_poly.hpp>

using namespace cyclocert;

TEST_CASE("construction trims and formats") {
  IntPoly f{3, -5, 1, 0, 0};
  CHECK(f.degree() == 2);
  CHECK(f.to_string() == "x^2 - 5x + 3");
  CHECK(IntPoly{}.degree() == -1);
  CHECK(IntPoly{}.to_string() == "0");
  CHECK(IntPoly::x_pow_minus_one(3) == IntPoly{-1, 0, 0, 1});
}

TEST_CASE("exact division") {
  const IntPoly f{-5, 17, -8, 1};
  const IntPoly g{-1, 1};
  CHECK(exact_div(f * g, g) == f);
  CHECK_THROWS_AS(exact_div(f, IntPoly{1, 1}), NotDivisible);
  CHECK_THROWS_AS(exact_div(IntPoly{1, 0, 2}, IntPoly{0, 2}), NotDivisible);
  CHECK(divides(g, f * g));
  CHECK_FALSE(divides(IntPoly{1, 1}, f));
}

TEST_CASE("randomized mul / exact_div round trips") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const IntPoly f = testing::random_poly(rng, 12, 50);
    const IntPoly g = testing::random_poly(rng, 8, 50);
    CHECK(exact_div(mul(f, g), g) == f);
  }
}

TEST_CASE("shift, symmetrize and negate_variable") {
  const IntPoly q0{3, -5, 1};
  CHECK(shift(q0, 2) == IntPoly{-3, -1, 1});
  CHECK(shift(shift(q0, 7), -7) == q0);
  // x^2 - x - 3 at x = q + 1/q, times q^2.
  CHECK(symmetrize(IntPoly{-3, -1, 1}) == IntPoly{1, -1, -1, -1, 1});
  CHECK(negate_variable(IntPoly{1, 2, 3}) == IntPoly{1, -2, 3});

  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const IntPoly f = testing::random_poly(rng, 10, 20);
    const IntPoly s = symmetrize(f);
    CHECK(s.degree() == 2 * f.degree());
    CHECK(s.is_self_reciprocal());
    // symmetrize is a ring map after the q^deg scaling.
    const IntPoly g = testing::random_poly(rng, 6, 20);
    CHECK(symmetrize(f * g) == s * symmetrize(g));
  }
}

TEST_CASE("evaluation and signs") {
  const IntPoly f{-3, -1, 1};
  CHECK(evaluate(f, BigInt(3)) == 3);
  CHECK(evaluate(f, Rational(1, 2)) == Rational(-13, 4));
  CHECK(sign_at(f, Rational(1, 2)) == -1);
  CHECK(sign_at(f, Rational(10)) == 1);
  CHECK(derivative(IntPoly{1, 1, 1, 1}, 2) == IntPoly{2, 6});
  CHECK(eval_deriv(IntPoly{0, 0, 0, 1}, 1, Rational(1, 2)) == Rational(3, 4));
}

TEST_CASE("content, gcd and squarefree part") {
  CHECK(content(IntPoly{6, -4, 2}) == 2);
  CHECK(primitive_part(IntPoly{-6, 4, -2}) == IntPoly{3, -2, 1});
  const IntPoly a{-1, 1}, b{1, 1}, c{3, 0, 1};
  CHECK(gcd(a * b * c, a * c * c) == a * c);
  CHECK(squarefree_part(a * a * b) == a * b);
  CHECK(is_squarefree(a * b * c));
  CHECK_FALSE(is_squarefree(a * a));
}

TEST_CASE("resultant and discriminant") {
  CHECK(discriminant(IntPoly{3, -5, 1}) == 13);
  CHECK(discriminant(IntPoly{1, 1, 1}) == -3);
  CHECK(discriminant(IntPoly{5, -3, -2, 1}) == 169);
  CHECK(discriminant(IntPoly{-7, -3, 14, 4, -7, -1, 1}) == 7606541);
  CHECK(discriminant(IntPoly{1, -2, 0, 1, 0, -2, 1}) == 142805);
  CHECK(resultant(IntPoly{5, -3, -2, 1}, IntPoly{-3, -1, 1}) == -1);
  CHECK(resultant(IntPoly{-7, 3, 0, 0, 1}, IntPoly{5, -1, 0, 2}) == -5289);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    IntPoly f = testing::random_poly(rng, 5, 4);
    if (f.degree() < 1) continue;
    if (i % 3 == 0) f = f * IntPoly{1, 1} * IntPoly{1, 1};
    CHECK((discriminant(f) == 0) == (gcd(f, derivative(f)).degree() > 0));
  }
}

TEST_CASE("graeffe squares roots and fixes cyclotomic products") {
  CHECK(graeffe(IntPoly{3, -5, 1}) == IntPoly{9, -19, 1});
  for (std::uint64_t n = 1; n <= 50; ++n) {
    const IntPoly phi = cyclotomic_poly(n);
    const IntPoly g = graeffe(phi);
    // Squaring permutes primitive n-th roots for odd n, maps them onto the
    // primitive (n/2)-th roots for n = 2 mod 4, and two-to-one for 4 | n.
    const IntPoly half = n % 2 == 0 ? cyclotomic_poly(n / 2) : phi;
    const IntPoly expected = n % 2 == 1 ? phi : n % 4 == 2 ? half : half * half;
    CHECK_MESSAGE(g == expected, "n = " << n);
  }
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("1e-9") == Rational(1, 1000000000));
  CHECK(parse_rational("2.5e2") == 250);
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
}
