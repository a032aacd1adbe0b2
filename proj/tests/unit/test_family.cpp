#include <doctest.h>

#include <cyclocert/errors.hpp>
#include <cyclocert/family.hpp>
#include <cyclocert/fp_factor.hpp>
#include <cyclocert/real_roots.hpp>

using namespace cyclocert;

TEST_CASE("printed fixtures") {
  CHECK(build_q(0) == IntPoly{3, -5, 1});
  CHECK(build_q(1) == IntPoly{-5, 17, -8, 1} * IntPoly{-1, 1});
  CHECK(build_q(2) == IntPoly{7, -59, 142, -140, 63, -13, 1});
  CHECK(build_q(3) == IntPoly{9, -124, 502, -898, 827, -418, 117, -17, 1});
  CHECK(build_p(0) == IntPoly{-3, -1, 1});
  CHECK(build_p(1) == IntPoly{5, -3, -2, 1} * IntPoly{1, 1});
  CHECK(build_P(0) == IntPoly{1, -1, -1, -1, 1});
  CHECK(build_P(1) == IntPoly{1, -1, -1, -1, 1, -1, -1, -1, 1});
}

TEST_CASE("minimal polynomials") {
  CHECK(minimal_polys(0).m == IntPoly{-3, -1, 1});
  CHECK(minimal_polys(1).m == IntPoly{5, -3, -2, 1});
  CHECK(minimal_polys(1).R == IntPoly{1, -2, 0, 1, 0, -2, 1});
  CHECK(minimal_polys(2).m == IntPoly{-7, -3, 14, 4, -7, -1, 1});
  CHECK(minimal_polys(3).m == IntPoly{9, 4, -30, -10, 27, 6, -9, -1, 1});
  for (unsigned j = 0; j < 12; ++j) CHECK(has_phi3(j) == (j % 3 == 1));
}

TEST_CASE("identity suite and special values, 0 <= j <= 40") {
  const auto qs = build_q_sequence(40);
  const auto ps = build_p_sequence(40);
  const auto Ps = build_P_sequence(40);
  for (unsigned j = 0; j <= 40; ++j) {
    CHECK(qs[j] == build_q(j));
    const FamilyRecord f = assemble_family(j, qs[j], ps[j], Ps[j]);
    CHECK_MESSAGE(f.consistent(), "j = " << j);
    CHECK(build_Q(j) == build_Q_expansion(j));
    CHECK(check_special_values(j).all_passed());
  }
}

TEST_CASE("special value formulas by hand") {
  // j = 2, k = 3: P''(-1) = 2*7*23*3/3 + 6 = 328.
  const IntPoly P2 = build_P(2);
  CHECK(evaluate(derivative(P2, 2), BigInt(-1)) == 328);
  CHECK(evaluate(P2, BigInt(1)) == -5);
  CHECK(evaluate(build_p(2), BigInt(0)) == -7);
  CHECK(evaluate(derivative(build_p(2)), BigInt(0)) == -3);
}

TEST_CASE("x is a simple factor of m_j mod every p | 2j+3") {
  for (unsigned j = 1; j <= 40; ++j)
    for (u64 p : prime_divisors(2 * j + 3)) {
      const FactorMultiset fm = factor_mod_p(minimal_polys(j).m, p);
      const FpPoly x = FpPoly::from_reduced(p, {0, 1});
      unsigned mult = 0;
      for (const auto& f : fm.factors)
        if (f.poly == x) mult = f.multiplicity;
      CHECK_MESSAGE(mult == 1, "j = " << j << ", p = " << p);
    }
}

TEST_CASE("pf index brackets") {
  const Rational w(1, 1000000000);
  const RationalInterval d0 = pf_index(0, w);
  CHECK(d0.width() <= w);
  // (5 + sqrt 13)/2 ~ 4.3027756377
  CHECK(d0.lo > Rational(43027756, 10000000));
  CHECK(d0.hi < Rational(43027757, 10000000));
  CHECK(sign_at(IntPoly{3, -5, 1}, d0.lo) * sign_at(IntPoly{3, -5, 1}, d0.hi) <= 0);
  for (unsigned j = 1; j <= 10; ++j) {
    const RationalInterval b = pf_index(j, w);
    CHECK(b.width() <= w);
    CHECK(b.lo > 4);
    CHECK(b.hi < Rational(9, 2));
  }
  const FamilyRecord f = build_family(3, w);
  REQUIRE(f.d_bracket);
  CHECK(f.d_bracket->width() <= w);
}
