#include <doctest.h>

#include "support.hpp"

#include <cyclocert/errors.hpp>
#include <cyclocert/fp_factor.hpp>

using namespace cyclocert;

TEST_CASE("prime utilities") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64((u64{1} << 61) - 1));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));
  CHECK(primes_between(10, 30) == std::vector<u64>{11, 13, 17, 19, 23, 29});
  CHECK(prime_divisors(45) == std::vector<u64>{3, 5});
  CHECK(powmod(3, 200, 101) == 1);
  CHECK(mulmod(invmod(17, 101), 17, 101) == 1);
  CHECK_THROWS_AS(FpPoly(15), NotPrime);
}

TEST_CASE("F_p arithmetic") {
  const FpPoly f(7, {1, 2, 3});
  const FpPoly g(7, {6, 1});
  const auto [q, r] = fp_divrem(f, g);
  CHECK(q * g + r == f);
  CHECK(r.degree() < g.degree());
  CHECK(FpPoly(7, {-1, 0, 1}) == FpPoly(7, {6, 0, 1}));
  CHECK(fp_gcd(FpPoly(7, {-1, 0, 1}), FpPoly(7, {1, 1})) == FpPoly(7, {1, 1}));
  CHECK(fp_powmod(FpPoly(5, {0, 1}), BigInt(5), FpPoly(5, {-1, 0, 0, 1})) == FpPoly(5, {0, 0, 1}));
}

TEST_CASE("Frobenius map agrees with powering") {
  std::mt19937_64 rng(3);
  for (u64 p : {2ull, 3ull, 13ull, 1000003ull, (1ull << 61) - 1}) {
    FpPoly g = testing::random_fp(rng, p, 9).monic();
    const FrobeniusMap frob(g);
    for (int i = 0; i < 5; ++i) {
      const FpPoly h = testing::random_fp(rng, p, 8);
      CHECK(frob.apply(h) == fp_powmod(h, BigInt(static_cast<unsigned long>(p)), g));
    }
  }
}

TEST_CASE("squarefree decomposition handles p-th powers") {
  const u64 p = 3;
  const FpPoly a(p, {1, 1}), b(p, {2, 0, 1});
  const FpPoly f = a * a * a * a * b;  // (x+1)^4 (x^2+2)
  auto parts = squarefree_decomposition(f);
  FpPoly rebuilt = FpPoly::from_reduced(p, {1});
  long deg = 0;
  for (const auto& [g, m] : parts) {
    for (unsigned i = 0; i < m; ++i) rebuilt = rebuilt * g;
    deg += g.degree() * static_cast<long>(m);
  }
  CHECK(rebuilt == f);
  CHECK(deg == f.degree());
}

TEST_CASE("factorization fixtures") {
  // m_2 mod 7 = x (x + 2) (x^4 + 4x^3 + 6x^2 + 6x + 2)
  const FactorMultiset fm = factor_mod_p(IntPoly{-7, -3, 14, 4, -7, -1, 1}, 7);
  REQUIRE(fm.factors.size() == 3);
  CHECK(fm.factors[0].poly == FpPoly(7, {0, 1}));
  CHECK(fm.factors[1].poly == FpPoly(7, {2, 1}));
  CHECK(fm.factors[2].poly == FpPoly(7, {2, 6, 6, 4, 1}));
  CHECK(fm.squarefree());
  CHECK_THROWS_AS(factor_mod_p(IntPoly{7, 14}, 7), ZeroModP);
}

TEST_CASE("random factorizations reconstruct") {
  std::mt19937_64 rng(17);
  const u64 primes[] = {2, 3, 5, 7, 31, 257, 65537, 1000003, (1ull << 61) - 1};
  for (int i = 0; i < 300; ++i) {
    const u64 p = primes[static_cast<std::size_t>(i) % std::size(primes)];
    FpPoly f = testing::random_fp(rng, p, 1 + static_cast<long>(rng() % 14));
    if (i % 4 == 0) f = f * f;
    const FactorMultiset fm = factor(f, rng());
    CHECK(fm.reconstruct() == f);
    CHECK(fm.degree() == f.degree());
    for (const auto& fac : fm.factors) {
      CHECK(fac.poly.leading() == 1);
      // Irreducible: no root of the factor's degree splits it further.
      CHECK(distinct_degree_factorization(fac.poly).size() == 1);
    }
  }
}

TEST_CASE("output is canonical across seeds") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const u64 p = i % 2 ? 1000003 : 7919;
    const FpPoly f = testing::random_fp(rng, p, 12);
    CHECK(factor(f, 1) == factor(f, 0xdeadbeef));
  }
}

TEST_CASE("gcd claims over F_{2j+3}") {
  CHECK_THROWS_AS(gcd_claims(3), NotApplicable);  // 9 is composite
  for (unsigned j = 1; j <= 40; ++j) {
    if (!is_prime_u64(2 * j + 3)) continue;
    const GcdClaimReport r = gcd_claims(j);
    CHECK(r.p == 2 * j + 3);
    CHECK_MESSAGE(r.holds(), "j = " << j);
  }
}

TEST_CASE("units of F_{p^2} with alpha + 1/alpha in F_p") {
  for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
    const FermatScanReport r = fermat_scan(p);
    CHECK(r.units == p * p - 1);
    // F_p^* and the norm-one subgroup meet in {1, -1}.
    CHECK(r.trace_in_base == 2 * p - 2);
    CHECK(r.order_divides == 2 * p - 2);
    CHECK(r.equivalence_holds());
  }
  CHECK_THROWS(fermat_scan(2));
}
