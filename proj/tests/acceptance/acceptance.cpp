// Acceptance run: one PASS/FAIL line per criterion; exit status is the number
// of failures.

#include <cyclocert/cyclo.hpp>
#include <cyclocert/errors.hpp>
#include <cyclocert/family.hpp>
#include <cyclocert/fp_factor.hpp>
#include <cyclocert/obstruction.hpp>
#include <cyclocert/real_roots.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace cyclocert;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) out.expect(false, "over time budget");
  if (!out.ok) ++failures;
  std::printf("%s  [%2d] %-58s %8.2fs / %.0fs%s%s\n", out.ok ? "PASS" : "FAIL", id, name, secs, budget_s,
              out.ok ? "" : "  -- ", out.note.str().c_str());
  std::fflush(stdout);
}

IntPoly random_poly(std::mt19937_64& rng, long max_degree, long bound) {
  std::uniform_int_distribution<long> deg(0, max_degree), coef(-bound, bound);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

std::string at(unsigned j) { return " (j=" + std::to_string(j) + ")"; }

}  // namespace

int main() {
  criterion(1, "fixture equality q0..q3, p0, p1, P0, P1", 1, [](Outcome& o) {
    o.expect(build_q(0) == IntPoly{3, -5, 1}, "q0");
    o.expect(build_q(1) == IntPoly{-5, 17, -8, 1} * IntPoly{-1, 1}, "q1");
    o.expect(build_q(2) == IntPoly{7, -59, 142, -140, 63, -13, 1}, "q2");
    o.expect(build_q(3) == IntPoly{9, -124, 502, -898, 827, -418, 117, -17, 1}, "q3");
    o.expect(build_p(0) == IntPoly{-3, -1, 1}, "p0");
    o.expect(build_p(1) == IntPoly{5, -3, -2, 1} * IntPoly{1, 1}, "p1");
    o.expect(build_P(0) == IntPoly{1, -1, -1, -1, 1}, "P0");
    o.expect(build_P(1) == IntPoly{1, -1, -1, -1, 1, -1, -1, -1, 1}, "P1");
  });

  const unsigned kMax = 200;
  std::vector<IntPoly> qs, ps, Ps;

  criterion(2, "identity suite, 0 <= j <= 200", 60, [&](Outcome& o) {
    qs = build_q_sequence(kMax);
    ps = build_p_sequence(kMax);
    Ps = build_P_sequence(kMax);
    const IntPoly q4m1 = IntPoly{-1, 0, 0, 0, 1};
    for (unsigned j = 0; j <= kMax && o.ok; ++j) {
      const IntPoly& P = Ps[j];
      o.expect(P == build_P_closed_form(j), "recursion != closed form" + at(j));
      o.expect(P == symmetrize(shift(qs[j], 2)), "P != symmetrize(shift(q,2))" + at(j));
      const IntPoly Q = P * q4m1;
      o.expect(Q == build_Q_expansion(j), "Q expansion" + at(j));
      o.expect(P.is_self_reciprocal(), "self-reciprocal" + at(j));
      for (const auto& c : P.coeffs()) o.expect(c >= -1 && c <= 1, "coefficient outside {-1,0,1}" + at(j));
    }
  });

  criterion(3, "special values, 0 <= j <= 200", 60, [&](Outcome& o) {
    for (unsigned j = 0; j <= kMax && o.ok; ++j) {
      const long k = j + 1;
      const BigInt sgn = j % 2 == 0 ? -1 : 1;  // (-1)^(j+1)
      o.expect(evaluate(ps[j], BigInt(0)) == sgn * (2 * j + 3), "p(0)" + at(j));
      o.expect(evaluate(derivative(ps[j]), BigInt(0)) == sgn * (j + 1), "p'(0)" + at(j));
      o.expect(evaluate(Ps[j], BigInt(0)) == 1, "P(0)" + at(j));
      o.expect(evaluate(Ps[j], BigInt(1)) == -BigInt(2 * j + 1), "P(1)" + at(j));
      const BigInt num = BigInt(2) * (2 * k + 1) * (8 * k - 1) * k;
      o.expect(num % 3 == 0, "P''(-1) formula not integral" + at(j));
      o.expect(evaluate(derivative(Ps[j], 2), BigInt(-1)) == num / 3 + 2 * k, "P''(-1)" + at(j));
      o.expect(check_special_values(j, ps[j], Ps[j]).all_passed(), "check_special_values" + at(j));
    }
  });

  criterion(4, "cyclotomic sieve on P_j and Q_j, 0 <= j <= 150", 600, [&](Outcome& o) {
    const IntPoly q4m1 = IntPoly{-1, 0, 0, 0, 1};
    for (unsigned j = 0; j <= 150 && o.ok; ++j) {
      const bool phi3 = j % 3 == 1;
      const CycloPart P = unity_root_indices(Ps[j]);
      o.expect(P.entries == (phi3 ? std::vector<CycloEntry>{{3, 1}} : std::vector<CycloEntry>{}), "P" + at(j));
      o.expect(P.reconstruct() == Ps[j], "P reconstruct" + at(j));
      std::vector<CycloEntry> expected{{1, 1}, {2, 1}};
      if (phi3) expected.push_back({3, 1});
      expected.push_back({4, 1});
      o.expect(unity_root_indices(Ps[j] * q4m1).entries == expected, "Q" + at(j));
    }
  });

  criterion(5, "degree-pattern oracle excludes splits of R_j, j <= 30", 300, [&](Outcome& o) {
    for (unsigned j = 0; j <= 30 && o.ok; ++j) {
      const DegreeOracle d = degree_pattern_oracle(minimal_polys(j, ps[j], Ps[j]).R);
      o.expect(d.primes.size() >= 20, "fewer than 20 unramified primes" + at(j));
      o.expect(d.excludes_proper_factors(), "proper split not excluded" + at(j));
    }
  });

  criterion(6, "certificates for 2 <= j <= 100 at a prime dividing 2j+3", 900, [](Outcome& o) {
    for (unsigned j = 2; j <= 100 && o.ok; ++j) {
      const Verdict v = find_certificate(j, default_prime_bound(j));
      const auto* c = std::get_if<CertifiedNotGalois>(&v);
      o.expect(c != nullptr, "no certificate" + at(j));
      if (!c) break;
      o.expect((2 * j + 3) % c->certificate.p == 0, "certificate prime does not divide 2j+3" + at(j));
      o.expect(recheck(c->certificate), "recheck" + at(j));
      if (j == 2) {
        o.expect(c->certificate.p == 7, "j=2 prime");
        o.expect(c->certificate.pattern.to_string() == "{(1,1),(1,1),(4,1)}", "j=2 pattern");
      }
      if (j == 3) o.expect(c->certificate.p == 3, "j=3 prime");
    }
  });

  criterion(7, "negative controls j = 0, 1 at prime bound 1000", 60, [](Outcome& o) {
    for (unsigned j : {0u, 1u}) {
      const Verdict v = find_certificate(j, 1000);
      o.expect(std::holds_alternative<NoCertificateWithinBound>(v), "certificate found" + at(j));
    }
  });

  criterion(8, "mod-p claims: gcds, multiplicity <= 4, P_2 mod Phi_3", 600, [](Outcome& o) {
    for (unsigned j = 1; j <= 200 && o.ok; ++j) {
      if (!is_prime_u64(2 * j + 3)) continue;
      const GcdClaimReport r = gcd_claims(j);
      o.expect(r.claim1, "gcd claim (1)" + at(j));
      o.expect(r.claim2, "gcd claim (2)" + at(j));
    }
    for (unsigned j = 2; j <= 100 && o.ok; ++j)
      for (u64 p : prime_divisors(2 * j + 3)) {
        if (p <= 3) continue;
        for (const auto& f : factor_mod_p(minimal_polys(j).m, p).factors)
          o.expect(f.multiplicity <= 4, "multiplicity > 4 at p=" + std::to_string(p) + at(j));
      }
    const FpPoly r = fp_rem(FpPoly(7, build_P(2)), FpPoly(7, {1, 1, 1}));
    o.expect(!r.is_zero(), "q^2+q+1 divides P_2 over F_7");
  });

  criterion(9, "alpha + 1/alpha in F_p iff order divides p-1 or p+1", 10, [](Outcome& o) {
    for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
      const FermatScanReport r = fermat_scan(p);
      o.expect(r.units == p * p - 1 && r.equivalence_holds(), "mismatch at p=" + std::to_string(p));
    }
  });

  criterion(10, "root structure j <= 50 and d_j brackets to 1e-9", 120, [&](Outcome& o) {
    const Rational w(1, 1000000000);
    for (unsigned j = 0; j <= 50 && o.ok; ++j) {
      const IntPoly& q = qs[j];
      o.expect(real_root_count_with_multiplicity(q) == static_cast<std::size_t>(q.degree()), "q not all real" + at(j));
      const SturmSequence s(squarefree_part(Ps[j]));
      o.expect(s.count(OpenInterval::between(0, 1)) == 1, "roots in (0,1)" + at(j));
      o.expect(s.count(OpenInterval::above(1)) == 1, "roots in (1,inf)" + at(j));
      o.expect(s.count(OpenInterval::below(0)) == 0 && sign_at(Ps[j], 0) != 0, "roots in (-inf,0]" + at(j));
      const RationalInterval b = pf_index(j, w);  // throws if the alpha cross-check fails
      o.expect(b.width() <= w, "bracket too wide" + at(j));
    }
    // (5 + sqrt 13)/2 in [lo, hi]  <=>  (2 lo - 5)^2 <= 13 <= (2 hi - 5)^2 with both sides positive.
    const RationalInterval b0 = pf_index(0, w);
    const Rational a = 2 * b0.lo - 5, c = 2 * b0.hi - 5;
    o.expect(a > 0 && a * a <= 13 && c * c >= 13, "d_0 not bracketed");
    o.expect(b0.width() <= w, "d_0 bracket too wide");
  });

  criterion(11, "kernel: round trips, reconstruction, seed independence", 120, [](Outcome& o) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10000 && o.ok; ++i) {
      const IntPoly f = random_poly(rng, 10, 1000), g = random_poly(rng, 10, 1000);
      o.expect(exact_div(mul(f, g), g) == f, "exact_div round trip");
    }
    const std::vector<u64> primes = primes_between(2, 2000);
    for (int i = 0; i < 1000 && o.ok; ++i) {
      const u64 p = i % 10 == 0 ? (u64{1} << 61) - 1 : primes[rng() % primes.size()];
      const IntPoly f = random_poly(rng, 16, 1000000);
      FpPoly fp(p, f);
      if (fp.degree() < 1) continue;
      const FactorMultiset a = factor(fp, rng());
      o.expect(a.reconstruct() == fp, "reconstruction at p=" + std::to_string(p));
      if (i % 2 == 0) o.expect(factor(fp, 1) == factor(fp, 2), "seed dependence at p=" + std::to_string(p));
    }
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
