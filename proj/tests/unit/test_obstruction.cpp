#include <doctest.h>

#include <cyclocert/family.hpp>
#include <cyclocert/obstruction.hpp>

#include <functional>
#include <set>

using namespace cyclocert;

namespace {

using Blocks = std::vector<PatternBlock>;

Blocks sorted(Blocks b) {
  std::sort(b.begin(), b.end());
  return b;
}

// Every pattern with sum degree * multiplicity = n.
void all_patterns(long n, long min_deg, unsigned min_mult, Blocks& cur, std::vector<Blocks>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (long d = min_deg; d <= n; ++d)
    for (unsigned m = d == min_deg ? min_mult : 1; d * static_cast<long>(m) <= n; ++m) {
      cur.push_back({d, m});
      all_patterns(n - d * static_cast<long>(m), d, m, cur, out);
      cur.pop_back();
    }
}

// Integer partitions of c, as part sizes.
void partitions(unsigned c, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (c == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(c, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(c - k, k, cur, out);
    cur.pop_back();
  }
}

// Constructive side: g = n/(eh) primes with ramification e and residue degree
// h; prime i reduces to (an irreducible of degree d_i | h)^(e h / d_i), and
// primes whose residue polynomials coincide merge by adding multiplicities.
std::set<Blocks> realizable_patterns(long n) {
  std::set<Blocks> out;
  for (long h = 1; h <= n; ++h) {
    if (n % h) continue;
    for (long e = 1; e * h <= n; ++e) {
      if (n % (e * h)) continue;
      const long g = n / (e * h);
      std::vector<long> divs;
      for (long d = 1; d <= h; ++d)
        if (h % d == 0) divs.push_back(d);
      // Number of primes assigned to each divisor degree.
      std::vector<unsigned> count(divs.size(), 0);
      std::function<void(std::size_t, long)> assign = [&](std::size_t i, long left) {
        if (i == divs.size()) {
          if (left != 0) return;
          std::vector<Blocks> acc{{}};
          for (std::size_t k = 0; k < divs.size(); ++k) {
            if (count[k] == 0) continue;
            std::vector<std::vector<unsigned>> parts;
            std::vector<unsigned> tmp;
            partitions(count[k], count[k], tmp, parts);
            std::vector<Blocks> next;
            for (const auto& base : acc)
              for (const auto& part : parts) {
                Blocks b = base;
                for (unsigned size : part)
                  b.push_back({divs[k], static_cast<unsigned>(size * e * h / divs[k])});
                next.push_back(std::move(b));
              }
            acc = std::move(next);
          }
          for (auto& b : acc) out.insert(sorted(std::move(b)));
          return;
        }
        for (long c = 0; c <= left; ++c) {
          count[i] = static_cast<unsigned>(c);
          assign(i + 1, left - c);
        }
        count[i] = 0;
      };
      assign(0, g);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("pattern basics") {
  const FactorPattern p({{4, 1}, {1, 1}, {1, 1}});
  CHECK(p.n == 6);
  CHECK(p.to_string() == "{(1,1),(1,1),(4,1)}");
  CHECK_THROWS(FactorPattern({{0, 1}}));
  CHECK_THROWS(FactorPattern({{2, 0}}));
}

TEST_CASE("galois_feasible matches constructive enumeration for n <= 12") {
  for (long n = 1; n <= 12; ++n) {
    std::vector<Blocks> patterns;
    Blocks cur;
    all_patterns(n, 1, 1, cur, patterns);
    const std::set<Blocks> ok = realizable_patterns(n);
    for (const auto& b : patterns)
      CHECK_MESSAGE(galois_feasible(FactorPattern(b)) == (ok.count(sorted(b)) > 0),
                    FactorPattern(b).to_string());
  }
}

TEST_CASE("unramified patterns need equal degrees") {
  CHECK(galois_feasible(FactorPattern({{2, 1}, {2, 1}, {2, 1}})));
  CHECK(galois_feasible(FactorPattern({{6, 1}})));
  CHECK(galois_feasible(FactorPattern({{1, 1}, {1, 1}})));
  CHECK_FALSE(galois_feasible(FactorPattern({{1, 1}, {1, 1}, {4, 1}})));
  CHECK_FALSE(galois_feasible(FactorPattern({{1, 1}, {2, 1}})));
}

TEST_CASE("certificates for small j") {
  const Verdict v2 = find_certificate(2, 100);
  REQUIRE(std::holds_alternative<CertifiedNotGalois>(v2));
  const Certificate& c2 = std::get<CertifiedNotGalois>(v2).certificate;
  CHECK(c2.p == 7);
  CHECK(c2.pattern.to_string() == "{(1,1),(1,1),(4,1)}");
  CHECK(c2.route == CertificateRoute::StructuredPrime);
  CHECK_FALSE(c2.ramified);
  CHECK(recheck(c2));

  const Verdict v3 = find_certificate(3, 100);
  REQUIRE(std::holds_alternative<CertifiedNotGalois>(v3));
  CHECK(std::get<CertifiedNotGalois>(v3).certificate.p == 3);
  CHECK(std::get<CertifiedNotGalois>(v3).certificate.pattern.to_string() == "{(1,1),(1,1),(6,1)}");

  // Tampering with the recorded pattern is caught.
  Certificate bad = c2;
  bad.pattern = FactorPattern({{2, 1}, {4, 1}});
  CHECK_FALSE(recheck(bad));

  CHECK(std::holds_alternative<NoCertificateWithinBound>(find_certificate(0, 1000)));
  CHECK(std::holds_alternative<NoCertificateWithinBound>(find_certificate(1, 1000)));
  CHECK(verdict_name(verdict(2)) == "CertifiedNotGalois");
  CHECK(verdict_name(verdict(1)) == "NoCertificateWithinBound");
}

TEST_CASE("ramified flag agrees with the discriminant") {
  for (unsigned j = 2; j <= 14; ++j) {
    const Verdict v = find_certificate(j, default_prime_bound(j));
    REQUIRE(std::holds_alternative<CertifiedNotGalois>(v));
    const Certificate& c = std::get<CertifiedNotGalois>(v).certificate;
    const BigInt disc = discriminant(minimal_polys(j).m);
    CHECK_MESSAGE(c.ramified == (mod_u64(disc, c.p) == 0), "j = " << j);
  }
  // j = 6 certifies at the ramified prime 3: m_6 = x (x+2)^2 (...) mod 3.
  const Certificate c6 = std::get<CertifiedNotGalois>(find_certificate(6, 100)).certificate;
  CHECK(c6.p == 3);
  CHECK(c6.ramified);
}
