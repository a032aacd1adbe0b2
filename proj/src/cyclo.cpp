#include <cyclocert/cyclo.hpp>

#include <cyclocert/errors.hpp>
#include <cyclocert/family.hpp>
#include <cyclocert/real_roots.hpp>

#include <algorithm>
#include <map>

namespace cyclocert {

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient of 0");
  std::uint64_t result = n;
  for (std::uint64_t p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

IntPoly cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_poly of order 0");
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  std::map<std::uint64_t, IntPoly> phi;
  for (std::uint64_t d : divisors) {
    IntPoly f = IntPoly::x_pow_minus_one(d);
    for (const auto& [e, pe] : phi)
      if (d % e == 0) f = exact_div(f, pe);
    phi.emplace(d, std::move(f));
  }
  return phi.at(n);
}

std::vector<std::uint64_t> orders_with_totient_at_most(std::uint64_t degree) {
  std::vector<std::uint64_t> out;
  if (degree == 0) return out;
  // totient(n) >= sqrt(n/2), so totient(n) <= D forces n <= 2 D^2.
  const std::uint64_t limit = std::max<std::uint64_t>(2, 2 * degree * degree);
  std::vector<std::uint64_t> phi(limit + 1);
  for (std::uint64_t i = 0; i <= limit; ++i) phi[i] = i;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (phi[i] == i)
      for (std::uint64_t k = i; k <= limit; k += i) phi[k] -= phi[k] / i;
  for (std::uint64_t n = 1; n <= limit; ++n)
    if (phi[n] <= degree) out.push_back(n);
  return out;
}

IntPoly CycloPart::reconstruct() const {
  IntPoly r = cofactor;
  for (const auto& e : entries) {
    IntPoly phi = cyclotomic_poly(e.n);
    for (unsigned i = 0; i < e.multiplicity; ++i) r = r * phi;
  }
  return r;
}

namespace {

struct RootOfUnityModP {
  u64 p;
  u64 omega;  // primitive n-th root of unity mod p
};

// A prime p = 1 (mod n) below 2^61 together with an element of order n.
RootOfUnityModP root_of_unity_mod_prime(std::uint64_t n) {
  const u64 top = u64{1} << 61;
  u64 t = (top - 1) / n;
  while (!is_prime_u64(1 + n * t)) --t;
  const u64 p = 1 + n * t;
  const std::vector<u64> rs = prime_divisors(n);
  for (u64 g = 2;; ++g) {
    const u64 w = powmod(g, (p - 1) / n, p);
    if (std::all_of(rs.begin(), rs.end(), [&](u64 r) { return powmod(w, n / r, p) != 1; }))
      return {p, w};
  }
}

bool vanishes_at(const IntPoly& f, const RootOfUnityModP& root) {
  u64 acc = 0;
  for (std::size_t k = f.size(); k-- > 0;)
    acc = addmod(mulmod(acc, root.omega, root.p), mod_u64(f.coeffs()[k], root.p), root.p);
  return acc == 0;
}

}  // namespace

CycloPart unity_root_indices(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("unity_root_indices of zero polynomial");
  CycloPart part;
  part.cofactor = f;
  if (f.degree() < 1) return part;
  for (std::uint64_t n : orders_with_totient_at_most(static_cast<std::uint64_t>(f.degree()))) {
    if (totient(n) > static_cast<std::uint64_t>(part.cofactor.degree())) continue;
    if (n > 1 && !vanishes_at(part.cofactor, root_of_unity_mod_prime(n))) continue;
    if (n == 1 && evaluate(part.cofactor, BigInt(1)) != 0) continue;
    const IntPoly phi = cyclotomic_poly(n);
    unsigned mult = 0;
    while (part.cofactor.degree() >= phi.degree() && divides(phi, part.cofactor)) {
      part.cofactor = exact_div(part.cofactor, phi);
      ++mult;
    }
    if (mult > 0) part.entries.push_back({n, mult});
  }
  return part;
}

bool is_cyclotomic_product(const IntPoly& f) {
  if (!f.is_monic()) throw std::invalid_argument("is_cyclotomic_product needs a monic polynomial");
  return unity_root_indices(f).cofactor.is_one();
}

namespace {

// Achievable subset sums of the factor degrees, as a 0/1 table indexed 0..n.
std::vector<char> subset_sums(const std::vector<std::pair<FpPoly, unsigned>>& blocks, long n) {
  std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
  reach[0] = 1;
  for (const auto& [block, deg] : blocks) {
    for (long m = 0; m < block.degree() / static_cast<long>(deg); ++m) {
      const long d = deg;
      for (long s = n; s >= d; --s)
        if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = 1;
    }
  }
  return reach;
}

}  // namespace

DegreeOracle degree_pattern_oracle(const IntPoly& f, std::size_t min_primes, std::size_t max_primes) {
  DegreeOracle oracle;
  const long n = f.degree();
  if (n < 1) throw std::invalid_argument("degree_pattern_oracle needs a nonconstant polynomial");
  std::vector<char> alive(static_cast<std::size_t>(n) + 1, 1);
  u64 p = 1;
  while (oracle.primes.size() < max_primes) {
    do ++p;
    while (!is_prime_u64(p));
    FpPoly fp(p, f);
    if (fp.degree() != n) {
      oracle.skipped.push_back(p);
      continue;
    }
    const FpPoly g = fp.monic();
    if (fp_gcd(g, g.derivative()).degree() > 0) {
      oracle.skipped.push_back(p);
      continue;
    }
    oracle.primes.push_back(p);
    // Degrees alone suffice: a distinct-degree block of degree D with
    // factors of degree d holds D/d of them.
    const auto blocks = distinct_degree_factorization(g);
    if (blocks.size() == 1 && blocks[0].first.degree() == n && oracle.first_irreducible_prime == 0)
      oracle.first_irreducible_prime = p;
    std::vector<char> sums = subset_sums(blocks, n);
    bool any = false;
    for (long d = 1; d < n; ++d) {
      alive[static_cast<std::size_t>(d)] = alive[static_cast<std::size_t>(d)] && sums[static_cast<std::size_t>(d)];
      any = any || alive[static_cast<std::size_t>(d)];
    }
    if (!any && oracle.primes.size() >= min_primes) break;
  }
  for (long d = 1; d < n; ++d)
    if (alive[static_cast<std::size_t>(d)]) oracle.surviving_degrees.push_back(d);
  return oracle;
}

IrreducibilityCertificate certify_irreducible(unsigned j) {
  IrreducibilityCertificate cert;
  cert.j = j;
  const IntPoly q = build_q(j);
  const IntPoly P = build_P(j);
  const IntPoly R = minimal_polys(j).R;

  // P_j(q) = q^(2j+2) p_j(q + 1/q) with every root of p_j real: roots of P_j
  // are real or on the unit circle. One root alpha in (0,1), its reciprocal
  // in (1,inf) and none <= 0 leave a single irreducible factor off the unit
  // circle; every other factor is cyclotomic.
  cert.q_roots_all_real = real_root_count_with_multiplicity(q) == static_cast<std::size_t>(q.degree());
  const SturmSequence sturm(squarefree_part(P));
  cert.roots_in_0_1 = sturm.count(OpenInterval::between(0, 1));
  cert.roots_above_1 = sturm.count(OpenInterval::above(1));
  cert.roots_nonpositive = sturm.count(OpenInterval::below(0)) + (sign_at(P, 0) == 0 ? 1 : 0);
  cert.root_structure_ok =
      cert.q_roots_all_real && cert.roots_in_0_1 == 1 && cert.roots_above_1 == 1 && cert.roots_nonpositive == 0;
  if (!cert.root_structure_ok)
    throw CertificateFailure("root structure", "P_" + std::to_string(j) + " real-root counts (0,1)=" +
                                                   std::to_string(cert.roots_in_0_1) + " (1,inf)=" +
                                                   std::to_string(cert.roots_above_1) + " (-inf,0]=" +
                                                   std::to_string(cert.roots_nonpositive));

  cert.cyclotomic = unity_root_indices(P);
  const std::vector<CycloEntry> expected =
      has_phi3(j) ? std::vector<CycloEntry>{{3, 1}} : std::vector<CycloEntry>{};
  cert.cyclotomic_part_ok = cert.cyclotomic.entries == expected && cert.cyclotomic.cofactor == R;
  if (!cert.cyclotomic_part_ok)
    throw CertificateFailure("cyclotomic part", "unexpected cyclotomic factors of P_" + std::to_string(j));
  cert.proof_grade = true;

  cert.oracle = degree_pattern_oracle(R, 20, 400);
  cert.evidence_grade = cert.oracle.excludes_proper_factors();
  return cert;
}

}  // namespace cyclocert
