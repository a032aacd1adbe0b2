#include <cyclocert/fp_factor.hpp>

#include <cyclocert/errors.hpp>
#include <cyclocert/family.hpp>

#include <algorithm>
#include <random>

namespace cyclocert {

namespace {

// Polynomials of degree at most this use exhaustive root search over F_p for
// their linear factors instead of randomized splitting.
constexpr u64 kRootSearchLimit = 4096;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, const FpPoly& f) {
  std::uint64_t h = splitmix64(seed ^ f.modulus());
  for (u64 c : f.coeffs()) h = splitmix64(h ^ c);
  return h;
}

FpPoly one(u64 p) { return FpPoly::from_reduced(p, {1}); }
FpPoly x_poly(u64 p) { return FpPoly::from_reduced(p, {0, 1}); }

FpPoly pth_root(const FpPoly& f) {
  const u64 p = f.modulus();
  std::vector<u64> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(f.coeffs()[i]);
  return FpPoly::from_reduced(p, std::move(v));
}

std::vector<FpPoly> split_linear_by_roots(const FpPoly& f) {
  const u64 p = f.modulus();
  std::vector<FpPoly> out;
  for (u64 a = 0; a < p && static_cast<long>(out.size()) < f.degree(); ++a)
    if (f.evaluate(a) == 0) out.push_back(FpPoly::from_reduced(p, {(p - a) % p, 1}));
  return out;
}

}  // namespace

FpPoly FactorMultiset::reconstruct() const {
  FpPoly r = FpPoly::from_reduced(p, {unit});
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) r = r * f.poly;
  return r;
}

long FactorMultiset::degree() const {
  long d = 0;
  for (const auto& f : factors) d += f.poly.degree() * static_cast<long>(f.multiplicity);
  return d;
}

bool FactorMultiset::squarefree() const {
  return std::all_of(factors.begin(), factors.end(), [](const Factor& f) { return f.multiplicity == 1; });
}

std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f) {
  const u64 p = f.modulus();
  std::vector<std::pair<FpPoly, unsigned>> out;
  if (f.degree() < 1) return out;

  FpPoly df = f.derivative();
  if (df.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(f))) out.emplace_back(std::move(g), m * p);
    return out;
  }
  FpPoly c = fp_gcd(f, df);
  FpPoly w = fp_div_exact(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    FpPoly y = fp_gcd(w, c);
    FpPoly z = fp_div_exact(w, y);
    if (z.degree() > 0) out.emplace_back(z.monic(), i);
    ++i;
    w = std::move(y);
    c = fp_div_exact(c, w);
  }
  if (c.degree() > 0)
    for (auto& [g, m] : squarefree_decomposition(pth_root(c))) out.emplace_back(std::move(g), m * static_cast<unsigned>(p));
  return out;
}

std::vector<std::pair<FpPoly, unsigned>> distinct_degree_factorization(const FpPoly& f) {
  std::vector<std::pair<FpPoly, unsigned>> out;
  if (f.degree() < 1) return out;
  if (f.degree() == 1) {
    out.emplace_back(f, 1);
    return out;
  }
  const u64 p = f.modulus();
  FrobeniusMap frob(f);
  const FpPoly x = x_poly(p);
  FpPoly rest = f;
  FpPoly h = fp_rem(x, f);
  for (unsigned d = 1; rest.degree() >= 2 * static_cast<long>(d); ++d) {
    h = frob.apply(h);  // x^(p^d) mod f
    FpPoly g = fp_gcd(rest, h - x);
    if (g.degree() > 0) {
      rest = fp_div_exact(rest, g);
      out.emplace_back(std::move(g), d);
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

std::vector<FpPoly> equal_degree_factorization(const FpPoly& f, unsigned d, std::uint64_t seed) {
  const u64 p = f.modulus();
  const long n = f.degree();
  if (n == static_cast<long>(d)) return {f};
  if (d == 1 && p <= kRootSearchLimit) return split_linear_by_roots(f);

  FrobeniusMap frob(f);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> coeff(0, p - 1);
  const BigInt half = BigInt(static_cast<unsigned long>((p - 1) / 2));
  const FpPoly unit = one(p);

  std::vector<FpPoly> pending{f}, done;
  while (!pending.empty()) {
    std::vector<u64> a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coeff(rng);
    FpPoly r = FpPoly::from_reduced(p, std::move(a));
    if (r.degree() < 1) continue;

    FpPoly b = unit;
    FpPoly conj = r;
    if (p == 2) {
      // Trace from F_{2^d} to F_2.
      b = r;
      for (unsigned i = 1; i < d; ++i) {
        conj = frob.apply(conj);
        b = b + conj;
      }
    } else {
      // r^((p^d - 1)/2) = (prod_{i<d} r^(p^i))^((p-1)/2)
      FpPoly norm = r;
      for (unsigned i = 1; i < d; ++i) {
        conj = frob.apply(conj);
        norm = fp_mulmod(norm, conj, f);
      }
      b = fp_powmod(norm, half, f) - unit;
    }

    std::vector<FpPoly> next;
    for (auto& w : pending) {
      FpPoly g = fp_gcd(w, fp_rem(b, w));
      if (g.degree() > 0 && g.degree() < w.degree()) {
        FpPoly other = fp_div_exact(w, g);
        for (FpPoly* part : {&g, &other}) {
          if (part->degree() == static_cast<long>(d)) {
            done.push_back(part->monic());
          } else {
            next.push_back(part->monic());
          }
        }
      } else {
        next.push_back(std::move(w));
      }
    }
    pending = std::move(next);
  }
  return done;
}

FactorMultiset factor(const FpPoly& f, std::uint64_t seed) {
  const u64 p = f.modulus();
  if (f.is_zero()) throw ZeroModP("polynomial vanishes identically mod " + std::to_string(p));
  FactorMultiset out;
  out.p = p;
  out.unit = f.leading();
  const FpPoly g = f.monic();
  const std::uint64_t base_seed = mix_seed(seed, g);
  for (const auto& [part, mult] : squarefree_decomposition(g)) {
    for (const auto& [block, d] : distinct_degree_factorization(part)) {
      const std::uint64_t s = splitmix64(base_seed ^ (static_cast<std::uint64_t>(d) << 32) ^ mult);
      for (auto& irr : equal_degree_factorization(block, d, s)) out.factors.push_back({std::move(irr), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return a.poly < b.poly;
  });
  return out;
}

FactorMultiset factor_mod_p(const IntPoly& f, u64 p, std::uint64_t seed) {
  FpPoly fp(p, f);
  if (fp.is_zero()) throw ZeroModP("(" + f.to_string() + ") vanishes identically mod " + std::to_string(p));
  return factor(fp, seed);
}

GcdClaimReport gcd_claims(unsigned j) {
  const u64 p = 2 * static_cast<u64>(j) + 3;
  if (!is_prime_u64(p)) throw NotApplicable("2j+3 = " + std::to_string(p) + " is composite");
  GcdClaimReport r;
  r.j = j;
  r.p = p;
  const FpPoly Q(p, build_Q(j));
  const FpPoly x = x_poly(p);
  const FpPoly unit = one(p);
  r.gcd_minus = fp_gcd(Q, fp_powmod(x, BigInt(static_cast<unsigned long>(p - 1)), Q) - unit);
  r.gcd_plus = fp_gcd(Q, fp_powmod(x, BigInt(static_cast<unsigned long>(p + 1)), Q) - unit);
  const FpPoly target1(p, IntPoly{-1, 0, 0, 0, 1});
  const FpPoly target2(p, IntPoly{-1, -1, -1, 0, 1, 1, 1});
  r.claim1 = fp_rem(target1, r.gcd_minus).is_zero();
  r.claim2 = fp_rem(target2, r.gcd_plus).is_zero();
  return r;
}

namespace {

// Element a + b t of F_p[t]/(t^2 - c), c a quadratic non-residue.
struct QuadElem {
  u64 a = 0, b = 0;
  friend bool operator==(const QuadElem&, const QuadElem&) = default;
};

struct QuadField {
  u64 p, c;

  QuadElem mul(const QuadElem& x, const QuadElem& y) const {
    return {addmod(mulmod(x.a, y.a, p), mulmod(mulmod(x.b, y.b, p), c, p), p),
            addmod(mulmod(x.a, y.b, p), mulmod(x.b, y.a, p), p)};
  }
  QuadElem pow(QuadElem x, u64 e) const {
    QuadElem r{1, 0};
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }
  QuadElem inv(const QuadElem& x) const {
    // (a - bt) / (a^2 - c b^2)
    u64 norm = submod(mulmod(x.a, x.a, p), mulmod(c, mulmod(x.b, x.b, p), p), p);
    u64 ni = invmod(norm, p);
    return {mulmod(x.a, ni, p), mulmod((p - x.b) % p, ni, p)};
  }
};

}  // namespace

FermatScanReport fermat_scan(u64 p) {
  if (p == 2 || p > 100 || !is_prime_u64(p)) throw std::invalid_argument("fermat_scan needs an odd prime <= 100");
  u64 c = 2;
  while (powmod(c, (p - 1) / 2, p) != p - 1) ++c;
  const QuadField field{p, c};
  const QuadElem unity{1, 0};

  FermatScanReport r;
  r.p = p;
  for (u64 a = 0; a < p; ++a) {
    for (u64 b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      const QuadElem alpha{a, b};
      ++r.units;
      const QuadElem inv = field.inv(alpha);
      const bool trace_in_base = addmod(alpha.b, inv.b, p) == 0;
      const bool order = field.pow(alpha, p - 1) == unity || field.pow(alpha, p + 1) == unity;
      r.trace_in_base += trace_in_base;
      r.order_divides += order;
      r.mismatches += trace_in_base != order;
    }
  }
  return r;
}

}  // namespace cyclocert
