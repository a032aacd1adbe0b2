#include <cyclocert/obstruction.hpp>

#include <cyclocert/cyclo.hpp>
#include <cyclocert/errors.hpp>
#include <cyclocert/family.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

namespace cyclocert {

FactorPattern::FactorPattern(std::vector<PatternBlock> b) : blocks(std::move(b)) {
  for (const auto& blk : blocks) {
    if (blk.degree < 1 || blk.multiplicity < 1) throw std::invalid_argument("malformed factor pattern block");
    n += blk.degree * static_cast<long>(blk.multiplicity);
  }
  std::sort(blocks.begin(), blocks.end());
}

std::string FactorPattern::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ',';
    os << '(' << blocks[i].degree << ',' << blocks[i].multiplicity << ')';
  }
  os << '}';
  return os.str();
}

FactorPattern pattern_of(const FactorMultiset& fm) {
  std::vector<PatternBlock> blocks;
  for (const auto& f : fm.factors) blocks.push_back({f.poly.degree(), f.multiplicity});
  return FactorPattern(std::move(blocks));
}

bool galois_feasible(const FactorPattern& pattern) {
  const long n = pattern.n;
  if (n < 1) return true;
  for (long h = 1; h <= n; ++h) {
    if (n % h != 0) continue;
    if (!std::all_of(pattern.blocks.begin(), pattern.blocks.end(),
                     [h](const PatternBlock& b) { return h % b.degree == 0; }))
      continue;
    for (long e = 1; e * h <= n; ++e) {
      const long eh = e * h;
      if (std::all_of(pattern.blocks.begin(), pattern.blocks.end(), [eh](const PatternBlock& b) {
            return (b.degree * static_cast<long>(b.multiplicity)) % eh == 0;
          }))
        return true;
    }
  }
  return false;
}

std::string to_string(CertificateRoute route) {
  return route == CertificateRoute::StructuredPrime ? "structured-prime" : "unramified-scan";
}

std::string verdict_name(const Verdict& v) {
  struct {
    std::string operator()(const CertifiedNotGalois&) const { return "CertifiedNotGalois"; }
    std::string operator()(const NoCertificateWithinBound&) const { return "NoCertificateWithinBound"; }
    std::string operator()(const ClaimFailure&) const { return "ClaimFailure"; }
  } visitor;
  return std::visit(visitor, v);
}

namespace {

std::optional<Certificate> try_prime(unsigned j, const IntPoly& m, std::uint64_t p, CertificateRoute route,
                                     std::uint64_t seed) {
  FpPoly reduced(p, m);
  if (reduced.degree() != m.degree()) return std::nullopt;
  FactorMultiset fm = factor(reduced, seed);
  FactorPattern pattern = pattern_of(fm);
  if (galois_feasible(pattern)) return std::nullopt;
  return Certificate{j, p, std::move(pattern), route, !fm.squarefree()};
}

}  // namespace

bool recheck(const Certificate& cert, std::uint64_t seed) {
  const IntPoly m = minimal_polys(cert.j).m;
  FactorMultiset fm = factor_mod_p(m, cert.p, seed);
  FactorPattern pattern = pattern_of(fm);
  return pattern == cert.pattern && !galois_feasible(pattern) && cert.ramified == !fm.squarefree();
}

Verdict find_certificate(unsigned j, std::uint64_t prime_bound, std::uint64_t seed) {
  const IntPoly m = minimal_polys(j).m;
  const std::uint64_t structured = 2 * static_cast<std::uint64_t>(j) + 3;
  const std::vector<std::uint64_t> structured_primes = prime_divisors(structured);
  for (std::uint64_t p : structured_primes)
    if (auto cert = try_prime(j, m, p, CertificateRoute::StructuredPrime, seed)) return CertifiedNotGalois{*cert};
  for (std::uint64_t p : primes_between(2, prime_bound)) {
    if (std::find(structured_primes.begin(), structured_primes.end(), p) != structured_primes.end()) continue;
    if (auto cert = try_prime(j, m, p, CertificateRoute::UnramifiedScan, seed)) return CertifiedNotGalois{*cert};
  }
  return NoCertificateWithinBound{prime_bound};
}

Verdict verdict(unsigned j, std::uint64_t seed) {
  try {
    const FamilyRecord family = build_family(j);
    if (!family.consistent()) {
      const CheckResult* bad = family.identities.first_failure();
      if (!bad) bad = family.special_values.first_failure();
      return ClaimFailure{"identity '" + bad->name + "' failed for j=" + std::to_string(j)};
    }
    certify_irreducible(j);
    Verdict v = find_certificate(j, default_prime_bound(j), seed);
    if (auto* c = std::get_if<CertifiedNotGalois>(&v); c && !recheck(c->certificate, seed))
      return ClaimFailure{"certificate at p=" + std::to_string(c->certificate.p) + " did not recheck"};
    return v;
  } catch (const CertificateFailure& e) {
    return ClaimFailure{e.what()};
  } catch (const ClosedFormMismatch& e) {
    return ClaimFailure{e.what()};
  } catch (const NotDivisible& e) {
    return ClaimFailure{e.what()};
  }
}

}  // namespace cyclocert
