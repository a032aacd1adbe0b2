#ifndef CYCLOCERT_OBSTRUCTION_HPP
#define CYCLOCERT_OBSTRUCTION_HPP

#include <cyclocert/fp_factor.hpp>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace cyclocert {

struct PatternBlock {
  long degree = 0;
  unsigned multiplicity = 0;
  friend auto operator<=>(const PatternBlock&, const PatternBlock&) = default;
};

/// Multiset of (irreducible-factor degree, multiplicity), kept sorted.
struct FactorPattern {
  long n = 0;
  std::vector<PatternBlock> blocks;

  FactorPattern() = default;
  /// Throws std::invalid_argument unless every degree and multiplicity is >= 1.
  explicit FactorPattern(std::vector<PatternBlock> blocks);

  std::string to_string() const;
  friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
};

FactorPattern pattern_of(const FactorMultiset& fm);

/// Whether a mod-p factorization pattern is compatible with a Galois
/// extension generated by a root: there must be e >= 1 and h >= 1 with h | n,
/// every block degree dividing h, and e*h dividing degree*multiplicity for
/// every block. Distinct prime ideals are allowed to share a residue
/// polynomial.
bool galois_feasible(const FactorPattern& pattern);

enum class CertificateRoute { StructuredPrime, UnramifiedScan };

std::string to_string(CertificateRoute route);

/// A prime whose factorization pattern of m_j rules out a Galois extension.
struct Certificate {
  unsigned j = 0;
  std::uint64_t p = 0;
  FactorPattern pattern;
  CertificateRoute route = CertificateRoute::StructuredPrime;
  /// p divides the discriminant of m_j, equivalently m_j mod p has a
  /// repeated factor (m_j is monic).
  bool ramified = false;
};

struct CertifiedNotGalois {
  Certificate certificate;
};

/// Inconclusive: no obstruction up to the bound. Not a claim of Galois-ness.
struct NoCertificateWithinBound {
  std::uint64_t bound = 0;
};

struct ClaimFailure {
  std::string detail;
};

using Verdict = std::variant<CertifiedNotGalois, NoCertificateWithinBound, ClaimFailure>;

std::string verdict_name(const Verdict& v);

inline std::uint64_t default_prime_bound(unsigned j) {
  const std::uint64_t structured = 10 * (2 * static_cast<std::uint64_t>(j) + 3);
  return structured > 100 ? structured : 100;
}

/// Recomputes factor_mod_p and galois_feasible from scratch.
bool recheck(const Certificate& cert, std::uint64_t seed = kDefaultSeed);

/// Tries the prime divisors of 2j+3 first, then every other prime up to
/// prime_bound, returning the first prime whose pattern is infeasible.
Verdict find_certificate(unsigned j, std::uint64_t prime_bound, std::uint64_t seed = kDefaultSeed);

/// Identity suite, irreducibility certificate, then find_certificate with
/// the default bound.
Verdict verdict(unsigned j, std::uint64_t seed = kDefaultSeed);

}  // namespace cyclocert

#endif  // CYCLOCERT_OBSTRUCTION_HPP
