#ifndef CYCLOCERT_FP_FACTOR_HPP
#define CYCLOCERT_FP_FACTOR_HPP

#include <cyclocert/fp_poly.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cyclocert {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'c1c1'0a1b'2c3dULL;

struct Factor {
  FpPoly poly;  // monic irreducible
  unsigned multiplicity = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Complete factorization over F_p: unit * prod factor^multiplicity.
/// Factors are sorted canonically by degree, then by coefficients.
struct FactorMultiset {
  u64 p = 0;
  u64 unit = 1;
  std::vector<Factor> factors;

  FpPoly reconstruct() const;
  long degree() const;
  bool squarefree() const;
  friend bool operator==(const FactorMultiset&, const FactorMultiset&) = default;
};

/// Squarefree decomposition of a monic polynomial: pairs (g_i, i) with the
/// g_i squarefree, pairwise coprime and prod g_i^i = f.
std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (h_d, d) where h_d is the product of all degree-d irreducible factors.
std::vector<std::pair<FpPoly, unsigned>> distinct_degree_factorization(const FpPoly& f);

/// Splits a monic squarefree product of degree-d irreducibles into its
/// factors (Cantor-Zassenhaus for odd p, trace map for p = 2).
std::vector<FpPoly> equal_degree_factorization(const FpPoly& f, unsigned d, std::uint64_t seed);

FactorMultiset factor(const FpPoly& f, std::uint64_t seed = kDefaultSeed);

/// Factorization of f mod p. Throws ZeroModP when f vanishes mod p.
FactorMultiset factor_mod_p(const IntPoly& f, u64 p, std::uint64_t seed = kDefaultSeed);

/// Outcome of the gcd divisibility claims over F_p with p = 2j+3.
struct GcdClaimReport {
  unsigned j = 0;
  u64 p = 0;
  FpPoly gcd_minus;  // gcd(q^(p-1) - 1, Q_j)
  FpPoly gcd_plus;   // gcd(q^(p+1) - 1, Q_j)
  bool claim1 = false;  // gcd_minus | q^4 - 1
  bool claim2 = false;  // gcd_plus | q^6 + q^5 + q^4 - q^2 - q - 1

  bool holds() const { return claim1 && claim2; }
};

/// Throws NotApplicable when 2j+3 is composite.
GcdClaimReport gcd_claims(unsigned j);

struct FermatScanReport {
  u64 p = 0;
  u64 units = 0;                // p^2 - 1
  u64 trace_in_base = 0;        // units with alpha + 1/alpha in F_p
  u64 order_divides = 0;        // units with alpha^(p-1) = 1 or alpha^(p+1) = 1
  u64 mismatches = 0;           // units where the two conditions disagree

  bool equivalence_holds() const { return mismatches == 0; }
};

/// Brute force over the units of F_{p^2}: alpha + alpha^{-1} lies in F_p
/// exactly when alpha^(p-1) = 1 or alpha^(p+1) = 1. Odd primes p <= 100.
FermatScanReport fermat_scan(u64 p);

}  // namespace cyclocert

#endif  // CYCLOCERT_FP_FACTOR_HPP
