#ifndef CYCLOCERT_CYCLO_HPP
#define CYCLOCERT_CYCLO_HPP

#include <cyclocert/fp_factor.hpp>
#include <cyclocert/int_poly.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cyclocert {

std::uint64_t totient(std::uint64_t n);

/// Phi_n: x^n - 1 with every Phi_d (d | n, d < n) divided out exactly.
IntPoly cyclotomic_poly(std::uint64_t n);

/// All n with totient(n) <= degree, ascending.
std::vector<std::uint64_t> orders_with_totient_at_most(std::uint64_t degree);

struct CycloEntry {
  std::uint64_t n = 0;
  unsigned multiplicity = 0;
  friend bool operator==(const CycloEntry&, const CycloEntry&) = default;
};

/// input = cofactor * prod Phi_n^multiplicity; cofactor has no cyclotomic
/// factor; entries sorted by n.
struct CycloPart {
  std::vector<CycloEntry> entries;
  IntPoly cofactor;

  IntPoly reconstruct() const;
};

/// Every cyclotomic factor of f with multiplicity. Candidates with
/// totient(n) <= deg f are screened by evaluating f at a primitive n-th root
/// of unity modulo a prime p = 1 (mod n) (a necessary condition for
/// Phi_n | f); survivors are confirmed by exact division.
CycloPart unity_root_indices(const IntPoly& f);

/// f monic: true iff every root of f is a root of unity.
bool is_cyclotomic_product(const IntPoly& f);

/// Degree-pattern irreducibility oracle. For each prime where f stays
/// squarefree of full degree, the achievable degrees of a rational factor are
/// the subset sums of the mod-p factor degrees; the oracle intersects them.
struct DegreeOracle {
  std::vector<std::uint64_t> primes;        // unramified primes consulted
  std::vector<std::uint64_t> skipped;       // primes dividing lc or discriminant
  std::vector<long> surviving_degrees;      // proper factor degrees still possible
  std::uint64_t first_irreducible_prime = 0;  // 0 when none found

  bool excludes_proper_factors() const { return surviving_degrees.empty(); }
};

/// Scans primes ascending from 2, using at least min_primes unramified ones
/// and continuing until every proper split is excluded or max_primes
/// unramified primes have been consulted.
DegreeOracle degree_pattern_oracle(const IntPoly& f, std::size_t min_primes = 20, std::size_t max_primes = 400);

struct IrreducibilityCertificate {
  unsigned j = 0;
  CycloPart cyclotomic;  // of P_j
  // Real-root structure of q_j and P_j.
  bool q_roots_all_real = false;
  std::size_t roots_in_0_1 = 0;
  std::size_t roots_above_1 = 0;
  std::size_t roots_nonpositive = 0;
  bool root_structure_ok = false;
  bool cyclotomic_part_ok = false;
  /// Root structure plus exact cyclotomic part: R_j is irreducible.
  bool proof_grade = false;
  DegreeOracle oracle;  // run on R_j
  /// Independent corroboration by degree patterns.
  bool evidence_grade = false;
};

/// Certifies irreducibility of R_j. Throws CertificateFailure naming the
/// failing sub-check.
IrreducibilityCertificate certify_irreducible(unsigned j);

}  // namespace cyclocert

#endif  // CYCLOCERT_CYCLO_HPP
