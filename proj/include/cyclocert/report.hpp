#ifndef CYCLOCERT_REPORT_HPP
#define CYCLOCERT_REPORT_HPP

#include <cyclocert/cyclo.hpp>
#include <cyclocert/family.hpp>
#include <cyclocert/obstruction.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cyclocert {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };

Format parse_format(const std::string& name);

struct RunConfig {
  unsigned j_min = 0;
  unsigned j_max = 100;
  std::optional<std::uint64_t> prime_bound;  // default_prime_bound(j) when unset
  std::uint64_t seed = kDefaultSeed;
  Rational width = Rational(1, 1000000000);
  unsigned threads = 1;
  std::optional<std::filesystem::path> cache_dir;
  Format format = Format::Json;
  bool timings = false;        // include wall_ms in JSON output
  std::optional<unsigned> fault_j;  // test hook: force a claim failure at this j

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
  std::uint64_t prime_bound_for(unsigned j) const;
};

struct GcdClaimSummary {
  std::uint64_t p = 0;
  bool claim1 = false;
  bool claim2 = false;
  IntPoly gcd_minus;  // lifted to [0, p) coefficients
  IntPoly gcd_plus;
  friend bool operator==(const GcdClaimSummary&, const GcdClaimSummary&) = default;
};

struct CertificateRecord {
  std::uint64_t p = 0;
  FactorPattern pattern;
  std::string route;
  bool ramified = false;
  /// Factorization of m_j mod p as (coefficients, multiplicity).
  std::vector<std::pair<std::vector<std::uint64_t>, unsigned>> factors;
  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

/// Everything computed for one family index.
struct RunRecord {
  unsigned j = 0;
  std::string digest;
  std::string verdict;  // CertifiedNotGalois | NoCertificateWithinBound | ClaimFailure
  std::string detail;
  std::optional<CertificateRecord> certificate;
  std::vector<CycloEntry> cyclotomic;  // of P_j
  IntPoly m;
  std::map<std::string, bool> special_values;
  std::map<std::string, bool> identities;
  std::optional<GcdClaimSummary> gcd_claims;
  bool irreducible_proof = false;
  bool irreducible_evidence = false;
  std::size_t oracle_primes = 0;
  std::optional<RationalInterval> pf_bracket;
  std::uint64_t prime_bound = 0;
  std::uint64_t seed = 0;
  std::string width;
  double wall_ms = 0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// SHA-256 (hex) over the coefficient lists of q, p, P, Q, m, R.
std::string fixture_digest(const FamilyRecord& family);

/// Full per-j computation; never throws for mathematical failures (they
/// become a ClaimFailure verdict).
RunRecord compute_record(unsigned j, const RunConfig& config);

Json to_json(const RunRecord& r, bool include_timing = true);
RunRecord record_from_json(const Json& j);

struct PipelineResult {
  std::vector<RunRecord> records;
  std::size_t cache_hits = 0;
  int exit_code = 0;
};

/// 2 if any ClaimFailure, else 3 if some j >= 2 is NoCertificateWithinBound,
/// else 0.
int exit_code_for(const std::vector<RunRecord>& records);

/// Runs every j in range on a bounded worker pool, reusing cached records
/// whose digest and parameters match. Records are returned in ascending j.
PipelineResult run_pipeline(const RunConfig& config);

/// Throws std::runtime_error on I/O failure.
void emit_report(const std::vector<RunRecord>& records, Format format, std::ostream& out, bool include_timing = false);
void emit_report(const std::vector<RunRecord>& records, Format format, const std::filesystem::path& file,
                 bool include_timing = false);

/// Decimal rendering truncated toward zero.
std::string to_decimal(const Rational& r, unsigned digits);

Json poly_to_json(const IntPoly& f);
IntPoly poly_from_json(const Json& j);
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

}  // namespace cyclocert

#endif  // CYCLOCERT_REPORT_HPP
