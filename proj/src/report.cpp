#include <cyclocert/report.hpp>

#include <cyclocert/errors.hpp>

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cyclocert {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or text)");
}

void RunConfig::validate() const {
  if (j_min > j_max) throw std::invalid_argument("j_min must not exceed j_max");
  if (width <= 0) throw std::invalid_argument("width must be positive");
  if (threads == 0) throw std::invalid_argument("threads must be at least 1");
  if (prime_bound && *prime_bound < 2) throw std::invalid_argument("prime bound must be at least 2");
}

std::uint64_t RunConfig::prime_bound_for(unsigned j) const {
  return prime_bound ? *prime_bound : default_prime_bound(j);
}

// ---------------------------------------------------------------- digest

std::string fixture_digest(const FamilyRecord& family) {
  std::string canon;
  for (const IntPoly* f : {&family.q, &family.p, &family.P, &family.Q, &family.m, &family.R}) {
    canon += '[';
    for (std::size_t i = 0; i < f->size(); ++i) {
      if (i) canon += ',';
      canon += f->coeffs()[i].get_str();
    }
    canon += "]\n";
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(canon.data(), canon.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<unsigned>(md[i]);
  return os.str();
}

// ---------------------------------------------------------------- compute

namespace {

std::map<std::string, bool> flatten(const CheckReport& report) {
  std::map<std::string, bool> out;
  for (const auto& c : report.checks) out[c.name] = c.passed;
  return out;
}

IntPoly lift(const FpPoly& f) {
  std::vector<BigInt> c;
  for (u64 v : f.coeffs()) c.emplace_back(static_cast<unsigned long>(v));
  return IntPoly(std::move(c));
}

CertificateRecord certificate_record(const Certificate& cert, std::uint64_t seed) {
  CertificateRecord out;
  out.p = cert.p;
  out.pattern = cert.pattern;
  out.route = to_string(cert.route);
  out.ramified = cert.ramified;
  const FactorMultiset fm = factor_mod_p(minimal_polys(cert.j).m, cert.p, seed);
  for (const auto& f : fm.factors) out.factors.emplace_back(f.poly.coeffs(), f.multiplicity);
  return out;
}

}  // namespace

RunRecord compute_record(unsigned j, const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord r;
  r.j = j;
  r.prime_bound = config.prime_bound_for(j);
  r.seed = config.seed;
  r.width = to_string(config.width);

  auto fail = [&r](std::string detail) {
    if (r.verdict != "ClaimFailure") {
      r.verdict = "ClaimFailure";
      r.detail = std::move(detail);
    }
  };

  try {
    const FamilyRecord family = build_family(j);
    r.digest = fixture_digest(family);
    r.m = family.m;
    r.identities = flatten(family.identities);
    r.special_values = flatten(family.special_values);
    if (config.fault_j && *config.fault_j == j) r.identities["injected fault"] = false;
    for (const auto& [name, ok] : r.identities)
      if (!ok) fail("identity '" + name + "' failed");
    for (const auto& [name, ok] : r.special_values)
      if (!ok) fail("special value '" + name + "' failed");

    if (is_prime_u64(2 * static_cast<u64>(j) + 3) && j >= 1) {
      const GcdClaimReport g = gcd_claims(j);
      r.gcd_claims = GcdClaimSummary{g.p, g.claim1, g.claim2, lift(g.gcd_minus), lift(g.gcd_plus)};
      if (!g.holds()) fail("gcd claim failed over F_" + std::to_string(g.p));
    }

    try {
      const IrreducibilityCertificate ic = certify_irreducible(j);
      r.cyclotomic = ic.cyclotomic.entries;
      r.irreducible_proof = ic.proof_grade;
      r.irreducible_evidence = ic.evidence_grade;
      r.oracle_primes = ic.oracle.primes.size();
    } catch (const CertificateFailure& e) {
      fail(e.what());
    }

    try {
      r.pf_bracket = pf_index(j, config.width);
    } catch (const CertificateFailure& e) {
      fail(e.what());
    }

    const Verdict v = find_certificate(j, r.prime_bound, config.seed);
    if (const auto* c = std::get_if<CertifiedNotGalois>(&v)) {
      r.certificate = certificate_record(c->certificate, config.seed);
      if (!recheck(c->certificate, config.seed))
        fail("certificate at p=" + std::to_string(c->certificate.p) + " did not recheck");
    }
    if (r.verdict.empty()) r.verdict = verdict_name(v);
  } catch (const Error& e) {
    fail(e.what());
  }

  r.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---------------------------------------------------------------- JSON

Json poly_to_json(const IntPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coeffs()) a.push_back(c.get_str());
  return a;
}

IntPoly poly_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& v : j) c.emplace_back(v.get<std::string>());
  return IntPoly(std::move(c));
}

Json rational_to_json(const Rational& r) {
  return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

Rational rational_from_json(const Json& j) {
  return make_rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

namespace {

Json checks_to_json(const std::map<std::string, bool>& m) {
  Json o = Json::object();
  for (const auto& [k, v] : m) o[k] = v;
  return o;
}

std::map<std::string, bool> checks_from_json(const Json& j) {
  std::map<std::string, bool> m;
  for (const auto& [k, v] : j.items()) m[k] = v.get<bool>();
  return m;
}

}  // namespace

Json to_json(const RunRecord& r, bool include_timing) {
  Json o;
  o["j"] = r.j;
  o["two_j_plus_three"] = 2 * r.j + 3;
  o["digest"] = r.digest;
  o["verdict"] = r.verdict;
  o["detail"] = r.detail;
  o["m"] = poly_to_json(r.m);
  if (r.certificate) {
    const auto& c = *r.certificate;
    Json pattern = Json::array();
    for (const auto& b : c.pattern.blocks) pattern.push_back({b.degree, b.multiplicity});
    Json factors = Json::array();
    for (const auto& [coeffs, mult] : c.factors) factors.push_back({{"coeffs", coeffs}, {"multiplicity", mult}});
    o["certificate"] = {{"p", c.p},
                        {"pattern", pattern},
                        {"pattern_text", c.pattern.to_string()},
                        {"route", c.route},
                        {"ramified", c.ramified},
                        {"factors", factors}};
  } else {
    o["certificate"] = nullptr;
  }
  Json cyclo = Json::array();
  for (const auto& e : r.cyclotomic) cyclo.push_back({e.n, e.multiplicity});
  o["cyclotomic"] = cyclo;
  o["special_values"] = checks_to_json(r.special_values);
  o["identities"] = checks_to_json(r.identities);
  if (r.gcd_claims) {
    const auto& g = *r.gcd_claims;
    o["gcd_claims"] = {{"p", g.p},
                       {"claim1", g.claim1},
                       {"claim2", g.claim2},
                       {"gcd_minus", poly_to_json(g.gcd_minus)},
                       {"gcd_plus", poly_to_json(g.gcd_plus)}};
  } else {
    o["gcd_claims"] = nullptr;
  }
  o["irreducible"] = {{"proof_grade", r.irreducible_proof},
                      {"evidence_grade", r.irreducible_evidence},
                      {"oracle_primes", r.oracle_primes}};
  if (r.pf_bracket)
    o["pf_bracket"] = {{"lo", rational_to_json(r.pf_bracket->lo)}, {"hi", rational_to_json(r.pf_bracket->hi)}};
  else
    o["pf_bracket"] = nullptr;
  o["params"] = {{"prime_bound", r.prime_bound}, {"seed", std::to_string(r.seed)}, {"width", r.width}};
  if (include_timing) o["wall_ms"] = r.wall_ms;
  return o;
}

RunRecord record_from_json(const Json& o) {
  RunRecord r;
  r.j = o.at("j").get<unsigned>();
  r.digest = o.at("digest").get<std::string>();
  r.verdict = o.at("verdict").get<std::string>();
  r.detail = o.at("detail").get<std::string>();
  r.m = poly_from_json(o.at("m"));
  if (const Json& c = o.at("certificate"); !c.is_null()) {
    CertificateRecord cr;
    cr.p = c.at("p").get<std::uint64_t>();
    std::vector<PatternBlock> blocks;
    for (const auto& b : c.at("pattern")) blocks.push_back({b.at(0).get<long>(), b.at(1).get<unsigned>()});
    cr.pattern = FactorPattern(std::move(blocks));
    cr.route = c.at("route").get<std::string>();
    cr.ramified = c.at("ramified").get<bool>();
    for (const auto& f : c.at("factors"))
      cr.factors.emplace_back(f.at("coeffs").get<std::vector<std::uint64_t>>(), f.at("multiplicity").get<unsigned>());
    r.certificate = std::move(cr);
  }
  for (const auto& e : o.at("cyclotomic")) r.cyclotomic.push_back({e.at(0).get<std::uint64_t>(), e.at(1).get<unsigned>()});
  r.special_values = checks_from_json(o.at("special_values"));
  r.identities = checks_from_json(o.at("identities"));
  if (const Json& g = o.at("gcd_claims"); !g.is_null())
    r.gcd_claims = GcdClaimSummary{g.at("p").get<std::uint64_t>(), g.at("claim1").get<bool>(),
                                   g.at("claim2").get<bool>(), poly_from_json(g.at("gcd_minus")),
                                   poly_from_json(g.at("gcd_plus"))};
  const Json& irr = o.at("irreducible");
  r.irreducible_proof = irr.at("proof_grade").get<bool>();
  r.irreducible_evidence = irr.at("evidence_grade").get<bool>();
  r.oracle_primes = irr.at("oracle_primes").get<std::size_t>();
  if (const Json& b = o.at("pf_bracket"); !b.is_null())
    r.pf_bracket = RationalInterval{rational_from_json(b.at("lo")), rational_from_json(b.at("hi"))};
  const Json& params = o.at("params");
  r.prime_bound = params.at("prime_bound").get<std::uint64_t>();
  r.seed = std::stoull(params.at("seed").get<std::string>());
  r.width = params.at("width").get<std::string>();
  if (o.contains("wall_ms")) r.wall_ms = o.at("wall_ms").get<double>();
  return r;
}

// ---------------------------------------------------------------- pipeline

int exit_code_for(const std::vector<RunRecord>& records) {
  bool inconclusive = false;
  for (const auto& r : records) {
    if (r.verdict == "ClaimFailure") return 2;
    if (r.j >= 2 && r.verdict == "NoCertificateWithinBound") inconclusive = true;
  }
  return inconclusive ? 3 : 0;
}

namespace {

namespace fs = std::filesystem;

fs::path cache_file(const fs::path& dir, unsigned j, const std::string& digest) {
  return dir / ("j" + std::to_string(j) + "_" + digest.substr(0, 16) + ".json");
}

std::optional<RunRecord> load_cached(const fs::path& dir, unsigned j, const std::string& digest,
                                     const RunConfig& config) {
  const fs::path file = cache_file(dir, j, digest);
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    RunRecord r = record_from_json(Json::parse(in));
    if (r.j != j || r.digest != digest || r.seed != config.seed || r.prime_bound != config.prime_bound_for(j) ||
        r.width != to_string(config.width))
      return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable or stale schema: recompute
  }
}

void store_cached(const fs::path& dir, const RunRecord& r) {
  const fs::path file = cache_file(dir, r.j, r.digest);
  fs::path tmp = file;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << to_json(r, true).dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, file);
}

// Digest of the freshly generated family, used as the cache key.
std::string fresh_digest(unsigned j) {
  const IntPoly q = build_q(j);
  const IntPoly p = build_p(j);
  const IntPoly P = build_P(j);
  FamilyRecord f;
  f.q = q;
  f.p = p;
  f.P = P;
  f.Q = build_Q(j);
  const MinimalPolys mr = minimal_polys(j, p, P);
  f.m = mr.m;
  f.R = mr.R;
  return fixture_digest(f);
}

}  // namespace

PipelineResult run_pipeline(const RunConfig& config) {
  config.validate();
  if (config.cache_dir) fs::create_directories(*config.cache_dir);
  const std::size_t count = config.j_max - config.j_min + 1;
  std::vector<RunRecord> records(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> hits{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        const unsigned j = config.j_min + static_cast<unsigned>(i);
        if (config.cache_dir && !(config.fault_j && *config.fault_j == j)) {
          std::string digest;
          try {
            digest = fresh_digest(j);
          } catch (const Error&) {
            // fixture generation itself fails: compute_record reports it
          }
          if (!digest.empty()) {
            if (auto cached = load_cached(*config.cache_dir, j, digest, config)) {
              records[i] = std::move(*cached);
              ++hits;
              continue;
            }
          }
        }
        records[i] = compute_record(j, config);
        if (config.cache_dir && !records[i].digest.empty() && !(config.fault_j && *config.fault_j == j))
          store_cached(*config.cache_dir, records[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };

  const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(config.threads, count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  PipelineResult result;
  result.records = std::move(records);
  result.cache_hits = hits;
  result.exit_code = exit_code_for(result.records);
  return result;
}

// ---------------------------------------------------------------- emit

std::string to_decimal(const Rational& r, unsigned digits) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  BigInt num = abs(r.get_num()) * scale;
  BigInt scaled;
  mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits) s.insert(s.size() - digits, ".");
  return (r < 0 ? "-" : "") + s;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void emit_text(const RunRecord& r, std::ostream& out, bool include_timing) {
  out << "j=" << r.j << " (2j+3=" << 2 * r.j + 3 << ")  " << r.verdict;
  if (r.certificate) out << "  p=" << r.certificate->p << " " << r.certificate->pattern.to_string() << " ["
                         << r.certificate->route << (r.certificate->ramified ? ", ramified" : "") << "]";
  out << '\n';
  if (!r.detail.empty()) out << "  detail: " << r.detail << '\n';
  out << "  m_j = " << r.m.to_string() << '\n';
  out << "  cyclotomic part of P_j:";
  if (r.cyclotomic.empty()) out << " none";
  for (const auto& e : r.cyclotomic) out << " Phi_" << e.n << (e.multiplicity > 1 ? "^" + std::to_string(e.multiplicity) : "");
  out << '\n';
  if (r.pf_bracket)
    out << "  d_j in [" << to_decimal(r.pf_bracket->lo, 12) << ", " << to_decimal(r.pf_bracket->hi, 12) << "]\n";
  std::size_t passed = 0;
  for (const auto& [k, v] : r.identities) passed += v;
  for (const auto& [k, v] : r.special_values) passed += v;
  out << "  checks: " << passed << "/" << r.identities.size() + r.special_values.size() << " passed";
  if (r.gcd_claims)
    out << "; gcd claims over F_" << r.gcd_claims->p << ": " << (r.gcd_claims->claim1 ? "ok" : "FAIL") << "/"
        << (r.gcd_claims->claim2 ? "ok" : "FAIL");
  out << "; irreducible: " << (r.irreducible_proof ? "proved" : "unproved")
      << (r.irreducible_evidence ? " (oracle agrees)" : "");
  if (include_timing) out << "; " << std::fixed << std::setprecision(1) << r.wall_ms << " ms";
  out << '\n';
}

}  // namespace

void emit_report(const std::vector<RunRecord>& records, Format format, std::ostream& out, bool include_timing) {
  if (records.empty()) throw std::invalid_argument("emit_report needs at least one record");
  switch (format) {
    case Format::Json: {
      Json a = Json::array();
      for (const auto& r : records) a.push_back(to_json(r, include_timing));
      out << a.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "j,two_j_plus_three,cert_prime,pattern,verdict,ms\n";
      for (const auto& r : records) {
        out << r.j << ',' << 2 * r.j + 3 << ',' << (r.certificate ? std::to_string(r.certificate->p) : "") << ','
            << csv_field(r.certificate ? r.certificate->pattern.to_string() : "") << ',' << r.verdict << ','
            << std::fixed << std::setprecision(3) << r.wall_ms << '\n';
      }
      break;
    case Format::Text:
      for (const auto& r : records) emit_text(r, out, include_timing);
      break;
  }
  if (!out) throw std::runtime_error("failed writing report");
}

void emit_report(const std::vector<RunRecord>& records, Format format, const std::filesystem::path& file,
                 bool include_timing) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    emit_report(records, format, out, include_timing);
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace cyclocert
