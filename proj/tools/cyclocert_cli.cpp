// cyclocert: command-line front end for the family certificates.

#include <cyclocert/cyclo.hpp>
#include <cyclocert/errors.hpp>
#include <cyclocert/family.hpp>
#include <cyclocert/obstruction.hpp>
#include <cyclocert/report.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using namespace cyclocert;

namespace {

constexpr const char* kCacheEnv = "CYCLOCERT_CACHE_DIR";

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::string format = "json";
};

Json family_json(const FamilyRecord& f) {
  Json o;
  o["j"] = f.j;
  for (auto [name, poly] : {std::pair{"q", &f.q}, {"p", &f.p}, {"P", &f.P}, {"Q", &f.Q}, {"m", &f.m}, {"R", &f.R}})
    o[name] = poly_to_json(*poly);
  o["has_phi3"] = f.hasPhi3;
  o["digest"] = fixture_digest(f);
  Json checks = Json::array();
  for (const auto* rep : {&f.identities, &f.special_values})
    for (const auto& c : rep->checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
  o["checks"] = checks;
  return o;
}

void print_checks(const FamilyRecord& f, std::ostream& out) {
  for (const auto* rep : {&f.identities, &f.special_values})
    for (const auto& c : rep->checks) {
      out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
      if (!c.passed) out << "  expected " << c.expected << ", got " << c.actual;
      out << '\n';
    }
}

int cmd_family(unsigned j, Format fmt) {
  const FamilyRecord f = build_family(j);
  if (fmt == Format::Json) {
    std::cout << family_json(f).dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    std::cout << "name,coefficients\n";
    for (auto [name, poly] : {std::pair{"q", &f.q}, {"p", &f.p}, {"P", &f.P}, {"Q", &f.Q}, {"m", &f.m}, {"R", &f.R}}) {
      std::cout << name << ",\"";
      for (std::size_t i = 0; i < poly->size(); ++i) std::cout << (i ? " " : "") << poly->coeffs()[i].get_str();
      std::cout << "\"\n";
    }
  } else {
    std::cout << "j = " << j << (f.hasPhi3 ? " (P_j has the factor q^2+q+1)" : "") << '\n';
    std::cout << "q_j(x) = " << f.q.to_string() << '\n'
              << "p_j(x) = " << f.p.to_string() << '\n'
              << "P_j(q) = " << f.P.to_string('q') << '\n'
              << "Q_j(q) = " << f.Q.to_string('q') << '\n'
              << "m_j(x) = " << f.m.to_string() << '\n'
              << "R_j(q) = " << f.R.to_string('q') << '\n';
    print_checks(f, std::cout);
  }
  return f.consistent() ? 0 : 2;
}

int cmd_verify(unsigned jmin, unsigned jmax, Format fmt) {
  if (jmin > jmax) throw std::invalid_argument("--jmin must not exceed --jmax");
  int code = 0;
  Json all = Json::array();
  if (fmt == Format::Csv) std::cout << "j,identities,special_values,gcd_claims\n";
  const auto qs = build_q_sequence(jmax);
  const auto ps = build_p_sequence(jmax);
  const auto Ps = build_P_sequence(jmax);
  for (unsigned j = jmin; j <= jmax; ++j) {
    const FamilyRecord f = assemble_family(j, qs[j], ps[j], Ps[j]);
    std::optional<GcdClaimReport> g;
    if (j >= 1 && is_prime_u64(2 * static_cast<u64>(j) + 3)) g = gcd_claims(j);
    const bool ok = f.consistent() && (!g || g->holds());
    if (!ok) code = 2;
    const std::string gtext = g ? (g->holds() ? "ok" : "FAIL") : "n/a";
    if (fmt == Format::Json) {
      Json o = family_json(f);
      o.erase("q"), o.erase("p"), o.erase("P"), o.erase("Q"), o.erase("R");
      if (g) o["gcd_claims"] = {{"p", g->p}, {"claim1", g->claim1}, {"claim2", g->claim2}};
      else o["gcd_claims"] = nullptr;
      all.push_back(o);
    } else if (fmt == Format::Csv) {
      std::cout << j << ',' << (f.identities.all_passed() ? "ok" : "FAIL") << ','
                << (f.special_values.all_passed() ? "ok" : "FAIL") << ',' << gtext << '\n';
    } else {
      std::cout << "j=" << j << ": " << (ok ? "ok" : "FAIL") << " (gcd claims: " << gtext << ")\n";
      if (!f.consistent()) print_checks(f, std::cout);
    }
  }
  if (fmt == Format::Json) std::cout << all.dump(2) << '\n';
  return code;
}

int cmd_irreducible(unsigned j, Format fmt) {
  IrreducibilityCertificate c;
  try {
    c = certify_irreducible(j);
  } catch (const CertificateFailure& e) {
    std::cerr << "claim failure: " << e.what() << '\n';
    return 2;
  }
  Json cyclo = Json::array();
  for (const auto& e : c.cyclotomic.entries) cyclo.push_back({e.n, e.multiplicity});
  Json o{{"j", j},
         {"q_roots_all_real", c.q_roots_all_real},
         {"roots_in_0_1", c.roots_in_0_1},
         {"roots_above_1", c.roots_above_1},
         {"roots_nonpositive", c.roots_nonpositive},
         {"cyclotomic", cyclo},
         {"R", poly_to_json(c.cyclotomic.cofactor)},
         {"proof_grade", c.proof_grade},
         {"oracle_primes", c.oracle.primes.size()},
         {"oracle_first_irreducible_prime", c.oracle.first_irreducible_prime},
         {"oracle_surviving_degrees", c.oracle.surviving_degrees},
         {"evidence_grade", c.evidence_grade}};
  if (fmt == Format::Text) {
    std::cout << "R_" << j << " irreducible: " << (c.proof_grade ? "proved" : "unproved") << '\n'
              << "  P_j real roots: (0,1)=" << c.roots_in_0_1 << " (1,inf)=" << c.roots_above_1
              << " (-inf,0]=" << c.roots_nonpositive << "; q_j all real: " << (c.q_roots_all_real ? "yes" : "no")
              << '\n'
              << "  degree-pattern oracle over " << c.oracle.primes.size() << " primes: "
              << (c.evidence_grade ? "no proper split possible" : "inconclusive") << '\n';
  } else if (fmt == Format::Csv) {
    std::cout << "j,proof_grade,evidence_grade,oracle_primes\n"
              << j << ',' << c.proof_grade << ',' << c.evidence_grade << ',' << c.oracle.primes.size() << '\n';
  } else {
    std::cout << o.dump(2) << '\n';
  }
  return 0;
}

int cmd_galois(unsigned j, std::optional<std::uint64_t> bound, std::uint64_t seed, Format fmt) {
  const std::uint64_t b = bound ? *bound : default_prime_bound(j);
  Verdict v = find_certificate(j, b, seed);
  if (const auto* c = std::get_if<CertifiedNotGalois>(&v); c && !recheck(c->certificate, seed))
    v = ClaimFailure{"certificate did not recheck"};
  const std::string name = verdict_name(v);
  const auto* cert = std::get_if<CertifiedNotGalois>(&v);
  if (fmt == Format::Json) {
    Json o{{"j", j}, {"two_j_plus_three", 2 * j + 3}, {"prime_bound", b}, {"verdict", name}};
    if (cert)
      o["certificate"] = {{"p", cert->certificate.p},
                          {"pattern", cert->certificate.pattern.to_string()},
                          {"route", to_string(cert->certificate.route)},
                          {"ramified", cert->certificate.ramified}};
    std::cout << o.dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    std::cout << "j,two_j_plus_three,cert_prime,pattern,verdict\n"
              << j << ',' << 2 * j + 3 << ',' << (cert ? std::to_string(cert->certificate.p) : "") << ",\""
              << (cert ? cert->certificate.pattern.to_string() : "") << "\"," << name << '\n';
  } else {
    std::cout << "j=" << j << ": " << name;
    if (cert)
      std::cout << " at p=" << cert->certificate.p << " pattern " << cert->certificate.pattern.to_string() << " ("
                << to_string(cert->certificate.route) << (cert->certificate.ramified ? ", ramified" : "") << ")";
    else if (std::holds_alternative<NoCertificateWithinBound>(v))
      std::cout << " (primes <= " << b << ")";
    std::cout << '\n';
  }
  if (std::holds_alternative<ClaimFailure>(v)) return 2;
  if (std::holds_alternative<NoCertificateWithinBound>(v) && j >= 2) return 3;
  return 0;
}

int cmd_pf(unsigned j, const std::string& width_text, Format fmt) {
  const Rational width = parse_rational(width_text);
  if (width <= 0) throw std::invalid_argument("--width must be positive");
  RationalInterval b;
  try {
    b = pf_index(j, width);
  } catch (const CertificateFailure& e) {
    std::cerr << "claim failure: " << e.what() << '\n';
    return 2;
  }
  if (fmt == Format::Json)
    std::cout << Json{{"j", j}, {"lo", rational_to_json(b.lo)}, {"hi", rational_to_json(b.hi)}}.dump(2) << '\n';
  else if (fmt == Format::Csv)
    std::cout << "j,lo,hi\n" << j << ',' << to_string(b.lo) << ',' << to_string(b.hi) << '\n';
  else
    std::cout << "d_" << j << " in [" << to_decimal(b.lo, 12) << ", " << to_decimal(b.hi, 12) << "]\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for the q_j / P_j polynomial family"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized equal-degree splitting")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for pipeline")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  unsigned j = 0, jmin = 0, jmax = 100;
  std::optional<std::uint64_t> prime_bound;
  std::string width = "1e-9";
  std::string out_file, cache_dir;
  bool timings = false;
  std::optional<unsigned> fault_j;

  auto* family = app.add_subcommand("family", "Print q_j, p_j, P_j, Q_j, m_j, R_j and run the identity suite");
  family->add_option("--j", j)->required();
  auto* verify = app.add_subcommand("verify", "Identity suite, special values and gcd claims over a range");
  verify->add_option("--jmin", jmin)->required();
  verify->add_option("--jmax", jmax)->required();
  auto* irreducible = app.add_subcommand("irreducible", "Certify irreducibility of R_j");
  irreducible->add_option("--j", j)->required();
  auto* galois = app.add_subcommand("galois", "Search for a prime ruling out a Galois Q(d_j)");
  galois->add_option("--j", j)->required();
  galois->add_option("--prime-bound", prime_bound)->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 24));
  auto* pf = app.add_subcommand("pf", "Bracket d_j, the largest root of q_j");
  pf->add_option("--j", j)->required();
  pf->add_option("--width", width, "Bracket width, e.g. 1e-9 or 1/1000")->capture_default_str();
  auto* pipeline = app.add_subcommand("pipeline", "Full run over a range with cached per-j records");
  pipeline->add_option("--jmin", jmin)->capture_default_str();
  pipeline->add_option("--jmax", jmax)->capture_default_str();
  pipeline->add_option("--out", out_file, "Report file (stdout when omitted)");
  pipeline->add_option("--cache", cache_dir, std::string("Cache directory (default: $") + kCacheEnv + ")");
  pipeline->add_option("--prime-bound", prime_bound)->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 24));
  pipeline->add_option("--width", width)->capture_default_str();
  pipeline->add_flag("--timings", timings, "Include wall times in JSON output");
  pipeline->add_option("--inject-fault", fault_j, "Force a claim failure at this j (exit-code testing)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const Format fmt = parse_format(g.format);
    if (*family) return cmd_family(j, fmt);
    if (*verify) return cmd_verify(jmin, jmax, fmt);
    if (*irreducible) return cmd_irreducible(j, fmt);
    if (*galois) return cmd_galois(j, prime_bound, g.seed, fmt);
    if (*pf) return cmd_pf(j, width, fmt);

    RunConfig config;
    config.j_min = jmin;
    config.j_max = jmax;
    config.prime_bound = prime_bound;
    config.seed = g.seed;
    config.width = parse_rational(width);
    config.threads = g.threads;
    config.format = fmt;
    config.timings = timings;
    config.fault_j = fault_j;
    if (!cache_dir.empty())
      config.cache_dir = cache_dir;
    else if (const char* env = std::getenv(kCacheEnv); env && *env)
      config.cache_dir = env;
    const PipelineResult result = run_pipeline(config);
    if (out_file.empty())
      emit_report(result.records, fmt, std::cout, timings);
    else
      emit_report(result.records, fmt, std::filesystem::path(out_file), timings);
    std::cerr << result.records.size() << " records, " << result.cache_hits << " from cache, exit "
              << result.exit_code << '\n';
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
