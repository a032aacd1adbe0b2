#include <cyclocert/cyclo.hpp>
#include <cyclocert/errors.hpp>
#include <cyclocert/family.hpp>
#include <cyclocert/fp_factor.hpp>
#include <cyclocert/obstruction.hpp>
#include <cyclocert/report.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cyclocert;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10))); }

BigInt from_py(const py::handle& v) { return BigInt(py::str(v).cast<std::string>()); }

py::list coeffs(const IntPoly& f) {
  py::list out;
  for (const auto& c : f.coeffs()) out.append(to_py(c));
  return out;
}

IntPoly poly(const py::iterable& c) {
  std::vector<BigInt> v;
  for (const auto& x : c) v.push_back(from_py(x));
  return IntPoly(std::move(v));
}

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_py(r.get_num()), to_py(r.get_den()));
}

Rational rational(const py::handle& v) {
  if (py::isinstance<py::str>(v)) return parse_rational(v.cast<std::string>());
  return parse_rational(py::str(v).cast<std::string>());
}

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict certificate_dict(const Certificate& c) {
  py::list pattern;
  for (const auto& b : c.pattern.blocks) pattern.append(py::make_tuple(b.degree, b.multiplicity));
  py::dict d;
  d["j"] = c.j;
  d["p"] = c.p;
  d["pattern"] = pattern;
  d["pattern_text"] = c.pattern.to_string();
  d["route"] = to_string(c.route);
  d["ramified"] = c.ramified;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact certificates for the q_j / P_j polynomial family";

  py::register_exception<Error>(m, "CyclocertError", PyExc_ValueError);
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  // polynomials are ascending coefficient lists of Python ints
  m.def("build_q", [](unsigned j) { return coeffs(build_q(j)); }, py::arg("j"));
  m.def("build_p", [](unsigned j) { return coeffs(build_p(j)); }, py::arg("j"));
  m.def("build_P", [](unsigned j) { return coeffs(build_P(j)); }, py::arg("j"));
  m.def("build_Q", [](unsigned j) { return coeffs(build_Q(j)); }, py::arg("j"));
  m.def(
      "minimal_polys",
      [](unsigned j) {
        const MinimalPolys mp = minimal_polys(j);
        return py::make_tuple(coeffs(mp.m), coeffs(mp.R));
      },
      py::arg("j"), "(m_j, R_j)");
  m.def(
      "build_family",
      [](unsigned j) {
        const FamilyRecord f = build_family(j);
        py::dict d;
        d["j"] = j;
        for (auto [name, p] : {std::pair{"q", &f.q}, {"p", &f.p}, {"P", &f.P}, {"Q", &f.Q}, {"m", &f.m}, {"R", &f.R}})
          d[name] = coeffs(*p);
        d["has_phi3"] = f.hasPhi3;
        d["consistent"] = f.consistent();
        py::dict checks;
        for (const auto* rep : {&f.identities, &f.special_values})
          for (const auto& c : rep->checks) checks[py::str(c.name)] = c.passed;
        d["checks"] = checks;
        d["digest"] = fixture_digest(f);
        return d;
      },
      py::arg("j"));

  m.def("discriminant", [](const py::iterable& f) { return to_py(discriminant(poly(f))); }, py::arg("f"));
  m.def(
      "resultant", [](const py::iterable& f, const py::iterable& g) { return to_py(resultant(poly(f), poly(g))); },
      py::arg("f"), py::arg("g"));
  m.def("cyclotomic_poly", [](std::uint64_t n) { return coeffs(cyclotomic_poly(n)); }, py::arg("n"));
  m.def(
      "unity_root_indices",
      [](const py::iterable& f) {
        const CycloPart part = unity_root_indices(poly(f));
        py::list entries;
        for (const auto& e : part.entries) entries.append(py::make_tuple(e.n, e.multiplicity));
        return py::make_tuple(entries, coeffs(part.cofactor));
      },
      py::arg("f"), "([(n, multiplicity)], cofactor)");

  m.def(
      "factor_mod_p",
      [](const py::iterable& f, u64 p, std::uint64_t seed) {
        py::list out;
        for (const auto& fac : factor_mod_p(poly(f), p, seed).factors)
          out.append(py::make_tuple(fac.poly.coeffs(), fac.multiplicity));
        return out;
      },
      py::arg("f"), py::arg("p"), py::arg("seed") = kDefaultSeed, "[(monic factor coefficients, multiplicity)]");
  m.def(
      "galois_feasible",
      [](const std::vector<std::pair<long, unsigned>>& pattern) {
        std::vector<PatternBlock> blocks;
        for (auto [d, k] : pattern) blocks.push_back({d, k});
        return galois_feasible(FactorPattern(std::move(blocks)));
      },
      py::arg("pattern"), "pattern: [(degree, multiplicity)]");

  m.def(
      "find_certificate",
      [](unsigned j, std::optional<std::uint64_t> bound, std::uint64_t seed) -> py::dict {
        const Verdict v = find_certificate(j, bound ? *bound : default_prime_bound(j), seed);
        py::dict d;
        d["verdict"] = verdict_name(v);
        if (const auto* c = std::get_if<CertifiedNotGalois>(&v)) d["certificate"] = certificate_dict(c->certificate);
        else d["certificate"] = py::none();
        return d;
      },
      py::arg("j"), py::arg("prime_bound") = py::none(), py::arg("seed") = kDefaultSeed);
  m.def(
      "certify_irreducible",
      [](unsigned j) {
        const IrreducibilityCertificate c = certify_irreducible(j);
        py::dict d;
        d["proof_grade"] = c.proof_grade;
        d["evidence_grade"] = c.evidence_grade;
        d["roots_in_0_1"] = c.roots_in_0_1;
        d["roots_above_1"] = c.roots_above_1;
        d["roots_nonpositive"] = c.roots_nonpositive;
        d["oracle_primes"] = c.oracle.primes;
        return d;
      },
      py::arg("j"));
  m.def(
      "pf_index",
      [](unsigned j, const py::object& width) {
        const RationalInterval b = pf_index(j, rational(width));
        return py::make_tuple(fraction(b.lo), fraction(b.hi));
      },
      py::arg("j"), py::arg("width") = "1e-9", "(lo, hi) as Fractions bracketing d_j");
  m.def(
      "gcd_claims",
      [](unsigned j) {
        const GcdClaimReport r = gcd_claims(j);
        return py::make_tuple(r.p, r.claim1, r.claim2);
      },
      py::arg("j"));
  m.def(
      "fermat_scan",
      [](u64 p) {
        const FermatScanReport r = fermat_scan(p);
        py::dict d;
        d["units"] = r.units;
        d["trace_in_base"] = r.trace_in_base;
        d["order_divides"] = r.order_divides;
        d["mismatches"] = r.mismatches;
        return d;
      },
      py::arg("p"));

  m.def(
      "run_pipeline",
      [](unsigned j_min, unsigned j_max, std::optional<std::string> cache_dir, unsigned threads,
         std::uint64_t seed, std::optional<std::uint64_t> prime_bound, const py::object& width) {
        RunConfig config;
        config.j_min = j_min;
        config.j_max = j_max;
        if (cache_dir) config.cache_dir = *cache_dir;
        config.threads = threads;
        config.seed = seed;
        config.prime_bound = prime_bound;
        config.width = rational(width);
        PipelineResult r;
        {
          py::gil_scoped_release release;
          r = run_pipeline(config);
        }
        py::list records;
        for (const auto& rec : r.records) records.append(json_to_py(to_json(rec, false)));
        return py::make_tuple(records, r.exit_code);
      },
      py::arg("j_min"), py::arg("j_max"), py::arg("cache_dir") = py::none(), py::arg("threads") = 1,
      py::arg("seed") = kDefaultSeed, py::arg("prime_bound") = py::none(), py::arg("width") = "1e-9",
      "(records as dicts, exit code)");
}
