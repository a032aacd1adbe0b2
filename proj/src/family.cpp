#include <cyclocert/family.hpp>

#include <cyclocert/errors.hpp>

namespace cyclocert {

namespace {

const IntPoly& q_seed0() {
  static const IntPoly v{3, -5, 1};
  return v;
}

// (x^3 - 8x^2 + 17x - 5)(x - 1)
const IntPoly& q_seed1() {
  static const IntPoly v = mul(IntPoly{-5, 17, -8, 1}, IntPoly{-1, 1});
  return v;
}

const IntPoly& p_seed0() {
  static const IntPoly v{-3, -1, 1};
  return v;
}

// (x^3 - 2x^2 - 3x + 5)(x + 1)
const IntPoly& p_seed1() {
  static const IntPoly v = mul(IntPoly{5, -3, -2, 1}, IntPoly{1, 1});
  return v;
}

const IntPoly& P_seed0() {
  static const IntPoly v{1, -1, -1, -1, 1};
  return v;
}

const IntPoly& P_seed1() {
  static const IntPoly v{1, -1, -1, -1, 1, -1, -1, -1, 1};
  return v;
}

// Three-term recursion f_j = a f_{j-1} - b f_{j-2}.
std::vector<IntPoly> run_recursion(const IntPoly& s0, const IntPoly& s1, const IntPoly& a,
                                   const IntPoly& b, unsigned jmax) {
  std::vector<IntPoly> out{s0};
  if (jmax >= 1) out.push_back(s1);
  for (unsigned j = 2; j <= jmax; ++j) out.push_back(a * out[j - 1] - b * out[j - 2]);
  return out;
}

IntPoly last_of_recursion(const IntPoly& s0, const IntPoly& s1, const IntPoly& a, const IntPoly& b,
                          unsigned j) {
  if (j == 0) return s0;
  IntPoly prev = s0, cur = s1;
  for (unsigned i = 2; i <= j; ++i) {
    IntPoly next = a * cur - b * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

const IntPoly kQStep{2, -4, 1};            // x^2 - 4x + 2
const IntPoly kPStepLower{-2, 0, 1};       // x^2 - 2
const IntPoly kPStepUpper{1, 0, 0, 0, 1};  // q^4 + 1
const IntPoly kQ4{0, 0, 0, 0, 1};          // q^4
const IntPoly kOne{1};
const IntPoly kQ4MinusOne{-1, 0, 0, 0, 1};
const IntPoly kXPlusOne{1, 1};
const IntPoly kPhi3{1, 1, 1};

}  // namespace

IntPoly build_q(unsigned j) { return last_of_recursion(q_seed0(), q_seed1(), kQStep, kOne, j); }

IntPoly build_p(unsigned j) { return last_of_recursion(p_seed0(), p_seed1(), kPStepLower, kOne, j); }

IntPoly build_P_closed_form(unsigned j) {
  std::vector<BigInt> c(4 * j + 5);
  c[0] = 1;
  for (unsigned l = 1; l <= j + 1; ++l) {
    const unsigned base = 4 * l - 4;
    c[base + 4] += 1;
    c[base + 3] -= 1;
    c[base + 2] -= 1;
    c[base + 1] -= 1;
  }
  return IntPoly(std::move(c));
}

IntPoly build_P(unsigned j) {
  IntPoly rec = last_of_recursion(P_seed0(), P_seed1(), kPStepUpper, kQ4, j);
  if (rec != build_P_closed_form(j))
    throw ClosedFormMismatch("P_" + std::to_string(j) + " recursion disagrees with closed form");
  return rec;
}

IntPoly build_Q(unsigned j) { return build_P(j) * kQ4MinusOne; }

IntPoly build_Q_expansion(unsigned j) {
  std::vector<BigInt> c(4 * j + 9);
  c[4 * j + 8] = 1;
  c[4 * j + 7] = -1;
  c[4 * j + 6] = -1;
  c[4 * j + 5] = -1;
  c[3] += 1;
  c[2] += 1;
  c[1] += 1;
  c[0] -= 1;
  return IntPoly(std::move(c));
}

std::vector<IntPoly> build_q_sequence(unsigned jmax) {
  return run_recursion(q_seed0(), q_seed1(), kQStep, kOne, jmax);
}

std::vector<IntPoly> build_p_sequence(unsigned jmax) {
  return run_recursion(p_seed0(), p_seed1(), kPStepLower, kOne, jmax);
}

std::vector<IntPoly> build_P_sequence(unsigned jmax) {
  return run_recursion(P_seed0(), P_seed1(), kPStepUpper, kQ4, jmax);
}

MinimalPolys minimal_polys(unsigned j, const IntPoly& p, const IntPoly& P) {
  if (has_phi3(j)) return {exact_div(p, kXPlusOne), exact_div(P, kPhi3)};
  return {p, P};
}

MinimalPolys minimal_polys(unsigned j) { return minimal_polys(j, build_p(j), build_P(j)); }

bool CheckReport::all_passed() const { return first_failure() == nullptr; }

const CheckResult* CheckReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

void CheckReport::add(std::string name, const BigInt& expected, const BigInt& actual) {
  checks.push_back({std::move(name), expected == actual, expected.get_str(), actual.get_str()});
}

void CheckReport::add(std::string name, bool passed, std::string expected, std::string actual) {
  if (actual.empty()) actual = passed ? expected : "false";
  checks.push_back({std::move(name), passed, std::move(expected), std::move(actual)});
}

CheckReport check_special_values(unsigned j, const IntPoly& p, const IntPoly& P) {
  CheckReport report;
  const long sgn_j = (j % 2 == 0) ? -1 : 1;  // (-1)^(j+1)
  const BigInt k = j + 1;
  report.add("p(0)", BigInt(sgn_j * (2 * static_cast<long>(j) + 3)), evaluate(p, BigInt(0)));
  report.add("p'(0)", BigInt(sgn_j * (static_cast<long>(j) + 1)), evaluate(derivative(p), BigInt(0)));
  report.add("P(0)", BigInt(1), evaluate(P, BigInt(0)));
  report.add("P(1)", BigInt(-(2 * static_cast<long>(j) + 1)), evaluate(P, BigInt(1)));
  // 2(2k+1)(8k-1)k/3 + 2k; the product is always divisible by 3.
  BigInt second = 2 * (2 * k + 1) * (8 * k - 1) * k;
  BigInt r;
  mpz_fdiv_qr_ui(second.get_mpz_t(), r.get_mpz_t(), second.get_mpz_t(), 3);
  report.add("P''(-1) divisible", r == 0, "remainder 0", "remainder " + r.get_str());
  report.add("P''(-1)", second + 2 * k, evaluate(derivative(P, 2), BigInt(-1)));
  return report;
}

CheckReport check_special_values(unsigned j) { return check_special_values(j, build_p(j), build_P(j)); }

FamilyRecord assemble_family(unsigned j, IntPoly q, IntPoly p, IntPoly P) {
  FamilyRecord rec;
  rec.j = j;
  rec.hasPhi3 = has_phi3(j);
  auto& id = rec.identities;

  id.add("deg q = 2j+2", q.degree() == 2 * static_cast<long>(j) + 2);
  id.add("p = shift(q, 2)", shift(q, 2) == p);
  id.add("P = symmetrize(p)", symmetrize(p) == P);
  id.add("P recursion = closed form", build_P_closed_form(j) == P);
  id.add("P self-reciprocal", P.is_self_reciprocal());
  bool unit_coeffs = true;
  for (const auto& c : P.coeffs()) unit_coeffs = unit_coeffs && abs(c) <= 1;
  id.add("P coefficients in {-1,0,1}", unit_coeffs);
  id.add("P(0) = 1", !P.is_zero() && P.coeffs().front() == 1);

  IntPoly Q = P * kQ4MinusOne;
  id.add("Q = P (q^4 - 1) = expansion", Q == build_Q_expansion(j));

  try {
    MinimalPolys mp = minimal_polys(j, p, P);
    id.add("R = symmetrize(m)", symmetrize(mp.m) == mp.R);
    if (rec.hasPhi3) {
      id.add("p = (x+1) m", kXPlusOne * mp.m == p);
      id.add("P = (q^2+q+1) R", kPhi3 * mp.R == P);
    } else {
      id.add("x+1 does not divide p", !divides(kXPlusOne, p));
      id.add("q^2+q+1 does not divide P", !divides(kPhi3, P));
    }
    rec.m = std::move(mp.m);
    rec.R = std::move(mp.R);
  } catch (const NotDivisible& e) {
    id.add("minimal polynomial divisibility", false, "divisible", e.what());
  }

  rec.special_values = check_special_values(j, p, P);
  rec.q = std::move(q);
  rec.p = std::move(p);
  rec.P = std::move(P);
  rec.Q = std::move(Q);
  return rec;
}

FamilyRecord build_family(unsigned j) {
  return assemble_family(j, build_q(j), build_p(j),
                         last_of_recursion(P_seed0(), P_seed1(), kPStepUpper, kQ4, j));
}

FamilyRecord build_family(unsigned j, const Rational& width) {
  FamilyRecord rec = build_family(j);
  rec.d_bracket = pf_index(j, width);
  return rec;
}

RationalInterval pf_index(unsigned j, const Rational& width) {
  const IntPoly q = build_q(j);
  RationalInterval d = isolate_largest_root(q, width);

  // alpha > 1 is the largest real root of P_j and d_j = alpha + 1/alpha + 2;
  // t + 1/t is increasing on [1, inf).
  RationalInterval alpha = isolate_largest_root(build_P(j), width);
  Rational a_lo = alpha.lo < 1 ? Rational(1) : alpha.lo;
  if (alpha.hi <= 1)
    throw CertificateFailure("pf_index", "largest real root of P_" + std::to_string(j) + " is not > 1");
  RationalInterval image{a_lo + 1 / a_lo + 2, alpha.hi + 1 / alpha.hi + 2};
  if (!image.overlaps(d))
    throw CertificateFailure("pf_index", "alpha + 1/alpha + 2 bracket misses d_" + std::to_string(j));

  const IntPoly m = minimal_polys(j).m;
  if (sign_at(m, d.lo - 2) * sign_at(m, d.hi - 2) > 0)
    throw CertificateFailure("pf_index", "m_" + std::to_string(j) + " has no sign change at e_j bracket");
  return d;
}

}  // namespace cyclocert
