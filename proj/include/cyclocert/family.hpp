#ifndef CYCLOCERT_FAMILY_HPP
#define CYCLOCERT_FAMILY_HPP

#include <cyclocert/int_poly.hpp>
#include <cyclocert/real_roots.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cyclocert {

// Family index convention: j is the subscript of q_j, p_j, P_j. Several of the
// closed-form identities are stated in terms of k = j + 1.

/// q_j in the x-variable, degree 2j+2: characteristic-polynomial recursion
/// q_j = (x^2 - 4x + 2) q_{j-1} - q_{j-2}.
IntPoly build_q(unsigned j);

/// p_j(x) = q_j(x + 2), via its own recursion p_j = (x^2 - 2) p_{j-1} - p_{j-2}.
IntPoly build_p(unsigned j);

/// P_j(q) = p_j(q + 1/q) q^(2j+2), degree 4j+4. Built by the recursion
/// P_j = (q^4 + 1) P_{j-1} - q^4 P_{j-2} and checked against the closed form;
/// throws ClosedFormMismatch if they disagree.
IntPoly build_P(unsigned j);

/// 1 + sum_{l=1}^{j+1} (q^4 - q^3 - q^2 - q) q^(4l-4)
IntPoly build_P_closed_form(unsigned j);

/// Q_j = P_j (q^4 - 1), degree 4j+8.
IntPoly build_Q(unsigned j);

/// q^(4j+8) - q^(4j+7) - q^(4j+6) - q^(4j+5) + q^3 + q^2 + q - 1
IntPoly build_Q_expansion(unsigned j);

/// Sequences q_0..q_jmax etc., sharing the recursion work.
std::vector<IntPoly> build_q_sequence(unsigned jmax);
std::vector<IntPoly> build_p_sequence(unsigned jmax);
std::vector<IntPoly> build_P_sequence(unsigned jmax);

/// j ≡ 1 (mod 3): p_j carries the factor x+1 and P_j the factor q^2+q+1.
inline bool has_phi3(unsigned j) { return j % 3 == 1; }

struct MinimalPolys {
  IntPoly m;  // minimal polynomial of e_j = d_j - 2
  IntPoly R;  // its q-variable counterpart, R = symmetrize(m)
};

MinimalPolys minimal_polys(unsigned j);
MinimalPolys minimal_polys(unsigned j, const IntPoly& p, const IntPoly& P);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

/// Pass/fail for each named identity; all checks are exact.
struct CheckReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* first_failure() const;
  void add(std::string name, const BigInt& expected, const BigInt& actual);
  void add(std::string name, bool passed, std::string expected = "true", std::string actual = "");
};

/// p_j(0) = (-1)^(j+1) (2j+3), p_j'(0) = (-1)^(j+1) (j+1), P_j(0) = 1,
/// P_j(1) = -(2j+1), P_j''(-1) = 2(2k+1)(8k-1)k/3 + 2k with k = j+1.
CheckReport check_special_values(unsigned j);
CheckReport check_special_values(unsigned j, const IntPoly& p, const IntPoly& P);

/// Polynomials of one family member plus the outcome of its identity suite.
struct FamilyRecord {
  unsigned j = 0;
  IntPoly q, p, P, Q, m, R;
  bool hasPhi3 = false;
  CheckReport identities;
  CheckReport special_values;
  std::optional<RationalInterval> d_bracket;

  bool consistent() const { return identities.all_passed() && special_values.all_passed(); }
};

/// Builds every polynomial of index j and runs the identity suite:
/// p = shift(q, 2), P = symmetrize(p), P by recursion = closed form,
/// Q = P (q^4 - 1) = expansion, m/R relations, P self-reciprocal, P(0) = 1,
/// coefficients of P in {-1, 0, 1}, plus the special values.
FamilyRecord build_family(unsigned j);

/// As above, also bracketing d_j to the given width.
FamilyRecord build_family(unsigned j, const Rational& width);

/// Runs the identity suite on already-built polynomials; used when walking the
/// family with shared recursion state.
FamilyRecord assemble_family(unsigned j, IntPoly q, IntPoly p, IntPoly P);

/// Bracket of d_j (largest root of q_j) of width <= width, cross-checked with
/// alpha + 1/alpha + 2 for the largest real root alpha of P_j and by a sign
/// change of m_j across the shifted bracket. Throws CertificateFailure when a
/// cross-check fails.
RationalInterval pf_index(unsigned j, const Rational& width);

}  // namespace cyclocert

#endif  // CYCLOCERT_FAMILY_HPP
