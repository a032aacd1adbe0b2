#ifndef CYCLOCERT_INT_POLY_HPP
#define CYCLOCERT_INT_POLY_HPP

#include <cyclocert/bigint.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cyclocert {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree order. The zero polynomial is
/// the empty sequence; otherwise the last stored coefficient is nonzero. The
/// variable name (x or q) is context and is not stored.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }
  static IntPoly monomial(const BigInt& c, std::size_t degree);
  /// x^n - 1
  static IntPoly x_pow_minus_one(std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }

  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// Coefficient sequence equals its reversal.
  bool is_self_reciprocal() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& c, const IntPoly& a);

  std::string to_string(char var = 'x') const;
  friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.to_string(); }

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

IntPoly mul(const IntPoly& f, const IntPoly& g);

/// Quotient h with f = g*h exactly; throws NotDivisible otherwise.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);

/// True when g divides f over the integers (g nonzero).
bool divides(const IntPoly& g, const IntPoly& f);

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g);

/// f(x + c) by Taylor shift.
IntPoly shift(const IntPoly& f, const BigInt& c);

/// F(q) = f(q + 1/q) * q^deg f.
IntPoly symmetrize(const IntPoly& f);

/// f(-x)
IntPoly negate_variable(const IntPoly& f);

IntPoly derivative(const IntPoly& f, unsigned order = 1);

BigInt evaluate(const IntPoly& f, const BigInt& x);
Rational evaluate(const IntPoly& f, const Rational& x);

/// Sign of f at x without forming the rational value.
int sign_at(const IntPoly& f, const Rational& x);

/// Exact value of the order-th derivative of f at r.
Rational eval_deriv(const IntPoly& f, unsigned order, const Rational& r);

/// gcd of the coefficients, nonnegative.
BigInt content(const IntPoly& f);

/// f / content(f), normalized to a positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);

/// Primitive gcd over the rationals, positive leading coefficient.
IntPoly gcd(const IntPoly& f, const IntPoly& g);

/// f divided by gcd(f, f'); primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

bool is_squarefree(const IntPoly& f);

/// Root-squaring map: returns g with g(x^2) = (-1)^deg f * f(x) * f(-x).
IntPoly graeffe(const IntPoly& f);

/// Resultant via the subresultant polynomial remainder sequence.
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// Discriminant (-1)^(n(n-1)/2) res(f, f') / lc(f); requires deg f >= 1.
BigInt discriminant(const IntPoly& f);

}  // namespace cyclocert

#endif  // CYCLOCERT_INT_POLY_HPP
