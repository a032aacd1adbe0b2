#ifndef CYCLOCERT_REAL_ROOTS_HPP
#define CYCLOCERT_REAL_ROOTS_HPP

#include <cyclocert/int_poly.hpp>

#include <optional>
#include <vector>

namespace cyclocert {

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool overlaps(const RationalInterval& o) const { return lo <= o.hi && o.lo <= hi; }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// Open interval (lo, hi) where a missing endpoint means -inf / +inf.
struct OpenInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static OpenInterval real_line() { return {}; }
  static OpenInterval above(Rational a) { return {std::move(a), std::nullopt}; }
  static OpenInterval below(Rational b) { return {std::nullopt, std::move(b)}; }
  static OpenInterval between(Rational a, Rational b) { return {std::move(a), std::move(b)}; }
};

/// Sturm sequence of a squarefree polynomial, built with primitive-part
/// pseudo-remainders. Reusable across many interval queries.
class SturmSequence {
 public:
  /// Throws NotSquarefree when gcd(f, f') is nonconstant.
  explicit SturmSequence(const IntPoly& f);

  const IntPoly& base() const { return seq_.front(); }
  std::size_t length() const { return seq_.size(); }

  /// Number of distinct real roots in the open interval.
  std::size_t count(const OpenInterval& interval) const;

 private:
  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool positive) const;

  std::vector<IntPoly> seq_;
};

/// Distinct real roots of f in the open interval. f must be squarefree.
std::size_t sturm_count(const IntPoly& f, const OpenInterval& interval = OpenInterval::real_line());

/// Number of real roots of f counted with multiplicity, via repeated gcd
/// deflation of f.
std::size_t real_root_count_with_multiplicity(const IntPoly& f);

/// 1 + max |a_i / a_n|
Rational cauchy_bound(const IntPoly& f);

/// Interval of width <= width that contains the largest real root of f and
/// no other root. Throws NoRealRoot.
RationalInterval isolate_largest_root(const IntPoly& f, const Rational& width);

}  // namespace cyclocert

#endif  // CYCLOCERT_REAL_ROOTS_HPP
