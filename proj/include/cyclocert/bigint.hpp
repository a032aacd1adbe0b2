#ifndef CYCLOCERT_BIGINT_HPP
#define CYCLOCERT_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cyclocert {

// Arbitrary-precision integers and reduced rationals. mpq_class is kept
// canonical (lowest terms, positive denominator) by every operation below.
using BigInt = mpz_class;
using Rational = mpq_class;

inline int sign(const BigInt& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "a", "a/b", "0.001" or "1e-9" into an exact rational.
Rational parse_rational(const std::string& text);

// Residue of v modulo m in [0, m).
inline std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
  return mpz_fdiv_ui(v.get_mpz_t(), m);
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace cyclocert

#endif  // CYCLOCERT_BIGINT_HPP
