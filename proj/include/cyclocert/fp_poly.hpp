#ifndef CYCLOCERT_FP_POLY_HPP
#define CYCLOCERT_FP_POLY_HPP

#include <cyclocert/int_poly.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cyclocert {

using u64 = std::uint64_t;

/// Deterministic for every n < 2^64.
bool is_prime_u64(u64 n);

/// Primes in [lo, hi], ascending.
std::vector<u64> primes_between(u64 lo, u64 hi);

/// Distinct prime divisors of n, ascending.
std::vector<u64> prime_divisors(u64 n);

inline u64 mulmod(u64 a, u64 b, u64 m) {
  if ((a | b) >> 32 == 0) return a * b % m;
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}
inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return (s >= m || s < a) ? s - m : s;
}
inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }
u64 powmod(u64 base, u64 e, u64 m);
/// Inverse of a nonzero residue modulo the prime m.
u64 invmod(u64 a, u64 m);

/// Polynomial over the prime field F_p, coefficients ascending in [0, p).
class FpPoly {
 public:
  static constexpr u64 kMaxModulus = u64{1} << 62;

  /// The zero polynomial over F_2.
  FpPoly() = default;
  /// Throws NotPrime unless p is a prime below 2^62.
  explicit FpPoly(u64 p);
  FpPoly(u64 p, std::vector<u64> coeffs);
  FpPoly(u64 p, std::initializer_list<long long> coeffs);
  /// Reduction of an integer polynomial mod p.
  FpPoly(u64 p, const IntPoly& f);

  static FpPoly x(u64 p) { return FpPoly(p, std::vector<u64>{0, 1}); }
  static FpPoly constant(u64 p, u64 c) { return FpPoly(p, std::vector<u64>{c % p}); }

  u64 modulus() const noexcept { return p_; }
  const std::vector<u64>& coeffs() const noexcept { return c_; }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  u64 leading() const { return c_.back(); }
  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  FpPoly monic() const;
  FpPoly derivative() const;
  u64 evaluate(u64 x) const;

  friend bool operator==(const FpPoly&, const FpPoly&) = default;
  /// Canonical order: degree, then coefficients from the constant term up.
  friend bool operator<(const FpPoly& a, const FpPoly& b);

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  FpPoly scaled(u64 c) const;

  /// Skips the primality check; p must already be a validated modulus and
  /// every coefficient must lie in [0, p).
  static FpPoly from_reduced(u64 p, std::vector<u64> coeffs) { return FpPoly(p, std::move(coeffs), true); }

  std::string to_string(char var = 'x') const;

 private:
  FpPoly(u64 p, std::vector<u64> coeffs, bool /*trusted*/);
  void normalize();

  u64 p_ = 2;
  std::vector<u64> c_;
};

/// f = g*quotient + remainder with deg remainder < deg g.
std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& f, const FpPoly& g);
FpPoly fp_rem(const FpPoly& f, const FpPoly& g);
FpPoly fp_div_exact(const FpPoly& f, const FpPoly& g);

/// Monic gcd (zero when both inputs are zero).
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& modulus);

/// base^n mod modulus by square-and-multiply.
FpPoly fp_powmod(const FpPoly& base, const BigInt& n, const FpPoly& modulus);

/// Precomputed x^(i p) mod g for i < deg g, so that h^p mod g is a linear map.
class FrobeniusMap {
 public:
  explicit FrobeniusMap(const FpPoly& modulus);
  const FpPoly& modulus() const { return modulus_; }
  /// h^p mod modulus, for h already reduced.
  FpPoly apply(const FpPoly& h) const;

 private:
  FpPoly modulus_;
  std::vector<std::vector<u64>> rows_;
};

}  // namespace cyclocert

#endif  // CYCLOCERT_FP_POLY_HPP
