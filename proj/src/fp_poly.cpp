#include <cyclocert/fp_poly.hpp>

#include <cyclocert/errors.hpp>

#include <algorithm>
#include <sstream>

namespace cyclocert {

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  // GMP's BPSW test has no counterexamples below 2^64.
  BigInt v;
  mpz_set_ui(v.get_mpz_t(), n);
  return mpz_probab_prime_p(v.get_mpz_t(), 25) > 0;
}

std::vector<u64> primes_between(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  if (hi <= (u64{1} << 24)) {
    std::vector<bool> composite(hi + 1, false);
    for (u64 i = 2; i * i <= hi; ++i)
      if (!composite[i])
        for (u64 k = i * i; k <= hi; k += i) composite[k] = true;
    for (u64 i = std::max<u64>(lo, 2); i <= hi; ++i)
      if (!composite[i]) out.push_back(i);
    return out;
  }
  for (u64 i = std::max<u64>(lo, 2); i <= hi && i >= lo; ++i)
    if (is_prime_u64(i)) out.push_back(i);
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 powmod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) {
  if (a % m == 0) throw std::domain_error("inverse of zero residue");
  return powmod(a, m - 2, m);
}

FpPoly::FpPoly(u64 p) : p_(p) {
  if (p >= kMaxModulus || !is_prime_u64(p)) throw NotPrime(std::to_string(p) + " is not a supported prime");
}

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs) : FpPoly(p) {
  c_ = std::move(coeffs);
  for (auto& c : c_) c %= p_;
  normalize();
}

FpPoly::FpPoly(u64 p, std::vector<u64> coeffs, bool) : p_(p), c_(std::move(coeffs)) { normalize(); }

FpPoly::FpPoly(u64 p, std::initializer_list<long long> coeffs) : FpPoly(p) {
  for (long long c : coeffs) {
    long long r = c % static_cast<long long>(p_);
    c_.push_back(r < 0 ? static_cast<u64>(r + static_cast<long long>(p_)) : static_cast<u64>(r));
  }
  normalize();
}

FpPoly::FpPoly(u64 p, const IntPoly& f) : FpPoly(p) {
  c_.reserve(f.size());
  for (const auto& c : f.coeffs()) c_.push_back(mod_u64(c, p_));
  normalize();
}

void FpPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scaled(invmod(c_.back(), p_));
}

FpPoly FpPoly::scaled(u64 c) const {
  std::vector<u64> v(c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mulmod(c_[i], c % p_, p_);
  return FpPoly(p_, std::move(v), true);
}

FpPoly FpPoly::derivative() const {
  std::vector<u64> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(mulmod(c_[i], i % p_, p_));
  return FpPoly(p_, std::move(v), true);
}

u64 FpPoly::evaluate(u64 x) const {
  u64 acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = addmod(mulmod(acc, x, p_), c_[k], p_);
  return acc;
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.c_ < b.c_;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  const u64 p = a.p_;
  std::vector<u64> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = addmod(a.coeff(i), b.coeff(i), p);
  return FpPoly(p, std::move(v), true);
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  const u64 p = a.p_;
  std::vector<u64> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = submod(a.coeff(i), b.coeff(i), p);
  return FpPoly(p, std::move(v), true);
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  const u64 p = a.p_;
  if (a.is_zero() || b.is_zero()) return FpPoly(p, std::vector<u64>{}, true);
  std::vector<u64> v(a.c_.size() + b.c_.size() - 1, 0);
  if (p < (u64{1} << 32)) {
    // Products fit in 64 bits; accumulate in 128 bits and reduce once.
    std::vector<unsigned __int128> acc(v.size(), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i] * b.c_[j];
    }
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<u64>(acc[i] % p);
  } else {
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = addmod(v[i + j], mulmod(a.c_[i], b.c_[j], p), p);
  }
  return FpPoly(p, std::move(v), true);
}

std::string FpPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[k] != 1 || k == 0) os << c_[k];
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  os << " (mod " << p_ << ")";
  return os.str();
}

std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& f, const FpPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("fp_divrem by zero polynomial");
  const u64 p = f.modulus();
  if (f.degree() < g.degree()) return {FpPoly::from_reduced(p, {}), f};
  std::vector<u64> r = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  const u64 inv = invmod(gc.back(), p);
  std::vector<u64> q(r.size() - dg, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    u64 t = r[k + dg];
    if (t == 0) continue;
    t = mulmod(t, inv, p);
    q[k] = t;
    for (std::size_t i = 0; i < dg; ++i) r[k + i] = submod(r[k + i], mulmod(t, gc[i], p), p);
    r[k + dg] = 0;
  }
  r.resize(dg);
  return {FpPoly::from_reduced(p, std::move(q)), FpPoly::from_reduced(p, std::move(r))};
}

FpPoly fp_rem(const FpPoly& f, const FpPoly& g) {
  if (f.degree() < g.degree()) return f;
  return fp_divrem(f, g).second;
}

FpPoly fp_div_exact(const FpPoly& f, const FpPoly& g) {
  auto [q, r] = fp_divrem(f, g);
  if (!r.is_zero()) throw NotDivisible("inexact division over F_" + std::to_string(f.modulus()));
  return q;
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = fp_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& modulus) {
  return fp_rem(a * b, modulus);
}

FpPoly fp_powmod(const FpPoly& base, const BigInt& n, const FpPoly& modulus) {
  if (modulus.degree() < 1) throw std::invalid_argument("fp_powmod needs a nonconstant modulus");
  if (n < 0) throw std::invalid_argument("fp_powmod needs a nonnegative exponent");
  FpPoly result = FpPoly::from_reduced(base.modulus(), {1});
  FpPoly b = fp_rem(base, modulus);
  const std::size_t bits = n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_mulmod(result, result, modulus);
    if (mpz_tstbit(n.get_mpz_t(), i)) result = fp_mulmod(result, b, modulus);
  }
  return fp_rem(result, modulus);
}

FrobeniusMap::FrobeniusMap(const FpPoly& modulus) : modulus_(modulus) {
  const long n = modulus.degree();
  if (n < 1) throw std::invalid_argument("FrobeniusMap needs a nonconstant modulus");
  const u64 p = modulus.modulus();
  rows_.reserve(static_cast<std::size_t>(n));
  if (p <= static_cast<u64>(n)) {
    // Small p: walk x^k mod g one multiplication by x at a time, O(n) each.
    const FpPoly g = modulus.monic();
    const auto& gc = g.coeffs();
    const std::size_t m = static_cast<std::size_t>(n);
    std::vector<u64> cur(m, 0);
    cur[0] = 1;
    for (long i = 0; i < n; ++i) {
      rows_.push_back(cur);
      for (u64 s = 0; s < p; ++s) {
        const u64 top = cur[m - 1];
        for (std::size_t k = m - 1; k > 0; --k) cur[k] = submod(cur[k - 1], mulmod(top, gc[k], p), p);
        cur[0] = submod(0, mulmod(top, gc[0], p), p);
      }
    }
    return;
  }
  FpPoly xp = fp_powmod(FpPoly::from_reduced(p, {0, 1}), BigInt(static_cast<unsigned long>(p)), modulus);
  FpPoly cur = FpPoly::from_reduced(p, {1});
  for (long i = 0; i < n; ++i) {
    std::vector<u64> row = cur.coeffs();
    row.resize(static_cast<std::size_t>(n), 0);
    rows_.push_back(std::move(row));
    cur = fp_mulmod(cur, xp, modulus);
  }
}

FpPoly FrobeniusMap::apply(const FpPoly& h) const {
  const u64 p = modulus_.modulus();
  const std::size_t n = rows_.size();
  std::vector<u64> out(n, 0);
  if (p < (u64{1} << 32)) {
    std::vector<unsigned __int128> acc(n, 0);
    for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
      const u64 c = h.coeffs()[i];
      if (c == 0) continue;
      const auto& row = rows_[i];
      for (std::size_t k = 0; k < n; ++k) acc[k] += c * row[k];
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = static_cast<u64>(acc[k] % p);
  } else {
    for (std::size_t i = 0; i < h.coeffs().size(); ++i) {
      const u64 c = h.coeffs()[i];
      if (c == 0) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] = addmod(out[k], mulmod(c, rows_[i][k], p), p);
    }
  }
  return FpPoly::from_reduced(p, std::move(out));
}

}  // namespace cyclocert
