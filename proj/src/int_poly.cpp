#include <cyclocert/int_poly.hpp>

#include <cyclocert/errors.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cyclocert {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return make_rational(num, den);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    exponent = std::stol(s.substr(e + 1));
    s.resize(e);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long>(s.size() - dot - 1);
    s.erase(dot, 1);
  }
  if (s.empty() || s == "-" || s == "+") throw std::invalid_argument("malformed rational '" + text + "'");
  if (s.front() == '+') s.erase(0, 1);
  BigInt mantissa;
  if (mantissa.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
  BigInt scale = pow_int(10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? make_rational(mantissa, scale) : Rational(mantissa * scale);
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t n) {
  std::vector<BigInt> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPoly::is_self_reciprocal() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.size(); ++i) v[i] -= b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const BigInt& c, const IntPoly& a) {
  std::vector<BigInt> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

IntPoly mul(const IntPoly& f, const IntPoly& g) { return f * g; }

namespace {

// Long division over Z. Returns false as soon as a quotient coefficient is not
// integral or the remainder is nonzero.
bool try_exact_div(const IntPoly& f, const IntPoly& g, IntPoly* out) {
  if (g.is_zero()) throw std::invalid_argument("exact_div by zero polynomial");
  if (f.is_zero()) {
    *out = IntPoly();
    return true;
  }
  if (f.degree() < g.degree()) return false;
  std::vector<BigInt> rem = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  const BigInt& lc = gc.back();
  std::vector<BigInt> quo(rem.size() - dg);
  BigInt q, r;
  for (std::size_t k = quo.size(); k-- > 0;) {
    BigInt& top = rem[k + dg];
    if (top == 0) continue;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    if (r != 0) return false;
    for (std::size_t i = 0; i < dg; ++i) rem[k + i] -= q * gc[i];
    top = 0;
    quo[k] = q;
  }
  for (std::size_t i = 0; i < dg; ++i)
    if (rem[i] != 0) return false;
  *out = IntPoly(std::move(quo));
  return true;
}

}  // namespace

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
  IntPoly h;
  if (!try_exact_div(f, g, &h))
    throw NotDivisible("(" + f.to_string() + ") is not divisible by (" + g.to_string() + ")");
  return h;
}

bool divides(const IntPoly& g, const IntPoly& f) {
  IntPoly h;
  return try_exact_div(f, g, &h);
}

IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("pseudo_rem by zero polynomial");
  if (f.degree() < g.degree()) return f;
  std::vector<BigInt> r = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  const BigInt& lc = gc.back();
  for (std::size_t k = r.size(); k-- > dg;) {
    BigInt top = r[k];
    // r <- lc*r - top*x^(k-dg)*g
    for (std::size_t i = 0; i < k; ++i) r[i] *= lc;
    for (std::size_t i = 0; i < dg; ++i) r[k - dg + i] -= top * gc[i];
    r[k] = 0;
  }
  r.resize(dg);
  return IntPoly(std::move(r));
}

IntPoly shift(const IntPoly& f, const BigInt& c) {
  if (c == 0 || f.degree() < 1) return f;
  std::vector<BigInt> a = f.coeffs();
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = n; k-- > i;) a[k] += c * a[k + 1];
  return IntPoly(std::move(a));
}

IntPoly symmetrize(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("symmetrize of zero polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  // Horner in y = q + 1/q, carrying the factor q^k at step k:
  // G_0 = a_n, G_k = (q^2 + 1) G_{k-1} + a_{n-k} q^k.
  std::vector<BigInt> g(2 * n + 1);
  g[0] = f.coeff(n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 2 * k; i >= 2; --i) g[i] += g[i - 2];
    g[k] += f.coeff(n - k);
  }
  return IntPoly(std::move(g));
}

IntPoly negate_variable(const IntPoly& f) {
  std::vector<BigInt> v = f.coeffs();
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPoly(std::move(v));
}

IntPoly derivative(const IntPoly& f, unsigned order) {
  std::vector<BigInt> v = f.coeffs();
  for (unsigned o = 0; o < order && !v.empty(); ++o) {
    for (std::size_t i = 1; i < v.size(); ++i) v[i - 1] = v[i] * static_cast<unsigned long>(i);
    v.pop_back();
  }
  return IntPoly(std::move(v));
}

BigInt evaluate(const IntPoly& f, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t k = f.size(); k-- > 0;) acc = acc * x + f.coeffs()[k];
  return acc;
}

namespace {

// sum c_i a^i b^(n-i) for x = a/b, b > 0.
BigInt homogeneous_eval(const IntPoly& f, const BigInt& a, const BigInt& b) {
  if (f.is_zero()) return 0;
  const auto& c = f.coeffs();
  BigInt acc = c.back();
  BigInt bp = 1;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    bp *= b;
    acc = acc * a + c[k] * bp;
  }
  return acc;
}

}  // namespace

Rational evaluate(const IntPoly& f, const Rational& x) {
  if (f.is_zero()) return 0;
  BigInt num = homogeneous_eval(f, x.get_num(), x.get_den());
  return make_rational(num, pow_int(x.get_den(), static_cast<unsigned long>(f.degree())));
}

int sign_at(const IntPoly& f, const Rational& x) {
  return sgn(homogeneous_eval(f, x.get_num(), x.get_den()));
}

Rational eval_deriv(const IntPoly& f, unsigned order, const Rational& r) {
  return evaluate(derivative(f, order), r);
}

BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  BigInt c = content(f);
  if (f.leading() < 0) c = -c;
  if (c == 1) return f;
  std::vector<BigInt> v = f.coeffs();
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
  IntPoly a = primitive_part(f);
  IntPoly b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.degree() < 1) return primitive_part(f);
  IntPoly g = gcd(f, derivative(f));
  return primitive_part(exact_div(primitive_part(f), g));
}

bool is_squarefree(const IntPoly& f) {
  if (f.degree() < 1) return true;
  return gcd(f, derivative(f)).degree() == 0;
}

IntPoly graeffe(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("graeffe of zero polynomial");
  // f(x) = e(x^2) + x o(x^2); f(x) f(-x) = e(y)^2 - y o(y)^2 with y = x^2.
  std::vector<BigInt> ev, od;
  for (std::size_t i = 0; i < f.size(); ++i) (i % 2 == 0 ? ev : od).push_back(f.coeffs()[i]);
  IntPoly e(std::move(ev)), o(std::move(od));
  IntPoly g = e * e - IntPoly::monomial(1, 1) * (o * o);
  return f.degree() % 2 == 0 ? g : -g;
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  IntPoly a = f, b = g;
  BigInt s = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
  }
  if (b.degree() == 0) return s * pow_int(b.leading(), static_cast<unsigned long>(a.degree()));

  BigInt ca = content(a), cb = content(b);
  BigInt t = pow_int(ca, static_cast<unsigned long>(b.degree())) *
             pow_int(cb, static_cast<unsigned long>(a.degree()));
  a = (ca == 1) ? a : IntPoly([&] {
    std::vector<BigInt> v = a.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), ca.get_mpz_t());
    return v;
  }());
  b = (cb == 1) ? b : IntPoly([&] {
    std::vector<BigInt> v = b.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cb.get_mpz_t());
    return v;
  }());

  BigInt gg = 1, h = 1;
  while (true) {
    const long da = a.degree(), db = b.degree();
    const unsigned long delta = static_cast<unsigned long>(da - db);
    if (da % 2 == 1 && db % 2 == 1) s = -s;
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    BigInt divisor = gg * pow_int(h, delta);
    std::vector<BigInt> v = r.coeffs();
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
    b = IntPoly(std::move(v));
    gg = a.leading();
    if (delta == 0) {
      // h unchanged: h^(1-0) g^0
    } else {
      BigInt num = pow_int(gg, delta);
      BigInt den = pow_int(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) {
      const unsigned long dA = static_cast<unsigned long>(a.degree());
      BigInt num = pow_int(b.leading(), dA);
      BigInt den = pow_int(h, dA - 1);
      BigInt res;
      mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * res;
    }
  }
}

BigInt discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("discriminant requires degree >= 1");
  const long n = f.degree();
  BigInt r = resultant(f, derivative(f));
  BigInt d;
  mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

}  // namespace cyclocert
