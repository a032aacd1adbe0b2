#include <cyclocert/real_roots.hpp>

#include <cyclocert/errors.hpp>

namespace cyclocert {

SturmSequence::SturmSequence(const IntPoly& f) {
  if (f.degree() < 0) throw NotSquarefree("Sturm sequence of the zero polynomial");
  if (!is_squarefree(f)) throw NotSquarefree("(" + f.to_string() + ") has a repeated factor");
  seq_.push_back(f);
  if (f.degree() < 1) return;
  seq_.push_back(primitive_part(derivative(f)));
  while (seq_.back().degree() > 0) {
    const IntPoly& a = seq_[seq_.size() - 2];
    const IntPoly& b = seq_.back();
    IntPoly r = pseudo_rem(a, b);
    // Keep the multiplier positive so signs follow the true remainder.
    const long mult_exp = a.degree() - b.degree() + 1;
    if (b.leading() < 0 && mult_exp % 2 == 1) r = -r;
    if (r.is_zero()) break;
    BigInt c = content(r);
    std::vector<BigInt> v = r.coeffs();
    for (auto& x : v) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      x = -x;
    }
    seq_.emplace_back(std::move(v));
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int changes = 0, last = 0;
  for (const auto& p : seq_) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::variations_at_infinity(bool positive) const {
  int changes = 0, last = 0;
  for (const auto& p : seq_) {
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmSequence::count(const OpenInterval& interval) const {
  if (interval.lo && interval.hi && *interval.lo >= *interval.hi) return 0;
  // V(a) - V(b) counts roots in (a, b]; a root at b is removed for the open
  // interval.
  int va = interval.lo ? variations_at(*interval.lo) : variations_at_infinity(false);
  int vb = interval.hi ? variations_at(*interval.hi) : variations_at_infinity(true);
  int n = va - vb;
  if (interval.hi && sign_at(base(), *interval.hi) == 0) --n;
  return static_cast<std::size_t>(n);
}

std::size_t sturm_count(const IntPoly& f, const OpenInterval& interval) {
  return SturmSequence(f).count(interval);
}

std::size_t real_root_count_with_multiplicity(const IntPoly& f) {
  // f = s_1 s_2 ... with s_k the squarefree part of f / gcd^k-deflation; a
  // root of multiplicity m appears in exactly m of the successive squarefree
  // parts.
  std::size_t total = 0;
  IntPoly g = primitive_part(f);
  while (g.degree() >= 1) {
    IntPoly sq = squarefree_part(g);
    total += sturm_count(sq);
    g = primitive_part(exact_div(g, sq));
  }
  return total;
}

Rational cauchy_bound(const IntPoly& f) {
  if (f.degree() < 1) return 1;
  Rational best = 0;
  BigInt lc = abs(f.leading());
  for (long i = 0; i < f.degree(); ++i) {
    Rational r = make_rational(abs(f.coeffs()[i]), lc);
    if (r > best) best = r;
  }
  return best + 1;
}

RationalInterval isolate_largest_root(const IntPoly& f, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("isolation width must be positive");
  if (f.degree() < 1) throw NoRealRoot("constant polynomial has no real root");
  IntPoly g = squarefree_part(f);
  SturmSequence sturm(g);
  const Rational bound = cauchy_bound(g);
  if (sturm.count(OpenInterval::between(-bound, bound)) == 0)
    throw NoRealRoot("(" + f.to_string() + ") has no real root");

  // Bracket by doubling outward from [0, 1] rather than starting from the
  // Cauchy bound, which is huge for large coefficients.
  Rational hi = 1;
  while (hi < bound && sturm.count(OpenInterval::above(hi)) > 0) hi *= 2;
  if (hi > bound) hi = bound;
  Rational step = 1;
  Rational lo = hi - step;
  while (lo > -bound && sturm.count(OpenInterval::above(lo)) == 0) {
    step *= 2;
    lo = hi - step;
  }
  if (lo < -bound) lo = -bound;
  if (sign_at(g, hi) == 0) return {hi, hi};

  // Shrink (lo, hi) until it holds only the largest root; every root above
  // hi has already been excluded, so count(lo, hi) >= 1 throughout.
  while (sturm.count(OpenInterval::between(lo, hi)) > 1) {
    Rational mid = (lo + hi) / 2;
    if (sign_at(g, mid) == 0) {
      if (sturm.count(OpenInterval::between(mid, hi)) == 0) return {mid, mid};
      lo = mid;
    } else if (sturm.count(OpenInterval::between(mid, hi)) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // A single simple root in (lo, hi): bisect on sign.
  int s_hi = sign_at(g, hi);
  while (hi - lo > width || sign_at(g, lo) == 0) {
    Rational mid = (lo + hi) / 2;
    int s = sign_at(g, mid);
    if (s == 0) return {mid, mid};
    if (s == s_hi) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

}  // namespace cyclocert
