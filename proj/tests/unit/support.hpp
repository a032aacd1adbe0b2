#pragma once

#include <cyclocert/fp_poly.hpp>
#include <cyclocert/int_poly.hpp>

#include <random>

namespace testing {

inline cyclocert::IntPoly random_poly(std::mt19937_64& rng, long max_degree, long bound) {
  std::uniform_int_distribution<long> deg(0, max_degree), coef(-bound, bound);
  std::vector<cyclocert::BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return cyclocert::IntPoly(std::move(c));
}

inline cyclocert::FpPoly random_fp(std::mt19937_64& rng, cyclocert::u64 p, long degree) {
  std::uniform_int_distribution<cyclocert::u64> coef(0, p - 1);
  std::vector<cyclocert::u64> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return cyclocert::FpPoly(p, std::move(c));
}

}  // namespace testing
