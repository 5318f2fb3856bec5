#pragma once

#include <array>

#include <gmpxx.h>

#include "vtwist/numcore/integer.hpp"

namespace oracle {

// #E(F_p) with y as the outer loop.
inline long recount_points(const std::array<mpz_class, 5>& a, long p) {
  std::array<long, 5> c{};
  for (int i = 0; i < 5; ++i) c[i] = mpz_class(((a[i] % p) + p) % p).get_si();
  long n = 1;
  for (long y = 0; y < p; ++y)
    for (long x = 0; x < p; ++x) {
      long lhs = (y * y + c[0] * x % p * y + c[2] * y) % p;
      long rhs = ((x * x % p) * x + c[1] * x % p * x + c[3] * x + c[4]) % p;
      if (lhs == rhs) ++n;
    }
  return n;
}

// Rational point on z^2 + 3w^2 = q with common denominator d <= 50, by search.
inline bool conic_has_small_point(const mpq_class& q) {
  mpz_class N = q.get_num(), D = q.get_den();
  if (N <= 0) return false;
  for (long d = 1; d <= 50; ++d) {
    mpz_class nd = N * d * d;
    if (nd % D != 0) continue;
    mpz_class n = nd / D;
    for (mpz_class y = 0; 3 * y * y <= n; ++y)
      if (vtwist::numcore::is_square(mpz_class(n - 3 * y * y))) return true;
  }
  return false;
}

}  // namespace oracle
