#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "vtwist/numcore/real.hpp"

namespace vtwist::numcore {

// Element of Z[zeta_ell] for an odd prime ell, stored in the power basis
// 1, zeta, ..., zeta^(ell-2).
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int ell = 3);
  CyclotomicInt(int ell, std::vector<mpz_class> coeffs);

  static CyclotomicInt from_integer(int ell, const mpz_class& n);
  // zeta^k for any integer k.
  static CyclotomicInt zeta_power(int ell, long k);
  // sum_t values[t] * zeta^(sign * t) over t = 0 .. ell-1.
  static CyclotomicInt from_exponent_sums(int ell, const std::vector<mpz_class>& values, int sign);

  int ell() const { return ell_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_integer() const;

  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const mpz_class& k) const;
  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  bool operator==(const CyclotomicInt& o) const;

  // The Galois conjugate zeta -> zeta^j.
  CyclotomicInt conjugate(long j) const;
  // Image in Z[zeta]/(1 - zeta) = F_ell, in 0 .. ell-1.
  long residue_mod_lambda() const;
  Complex to_complex(mpfr_prec_t prec) const;
  std::string str() const;

 private:
  void check(const CyclotomicInt& o) const;
  int ell_;
  std::vector<mpz_class> c_;
};

}  // namespace vtwist::numcore
