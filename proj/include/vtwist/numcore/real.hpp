#pragma once

#include <iosfwd>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace vtwist::numcore {

// Bits needed to carry `digits` decimal digits plus guard bits.
mpfr_prec_t bits_for_digits(int digits, int guard = 64);

// Arbitrary precision real backed by MPFR. Results of binary operations take
// the larger of the operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128);
  Real(double x, mpfr_prec_t prec);
  Real(long x, mpfr_prec_t prec);
  Real(int x, mpfr_prec_t prec) : Real(static_cast<long>(x), prec) {}
  Real(const mpz_class& x, mpfr_prec_t prec);
  Real(const mpq_class& x, mpfr_prec_t prec);
  Real(const std::string& decimal, mpfr_prec_t prec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long k);
  Real& operator/=(long k);
  Real operator-() const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  mpz_class round() const;
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  // Scientific notation with the given number of significant digits.
  std::string str(int digits = 20) const;

  static Real pi(mpfr_prec_t prec);

 private:
  mpfr_t v_;
};

Real operator+(Real a, const Real& b);
Real operator-(Real a, const Real& b);
Real operator*(Real a, const Real& b);
Real operator/(Real a, const Real& b);
Real operator*(Real a, long k);
Real operator/(Real a, long k);
bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real agm(const Real& a, const Real& b);

std::ostream& operator<<(std::ostream& os, const Real& x);

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return re.precision(); }
  Complex conj() const { return {re, -im}; }
  Real norm2() const { return re * re + im * im; }
  Real abs() const { return sqrt(norm2()); }

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator*=(const Real& r);

  // e^{2 pi i num/den}
  static Complex root_of_unity(long num, long den, mpfr_prec_t prec);
  static Complex polar(const Real& r, const Real& theta);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator*(Complex a, const Real& r);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Real& r);
Complex operator-(const Complex& a);

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace vtwist::numcore
