#include "vtwist/numcore/real.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace vtwist::numcore {

mpfr_prec_t bits_for_digits(int digits, int guard) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + guard;
}

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(double x, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, x, MPFR_RNDN);
}

Real::Real(long x, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, x, MPFR_RNDN);
}

Real::Real(const mpz_class& x, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& x, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("Real: cannot parse '" + decimal + "'");
  }
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

namespace {
void widen(Real& a, const Real& b) {
  if (b.precision() > a.precision()) mpfr_prec_round(a.get(), b.precision(), MPFR_RNDN);
}
}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(*this, o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  widen(*this, o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  widen(*this, o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  widen(*this, o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long k) {
  mpfr_div_si(v_, v_, k, MPFR_RNDN);
  return *this;
}
Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

mpz_class Real::round() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

std::string Real::str(int digits) const {
  std::vector<char> buf(digits + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", std::max(digits - 1, 0), v_);
  return buf.data();
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real operator+(Real a, const Real& b) { return a += b; }
Real operator-(Real a, const Real& b) { return a -= b; }
Real operator*(Real a, const Real& b) { return a *= b; }
Real operator/(Real a, const Real& b) { return a /= b; }
Real operator*(Real a, long k) { return a *= k; }
Real operator/(Real a, long k) { return a /= k; }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }

#define VTWIST_UNARY(name, fn)           \
  Real name(const Real& x) {             \
    Real r(x.precision());               \
    fn(r.get(), x.get(), MPFR_RNDN);     \
    return r;                            \
  }
VTWIST_UNARY(abs, mpfr_abs)
VTWIST_UNARY(sqrt, mpfr_sqrt)
VTWIST_UNARY(exp, mpfr_exp)
VTWIST_UNARY(log, mpfr_log)
VTWIST_UNARY(sin, mpfr_sin)
VTWIST_UNARY(cos, mpfr_cos)
#undef VTWIST_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real agm(const Real& a, const Real& b) {
  Real r(std::max(a.precision(), b.precision()));
  mpfr_agm(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.str(20); }

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}
Complex& Complex::operator*=(const Real& r) {
  re *= r;
  im *= r;
  return *this;
}

Complex Complex::root_of_unity(long num, long den, mpfr_prec_t prec) {
  long n = ((num % den) + den) % den;
  Real theta = Real::pi(prec) * (2 * n) / den;
  return {cos(theta), sin(theta)};
}

Complex Complex::polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator*(Complex a, const Real& r) { return a *= r; }
Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.norm2();
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Complex operator/(const Complex& a, const Real& r) { return {a.re / r, a.im / r}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << z.re.str(20) << (z.im.sign() < 0 ? " - " : " + ") << abs(z.im).str(20) << "i";
}

}  // namespace vtwist::numcore
