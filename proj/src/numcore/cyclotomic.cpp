#include "vtwist/numcore/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace vtwist::numcore {

namespace {

// Reduce a length-ell vector modulo 1 + x + ... + x^(ell-1).
std::vector<mpz_class> reduce_full(std::vector<mpz_class> d) {
  const size_t ell = d.size();
  mpz_class top = d[ell - 1];
  d.pop_back();
  if (top != 0) {
    for (auto& x : d) x -= top;
  }
  return d;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

CyclotomicInt::CyclotomicInt(int ell) : ell_(ell), c_(ell - 1) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("CyclotomicInt: ell must be an odd prime");
}

CyclotomicInt::CyclotomicInt(int ell, std::vector<mpz_class> coeffs) : CyclotomicInt(ell) {
  if (coeffs.size() != static_cast<size_t>(ell - 1))
    throw std::invalid_argument("CyclotomicInt: expected ell - 1 coefficients");
  c_ = std::move(coeffs);
}

CyclotomicInt CyclotomicInt::from_integer(int ell, const mpz_class& n) {
  CyclotomicInt r(ell);
  r.c_[0] = n;
  return r;
}

CyclotomicInt CyclotomicInt::zeta_power(int ell, long k) {
  std::vector<mpz_class> d(ell);
  d[mod(k, ell)] = 1;
  return CyclotomicInt(ell, reduce_full(std::move(d)));
}

CyclotomicInt CyclotomicInt::from_exponent_sums(int ell, const std::vector<mpz_class>& values, int sign) {
  if (values.size() != static_cast<size_t>(ell)) throw std::invalid_argument("from_exponent_sums: size");
  std::vector<mpz_class> d(ell);
  for (int t = 0; t < ell; ++t) d[mod(static_cast<long>(sign) * t, ell)] += values[t];
  return CyclotomicInt(ell, reduce_full(std::move(d)));
}

bool CyclotomicInt::is_zero() const {
  for (auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CyclotomicInt::is_integer() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void CyclotomicInt::check(const CyclotomicInt& o) const {
  if (o.ell_ != ell_) throw std::invalid_argument("CyclotomicInt: mismatched ell");
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  check(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  check(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  CyclotomicInt r = *this;
  return r += o;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  CyclotomicInt r = *this;
  return r -= o;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  check(o);
  std::vector<mpz_class> d(ell_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) d[(i + j) % ell_] += c_[i] * o.c_[j];
  }
  return CyclotomicInt(ell_, reduce_full(std::move(d)));
}

CyclotomicInt CyclotomicInt::operator*(const mpz_class& k) const {
  CyclotomicInt r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

bool CyclotomicInt::operator==(const CyclotomicInt& o) const { return ell_ == o.ell_ && c_ == o.c_; }

CyclotomicInt CyclotomicInt::conjugate(long j) const {
  if (mod(j, ell_) == 0) throw std::invalid_argument("conjugate: exponent must be prime to ell");
  std::vector<mpz_class> d(ell_);
  for (size_t i = 0; i < c_.size(); ++i) d[mod(j * static_cast<long>(i), ell_)] += c_[i];
  return CyclotomicInt(ell_, reduce_full(std::move(d)));
}

long CyclotomicInt::residue_mod_lambda() const {
  mpz_class s = 0;
  for (auto& x : c_) s += x;
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), ell_);
  return r.get_si();
}

Complex CyclotomicInt::to_complex(mpfr_prec_t prec) const {
  Complex z(prec);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    z += Complex::root_of_unity(static_cast<long>(i), ell_, prec) * Real(c_[i], prec);
  }
  return z;
}

std::string CyclotomicInt::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << "-";
    first = false;
    mpz_class a = abs(c_[i]);
    if (i == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace vtwist::numcore
