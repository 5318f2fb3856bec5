#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vtwist/numcore/poly.hpp"

namespace vtwist::numcore {

// Q[x]/(f) for a monic irreducible f of degree >= 1.
class NumberField {
 public:
  explicit NumberField(QPoly defining, std::string generator_name = "a");
  const QPoly& defining_poly() const { return f_; }
  int degree() const { return f_.degree(); }
  const std::string& generator_name() const { return name_; }

 private:
  QPoly f_;
  std::string name_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a number field in the power basis. A default or integer
// constructed element has no field attached and behaves as a rational
// constant; it adopts the field of the other operand in mixed arithmetic.
class NfElem {
 public:
  NfElem() = default;
  NfElem(int k) : NfElem(mpq_class(k)) {}
  NfElem(const mpq_class& q);
  NfElem(FieldPtr K, const mpq_class& q);
  NfElem(FieldPtr K, std::vector<mpq_class> coeffs);

  static NfElem generator(FieldPtr K);

  const FieldPtr& field() const { return K_; }
  // Coefficient of generator^i.
  mpq_class coeff(int i) const;
  std::vector<mpq_class> coeffs(int degree) const;
  bool is_zero() const;
  bool is_rational() const;

  NfElem& operator+=(const NfElem& o);
  NfElem& operator-=(const NfElem& o);
  NfElem& operator*=(const NfElem& o);
  NfElem& operator/=(const NfElem& o);
  NfElem operator-() const;
  NfElem inverse() const;

  friend NfElem operator+(NfElem a, const NfElem& b) { return a += b; }
  friend NfElem operator-(NfElem a, const NfElem& b) { return a -= b; }
  friend NfElem operator*(NfElem a, const NfElem& b) { return a *= b; }
  friend NfElem operator/(NfElem a, const NfElem& b) { return a /= b; }
  friend bool operator==(const NfElem& a, const NfElem& b);
  friend bool operator!=(const NfElem& a, const NfElem& b) { return !(a == b); }

  // Minimal-degree polynomial representative.
  QPoly as_poly() const;
  std::string str() const;

 private:
  void adopt(const NfElem& o);
  void reduce();
  FieldPtr K_;
  std::vector<mpq_class> c_;
};

inline bool is_zero(const NfElem& x) { return x.is_zero(); }
inline NfElem exact_divide(const NfElem& a, const NfElem& b) { return a / b; }

using NfPoly = Poly<NfElem>;

// Extended gcd over Q[x]: returns (g, s, t) with s a + t b = g, g monic.
struct QPolyXgcd {
  QPoly g, s, t;
};
QPolyXgcd xgcd(const QPoly& a, const QPoly& b);

}  // namespace vtwist::numcore
