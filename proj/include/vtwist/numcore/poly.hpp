#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace vtwist::numcore {

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
inline mpq_class exact_divide(const mpq_class& a, const mpq_class& b) { return a / b; }

namespace detail {
template <class T>
bool coeff_is_zero(const T& a) {
  return is_zero(a);
}
}  // namespace detail

// Dense univariate polynomial, coefficients stored from the constant term up.
// Nests: Poly<Poly<mpq_class>> is a polynomial in an outer variable whose
// coefficients are polynomials in an inner one.
template <class T>
class Poly {
 public:
  using coeff_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }
  explicit Poly(int k) : c_{T(k)} { trim(); }

  static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }
  static Poly monomial(const T& a, std::size_t k) {
    std::vector<T> c(k + 1);
    c[k] = a;
    return Poly(std::move(c));
  }
  static Poly x(const T& one) { return monomial(one, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(); }
  const T& operator[](std::size_t i) const { return c_.at(i); }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const T& s) {
    for (auto& a : c_) a *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (numcore_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Horner evaluation; V must accept V * V and V + T.
  template <class V>
  V eval(const V& x, V acc) const {
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  T operator()(const T& x) const { return eval<T>(x, T()); }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<int>(i));
    return Poly(std::move(d));
  }

  template <class U, class F>
  Poly<U> map(F f) const {
    std::vector<U> out;
    out.reserve(c_.size());
    for (auto& a : c_) out.push_back(f(a));
    return Poly<U>(std::move(out));
  }

  // p(q(x)) for a polynomial q over the same ring.
  Poly compose(const Poly& q) const {
    Poly acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + constant(c_[i]);
    return acc;
  }

  std::string str(const std::string& var = "x") const;

 private:
  static bool numcore_is_zero(const T& a) { return detail::coeff_is_zero(a); }
  void trim() {
    while (!c_.empty() && numcore_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
  return p.is_zero();
}

template <class T>
Poly<T> operator+(const Poly<T>& a, const T& s) {
  return a + Poly<T>::constant(s);
}

using QPoly = Poly<mpq_class>;
using ZPoly = Poly<mpz_class>;
// Polynomials in two variables: outer variable u, inner t.
using QBiPoly = Poly<QPoly>;

namespace detail {
inline void write_coeff(std::ostream& os, const mpq_class& a) { os << a; }
inline void write_coeff(std::ostream& os, const mpz_class& a) { os << a; }
template <class T>
void write_coeff(std::ostream& os, const Poly<T>& a) {
  os << "(" << a.str("t") << ")";
}
}  // namespace detail

template <class T>
std::string Poly<T>::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (numcore_is_zero(c_[i])) continue;
    if (!first) os << " + ";
    first = false;
    detail::write_coeff(os, c_[i]);
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

// Quotient and remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> r = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Poly<T>(), a};
  std::vector<T> q(da - db + 1);
  T inv = T(1) / b.leading();
  for (int i = da; i >= db; --i) {
    if (is_zero(r[i])) continue;
    T f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  r.resize(db);
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> monic(const Poly<T>& a) {
  if (a.is_zero()) return a;
  return a * (T(1) / a.leading());
}

template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Exact division of polynomials over Q; throws if b does not divide a.
inline QPoly exact_divide(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_divide: nonzero remainder");
  return q;
}

// Fraction-free determinant (Bareiss); T needs exact_divide(T, T).
template <class T>
T determinant(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  bool neg = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t piv = k + 1;
      while (piv < n && is_zero(m[piv][k])) ++piv;
      if (piv == n) return T();
      std::swap(m[k], m[piv]);
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return neg ? T(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

template <class T>
T power_of(const T& a, int k) {
  T r(1);
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

template <class T>
T resultant(const Poly<T>& a, const Poly<T>& b) {
  int m = a.degree(), n = b.degree();
  if (m < 0 || n < 0) return T();
  if (m == 0) return power_of(a[0], n);
  if (n == 0) return power_of(b[0], m);
  std::size_t N = m + n;
  std::vector<std::vector<T>> s(N, std::vector<T>(N));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
  return determinant(std::move(s));
}

// Discriminant of a quadratic, cubic or quartic via the classical closed
// forms; valid over any commutative ring.
template <class T>
T discriminant_closed_form(const Poly<T>& p) {
  switch (p.degree()) {
    case 2: {
      const T &c = p.coeff(0), &b = p.coeff(1), &a = p.coeff(2);
      return b * b - T(4) * a * c;
    }
    case 3: {
      T d = p.coeff(0), c = p.coeff(1), b = p.coeff(2), a = p.coeff(3);
      return b * b * c * c - T(4) * a * c * c * c - T(4) * b * b * b * d - T(27) * a * a * d * d +
             T(18) * a * b * c * d;
    }
    case 4: {
      T e = p.coeff(0), d = p.coeff(1), c = p.coeff(2), b = p.coeff(3), a = p.coeff(4);
      return T(256) * a * a * a * e * e * e - T(192) * a * a * b * d * e * e -
             T(128) * a * a * c * c * e * e + T(144) * a * a * c * d * d * e -
             T(27) * a * a * d * d * d * d + T(144) * a * b * b * c * e * e -
             T(6) * a * b * b * d * d * e - T(80) * a * b * c * c * d * e +
             T(18) * a * b * c * d * d * d + T(16) * a * c * c * c * c * e -
             T(4) * a * c * c * c * d * d - T(27) * b * b * b * b * e * e +
             T(18) * b * b * b * c * d * e - T(4) * b * b * b * d * d * d -
             T(4) * b * b * c * c * c * e + T(1) * b * b * c * c * d * d;
    }
    default:
      throw std::invalid_argument("discriminant_closed_form: degree must be 2, 3 or 4");
  }
}

// Discriminant via the resultant with the derivative. Degrees 2 to 4.
mpq_class poly_discriminant(const QPoly& p);

// Integer content and primitive part helpers for rational polynomials.
mpz_class common_denominator(const QPoly& p);
ZPoly to_integral(const QPoly& p);  // p times the lcm of its denominators
QPoly to_rational(const ZPoly& p);

// Rational roots of a nonzero polynomial with rational coefficients, sorted.
std::vector<mpq_class> rational_roots(const QPoly& p);

// Integer roots of a monic cubic with integer coefficients, sorted.
std::vector<mpz_class> integer_roots_monic_cubic(const mpz_class& a2, const mpz_class& a1,
                                                 const mpz_class& a0);

}  // namespace vtwist::numcore
