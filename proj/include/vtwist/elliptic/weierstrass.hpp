#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace vtwist::elliptic {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a field F.
template <class F>
struct Weierstrass {
  F a1, a2, a3, a4, a6;

  F b2() const { return a1 * a1 + F(4) * a2; }
  F b4() const { return a1 * a3 + F(2) * a4; }
  F b6() const { return a3 * a3 + F(4) * a6; }
  F b8() const { return a1 * a1 * a6 + F(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }
  F c4() const { return b2() * b2() - F(24) * b4(); }
  F c6() const { return -b2() * b2() * b2() + F(36) * b2() * b4() - F(216) * b6(); }
  F discriminant() const {
    F B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - F(8) * B4 * B4 * B4 - F(27) * B6 * B6 + F(9) * B2 * B4 * B6;
  }
};

template <class F>
struct Point {
  bool infinity = true;
  F x{}, y{};

  static Point zero() { return Point{}; }
  static Point affine(F x, F y) { return Point{false, std::move(x), std::move(y)}; }
  bool operator==(const Point& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
};

template <class F>
bool on_curve(const Weierstrass<F>& E, const Point<F>& P) {
  if (P.infinity) return true;
  const F &x = P.x, &y = P.y;
  return y * y + E.a1 * x * y + E.a3 * y == x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
}

template <class F>
Point<F> negate(const Weierstrass<F>& E, const Point<F>& P) {
  if (P.infinity) return P;
  return Point<F>::affine(P.x, -P.y - E.a1 * P.x - E.a3);
}

template <class F>
Point<F> add(const Weierstrass<F>& E, const Point<F>& P, const Point<F>& Q) {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  F lambda, nu;
  if (P.x == Q.x) {
    F s = P.y + Q.y + E.a1 * Q.x + E.a3;
    if (s == F(0)) return Point<F>::zero();
    F num = F(3) * P.x * P.x + F(2) * E.a2 * P.x + E.a4 - E.a1 * P.y;
    lambda = num / (F(2) * P.y + E.a1 * P.x + E.a3);
  } else {
    lambda = (Q.y - P.y) / (Q.x - P.x);
  }
  nu = P.y - lambda * P.x;
  F x3 = lambda * lambda + E.a1 * lambda - E.a2 - P.x - Q.x;
  F y3 = -(lambda + E.a1) * x3 - nu - E.a3;
  return Point<F>::affine(x3, y3);
}

template <class F>
Point<F> multiply(const Weierstrass<F>& E, long n, Point<F> P) {
  if (n < 0) {
    n = -n;
    P = negate(E, P);
  }
  Point<F> R = Point<F>::zero();
  while (n) {
    if (n & 1) R = add(E, R, P);
    n >>= 1;
    if (n) P = add(E, P, P);
  }
  return R;
}

// Orders a torsion point can have over a number field of the given degree
// (Mazur for Q; Kamienny, Kenku and Momose for quadratic; Derickx et al. for
// cubic fields).
inline std::vector<long> torsion_test_orders(int field_degree) {
  switch (field_degree) {
    case 1:
      return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
    case 2:
      return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18};
    case 3:
      return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21};
    default:
      throw std::invalid_argument("torsion_test_orders: only degrees 1 to 3 are supported");
  }
}

template <class F>
bool is_nontorsion(const Weierstrass<F>& E, const Point<F>& P, int field_degree) {
  if (P.infinity) return false;
  long max_order = torsion_test_orders(field_degree).back();
  Point<F> Q = P;
  for (long i = 1; i <= max_order; ++i) {
    if (Q.infinity) return false;
    Q = add(E, Q, P);
  }
  return true;
}

}  // namespace vtwist::elliptic
