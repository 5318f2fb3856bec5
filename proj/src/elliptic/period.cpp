#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "vtwist/elliptic/curve.hpp"

namespace vtwist::elliptic {

using numcore::Real;

namespace {

// Real roots of 4x^3 + b2 x^2 + 2 b4 x + b6, ascending, refined by Newton.
std::vector<Real> real_roots(const mpz_class& b2, const mpz_class& b4, const mpz_class& b6, bool three,
                             mpfr_prec_t prec) {
  // Initial approximations from the companion cubic in long double.
  using C = std::complex<long double>;
  long double A = b2.get_d() / 4.0L, B = b4.get_d() / 2.0L, Cc = b6.get_d() / 4.0L;
  // Depressed cubic via Cardano/trig on x^3 + A x^2 + B x + C.
  long double p = B - A * A / 3, q = 2 * A * A * A / 27 - A * B / 3 + Cc;
  std::vector<long double> approx;
  if (three) {
    long double r = std::sqrt(-p / 3);
    long double arg = std::clamp(static_cast<long double>(3 * q / (2 * p * r)), -1.0L, 1.0L);
    long double phi = std::acos(arg) / 3;
    for (int k = 0; k < 3; ++k) approx.push_back(2 * r * std::cos(phi - 2 * M_PIl * k / 3) - A / 3);
  } else {
    C d = std::sqrt(C(q * q / 4 + p * p * p / 27));
    C u = std::pow(C(-q / 2) + d, 1.0L / 3);
    if (std::abs(u) < 1e-30L) u = std::pow(C(-q / 2) - d, 1.0L / 3);
    C best = u - p / (3.0L * u);
    // Choose the cube root branch that yields a real root.
    C w(-0.5L, std::sqrt(3.0L) / 2);
    for (int k = 0; k < 3; ++k) {
      C cand = u - p / (3.0L * u);
      if (std::abs(cand.imag()) < std::abs(best.imag())) best = cand;
      u *= w;
    }
    approx.push_back(best.real() - A / 3);
  }
  std::sort(approx.begin(), approx.end());
  std::vector<Real> roots;
  Real rb2(b2, prec), rb4(b4, prec), rb6(b6, prec);
  for (long double x0 : approx) {
    Real x(static_cast<double>(x0), prec);
    for (int it = 0; it < 200; ++it) {
      Real f = ((x * 4L + rb2) * x + rb4 * 2L) * x + rb6;
      Real fp = (x * 12L + rb2 * 2L) * x + rb4 * 2L;
      if (fp.is_zero()) break;
      Real dx = f / fp;
      x -= dx;
      if (dx.is_zero() || abs(dx) < abs(x) * Real(std::ldexp(1.0, -static_cast<int>(prec) + 4), prec)) break;
    }
    roots.push_back(x);
  }
  return roots;
}

}  // namespace

Real EllipticCurve::real_period(mpfr_prec_t prec) const {
  const mpfr_prec_t wp = prec + 32;
  auto W = model();
  mpz_class b2(W.b2()), b4(W.b4()), b6(W.b6());
  Real pi = Real::pi(wp);
  if (disc_ > 0) {
    auto e = real_roots(b2, b4, b6, true, wp);
    const Real &e3 = e[0], &e2 = e[1], &e1 = e[2];
    Real w1 = pi / agm(sqrt(e1 - e3), sqrt(e1 - e2));
    Real out = w1 * 2L;
    mpfr_prec_round(out.get(), prec, MPFR_RNDN);
    return out;
  }
  auto e = real_roots(b2, b4, b6, false, wp);
  const Real& e1 = e[0];
  Real a = e1 * 3L + Real(b2, wp) / 4L;
  Real b = sqrt(e1 * e1 * 3L + Real(b2, wp) * e1 / 2L + Real(b4, wp) / 2L);
  Real out = pi * 2L / agm(sqrt(b) * 2L, sqrt(b * 2L + a));
  mpfr_prec_round(out.get(), prec, MPFR_RNDN);
  return out;
}

}  // namespace vtwist::elliptic
