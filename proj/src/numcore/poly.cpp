#include "vtwist/numcore/poly.hpp"

#include <algorithm>

#include "vtwist/numcore/integer.hpp"

namespace vtwist::numcore {

mpq_class poly_discriminant(const QPoly& p) {
  int n = p.degree();
  if (n < 2 || n > 4) throw std::invalid_argument("poly_discriminant: degree must be 2, 3 or 4");
  mpq_class r = resultant(p, p.derivative()) / p.leading();
  return (n * (n - 1) / 2) % 2 ? mpq_class(-r) : r;
}

mpz_class common_denominator(const QPoly& p) {
  mpz_class d = 1;
  for (auto& c : p.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  return d;
}

ZPoly to_integral(const QPoly& p) {
  mpz_class d = common_denominator(p);
  std::vector<mpz_class> c;
  for (auto& a : p.coeffs()) c.push_back(mpz_class(a * d));
  return ZPoly(std::move(c));
}

QPoly to_rational(const ZPoly& p) {
  std::vector<mpq_class> c;
  for (auto& a : p.coeffs()) c.emplace_back(a);
  return QPoly(std::move(c));
}

namespace {

mpz_class eval_cubic(const mpz_class& a2, const mpz_class& a1, const mpz_class& a0, const mpz_class& x) {
  return ((x + a2) * x + a1) * x + a0;
}

// Finds an integer zero of a monotone cubic on [lo, hi].
void search_monotone(const mpz_class& a2, const mpz_class& a1, const mpz_class& a0, mpz_class lo,
                     mpz_class hi, std::vector<mpz_class>& out) {
  if (lo > hi) return;
  int slo = sgn(eval_cubic(a2, a1, a0, lo));
  int shi = sgn(eval_cubic(a2, a1, a0, hi));
  if (slo == 0) {
    out.push_back(lo);
    return;
  }
  if (shi == 0) {
    out.push_back(hi);
    return;
  }
  if (slo == shi) return;
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    int s = sgn(eval_cubic(a2, a1, a0, mid));
    if (s == 0) {
      out.push_back(mid);
      return;
    }
    if (s == slo)
      lo = mid;
    else
      hi = mid;
  }
}

mpz_class floor_div(const mpz_class& a, long b) {
  mpz_class q;
  mpz_fdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), b);
  return q;
}

}  // namespace

std::vector<mpz_class> integer_roots_monic_cubic(const mpz_class& a2, const mpz_class& a1,
                                                 const mpz_class& a0) {
  mpz_class bound = 1 + std::max({abs(a2), abs(a1), abs(a0)});
  std::vector<mpz_class> out;
  // f' = 3x^2 + 2 a2 x + a1 has roots (-a2 +- sqrt(D)) / 3 with D = a2^2 - 3 a1.
  mpz_class D = a2 * a2 - 3 * a1;
  if (D <= 0) {
    search_monotone(a2, a1, a0, -bound, bound, out);
  } else {
    mpz_class s = isqrt(D);
    bool exact = s * s == D;
    mpz_class k1 = exact ? floor_div(-a2 - s, 3) : floor_div(-a2 - s - 1, 3);
    mpz_class k2 = floor_div(-a2 + s, 3);
    search_monotone(a2, a1, a0, -bound, k1, out);
    search_monotone(a2, a1, a0, k1 + 1, k2, out);
    search_monotone(a2, a1, a0, k2 + 1, bound, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<mpq_class> rational_roots(const QPoly& p0) {
  if (p0.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<mpq_class> out;
  QPoly p = p0;
  if (is_zero(p.coeff(0)) && p.degree() > 0) {
    out.push_back(0);
    std::vector<mpq_class> c(p.coeffs().begin(), p.coeffs().end());
    while (!c.empty() && is_zero(c.front())) c.erase(c.begin());
    p = QPoly(c);
  }
  p = monic(p);
  switch (p.degree()) {
    case 0:
      break;
    case 1:
      out.push_back(-p[0]);
      break;
    case 2: {
      mpq_class disc = p[1] * p[1] - 4 * p[0];
      if (sgn(disc) >= 0 && is_square(disc)) {
        mpq_class s = sqrt_exact(disc);
        out.push_back((-p[1] - s) / 2);
        out.push_back((-p[1] + s) / 2);
      }
      break;
    }
    case 3: {
      mpz_class d = common_denominator(p);
      mpz_class b2 = mpz_class(p[2] * d), b1 = mpz_class(p[1] * d * d), b0 = mpz_class(p[0] * d * d * d);
      for (auto& r : integer_roots_monic_cubic(b2, b1, b0)) out.push_back(mpq_class(r, d));
      break;
    }
    default:
      throw std::invalid_argument("rational_roots: degree above 3 not supported");
  }
  for (auto& r : out) r.canonicalize();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace vtwist::numcore
