#include "vtwist/numcore/recognize.hpp"

#include <cmath>
#include <stdexcept>

#include "vtwist/errors.hpp"

namespace vtwist::numcore {

mpz_class recognize_integer(const Real& x, double err, double tol) {
  if (!(err >= 0) || err >= 0.25) throw std::invalid_argument("recognize_integer: error bound must be below 1/4");
  mpz_class m = x.round();
  double d = std::fabs((x - Real(m, x.precision())).to_double());
  if (d > tol) throw RecognitionError("value " + x.str(15) + " is not within " + std::to_string(tol) + " of an integer");
  return m;
}

mpz_class recognize_integer(double x, double err, double tol) {
  return recognize_integer(Real(x, 64), err, tol);
}

mpq_class recognize_rational(const Real& x, long max_den, double tol) {
  // Continued fraction convergents.
  const mpfr_prec_t prec = x.precision();
  Real y = x;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpq_class best;
  bool found = false;
  for (int it = 0; it < 200; ++it) {
    Real fl(prec);
    mpfr_floor(fl.get(), y.get());
    mpz_class a = fl.round();
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    mpq_class c(p1, q1);
    c.canonicalize();
    double d = std::fabs((x - Real(c, prec)).to_double());
    if (d <= tol) {
      best = c;
      found = true;
      break;
    }
    Real frac = y - fl;
    if (frac.is_zero()) break;
    y = Real(1L, prec) / frac;
  }
  if (!found) throw RecognitionError("value " + x.str(15) + " is not a rational of small height");
  return best;
}

}  // namespace vtwist::numcore
