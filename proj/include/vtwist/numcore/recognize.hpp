#pragma once

#include <gmpxx.h>

#include "vtwist/numcore/real.hpp"

namespace vtwist::numcore {

// Nearest integer m to x, provided |x - m| <= tol. `err` is the known error
// bound on x and must be below 1/4. Throws RecognitionError otherwise.
mpz_class recognize_integer(const Real& x, double err, double tol = 1e-4);
mpz_class recognize_integer(double x, double err, double tol = 1e-4);

// Rational n/d with d <= max_den closest to x, if within tol.
mpq_class recognize_rational(const Real& x, long max_den, double tol = 1e-20);

}  // namespace vtwist::numcore
