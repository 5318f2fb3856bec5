#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "vtwist/dirichlet/character.hpp"
#include "vtwist/elliptic/curve.hpp"
#include "vtwist/numcore/real.hpp"

namespace vtwist::lvalue {

struct ValueWithError {
  numcore::Complex value;
  double err;
};

struct SeriesOptions {
  // Splitting parameter of the two exponential series; the value is
  // independent of it when the root number is right.
  mpq_class t = 1;
  // Replaces the curve's root number (used to test the sign validator).
  std::optional<int> root_number_override;
  // Multiplies the truncation length (tail-bound soundness checks).
  double length_factor = 1.0;
};

// Twisted central value L(E, 1, chi) with a rigorous truncation and rounding
// bound no larger than target_err. Requires gcd(f, N) = 1.
ValueWithError central_value(const elliptic::EllipticCurve& E, const dirichlet::Character& chi, double target_err,
                             const SeriesOptions& opts = {});

// L(E, 1, chi^j) for j = 1 .. ell-1 from a single pass over the a_n, together
// with the Gauss sums tau(chi^j). Entry j-1 holds chi^j.
struct OrbitValues {
  std::vector<ValueWithError> L;
  std::vector<dirichlet::GaussSum> tau;
  mpfr_prec_t prec;
};
OrbitValues orbit_values(const elliptic::EllipticCurve& E, const dirichlet::Character& chi, mpfr_prec_t prec,
                         const SeriesOptions& opts = {});

// Untwisted L(E, 1).
ValueWithError curve_value(const elliptic::EllipticCurve& E, mpfr_prec_t prec);

// Compares the value at t = 1 and t = 13/10; true when they agree within the
// combined error bounds.
bool root_number_consistent(const elliptic::EllipticCurve& E, const dirichlet::Character& chi, mpfr_prec_t prec,
                            std::optional<int> root_number_override = std::nullopt);

}  // namespace vtwist::lvalue
