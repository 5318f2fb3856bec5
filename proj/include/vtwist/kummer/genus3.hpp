#pragma once

#include <gmpxx.h>

#include "vtwist/elliptic/weierstrass.hpp"
#include "vtwist/numcore/number_field.hpp"
#include "vtwist/numcore/poly.hpp"

namespace vtwist::kummer {

using numcore::QBiPoly;
using numcore::QPoly;

// J_t: Y^2 = X^3 + a4(t) X + a6(t) for E: y^2 = x^3 + Ax + B.
struct JacobianCurve {
  QPoly a4, a6;
  QPoly discriminant() const;  // -16 (4 a4^3 + 27 a6^2)
  elliptic::Weierstrass<mpq_class> at(const mpq_class& t0) const;
};

// Throws SingularCurveError when J_t is singular for every t.
JacobianCurve jacobian_curve(const mpq_class& A, const mpq_class& B);

// gamma_1 with coordinates in Q(s)[t], s^2 = -3.
struct Gamma1 {
  numcore::FieldPtr K;
  numcore::NfPoly X, Y;
  // Y^2 - X^3 - a4 X - a6; identically zero when gamma_1 lies on J_t.
  numcore::NfPoly residual(const JacobianCurve& J) const;
  elliptic::Point<numcore::NfElem> at(const mpq_class& t0) const;
};

Gamma1 gamma1(const mpq_class& A, const mpq_class& B);
numcore::FieldPtr sqrt_minus_three_field();

// t^8 + 18At^4 + 108Bt^2 - 27A^2
QPoly bad_locus(const mpq_class& A, const mpq_class& B);

// Plane quartic G(xi1, xi2) = 0 (outer variable xi2) obtained by eliminating
// xi3 and u from the elementary-symmetric system at t = t0.
struct PlaneQuartic {
  QBiPoly G;
  bool smooth = false;
};

PlaneQuartic genus3_curve(const mpq_class& A, const mpq_class& B, const mpq_class& t0);

// Exact-input smoothness test for the projective closure of G(x, y) = 0,
// outer variable y. Affine part via resultants after shears x -> x + c y.
bool plane_curve_smooth(const QBiPoly& G);

}  // namespace vtwist::kummer
