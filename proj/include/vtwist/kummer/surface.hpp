#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "vtwist/elliptic/weierstrass.hpp"
#include "vtwist/numcore/poly.hpp"

namespace vtwist::kummer {

using numcore::QBiPoly;
using numcore::QPoly;

// delta^2 = Delta(u, t): discriminant in x of the cubic cut out on the curve
// by the line y = t x + u. Outer variable u, inner t.
struct SurfaceModel {
  elliptic::Weierstrass<mpq_class> curve;
  QBiPoly delta;

  // The cubic in x on the line y = t0 x + u0, monic.
  QPoly line_cubic(const mpq_class& t0, const mpq_class& u0) const;
  // Delta(u, t0) as a polynomial in u.
  QPoly fiber(const mpq_class& t0) const;
  mpq_class eval(const mpq_class& u0, const mpq_class& t0) const;
};

SurfaceModel delta_poly(const elliptic::Weierstrass<mpq_class>& E);

// The quartic for y^2 = x^3 + Ax + B exactly as printed in the source text,
// and the form actually equal to the discriminant (u-coefficient
// -4t(At^4 - 9Bt^2 - 6A^2)). The two agree only when B = 1 or t = 0.
QBiPoly printed_short_quartic(const mpq_class& A, const mpq_class& B);
QBiPoly short_quartic(const mpq_class& A, const mpq_class& B);

enum class FiberClass { SplitOverQ, CyclicCubic, Degenerate };
std::string to_string(FiberClass c);

struct ExtractedCubic {
  QPoly cubic;
  FiberClass cls;
};

struct FiberPoint {
  mpq_class t0, u, delta;
  QPoly cubic;
  FiberClass cls;
};

// Throws std::invalid_argument if delta^2 != Delta(u, t0).
ExtractedCubic extract_cubic(const SurfaceModel& S, const mpq_class& t0, const mpq_class& u,
                             const mpq_class& delta);

struct FiberSearch {
  bool good_fiber = false;  // t0 != 0 and Delta(u, t0) squarefree of degree 4
  std::vector<FiberPoint> points;
};

// u = a/b with |a|, |b| <= height_bound and gcd(a, b) = 1 such that
// Delta(u, t0) is a rational square; both signs of delta.
FiberSearch fiber_search(const SurfaceModel& S, const mpq_class& t0, long height_bound);

}  // namespace vtwist::kummer
