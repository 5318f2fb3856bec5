#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

namespace vtwist::kummer {

// z^2 + 3 w^2 = q with q = 12 U^3 (U^3 - T), the t = 0 fiber of the surface of
// y^2 + 3Uxy + Ty = x^3 after z = delta / 3u, w = u - 2U^3 + T.
struct ConicPoint {
  mpq_class z, w;
  mpq_class u, delta;  // the corresponding fiber point
};

struct ConicResult {
  mpq_class U, T, q;
  bool solvable = false;
  std::string reason;
  std::optional<ConicPoint> base;

  // Second intersection of the line of slope m (dw/dz) through the base
  // point; nullopt is the vertical line.
  ConicPoint point_at(const std::optional<mpq_class>& m) const;
  // Slope of the line from the base point to (z, w); nullopt for the vertical line.
  std::optional<mpq_class> slope_to(const mpq_class& z, const mpq_class& w) const;
  ConicPoint from_zw(const mpq_class& z, const mpq_class& w) const;
};

// Throws SingularCurveError when T = 0 or U^3 = T.
ConicResult conic_norm_test(const mpq_class& U, const mpq_class& T);

// Whether q is a norm from Q(sqrt(-3)): q > 0 and v_p(q) even for p = 2 mod 3.
bool is_norm_from_eisenstein(const mpq_class& q);
// Integer X, Y with X^2 + 3Y^2 = n, or nullopt. n > 0.
std::optional<std::pair<mpz_class, mpz_class>> represent_x2_3y2(const mpz_class& n);

}  // namespace vtwist::kummer
