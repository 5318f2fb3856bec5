#include "vtwist/kummer/surface.hpp"

#include <algorithm>
#include <numeric>

#include "vtwist/numcore/integer.hpp"

namespace vtwist::kummer {

namespace {

QBiPoly cst(const mpq_class& q) { return QBiPoly::constant(QPoly::constant(q)); }
QBiPoly var_u() { return QBiPoly::x(QPoly(1)); }
QBiPoly var_t() { return QBiPoly::constant(QPoly::x(mpq_class(1))); }
// c * u^i * t^j
QBiPoly term(const mpq_class& c, int i, int j) { return QBiPoly::monomial(QPoly::monomial(c, j), i); }

}  // namespace

std::string to_string(FiberClass c) {
  switch (c) {
    case FiberClass::SplitOverQ:
      return "split-over-Q";
    case FiberClass::CyclicCubic:
      return "cyclic-cubic";
    case FiberClass::Degenerate:
      return "degenerate";
  }
  return "?";
}

SurfaceModel delta_poly(const elliptic::Weierstrass<mpq_class>& E) {
  QBiPoly u = var_u(), t = var_t();
  // x^3 + c2 x^2 + c1 x + c0 with y = t x + u substituted
  QBiPoly c2 = cst(E.a2) - t * t - cst(E.a1) * t;
  QBiPoly c1 = cst(E.a4) - cst(2) * t * u - cst(E.a1) * u - cst(E.a3) * t;
  QBiPoly c0 = cst(E.a6) - u * u - cst(E.a3) * u;
  QBiPoly D = c2 * c2 * c1 * c1 - cst(4) * c1 * c1 * c1 - cst(4) * c2 * c2 * c2 * c0 - cst(27) * c0 * c0 +
              cst(18) * c2 * c1 * c0;
  return {E, D};
}

QPoly SurfaceModel::line_cubic(const mpq_class& t0, const mpq_class& u0) const {
  const auto& E = curve;
  mpq_class c2 = E.a2 - t0 * t0 - E.a1 * t0;
  mpq_class c1 = E.a4 - 2 * t0 * u0 - E.a1 * u0 - E.a3 * t0;
  mpq_class c0 = E.a6 - u0 * u0 - E.a3 * u0;
  return QPoly{c0, c1, c2, mpq_class(1)};
}

QPoly SurfaceModel::fiber(const mpq_class& t0) const {
  return delta.map<mpq_class>([&](const QPoly& c) { return c(t0); });
}

mpq_class SurfaceModel::eval(const mpq_class& u0, const mpq_class& t0) const { return fiber(t0)(u0); }

QBiPoly printed_short_quartic(const mpq_class& A, const mpq_class& B) {
  return term(-27, 4, 0) + term(-4, 3, 3) + term(-30 * A, 2, 2) + term(54 * B, 2, 0) + term(-4 * A, 1, 5) +
         term(36, 1, 3) + term(24 * A * A, 1, 1) + term(4 * B, 0, 6) + term(A * A, 0, 4) +
         term(-18 * A * B, 0, 2) + term(-(4 * A * A * A + 27 * B * B), 0, 0);
}

QBiPoly short_quartic(const mpq_class& A, const mpq_class& B) {
  return term(-27, 4, 0) + term(-4, 3, 3) + term(-30 * A, 2, 2) + term(54 * B, 2, 0) + term(-4 * A, 1, 5) +
         term(36 * B, 1, 3) + term(24 * A * A, 1, 1) + term(4 * B, 0, 6) + term(A * A, 0, 4) +
         term(-18 * A * B, 0, 2) + term(-(4 * A * A * A + 27 * B * B), 0, 0);
}

ExtractedCubic extract_cubic(const SurfaceModel& S, const mpq_class& t0, const mpq_class& u,
                             const mpq_class& delta) {
  QPoly f = S.line_cubic(t0, u);
  mpq_class D = numcore::discriminant_closed_form(f);
  if (D != delta * delta)
    throw std::invalid_argument("extract_cubic: delta^2 = " + mpq_class(delta * delta).get_str() +
                                " but the discriminant is " + D.get_str());
  if (D == 0) return {f, FiberClass::Degenerate};
  auto roots = numcore::rational_roots(f);
  if (roots.size() == 3) return {f, FiberClass::SplitOverQ};
  if (roots.empty()) return {f, FiberClass::CyclicCubic};
  // one rational root and a square discriminant would force a repeated root
  throw std::logic_error("extract_cubic: square discriminant with exactly one rational root");
}

FiberSearch fiber_search(const SurfaceModel& S, const mpq_class& t0, long height_bound) {
  FiberSearch out;
  QPoly q = S.fiber(t0);
  out.good_fiber = t0 != 0 && q.degree() == 4 && numcore::discriminant_closed_form(q) != 0;
  for (long b = 1; b <= height_bound; ++b) {
    for (long a = -height_bound; a <= height_bound; ++a) {
      if (std::gcd(a, b) != 1) continue;
      mpq_class u(a, b);
      u.canonicalize();
      mpq_class v = q(u);
      if (v < 0 || !numcore::is_square(v)) continue;
      mpq_class d = numcore::sqrt_exact(v);
      for (const mpq_class& s : {d, mpq_class(-d)}) {
        auto ex = extract_cubic(S, t0, u, s);
        out.points.push_back({t0, u, s, ex.cubic, ex.cls});
        if (d == 0) break;
      }
    }
  }
  std::sort(out.points.begin(), out.points.end(), [](const FiberPoint& x, const FiberPoint& y) {
    return x.u != y.u ? x.u < y.u : x.delta < y.delta;
  });
  return out;
}

}  // namespace vtwist::kummer
