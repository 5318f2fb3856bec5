#include "vtwist/elliptic/trace.hpp"

#include "vtwist/errors.hpp"

namespace vtwist::elliptic {

using numcore::NfElem;

CurveK base_change(const Weierstrass<mpq_class>& E, const numcore::FieldPtr& K) {
  return {NfElem(K, E.a1), NfElem(K, E.a2), NfElem(K, E.a3), NfElem(K, E.a4), NfElem(K, E.a6)};
}

PointK conjugate(const cubicfield::CubicField& K, const PointK& P) {
  if (P.infinity) return P;
  return PointK::affine(cubicfield::galois_action(K, P.x), cubicfield::galois_action(K, P.y));
}

Point<mpq_class> trace(const Weierstrass<mpq_class>& E, const cubicfield::CubicField& K, const PointK& P) {
  CurveK EK = base_change(E, K.K);
  if (!on_curve(EK, P)) throw std::invalid_argument("trace: point is not on the curve");
  PointK P1 = conjugate(K, P);
  PointK P2 = conjugate(K, P1);
  PointK T = add(EK, add(EK, P, P1), P2);
  if (T.infinity) return Point<mpq_class>::zero();
  if (!T.x.is_rational() || !T.y.is_rational()) throw TheoryAlarm("trace: result is not rational");
  return Point<mpq_class>::affine(T.x.coeff(0), T.y.coeff(0));
}

}  // namespace vtwist::elliptic
