#pragma once

#include "vtwist/cubicfield/cubic_field.hpp"
#include "vtwist/elliptic/weierstrass.hpp"
#include "vtwist/numcore/number_field.hpp"

namespace vtwist::elliptic {

using PointK = Point<numcore::NfElem>;
using CurveK = Weierstrass<numcore::NfElem>;

CurveK base_change(const Weierstrass<mpq_class>& E, const numcore::FieldPtr& K);
PointK conjugate(const cubicfield::CubicField& K, const PointK& P);

// P + P^sigma + P^(sigma^2) for E over Q and P over the cyclic cubic K.
// Throws TheoryAlarm if the result is not rational.
Point<mpq_class> trace(const Weierstrass<mpq_class>& E, const cubicfield::CubicField& K, const PointK& P);

}  // namespace vtwist::elliptic
