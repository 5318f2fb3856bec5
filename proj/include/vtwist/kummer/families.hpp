#pragma once

#include <string>

#include <gmpxx.h>

#include "vtwist/elliptic/weierstrass.hpp"
#include "vtwist/kummer/surface.hpp"

namespace vtwist::kummer {

enum class FamilyKind { SixTorsion, FourTwo };
std::string to_string(FamilyKind k);
FamilyKind parse_family_kind(const std::string& s);

struct ExcludedParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FamilyFiber {
  FamilyKind kind;
  mpq_class lambda;
  // the curve with rational torsion and the special fiber of its surface
  elliptic::Weierstrass<mpq_class> source;
  mpq_class t0, u0, delta0;
  // Weierstrass model of that fiber and its marked point
  elliptic::Weierstrass<mpq_class> curve;
  elliptic::Point<mpq_class> point;
  bool singular_fiber = false;  // lambda = -1/2 for the six-torsion family
  bool on_curve = false;
  bool nontorsion = false;
};

// Six-torsion: lambda(1+9lambda)(2lambda+1)(lambda+1)(lambda^4+3lambda^3+4lambda^2+1) != 0,
// except lambda = -1/2 which is returned with singular_fiber set.
// Four-two: lambda not in {0, 1, -1}. Throws ExcludedParameterError otherwise.
FamilyFiber torsion_family(FamilyKind kind, const mpq_class& lambda);

}  // namespace vtwist::kummer
