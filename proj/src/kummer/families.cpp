#include "vtwist/kummer/families.hpp"

#include <stdexcept>

namespace vtwist::kummer {

using W = elliptic::Weierstrass<mpq_class>;
using P = elliptic::Point<mpq_class>;

std::string to_string(FamilyKind k) { return k == FamilyKind::SixTorsion ? "six-torsion" : "four-two"; }

FamilyKind parse_family_kind(const std::string& s) {
  if (s == "six-torsion" || s == "six") return FamilyKind::SixTorsion;
  if (s == "four-two" || s == "4x2") return FamilyKind::FourTwo;
  throw std::invalid_argument("unknown family kind '" + s + "'");
}

namespace {

// The point is on a nodal cubic when the fiber is singular; its group of
// nonsingular points is Q^* or a twist, whose torsion is at most {+-1}.
bool certify_nontorsion(const W& E, const P& pt, bool singular) {
  if (singular) {
    if (pt.infinity) return false;
    P two = elliptic::add(E, pt, pt);
    return !two.infinity && elliptic::is_nontorsion(E, pt, 1);
  }
  return elliptic::is_nontorsion(E, pt, 1);
}

FamilyFiber six_torsion(const mpq_class& l) {
  mpq_class cond = l * (1 + 9 * l) * (2 * l + 1) * (l + 1) * (l * l * l * l + 3 * l * l * l + 4 * l * l + 1);
  if (cond == 0 && l != mpq_class(-1, 2))
    throw ExcludedParameterError("six-torsion family: lambda = " + l.get_str() + " is excluded");
  FamilyFiber F;
  F.kind = FamilyKind::SixTorsion;
  F.lambda = l;
  F.singular_fiber = cond == 0;
  F.source = W{1 - l, -l * (l + 1), -l * (l + 1), 0, 0};
  F.t0 = l;
  F.u0 = 0;
  F.delta0 = -l * l * l * l * (l + 1);
  mpq_class k = 2 * l * l - 4 - l;
  F.curve = W{8 * l + 2 * l * l + 2,
              -2 * l * (l + 1) * k,
              -4 * l * (7 * l + 1) * (l - 2) * (l + 1) * (l + 1),
              108 * l * l * l * l * (l + 1) * (l + 1),
              -216 * l * l * l * l * l * k * (l + 1) * (l + 1) * (l + 1)};
  F.point = P::affine(2 * l * (l + 1) * k, 0);
  return F;
}

FamilyFiber four_two(const mpq_class& l) {
  if (l == 0 || l == 1 || l == -1)
    throw ExcludedParameterError("four-two family: lambda = " + l.get_str() + " is excluded");
  FamilyFiber F;
  F.kind = FamilyKind::FourTwo;
  F.lambda = l;
  mpq_class l2 = l * l;
  F.source = W{0, 1 + l2, 0, l2, 0};
  F.t0 = 1;
  F.u0 = l2;
  F.delta0 = 2 * l2 * l * (l2 - 1);
  mpq_class l4 = l2 * l2, l6 = l4 * l2, l8 = l4 * l4, l10 = l8 * l2;
  F.curve = W{0, 0, 0, 27 * l2 * (7 * l4 - l6 + 5 * l2 - 27),
              27 * l2 * (2 * l10 - 21 * l8 + 204 * l6 - 826 * l4 + 1242 * l2 - 729)};
  F.point = P::affine(3 * (l4 + 16 * l2 + 3), 27 * (7 * l4 + 10 * l2 - 1));
  return F;
}

}  // namespace

FamilyFiber torsion_family(FamilyKind kind, const mpq_class& lambda) {
  FamilyFiber F = kind == FamilyKind::SixTorsion ? six_torsion(lambda) : four_two(lambda);
  F.on_curve = elliptic::on_curve(F.curve, F.point);
  F.nontorsion = F.on_curve && certify_nontorsion(F.curve, F.point, F.singular_fiber);
  return F;
}

}  // namespace vtwist::kummer
