#include "vtwist/kummer/genus3.hpp"

#include <map>
#include <utility>

#include "vtwist/errors.hpp"

namespace vtwist::kummer {

using numcore::NfElem;
using numcore::NfPoly;

namespace {

QPoly tq(std::initializer_list<std::pair<int, mpq_class>> terms) {
  QPoly p;
  for (auto& [k, c] : terms) p += QPoly::monomial(c, k);
  return p;
}

// Sparse bivariate form: (i, j) -> coefficient of x^i y^j.
using Terms = std::map<std::pair<int, int>, mpq_class>;

Terms to_terms(const QBiPoly& G) {
  Terms out;
  for (int j = 0; j <= G.degree(); ++j) {
    const QPoly& c = G.coeffs()[j];
    for (int i = 0; i <= c.degree(); ++i)
      if (c.coeffs()[i] != 0) out[{i, j}] += c.coeffs()[i];
  }
  return out;
}

QBiPoly from_terms(const Terms& T) {
  QBiPoly out;
  for (auto& [ij, c] : T) out += QBiPoly::monomial(QPoly::monomial(c, ij.first), ij.second);
  return out;
}

int total_degree(const Terms& T) {
  int d = -1;
  for (auto& [ij, c] : T)
    if (c != 0) d = std::max(d, ij.first + ij.second);
  return d;
}

// Homogeneous part of degree k, dehomogenized as a polynomial in x at y = 1.
QPoly part_at_y1(const Terms& T, int k) {
  QPoly out;
  for (auto& [ij, c] : T)
    if (ij.first + ij.second == k) out += QPoly::monomial(c, ij.first);
  return out;
}

mpq_class part_at_x1y0(const Terms& T, int k) {
  auto it = T.find({k, 0});
  return it == T.end() ? mpq_class(0) : it->second;
}

Terms partial_x(const Terms& T) {
  Terms out;
  for (auto& [ij, c] : T)
    if (ij.first > 0) out[{ij.first - 1, ij.second}] += c * ij.first;
  return out;
}

Terms partial_y(const Terms& T) {
  Terms out;
  for (auto& [ij, c] : T)
    if (ij.second > 0) out[{ij.first, ij.second - 1}] += c * ij.second;
  return out;
}

// G(x + c y, y)
QBiPoly shear(const QBiPoly& G, const mpq_class& c) {
  QBiPoly xs = QBiPoly::constant(QPoly::x(mpq_class(1))) + QBiPoly::monomial(QPoly::constant(c), 1);
  QBiPoly out;
  for (int j = G.degree(); j >= 0; --j) {
    // coefficient polynomial in x, composed with x + c y
    const QPoly& cj = G.coeffs()[j];
    QBiPoly inner;
    for (int i = cj.degree(); i >= 0; --i) inner = inner * xs + QBiPoly::constant(QPoly::constant(cj.coeffs()[i]));
    out = out * QBiPoly::x(QPoly(1)) + inner;
  }
  return out;
}

bool has_common_root(std::vector<QPoly> ps) {
  QPoly g = ps[0];
  for (std::size_t i = 1; i < ps.size(); ++i) g = numcore::gcd(g, ps[i]);
  return g.degree() >= 1 || g.is_zero();
}

}  // namespace

QPoly JacobianCurve::discriminant() const {
  return QPoly::constant(-16) * (QPoly::constant(4) * a4 * a4 * a4 + QPoly::constant(27) * a6 * a6);
}

elliptic::Weierstrass<mpq_class> JacobianCurve::at(const mpq_class& t0) const {
  return {0, 0, 0, a4(t0), a6(t0)};
}

JacobianCurve jacobian_curve(const mpq_class& A, const mpq_class& B) {
  JacobianCurve J;
  J.a4 = tq({{8, A}, {6, 18 * B}, {4, -18 * A * A}, {2, -54 * A * B}, {0, -27 * (A * A * A + 9 * B * B)}});
  J.a6 = tq({{12, B},
             {10, -4 * A * A},
             {8, -45 * A * B},
             {6, -270 * B * B},
             {4, 135 * A * A * B},
             {2, -54 * A * (2 * A * A * A + 9 * B * B)},
             {0, -243 * B * (A * A * A + 6 * B * B)}});
  if (J.discriminant().is_zero())
    throw SingularCurveError("jacobian_curve: J_t is singular for every t (A = " + A.get_str() +
                             ", B = " + B.get_str() + ")");
  return J;
}

numcore::FieldPtr sqrt_minus_three_field() {
  static const numcore::FieldPtr K =
      std::make_shared<numcore::NumberField>(QPoly{mpq_class(3), mpq_class(0), mpq_class(1)}, "s");
  return K;
}

Gamma1 gamma1(const mpq_class& A, const mpq_class& B) {
  Gamma1 g;
  g.K = sqrt_minus_three_field();
  auto lift = [&](const QPoly& p) { return p.map<NfElem>([&](const mpq_class& c) { return NfElem(g.K, c); }); };
  g.X = lift(tq({{6, mpq_class(-1, 27)}, {2, 5 * A}, {0, -9 * B}}));
  NfElem s = NfElem::generator(g.K);
  QPoly y = tq({{9, 1}, {5, 162 * A}, {3, -2916 * B}, {1, -2187 * A * A}});
  g.Y = lift(y) * (s * NfElem(mpq_class(1, 243)));
  return g;
}

NfPoly Gamma1::residual(const JacobianCurve& J) const {
  auto lift = [&](const QPoly& p) { return p.map<NfElem>([&](const mpq_class& c) { return NfElem(K, c); }); };
  return Y * Y - X * X * X - lift(J.a4) * X - lift(J.a6);
}

elliptic::Point<NfElem> Gamma1::at(const mpq_class& t0) const {
  NfElem t(K, t0);
  return elliptic::Point<NfElem>::affine(X.eval<NfElem>(t, NfElem(K, 0)), Y.eval<NfElem>(t, NfElem(K, 0)));
}

QPoly bad_locus(const mpq_class& A, const mpq_class& B) {
  return tq({{8, 1}, {4, 18 * A}, {2, 108 * B}, {0, -27 * A * A}});
}

PlaneQuartic genus3_curve(const mpq_class& A, const mpq_class& B, const mpq_class& t0) {
  // x = xi1 (inner), y = xi2 (outer)
  QBiPoly x = QBiPoly::constant(QPoly::x(mpq_class(1)));
  QBiPoly y = QBiPoly::x(QPoly(1));
  auto c = [](const mpq_class& q) { return QBiPoly::constant(QPoly::constant(q)); };
  QBiPoly xi3 = c(t0 * t0) - x - y;
  QBiPoly e2 = x * y + xi3 * (x + y);
  QBiPoly d = c(A) - e2;
  PlaneQuartic out;
  out.G = d * d - c(4 * B * t0 * t0) - c(4 * t0 * t0) * x * y * xi3;
  out.smooth = plane_curve_smooth(out.G);
  return out;
}

bool plane_curve_smooth(const QBiPoly& G) {
  Terms T = to_terms(G);
  int n = total_degree(T);
  if (n < 1) return false;
  Terms Tx = partial_x(T), Ty = partial_y(T);

  // Points at infinity (x : 1 : 0) and (1 : 0 : 0); the z-partial there is
  // the degree n-1 part.
  std::vector<QPoly> at_inf{part_at_y1(T, n), part_at_y1(Tx, n - 1), part_at_y1(Ty, n - 1), part_at_y1(T, n - 1)};
  if (has_common_root(at_inf)) return false;
  if (part_at_x1y0(T, n) == 0 && part_at_x1y0(Tx, n - 1) == 0 && part_at_x1y0(Ty, n - 1) == 0 &&
      part_at_x1y0(T, n - 1) == 0)
    return false;

  // Affine points: a singular point survives every shear as a common root of
  // the resultants, so a single shear with coprime resultants proves
  // smoothness.
  int tried = 0;
  for (int k = 1; k <= 12 && tried < 3; ++k) {
    mpq_class cs(2 * k + 1, k + 2);
    QBiPoly S = shear(G, cs);
    Terms ST = to_terms(S);
    QBiPoly Sx = from_terms(partial_x(ST)), Sy = from_terms(partial_y(ST));
    if (S.degree() != n || Sy.degree() != n - 1 || Sx.degree() != n - 1) continue;
    if (S.leading().degree() != 0 || Sx.leading().degree() != 0) continue;
    ++tried;
    QPoly R1 = numcore::resultant(S, Sx), R2 = numcore::resultant(S, Sy);
    if (R1.is_zero() || R2.is_zero()) return false;
    if (!has_common_root({R1, R2})) return true;
  }
  return false;
}

}  // namespace vtwist::kummer
