#include "vtwist/kummer/conic.hpp"

#include "vtwist/errors.hpp"
#include "vtwist/numcore/integer.hpp"

namespace vtwist::kummer {

namespace {

using Rep = std::pair<mpz_class, mpz_class>;

Rep compose(const Rep& a, const Rep& b) {
  return {a.first * b.first - 3 * a.second * b.second, a.first * b.second + a.second * b.first};
}

// p = x^2 + 3y^2 for a prime p = 1 mod 3 (Cornacchia).
Rep cornacchia(const mpz_class& p) {
  if (!mpz_fits_ulong_p(p.get_mpz_t())) throw std::domain_error("cornacchia: prime too large");
  std::uint64_t pp = numcore::to_u64(p);
  mpz_class r = static_cast<unsigned long>(numcore::sqrt_mod(pp - 3, pp));
  if (2 * r < p) r = p - r;
  mpz_class a = p, b = r, lim = numcore::isqrt(p);
  while (b > lim) {
    mpz_class t = a % b;
    a = b;
    b = t;
  }
  mpz_class rest = p - b * b;
  if (rest % 3 != 0 || !numcore::is_square(mpz_class(rest / 3))) throw TheoryAlarm("cornacchia failed for " + p.get_str());
  return {b, numcore::isqrt(mpz_class(rest / 3))};
}

}  // namespace

bool is_norm_from_eisenstein(const mpq_class& q) {
  if (q <= 0) return false;
  for (const mpz_class& part : {q.get_num(), q.get_den()}) {
    if (part == 1) continue;
    for (auto& pp : numcore::factor(part))
      if (pp.prime % 3 == 2 && pp.exponent % 2 == 1) return false;
  }
  return true;
}

std::optional<Rep> represent_x2_3y2(const mpz_class& n) {
  if (n <= 0) return std::nullopt;
  if (!is_norm_from_eisenstein(mpq_class(n))) return std::nullopt;
  // Every norm is a^2 + ab + b^2; x^2 + 3y^2 additionally needs v_2 even,
  // which is automatic here since 2 = 2 mod 3.
  Rep acc{1, 0};
  for (auto& pp : numcore::factor(n)) {
    Rep base;
    int e = pp.exponent;
    if (pp.prime == 3) {
      base = {0, 1};
    } else if (pp.prime % 3 == 2) {
      mpz_class pk;
      mpz_pow_ui(pk.get_mpz_t(), pp.prime.get_mpz_t(), e / 2);
      acc = compose(acc, {pk, 0});
      continue;
    } else {
      base = cornacchia(pp.prime);
    }
    for (int i = 0; i < e; ++i) acc = compose(acc, base);
  }
  acc.first = abs(acc.first);
  acc.second = abs(acc.second);
  if (acc.first * acc.first + 3 * acc.second * acc.second != n)
    throw TheoryAlarm("represent_x2_3y2: composition failed for " + n.get_str());
  return acc;
}

ConicPoint ConicResult::from_zw(const mpq_class& z, const mpq_class& w) const {
  ConicPoint p{z, w, 0, 0};
  p.u = w + 2 * U * U * U - T;
  p.delta = 3 * p.u * z;
  return p;
}

ConicPoint ConicResult::point_at(const std::optional<mpq_class>& slope) const {
  if (!base) throw std::logic_error("point_at: conic has no rational point");
  const mpq_class &z0 = base->z, &w0 = base->w;
  if (!slope) return from_zw(z0, -w0);
  const mpq_class& m = *slope;
  mpq_class s = -(2 * z0 + 6 * m * w0) / (1 + 3 * m * m);
  return from_zw(z0 + s, w0 + m * s);
}

std::optional<mpq_class> ConicResult::slope_to(const mpq_class& z, const mpq_class& w) const {
  if (!base) throw std::logic_error("slope_to: conic has no rational point");
  if (z == base->z) return std::nullopt;
  return mpq_class((w - base->w) / (z - base->z));
}

ConicResult conic_norm_test(const mpq_class& U, const mpq_class& T) {
  mpq_class U3 = U * U * U;
  if (T == 0 || U3 == T)
    throw SingularCurveError("conic_norm_test: y^2 + 3Uxy + Ty = x^3 is singular for U = " + U.get_str() +
                             ", T = " + T.get_str());
  ConicResult r;
  r.U = U;
  r.T = T;
  r.q = 12 * U3 * (U3 - T);
  if (r.q == 0) {
    r.reason = "q = 0: only the point z = w = 0";
    return r;
  }
  if (r.q < 0) {
    r.reason = "q < 0";
    return r;
  }
  if (!is_norm_from_eisenstein(r.q)) {
    r.reason = "a prime = 2 mod 3 divides q to an odd power";
    return r;
  }
  // z = X / (d s), w = Y / (d s) with X^2 + 3Y^2 = n d s^2, q = n / d
  mpz_class n = r.q.get_num(), d = r.q.get_den();
  auto rep = represent_x2_3y2(n * d);
  if (!rep) throw TheoryAlarm("conic_norm_test: norm criterion holds but no representation of " +
                              mpz_class(n * d).get_str());
  r.solvable = true;
  r.reason = "norm";
  r.base = r.from_zw(mpq_class(rep->first, d), mpq_class(rep->second, d));
  r.base->z.canonicalize();
  r.base->w.canonicalize();
  *r.base = r.from_zw(r.base->z, r.base->w);
  if (r.base->z * r.base->z + 3 * r.base->w * r.base->w != r.q) throw TheoryAlarm("conic_norm_test: bad base point");
  return r;
}

}  // namespace vtwist::kummer
