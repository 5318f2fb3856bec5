#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "vtwist/cubicfield/cubic_field.hpp"
#include "vtwist/elliptic/trace.hpp"
#include "vtwist/errors.hpp"
#include "vtwist/kummer/conic.hpp"
#include "vtwist/kummer/e37b.hpp"
#include "vtwist/kummer/families.hpp"
#include "vtwist/kummer/genus3.hpp"
#include "vtwist/kummer/surface.hpp"
#include "vtwist/numcore/integer.hpp"

using namespace vtwist;
using namespace vtwist::kummer;
using numcore::QPoly;
using Q = mpq_class;

namespace {

Q rq(long n, long d) {
  Q q(n, d);
  q.canonicalize();
  return q;
}

elliptic::Weierstrass<Q> short_curve(const Q& A, const Q& B) { return {0, 0, 0, A, B}; }

}  // namespace

TEST_CASE("discriminant surface of a short Weierstrass curve") {
  std::mt19937 rng(20);
  std::uniform_int_distribution<int> d(-10, 10);
  int differ = 0, tried = 0;
  for (int i = 0; i < 20; ++i) {
    Q A = d(rng), B = d(rng);
    if (4 * A * A * A + 27 * B * B == 0) continue;
    ++tried;
    auto S = delta_poly(short_curve(A, B));
    CHECK(S.delta == short_quartic(A, B));
    bool same = S.delta == printed_short_quartic(A, B);
    CHECK(same == (B == 1));
    differ += same ? 0 : 1;
  }
  CHECK(tried > 15);
  // t = 0 specialization is the discriminant of x^3 + Ax + B - u^2
  auto S = delta_poly(short_curve(2, 3));
  for (long u = -3; u <= 3; ++u) {
    QPoly f{Q(3 - u * u), Q(2), Q(0), Q(1)};
    CHECK(S.eval(u, 0) == numcore::discriminant_closed_form(f));
  }
}

TEST_CASE("37b t = 0 fiber") {
  auto S = delta_poly(e37b_shifted_model());
  QPoly want = QPoly{Q(0), Q(0), Q(-27), Q(202), Q(-27)};
  CHECK(S.fiber(0) == want);
  auto c = extract_cubic(S, 0, rq(7, 9), rq(224, 27));
  CHECK(c.cls == FiberClass::CyclicCubic);
  CHECK_THROWS(extract_cubic(S, 0, rq(7, 9), 1));
}

TEST_CASE("fiber points: square discriminant, cyclic means irreducible") {
  for (auto W : {e37b_shifted_model(), short_curve(-1, 1), short_curve(0, -2), elliptic::Weierstrass<Q>{0, 1, 1, -3, 1}})
    for (Q t0 : {Q(0), Q(1), Q(-1), Q(2), rq(1, 2)}) {
      auto S = delta_poly(W);
      for (auto& p : fiber_search(S, t0, 8).points) {
        CHECK(numcore::discriminant_closed_form(p.cubic) == p.delta * p.delta);
        if (p.cls == FiberClass::CyclicCubic) CHECK(numcore::rational_roots(p.cubic).empty());
        if (p.cls == FiberClass::SplitOverQ) CHECK(numcore::rational_roots(p.cubic).size() == 3);
      }
    }
}

TEST_CASE("gamma_1 lies on J_t") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> d(-6, 6);
  int n = 0;
  while (n < 10) {
    Q A = d(rng), B = d(rng);
    if (A == 0 && B == 0) continue;
    auto J = jacobian_curve(A, B);
    auto g = gamma1(A, B);
    CHECK(g.residual(J).is_zero());
    ++n;
  }
  CHECK_THROWS_AS(jacobian_curve(0, 0), SingularCurveError);
}

TEST_CASE("genus 3 fibers") {
  CHECK(genus3_curve(1, 1, 1).smooth);
  CHECK_FALSE(genus3_curve(1, 1, 0).smooth);
  CHECK(bad_locus(1, 1) == QPoly{Q(-27), Q(0), Q(108), Q(0), Q(18), Q(0), Q(0), Q(0), Q(1)});
}

TEST_CASE("torsion families") {
  for (long l : {1, 2, 3, 5, -3}) {
    auto F = torsion_family(FamilyKind::SixTorsion, l);
    CHECK(F.on_curve);
    CHECK(F.nontorsion);
    CHECK_FALSE(F.singular_fiber);
    CHECK(delta_poly(F.source).eval(F.u0, F.t0) == F.delta0 * F.delta0);
  }
  auto H = torsion_family(FamilyKind::SixTorsion, rq(-1, 2));
  CHECK(H.singular_fiber);
  CHECK(H.point == elliptic::Point<Q>::affine(rq(3, 2), 0));
  CHECK(H.on_curve);
  CHECK(H.nontorsion);
  for (long l : {2, 3, 4}) {
    auto F = torsion_family(FamilyKind::FourTwo, l);
    CHECK(F.on_curve);
    CHECK(F.nontorsion);
    CHECK(delta_poly(F.source).eval(F.u0, F.t0) == F.delta0 * F.delta0);
  }
  CHECK(torsion_family(FamilyKind::FourTwo, 2).point == elliptic::Point<Q>::affine(249, 4077));
  CHECK_THROWS_AS(torsion_family(FamilyKind::SixTorsion, 0), ExcludedParameterError);
  CHECK_THROWS_AS(torsion_family(FamilyKind::SixTorsion, -1), ExcludedParameterError);
  CHECK_THROWS_AS(torsion_family(FamilyKind::FourTwo, 1), ExcludedParameterError);
  // the source curve really has the advertised torsion
  auto F = torsion_family(FamilyKind::SixTorsion, 2);
  auto T = elliptic::Point<Q>::affine(0, 0);
  REQUIRE(elliptic::on_curve(F.source, T));
  CHECK(elliptic::multiply(F.source, 6, T).infinity);
  CHECK_FALSE(elliptic::multiply(F.source, 3, T).infinity);
}

TEST_CASE("Eisenstein norms") {
  CHECK_FALSE(is_norm_from_eisenstein(2));
  CHECK_FALSE(is_norm_from_eisenstein(6));
  CHECK_FALSE(is_norm_from_eisenstein(-3));
  CHECK(is_norm_from_eisenstein(3));
  CHECK(is_norm_from_eisenstein(4));
  CHECK(is_norm_from_eisenstein(7));
  CHECK(is_norm_from_eisenstein(rq(7, 4)));
  CHECK_FALSE(oracle::conic_has_small_point(2));
  for (long n = 1; n < 2000; ++n) {
    auto r = represent_x2_3y2(n);
    CHECK(r.has_value() == is_norm_from_eisenstein(n));
    if (r) CHECK(r->first * r->first + 3 * r->second * r->second == n);
  }
}

TEST_CASE("conic criterion against brute-force search") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  int n = 0, disagreements = 0;
  while (n < 200) {
    Q U = rq(num(rng), den(rng)), T = rq(num(rng), den(rng));
    if (T == 0 || U * U * U == T) {
      CHECK_THROWS_AS(conic_norm_test(U, T), SingularCurveError);
      continue;
    }
    ++n;
    auto c = conic_norm_test(U, T);
    CHECK(c.q == 12 * U * U * U * (U * U * U - T));
    bool found = oracle::conic_has_small_point(c.q);
    if (found && !c.solvable) ++disagreements;
    if (!c.solvable) continue;
    REQUIRE(c.base.has_value());
    auto& b = *c.base;
    if (b.z * b.z + 3 * b.w * b.w != c.q) ++disagreements;
    // the conic point is a point of the t = 0 fiber of y^2 + 3Uxy + Ty = x^3
    auto S = delta_poly(elliptic::Weierstrass<Q>{3 * U, 0, T, 0, 0});
    for (auto m : {std::optional<Q>(), std::optional<Q>(Q(1)), std::optional<Q>(rq(-2, 3))}) {
      auto p = c.point_at(m);
      CHECK(p.z * p.z + 3 * p.w * p.w == c.q);
      CHECK(S.eval(p.u, 0) == p.delta * p.delta);
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("37b conic at U = 4/3, T = 1") {
  auto c = conic_norm_test(rq(4, 3), 1);
  CHECK(c.q == rq(9472, 243));
  REQUIRE(c.solvable);
  auto v = c.point_at(std::nullopt);
  CHECK(v.u == rq(7, 9));
  CHECK(abs(v.delta) == rq(224, 27));
}

TEST_CASE("37b parametrization: discriminant, resultants, traces") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> d(-40, 40);
  auto W = e37b_shifted_model();
  int n = 0;
  while (n < 50) {
    long a = d(rng), b = d(rng);
    if (b <= 0 || std::gcd(a, b) != 1) continue;
    Q r = rq(a, b);
    auto p = e37b_param(r);
    Q H1 = 7 * r * r + 12 * r + 9, H2 = 9 * r * r - 12 * r + 7, Qr = 3 * r * r + r - 3;
    CHECK(numcore::discriminant_closed_form(p.F) == 1024 * H1 * H1 * H2 * H2 * Qr * Qr);
    // (u, delta) lies on the t = 0 fiber
    CHECK(delta_poly(W).eval(p.u, 0) == p.delta * p.delta);
    auto K = e37b_field(a, b);
    auto P = e37b_point(K, a, b);
    CHECK(elliptic::on_curve(elliptic::base_change(W, K.K), P));
    CHECK(elliptic::trace(W, K, P).infinity);
    ++n;
  }
  // resultants of the forms in r are supported on 2, 3, 37
  QPoly h1{Q(9), Q(12), Q(7)}, h2{Q(7), Q(-12), Q(9)}, g{Q(1), Q(0), Q(1)};
  for (auto [f1, f2] : std::vector<std::pair<QPoly, QPoly>>{{h1, h2}, {h1, g}, {h2, g}}) {
    Q res = numcore::resultant(f1, f2);
    REQUIRE(res.get_den() == 1);
    REQUIRE(res != 0);
    for (auto& pp : numcore::factor(mpz_class(res.get_num())))
      CHECK((pp.prime == 2 || pp.prime == 3 || pp.prime == 37));
  }
}

TEST_CASE("37b census at height 30") {
  auto c = census_37b(2000, 30, {100, 1000, 2000});
  CHECK(c.rows.size() > 1000);
  for (auto& r : c.rows) {
    CHECK(r.cyclic);
    if (r.conductor <= 2000) CHECK(r.conductor % 37 != 0);
  }
  std::vector<long> want{7, 13, 63, 279, 871, 981, 1159, 1629};
  REQUIRE(c.conductors.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(c.conductors[i] == want[i]);
  for (std::size_t i = 1; i < c.ladder.size(); ++i) CHECK(c.ladder[i].count >= c.ladder[i - 1].count);
  // same result with several workers
  auto c2 = census_37b(2000, 30, {100, 1000, 2000}, 3);
  CHECK(c2.csv() == c.csv());
}
