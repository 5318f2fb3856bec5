#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "vtwist/cubicfield/cubic_field.hpp"
#include "vtwist/elliptic/curve.hpp"
#include "vtwist/elliptic/trace.hpp"
#include "vtwist/kummer/e37b.hpp"
#include "vtwist/numcore/integer.hpp"

using namespace vtwist;
using namespace vtwist::elliptic;
using Q = mpq_class;

namespace {

EllipticCurve e37a() { return EllipticCurve({0, 0, 1, -1, 0}, 37, -1, "37a"); }
EllipticCurve e37b() { return EllipticCurve({0, 1, 1, -3, 1}, 37, 1, "37b"); }
EllipticCurve e11a() { return EllipticCurve({0, -1, 1, -10, -20}, 11, 1, "11a1"); }

}  // namespace

TEST_CASE("a_p: independent recount over 50 primes") {
  int checked = 0;
  for (auto p : numcore::primes_up_to(300)) {
    if (checked == 50) break;
    for (const auto& E : {e37a(), e37b(), e11a()}) {
      long n = oracle::recount_points(E.ainvs(), p);
      CHECK(static_cast<long>(count_points_mod_p(E.ainvs(), p)) == n);
      if (E.conductor() % p != 0) CHECK(E.ap(p) == long(p) + 1 - n);
    }
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("a_p values and reduction types") {
  auto E = e11a();
  // q prod (1-q^n)^2 (1-q^11n)^2
  CHECK(E.ap(2) == -2);
  CHECK(E.ap(3) == -1);
  CHECK(E.ap(5) == 1);
  CHECK(E.ap(7) == -2);
  CHECK(E.ap(11) == 1);
  CHECK(E.reduction_type(11) == Reduction::SplitMultiplicative);
  CHECK(e37a().ap(37) == -1);
  CHECK(e37b().ap(37) == 1);
}

TEST_CASE("Hasse bound for good primes up to 10^4") {
  for (const auto& E : {e37a(), e37b(), e11a()})
    for (auto p : numcore::primes_up_to(10000)) {
      if (E.conductor() % p == 0) continue;
      long a = E.ap(p);
      CHECK(double(a) * double(a) <= 4.0 * p);
    }
}

TEST_CASE("a_n multiplicativity") {
  auto E = e37a();
  auto an = E.an_table(20000);
  std::mt19937 rng(5);
  int pairs = 0;
  while (pairs < 200) {
    std::uint64_t m = rng() % 140 + 1, n = rng() % 140 + 1;
    if (numcore::gcd_u64(m, n) != 1) continue;
    CHECK((*an)[m * n] == (*an)[m] * (*an)[n]);
    ++pairs;
  }
  // prime powers: a_{p^2} = a_p^2 - p for good p
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) CHECK((*an)[p * p] == (*an)[p] * (*an)[p] - long(p));
}

TEST_CASE("real period halves under u = 2 scaling") {
  auto E = e37a();
  EllipticCurve E2({0, 0, 8, -16, 0}, 74, -1);  // non-minimal at 2, only the period is used
  const mpfr_prec_t prec = 200;
  auto w1 = E.real_period(prec), w2 = E2.real_period(prec);
  CHECK(std::fabs((w1 / w2).to_double() - 2.0) < 1e-40);
  CHECK(std::fabs(w1.to_double() - 5.98691729246392) < 1e-12);
}

TEST_CASE("group law over Q: associativity and torsion") {
  auto W = e37a().model();
  auto P = Point<Q>::affine(0, 0);
  std::vector<Point<Q>> pts;
  for (long k = -6; k <= 6; ++k) pts.push_back(multiply(W, k, P));
  for (auto& X : pts) CHECK(on_curve(W, X));
  std::mt19937 rng(9);
  for (int i = 0; i < 100; ++i) {
    auto& A = pts[rng() % pts.size()];
    auto& B = pts[rng() % pts.size()];
    auto& C = pts[rng() % pts.size()];
    CHECK(add(W, add(W, A, B), C) == add(W, A, add(W, B, C)));
  }
  CHECK(is_nontorsion(W, P, 1));
  // 37b has a rational 3-torsion point
  auto V = e37b().model();
  auto T = Point<Q>::affine(1, 0);
  REQUIRE(on_curve(V, T));
  CHECK(multiply(V, 3, T).infinity);
  CHECK_FALSE(is_nontorsion(V, T, 1));
}

TEST_CASE("group law and trace over cyclic cubic fields") {
  auto W = kummer::e37b_shifted_model();
  std::mt19937 rng(2);
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {-3, 2}, {5, 3}, {1, 4}}) {
    auto K = kummer::e37b_field(a, b);
    auto EK = base_change(W, K.K);
    auto P = kummer::e37b_point(K, a, b);
    REQUIRE(on_curve(EK, P));
    auto P1 = conjugate(K, P);
    std::vector<PointK> pts{P, P1, add(EK, P, P1), multiply(EK, 2, P), negate(EK, P1)};
    for (int i = 0; i < 20; ++i) {
      auto& A = pts[rng() % pts.size()];
      auto& B = pts[rng() % pts.size()];
      auto& C = pts[rng() % pts.size()];
      CHECK(add(EK, add(EK, A, B), C) == add(EK, A, add(EK, B, C)));
    }
    CHECK(trace(W, K, P).infinity);
    CHECK(trace(W, K, P1) == trace(W, K, P));
    CHECK(is_nontorsion(EK, P, 3));
    // a rational point embedded in K traces to 3P
    auto Wm = e37b().model();
    auto Km = base_change(Wm, K.K);
    auto T = Point<Q>::affine(1, 0);
    PointK TK = PointK::affine(numcore::NfElem(K.K, T.x), numcore::NfElem(K.K, T.y));
    REQUIRE(on_curve(Km, TK));
    CHECK(trace(Wm, K, TK) == multiply(Wm, 3, T));
  }
}
