#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vtwist/cubicfield/cubic_field.hpp"
#include "vtwist/elliptic/trace.hpp"
#include "vtwist/elliptic/weierstrass.hpp"
#include "vtwist/numcore/poly.hpp"

namespace vtwist::kummer {

// y^2 + 4xy + y = x^3, reached from y^2 + y = x^3 + x^2 - 3x + 1 by
// (x, y) -> (x + 1, y + 2x).
elliptic::Weierstrass<mpq_class> e37b_shifted_model();

struct E37bParam {
  mpq_class u, delta;
  numcore::QPoly F;  // F_r(Z)
};
E37bParam e37b_param(const mpq_class& r);

// Homogeneous forms at r = a/b.
struct E37bForms {
  mpz_class H1, H2, G, Q;  // 7a^2+12ab+9b^2, 9a^2-12ab+7b^2, a^2+b^2, 3a^2+ab-3b^2
};
E37bForms e37b_forms(const mpz_class& a, const mpz_class& b);

// W^3 - 4 H1 H2 W - 16 G H1 H2, the monic integral model b^6 F_{a/b}(W / b^2).
numcore::QPoly e37b_integral_cubic(const mpz_class& a, const mpz_class& b);
cubicfield::CubicField e37b_field(const mpz_class& a, const mpz_class& b);

// P = (W / H2, H1 / H2) on the shifted model over K = Q(W).
elliptic::PointK e37b_point(const cubicfield::CubicField& K, const mpz_class& a, const mpz_class& b);

// Whether H1 H2 is squarefree away from 2, 3 and 37.
bool squarefree_away_from_bad(const mpz_class& H1, const mpz_class& H2);

struct E37bRow {
  long a = 0, b = 0;
  mpz_class H1, H2;
  bool squarefree = false;
  bool cyclic = false;
  mpz_class conductor;  // 0 when the cubic is reducible
  bool new_field = false;
};

struct LadderCount {
  double X;
  std::size_t count;
};

struct E37bCensus {
  std::uint64_t X = 0;
  long height_bound = 0;
  std::vector<E37bRow> rows;               // sorted by (b, a)
  std::vector<mpz_class> conductors;       // distinct, <= X, sorted
  std::vector<LadderCount> ladder;
  std::optional<double> slope;
  std::string csv() const;
};

// Coprime (a, b) with |a|, |b| <= height_bound, b >= 0, one of each pair
// +-(a, b). Conductors are counted for the squarefree rows only.
E37bCensus census_37b(std::uint64_t X, long height_bound, const std::vector<double>& cutoffs = {},
                      int workers = 1);

// Least-squares slope of log(count) against log(X); needs two positive counts.
std::optional<double> loglog_slope(const std::vector<LadderCount>& ladder);

}  // namespace vtwist::kummer
