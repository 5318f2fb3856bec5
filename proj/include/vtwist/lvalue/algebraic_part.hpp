#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "vtwist/dirichlet/character.hpp"
#include "vtwist/elliptic/curve.hpp"
#include "vtwist/lvalue/central_value.hpp"
#include "vtwist/numcore/cyclotomic.hpp"

namespace vtwist::lvalue {

// The period used to make twisted algebraic parts integral:
// omega_plus = scale * omega_e, with omega_e the full real period.
struct PeriodNormalization {
  double omega_e = 0;
  mpq_class scale;
  // 2 L(E,1) / omega_plus, exact.
  mpz_class L_alg_trivial;
  int calibration_orbits = 0;
  double worst_residual = 0;
  std::string str() const;
};

// Searches omega_plus = (m/n) * omega_e over small m, n for the largest value
// that makes 2 L(E,1)/omega_plus and the coset sums of the first
// `calibration` orbits integral.
PeriodNormalization calibrate_normalization(const elliptic::EllipticCurve& E, int ell, int calibration = 10,
                                            int digits = 50);

// delta(p) = 1 when p does not divide N.
int delta(const elliptic::EllipticCurve& E, std::uint64_t p);

// Hecke factor of a single admissible prime-power block q (a prime p, or
// ell^2) in the recursion for S_f(f).
mpz_class hecke_factor(const elliptic::EllipticCurve& E, std::uint64_t q, int ell);

// Exact S_f(f) = L_alg(E,1) * prod of Hecke factors over the blocks of f.
mpz_class trivial_coset_sum(const elliptic::EllipticCurve& E, std::uint64_t f, int ell,
                            const PeriodNormalization& norm);

struct CosetSums {
  int ell = 3;
  std::uint64_t f = 1;
  std::vector<mpz_class> S;  // indexed by t in Z/ell
  mpz_class total;           // exact S_f(f)
  double residual = 0;       // worst distance of a recovered S_t to its integer
  double omega_e = 0;
  mpq_class scale;
  std::string str() const;
};

enum class Decision { Vanishes, Nonzero, Undecided };
std::string to_string(Decision d);

struct TwistRecord {
  std::string curve_label;
  dirichlet::Character chi;
  ValueWithError L;                          // at chi itself
  std::vector<ValueWithError> conjugates;    // chi^j, j = 1..ell-1
  bool recognized = false;
  numcore::CyclotomicInt L_alg;              // of chi, when recognized
  std::vector<numcore::CyclotomicInt> L_alg_conjugates;
  CosetSums sums;
  Decision decision = Decision::Undecided;
  int digits = 0;
  std::string note;
};

// Numeric algebraic parts of chi^j, DFT inversion with the exact j = 0 term,
// integer recognition and reconstruction check. Throws RecognitionError with
// the residuals when the recovered S_t are not integral, TheoryAlarm when
// the exact identities fail.
TwistRecord algebraic_part(const elliptic::EllipticCurve& E, const dirichlet::Character& chi,
                           const PeriodNormalization& norm, int digits);

Decision vanishing_decision(const TwistRecord& record);

// algebraic_part along the precision ladder 50, 80, 120 digits (starting at
// `digits` when larger); records undecided instead of throwing.
TwistRecord analyze_orbit(const elliptic::EllipticCurve& E, const dirichlet::Character& chi,
                          const PeriodNormalization& norm, int digits = 50);

}  // namespace vtwist::lvalue
