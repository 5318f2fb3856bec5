#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vtwist/lvalue/algebraic_part.hpp"

namespace vtwist::lvalue {

// Memoizes algebraic_part per orbit representative.
class OrbitCache {
 public:
  OrbitCache(const elliptic::EllipticCurve& E, const PeriodNormalization& norm, int digits = 50)
      : E_(E), norm_(norm), digits_(digits) {}
  // L_alg(chi) for any nontrivial chi; the trivial character gives
  // L_alg(E,1) as an integer.
  numcore::CyclotomicInt L_alg(const dirichlet::Character& chi);
  const TwistRecord& record(const dirichlet::Character& orbit_rep);

 private:
  const elliptic::EllipticCurve& E_;
  PeriodNormalization norm_;
  int digits_;
  std::map<std::string, TwistRecord> cache_;
};

struct CongruenceReport {
  dirichlet::Character chi, psi;
  long lhs = 0;             // L_alg(chi psi) mod lambda
  long L_alg_chi = 0;       // L_alg(chi) mod lambda
  mpz_class factor;         // product of Hecke factors over the blocks of f_psi
  long rhs = 0;             // factor * L_alg(chi) mod lambda
  bool holds = false;
  std::string detail;
};

// ap_override replaces a_p in the Hecke factors only (fault injection).
CongruenceReport congruence_check(const elliptic::EllipticCurve& E, int ell, const dirichlet::Character& chi,
                                  const dirichlet::Character& psi, OrbitCache& cache,
                                  const std::map<std::uint64_t, long>& ap_override = {});

// Every admissible (chi, psi) with coprime conductors, f_chi f_psi <= bound,
// both coprime to N, chi possibly trivial, psi nontrivial.
std::vector<std::pair<dirichlet::Character, dirichlet::Character>> congruence_pairs(
    const elliptic::EllipticCurve& E, int ell, std::uint64_t bound);

struct NonvanishingSet {
  bool hypothesis_holds = false;
  long L_alg_residue = 0;
  std::vector<std::uint64_t> primes;  // the set S up to the bound
  std::size_t candidates = 0;         // primes p <= bound with p = 1 mod ell
  double ratio = 0;
  std::string note;
};

NonvanishingSet nonvanishing_prime_set(const elliptic::EllipticCurve& E, int ell, std::uint64_t bound,
                                       const PeriodNormalization& norm);

}  // namespace vtwist::lvalue
