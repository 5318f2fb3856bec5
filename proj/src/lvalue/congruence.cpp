#include "vtwist/lvalue/congruence.hpp"

#include <sstream>

#include "vtwist/errors.hpp"
#include "vtwist/numcore/integer.hpp"

namespace vtwist::lvalue {

using dirichlet::Character;
using numcore::CyclotomicInt;

const TwistRecord& OrbitCache::record(const Character& rep) {
  auto key = rep.id();
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  TwistRecord rec = algebraic_part(E_, rep, norm_, digits_);
  return cache_.emplace(key, std::move(rec)).first->second;
}

CyclotomicInt OrbitCache::L_alg(const Character& chi) {
  if (chi.is_trivial()) return CyclotomicInt::from_integer(chi.ell(), norm_.L_alg_trivial);
  Character rep = chi.orbit_representative();
  const TwistRecord& rec = record(rep);
  for (int j = 1; j < chi.ell(); ++j) {
    if (rep.power(j) == chi) return rec.L_alg_conjugates[j - 1];
  }
  throw std::logic_error("OrbitCache: character not in the orbit of its representative");
}

CongruenceReport congruence_check(const elliptic::EllipticCurve& E, int ell, const Character& chi,
                                  const Character& psi, OrbitCache& cache,
                                  const std::map<std::uint64_t, long>& ap_override) {
  if (psi.is_trivial()) throw std::invalid_argument("congruence_check: psi must be nontrivial");
  if (numcore::gcd_u64(chi.conductor(), psi.conductor()) != 1)
    throw std::invalid_argument("congruence_check: conductors must be coprime");
  CongruenceReport r;
  r.chi = chi;
  r.psi = psi;
  Character prod = chi.is_trivial() ? psi : chi * psi;
  CyclotomicInt lhs = cache.L_alg(prod);
  CyclotomicInt base = cache.L_alg(chi);
  r.lhs = lhs.residue_mod_lambda();
  r.L_alg_chi = base.residue_mod_lambda();
  r.factor = 1;
  std::ostringstream os;
  os << "L_alg(" << prod.id() << ") = " << lhs.str() << "; L_alg(" << chi.id() << ") = " << base.str()
     << "; factors:";
  for (auto& pp : numcore::factor(psi.conductor())) {
    std::uint64_t q = pp.exponent == 2 ? pp.prime * pp.prime : pp.prime;
    mpz_class h = hecke_factor(E, q, ell);
    long a = E.ap(pp.prime);
    if (auto it = ap_override.find(pp.prime); it != ap_override.end()) {
      a = it->second;
      int d = delta(E, pp.prime);
      h = q == pp.prime ? mpz_class(a - d - 1) : mpz_class((a - 1) * (a - d) - d * ell);
    }
    os << " [" << q << ": a=" << a << ", factor " << h << "]";
    r.factor *= h;
  }
  mpz_class rhs = r.factor * r.L_alg_chi;
  mpz_class m;
  mpz_fdiv_r_ui(m.get_mpz_t(), rhs.get_mpz_t(), ell);
  r.rhs = m.get_si();
  r.holds = r.lhs == r.rhs;
  os << "; lhs " << r.lhs << " rhs " << r.rhs;
  r.detail = os.str();
  return r;
}

std::vector<std::pair<Character, Character>> congruence_pairs(const elliptic::EllipticCurve& E, int ell,
                                                             std::uint64_t bound) {
  auto all = dirichlet::enumerate(ell, bound, false);
  std::vector<Character> usable;
  for (auto& c : all)
    if (numcore::gcd_u64(c.conductor(), E.conductor()) == 1) usable.push_back(c);
  std::vector<std::pair<Character, Character>> out;
  for (auto& psi : usable) out.emplace_back(Character::trivial(ell), psi);
  for (auto& chi : usable) {
    for (auto& psi : usable) {
      if (chi.conductor() * psi.conductor() > bound) continue;
      if (numcore::gcd_u64(chi.conductor(), psi.conductor()) != 1) continue;
      out.emplace_back(chi, psi);
    }
  }
  return out;
}

NonvanishingSet nonvanishing_prime_set(const elliptic::EllipticCurve& E, int ell, std::uint64_t bound,
                                       const PeriodNormalization& norm) {
  NonvanishingSet out;
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), norm.L_alg_trivial.get_mpz_t(), ell);
  out.L_alg_residue = r.get_si();
  out.hypothesis_holds = out.L_alg_residue != 0;
  for (auto p : numcore::primes_up_to(static_cast<std::uint32_t>(bound))) {
    if (p % ell != 1) continue;
    ++out.candidates;
    if (E.conductor() % p == 0) continue;
    long a = E.ap(p);
    if (((a - 2) % ell + ell) % ell != 0) out.primes.push_back(p);
  }
  out.ratio = out.candidates ? static_cast<double>(out.primes.size()) / out.candidates : 0.0;
  if (!out.hypothesis_holds) {
    out.note = "hypothesis fails: L_alg(E,1) = " + norm.L_alg_trivial.get_str() + " is divisible by " +
               std::to_string(ell);
  }
  return out;
}

}  // namespace vtwist::lvalue
