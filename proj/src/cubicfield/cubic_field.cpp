#include "vtwist/cubicfield/cubic_field.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vtwist/errors.hpp"
#include "vtwist/numcore/integer.hpp"

namespace vtwist::cubicfield {

using numcore::NfElem;
using numcore::QPoly;

std::string to_string(Splitting s) {
  switch (s) {
    case Splitting::Split:
      return "split";
    case Splitting::Inert:
      return "inert";
    case Splitting::Ramified:
      return "ramified";
  }
  return "?";
}

QPoly CubicField::defining_poly() const { return QPoly{mpq_class(a0), mpq_class(a1), mpq_class(a2), mpq_class(1)}; }

std::string CubicField::serialize() const {
  std::ostringstream os;
  os << a2 << "," << a1 << "," << a0 << ";" << conductor;
  return os.str();
}

namespace {

std::set<mpz_class> primes_with_square(mpz_class D, const std::vector<mpz_class>& hint) {
  D = abs(D);
  std::set<mpz_class> candidates;
  for (const auto& h : hint) {
    mpz_class q = abs(h);
    if (q < 2) continue;
    for (auto& pp : numcore::factor(q)) {
      int v = 0;
      while (mpz_divisible_p(D.get_mpz_t(), pp.prime.get_mpz_t())) {
        D /= pp.prime;
        ++v;
      }
      if (v >= 2) candidates.insert(pp.prime);
    }
  }
  // remaining cofactor still carries the full multiplicity of its primes
  if (D > 1)
    for (auto& pp : numcore::factor(D))
      if (pp.exponent >= 2) candidates.insert(pp.prime);
  return candidates;
}

}  // namespace

CubicField from_cubic(const QPoly& p, const std::vector<mpz_class>& hint) {
  if (p.degree() != 3 || p.leading() != 1) throw std::invalid_argument("from_cubic: need a monic cubic, got " + p.str());
  for (int i = 0; i < 3; ++i)
    if (p.coeff(i).get_den() != 1) throw std::invalid_argument("from_cubic: coefficients must be integral");
  CubicField K;
  K.a2 = p.coeff(2).get_num();
  K.a1 = p.coeff(1).get_num();
  K.a0 = p.coeff(0).get_num();
  if (!numcore::integer_roots_monic_cubic(K.a2, K.a1, K.a0).empty())
    throw ReducibleCubicError("from_cubic: " + p.str() + " has a rational root");
  K.maximal_form = {1, K.a2, K.a1, K.a0};
  K.poly_discriminant = K.maximal_form.discriminant();
  if (sgn(K.poly_discriminant) <= 0 || !numcore::is_square(K.poly_discriminant))
    throw NonCyclicFieldError("from_cubic: discriminant " + K.poly_discriminant.get_str() + " of " + p.str() +
                              " is not a nonzero square");
  K.sqrt_poly_discriminant = numcore::isqrt(K.poly_discriminant);
  K.index = 1;
  for (const auto& q : primes_with_square(K.poly_discriminant, hint)) {
    int steps = maximize_at(K.maximal_form, q);
    for (int i = 0; i < steps; ++i) K.index *= q;
  }
  K.field_discriminant = K.poly_discriminant / (K.index * K.index);
  if (K.field_discriminant != K.maximal_form.discriminant())
    throw TheoryAlarm("from_cubic: index bookkeeping inconsistent for " + p.str());
  if (!numcore::is_square(K.field_discriminant))
    throw TheoryAlarm("from_cubic: field discriminant " + K.field_discriminant.get_str() + " is not a square");
  K.conductor = numcore::isqrt(K.field_discriminant);
  K.K = std::make_shared<numcore::NumberField>(K.defining_poly(), "xi");
  return K;
}

QPoly integral_monic_model(const QPoly& p) {
  if (p.degree() != 3 || p.leading() != 1) throw std::invalid_argument("integral_monic_model: need a monic cubic");
  mpz_class d = 1;
  for (int i = 0; i < 3; ++i) {
    mpz_class den = p.coeff(i).get_den();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), den.get_mpz_t());
  }
  // x^3 + c2 x^2 + c1 x + c0 -> y^3 + c2 d y^2 + c1 d^2 y + c0 d^3
  return QPoly{p.coeff(0) * d * d * d, p.coeff(1) * d * d, p.coeff(2) * d, mpq_class(1)};
}

mpz_class field_discriminant(const QPoly& p) { return from_cubic(p).field_discriminant; }

mpz_class conductor(const CubicField& K) {
  if (!numcore::is_square(K.field_discriminant)) throw TheoryAlarm("conductor: discriminant is not a square");
  return numcore::isqrt(K.field_discriminant);
}

Splitting splitting(const CubicField& K, const mpz_class& p) {
  if (mpz_divisible_p(K.conductor.get_mpz_t(), p.get_mpz_t())) return Splitting::Ramified;
  int r = count_roots_mod_p(K.maximal_form, p);
  if (r == 3) return Splitting::Split;
  if (r == 0) return Splitting::Inert;
  throw TheoryAlarm("splitting: " + std::to_string(r) + " roots mod " + p.get_str() + " for an unramified prime");
}

dirichlet::Character matching_character(CubicField& K) {
  const std::uint64_t f = numcore::to_u64(K.conductor);
  std::vector<dirichlet::Character> reps;
  for (auto& c : dirichlet::characters_of_order(f, 3))
    if (c.is_orbit_representative()) reps.push_back(c);
  if (reps.empty()) throw NoMatchingCharacterError("matching_character: no cubic character of conductor " +
                                                   std::to_string(f));
  for (std::uint32_t bound : {200u, 500u}) {
    std::vector<dirichlet::Character> left;
    for (auto& chi : reps) {
      bool ok = true;
      for (auto p : numcore::primes_up_to(bound)) {
        if (f % p == 0) continue;
        bool split = splitting(K, mpz_class(p)) == Splitting::Split;
        if ((chi.exponent(p) == 0) != split) {
          ok = false;
          break;
        }
      }
      if (ok) left.push_back(chi);
    }
    if (left.empty())
      throw NoMatchingCharacterError("matching_character: no character of conductor " + std::to_string(f) +
                                     " matches the splitting of " + K.defining_poly().str());
    if (left.size() == 1) {
      K.matched = left[0];
      return left[0];
    }
  }
  throw NoMatchingCharacterError("matching_character: several characters match up to 500 for conductor " +
                                 std::to_string(f));
}

NfElem sigma_of_generator(const CubicField& K) {
  NfElem xi = NfElem::generator(K.K);
  NfElem a(K.K, mpq_class(K.a2));
  NfElem fp = NfElem(3) * xi * xi + NfElem(2) * a * xi + NfElem(K.K, mpq_class(K.a1));
  NfElem d(K.K, mpq_class(K.sqrt_poly_discriminant));
  return (-(a + xi) + d / fp) / NfElem(2);
}

NfElem galois_action(const CubicField& K, const NfElem& e) {
  if (e.field() && e.field() != K.K) throw std::invalid_argument("galois_action: element of another field");
  NfElem s = sigma_of_generator(K);
  NfElem out(K.K, mpq_class(0));
  for (int i = 2; i >= 0; --i) out = out * s + NfElem(K.K, e.coeff(i));
  return out;
}

}  // namespace vtwist::cubicfield
