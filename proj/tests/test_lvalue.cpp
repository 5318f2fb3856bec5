#include <random>

#include "doctest.h"
#include "vtwist/census/config.hpp"
#include "vtwist/errors.hpp"
#include "vtwist/lvalue/algebraic_part.hpp"
#include "vtwist/lvalue/central_value.hpp"
#include "vtwist/lvalue/congruence.hpp"
#include "vtwist/numcore/integer.hpp"

using namespace vtwist;
using namespace vtwist::lvalue;
using dirichlet::Character;

namespace {

elliptic::EllipticCurve curve(const std::string& name) { return census::builtin_config(name).curve(); }

std::vector<Character> coprime_orbits(const elliptic::EllipticCurve& E, int ell, std::uint64_t X) {
  std::vector<Character> out;
  for (auto& c : dirichlet::enumerate(ell, X))
    if (numcore::gcd_u64(c.conductor(), E.conductor()) == 1) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("normalization of 37b") {
  auto E = curve("37b");
  auto norm = calibrate_normalization(E, 3);
  CHECK(norm.scale == mpq_class(2, 9));
  CHECK(norm.L_alg_trivial == 1);
  auto A = curve("37a");
  CHECK(calibrate_normalization(A, 3).L_alg_trivial == 0);
}

TEST_CASE("Hecke factors") {
  auto E = curve("37b");
  long a3 = E.ap(3), a7 = E.ap(7);
  CHECK(hecke_factor(E, 7, 3) == a7 - 2);
  CHECK(hecke_factor(E, 9, 3) == (a3 - 1) * (a3 - 1) - 3);
  CHECK_THROWS_AS(hecke_factor(E, 11, 3), InadmissibleConductorError);
  CHECK_THROWS_AS(hecke_factor(E, 3, 3), InadmissibleConductorError);
  // p = 1 mod 3 forces a_p = 2 mod 3 on a curve with a rational 3-torsion point
  for (auto p : numcore::primes_up_to(1000))
    if (p % 3 == 1 && p != 37) CHECK(((E.ap(p) - 2) % 3 + 3) % 3 == 0);
}

TEST_CASE("tail bound: doubling the truncation stays within the error bound") {
  std::mt19937 rng(4);
  std::vector<std::string> names{"37b", "37a", "11a1"};
  int done = 0;
  while (done < 50) {
    auto E = curve(names[rng() % 3]);
    auto orbits = coprime_orbits(E, rng() % 2 ? 3 : 5, 400);
    auto chi = orbits[rng() % orbits.size()];
    SeriesOptions wide;
    wide.length_factor = 2;
    auto v1 = central_value(E, chi, 1e-25);
    auto v2 = central_value(E, chi, 1e-25, wide);
    double d = (v1.value - v2.value).abs().to_double();
    CHECK_MESSAGE(d <= v1.err + v2.err, E.label() << " " << chi.id() << " moved by " << d);
    ++done;
  }
}

TEST_CASE("parameter independence detects a wrong root number") {
  for (std::string name : {"37b", "37a", "11a1"}) {
    auto E = curve(name);
    auto chi = coprime_orbits(E, 3, 50).front();
    CHECK(root_number_consistent(E, chi, 200));
    CHECK_FALSE(root_number_consistent(E, chi, 200, -E.root_number()));
  }
}

TEST_CASE("37b orbits up to 200: integrality, exact sum, Galois consistency") {
  auto E = curve("37b");
  auto norm = calibrate_normalization(E, 3);
  for (auto& chi : coprime_orbits(E, 3, 200)) {
    auto rec = algebraic_part(E, chi, norm, 50);
    REQUIRE(rec.recognized);
    CHECK(rec.sums.residual < 1e-4);
    mpz_class s = 0;
    for (auto& x : rec.sums.S) s += x;
    CHECK(s == trivial_coset_sum(E, chi.conductor(), 3, norm));
    CHECK(rec.L_alg_conjugates[1] == rec.L_alg.conjugate(2));
    auto& L1 = rec.conjugates[0].value;
    auto& L2 = rec.conjugates[1].value;
    CHECK(std::fabs((L1.re - L2.re).to_double()) < 1e-40);
    CHECK(std::fabs((L1.im + L2.im).to_double()) < 1e-40);
    CHECK(rec.decision != Decision::Undecided);
  }
}

TEST_CASE("order 5 twists of 11a1 are recognized") {
  auto E = curve("11a1");
  auto norm = calibrate_normalization(E, 5);
  for (auto& chi : coprime_orbits(E, 5, 100)) {
    auto rec = algebraic_part(E, chi, norm, 50);
    CHECK(rec.recognized);
    CHECK(rec.sums.S.size() == 5);
  }
}

TEST_CASE("decision policy") {
  TwistRecord r;
  r.recognized = true;
  r.sums.S = {4, 4, 4};
  r.L.value = numcore::Complex(numcore::Real(1e-60, 128), numcore::Real(0L, 128));
  r.L.err = 1e-50;
  CHECK(vanishing_decision(r) == Decision::Vanishes);
  r.recognized = false;
  r.sums.S.clear();
  r.L.value = numcore::Complex(numcore::Real(0.7, 128), numcore::Real(0L, 128));
  r.L.err = 1e-10;
  CHECK(vanishing_decision(r) == Decision::Nonzero);
  r.L.value = numcore::Complex(numcore::Real(3e-10, 128), numcore::Real(0L, 128));
  CHECK(vanishing_decision(r) == Decision::Undecided);
}

TEST_CASE("congruence theorem on two curves") {
  for (std::string name : {"37b", "11a1"}) {
    auto E = curve(name);
    auto norm = calibrate_normalization(E, 3);
    OrbitCache cache(E, norm);
    auto pairs = congruence_pairs(E, 3, 200);
    CHECK(pairs.size() > 20);
    bool nine = false;
    for (auto& [chi, psi] : pairs) {
      auto r = congruence_check(E, 3, chi, psi, cache);
      CHECK_MESSAGE(r.holds, r.detail);
      nine = nine || psi.conductor() % 9 == 0;
    }
    CHECK(nine);
  }
}

TEST_CASE("corrupted a_p makes the congruence fail with a diagnostic") {
  auto E = curve("37b");
  auto norm = calibrate_normalization(E, 3);
  OrbitCache cache(E, norm);
  auto psi = dirichlet::characters_of_order(7, 3).front();
  auto good = congruence_check(E, 3, Character::trivial(3), psi, cache);
  CHECK(good.holds);
  auto bad = congruence_check(E, 3, Character::trivial(3), psi, cache, {{7, E.ap(7) + 1}});
  CHECK_FALSE(bad.holds);
  CHECK(bad.detail.find("a=" + std::to_string(E.ap(7) + 1)) != std::string::npos);
}

TEST_CASE("non-vanishing set") {
  auto E = curve("11a1");
  auto norm = calibrate_normalization(E, 3);
  auto S = nonvanishing_prime_set(E, 3, 300, norm);
  CHECK(S.hypothesis_holds);
  CHECK(S.primes.size() == 20);
  for (auto p : S.primes) {
    CHECK(((E.ap(p) - 2) % 3 + 3) % 3 != 0);
    for (auto& chi : dirichlet::characters_of_order(p, 3)) {
      auto v = central_value(E, chi, 1e-30);
      CHECK(v.value.abs().to_double() > 10 * v.err);
    }
  }
  // 37b: a_p = 2 mod 3 always, so S is empty
  auto B = curve("37b");
  CHECK(nonvanishing_prime_set(B, 3, 300, calibrate_normalization(B, 3)).primes.empty());
}
