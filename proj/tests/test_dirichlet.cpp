#include <complex>
#include <random>

#include "doctest.h"
#include "vtwist/dirichlet/character.hpp"
#include "vtwist/numcore/integer.hpp"

using namespace vtwist;
using dirichlet::Character;

namespace {

// Gauss sum from a value table in double precision.
std::complex<double> naive_gauss(const Character& chi) {
  const double two_pi = 2 * std::acos(-1.0);
  std::uint64_t f = chi.conductor();
  std::complex<double> s = 0;
  for (std::uint64_t a = 1; a < f; ++a) {
    auto e = chi.exponent(a);
    if (!e) continue;
    s += std::polar(1.0, two_pi * (*e) / chi.ell()) * std::polar(1.0, two_pi * double(a) / double(f));
  }
  return s;
}

}  // namespace

TEST_CASE("counts of order-3 characters") {
  CHECK(dirichlet::characters_of_order(7, 3).size() == 2);
  CHECK(dirichlet::characters_of_order(9, 3).size() == 2);
  CHECK(dirichlet::characters_of_order(63, 3).size() == 4);
  CHECK(dirichlet::characters_of_order(3, 3).empty());
  CHECK(dirichlet::characters_of_order(27, 3).empty());
  CHECK(dirichlet::characters_of_order(11, 3).empty());
  CHECK(dirichlet::characters_of_order(11, 5).size() == 4);
}

TEST_CASE("primitivity, orbit structure and homomorphism") {
  for (int ell : {3, 5}) {
    auto all = dirichlet::enumerate(ell, 300, false);
    auto reps = dirichlet::enumerate(ell, 300, true);
    CHECK(all.size() == static_cast<std::size_t>(ell - 1) * reps.size());
    for (auto& chi : all) {
      std::uint64_t f = chi.conductor();
      for (auto d : numcore::divisors(f)) {
        if (d == f) continue;
        bool nontrivial = false;
        for (std::uint64_t a = 1; a < f && !nontrivial; a += d)
          if (numcore::gcd_u64(a, f) == 1 && *chi.exponent(a) != 0) nontrivial = true;
        CHECK_MESSAGE(nontrivial, chi.id() << " is induced from modulus " << d);
      }
      CHECK(*chi.exponent(f - 1) == 0);  // even
      for (std::uint64_t a = 1; a < 40; ++a)
        for (std::uint64_t b = 1; b < 40; ++b) {
          auto ea = chi.exponent(a), eb = chi.exponent(b), eab = chi.exponent(a * b);
          if (ea && eb) CHECK(*eab == (*ea + *eb) % ell);
        }
    }
  }
}

TEST_CASE("factor_character splits composite conductors") {
  auto chis = dirichlet::characters_of_order(63, 3);
  std::mt19937 rng(1);
  for (auto& chi : chis) {
    auto parts = dirichlet::factor_character(chi);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].conductor() * parts[1].conductor() == 63);
    for (int i = 0; i < 100; ++i) {
      std::uint64_t a = rng() % 10000 + 1;
      auto e = chi.exponent(a);
      if (!e) continue;
      CHECK(*e == (*parts[0].exponent(a) + *parts[1].exponent(a)) % 3);
    }
  }
}

TEST_CASE("id round trip") {
  for (auto& chi : dirichlet::enumerate(3, 500, false)) CHECK(Character::parse(3, chi.id()) == chi);
  CHECK_THROWS(Character::parse(3, "(7; 7:0)"));
  CHECK_THROWS(Character::parse(3, "7:1"));
}

TEST_CASE("Gauss sums: |tau|^2 = f and agreement with a value table") {
  for (int ell : {3, 5})
    for (auto& chi : dirichlet::enumerate(ell, 200, false)) {
      auto g = dirichlet::gauss_sum(chi, 128);
      double f = double(chi.conductor());
      CHECK(std::fabs(g.value.norm2().to_double() / f - 1) < 1e-9);
      auto n = naive_gauss(chi);
      CHECK(std::abs(n - std::complex<double>(g.value.re.to_double(), g.value.im.to_double())) < 1e-8 * f);
      // tau(conj chi) = chi(-1) conj(tau(chi)), chi even
      auto gc = dirichlet::gauss_sum(chi.conj(), 128);
      CHECK(std::fabs(gc.value.re.to_double() - g.value.re.to_double()) < 1e-9 * f);
      CHECK(std::fabs(gc.value.im.to_double() + g.value.im.to_double()) < 1e-9 * f);
    }
}
