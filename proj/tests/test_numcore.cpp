#include <random>

#include "doctest.h"
#include "vtwist/errors.hpp"
#include "vtwist/numcore/cyclotomic.hpp"
#include "vtwist/numcore/integer.hpp"
#include "vtwist/numcore/poly.hpp"
#include "vtwist/numcore/recognize.hpp"

using namespace vtwist;
using namespace vtwist::numcore;

TEST_CASE("factor recombines exhaustively up to 10^6") {
  for (std::uint64_t n = 2; n <= 1000000; ++n) {
    std::uint64_t prod = 1;
    for (auto& pp : factor(n))
      for (int i = 0; i < pp.exponent; ++i) prod *= pp.prime;
    if (prod != n) FAIL("factor(" << n << ") recombines to " << prod);
  }
}

TEST_CASE("factor of random 12-digit numbers, primes checked by gmp") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(2, 1000000000000ULL);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t n = dist(rng), prod = 1;
    for (auto& pp : factor(n)) {
      mpz_class p(static_cast<unsigned long>(pp.prime));
      REQUIRE(mpz_probab_prime_p(p.get_mpz_t(), 30) > 0);
      for (int k = 0; k < pp.exponent; ++k) prod *= pp.prime;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("is_prime against a sieve") {
  auto primes = primes_up_to(100000);
  std::vector<bool> sieve(100001, false);
  for (auto p : primes) sieve[p] = true;
  for (std::uint64_t n = 0; n <= 100000; ++n) CHECK(is_prime(n) == sieve[n]);
  CHECK(is_prime(std::uint64_t{18446744073709551557ULL}));
  CHECK_FALSE(is_prime(std::uint64_t{3215031751ULL}));  // strong pseudoprime to 2, 3, 5, 7
}

TEST_CASE("sqrt_mod and primitive_root by brute force") {
  for (std::uint64_t p : {7ULL, 13ULL, 31ULL, 97ULL, 1009ULL}) {
    std::uint64_t g = primitive_root(p);
    std::uint64_t x = 1;
    for (std::uint64_t k = 1; k < p - 1; ++k) {
      x = x * g % p;
      CHECK(x != 1);
    }
    for (std::uint64_t a = 1; a < p; ++a)
      if (legendre(a, p) == 1) {
        auto r = sqrt_mod(a, p);
        CHECK(r * r % p == a);
      }
  }
}

TEST_CASE("discriminant of a cubic from its roots") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-20, 20), den(1, 9);
  for (int i = 0; i < 50; ++i) {
    mpq_class r[3];
    for (auto& x : r) {
      x = mpq_class(d(rng), den(rng));
      x.canonicalize();
    }
    QPoly f{mpq_class(1)};
    for (auto& x : r) f = f * QPoly{-x, mpq_class(1)};
    mpq_class want = 1;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) want *= (r[a] - r[b]) * (r[a] - r[b]);
    CHECK(discriminant_closed_form(f) == want);
    CHECK(poly_discriminant(f) == want);
  }
}

TEST_CASE("cyclotomic ring laws and reduction mod lambda") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int ell : {3, 5, 7}) {
    auto rnd = [&] {
      std::vector<mpz_class> c(ell - 1);
      for (auto& x : c) x = d(rng);
      return CyclotomicInt(ell, c);
    };
    for (int i = 0; i < 30; ++i) {
      auto a = rnd(), b = rnd(), c = rnd();
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      long ra = a.residue_mod_lambda(), rb = b.residue_mod_lambda();
      CHECK((a * b).residue_mod_lambda() == ra * rb % ell);
      CHECK((a + b).residue_mod_lambda() == (ra + rb) % ell);
    }
    // 1 - zeta lies over ell
    auto lam = CyclotomicInt::from_integer(ell, 1) - CyclotomicInt::zeta_power(ell, 1);
    CHECK(lam.residue_mod_lambda() == 0);
  }
}

TEST_CASE("recognize_integer tolerance policy") {
  const mpfr_prec_t prec = 200;
  for (long m : {-7L, 0L, 3L, 123456L}) {
    for (double d : {0.0, 1e-6, -5e-5, 1e-4}) CHECK(recognize_integer(Real(m, prec) + Real(d, prec), 1e-8) == m);
    for (double d : {2e-4, -0.01, 0.3, -0.49})
      CHECK_THROWS_AS(recognize_integer(Real(m, prec) + Real(d, prec), 1e-8), RecognitionError);
  }
  // the error bound itself must be small enough to decide
  CHECK_THROWS(recognize_integer(Real(1L, prec), 0.3));
}
