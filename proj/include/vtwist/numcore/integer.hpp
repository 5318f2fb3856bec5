#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace vtwist::numcore {

struct PrimePower {
  std::uint64_t prime;
  int exponent;
  bool operator==(const PrimePower&) const = default;
};

// Sorted by prime.
using Factorization = std::vector<PrimePower>;

struct BigPrimePower {
  mpz_class prime;
  int exponent;
};
using BigFactorization = std::vector<BigPrimePower>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);
bool is_prime(const mpz_class& n);

// Throws std::invalid_argument for n == 0.
Factorization factor(std::uint64_t n);
BigFactorization factor(const mpz_class& n);  // sign ignored

bool is_squarefree(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t radical(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);
// spf[n] = smallest prime factor of n (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint32_t n);

std::uint64_t primitive_root(std::uint64_t p);
// Generator of (Z/p^k)^* for odd p.
std::uint64_t primitive_root_prime_power(std::uint64_t p, int k);

int legendre(std::uint64_t a, std::uint64_t p);
// Square root of a mod odd prime p; throws if a is a non-residue.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p);

bool is_square(const mpz_class& n);
bool is_square(const mpq_class& q);
mpz_class isqrt(const mpz_class& n);
// Exact square root of a rational square; throws otherwise.
mpq_class sqrt_exact(const mpq_class& q);

int valuation(const mpz_class& n, const mpz_class& p);
int valuation(const mpq_class& q, const mpz_class& p);
std::uint64_t to_u64(const mpz_class& n);

std::string to_string(const Factorization& f);

}  // namespace vtwist::numcore
