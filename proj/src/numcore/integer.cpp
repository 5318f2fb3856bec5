#include "vtwist/numcore/integer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vtwist::numcore {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 0;
    u64 r = 1;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

mpz_class pollard_brent_big(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, g = 1, q = 1, ys, t;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](mpz_class& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          f(y);
          t = abs(x - y);
          q = q * t % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_big_rec(const mpz_class& n, std::map<mpz_class, int>& out) {
  if (n == 1) return;
  if (n.fits_ulong_p()) {
    std::map<u64, int> small;
    factor_rec(n.get_ui(), small);
    for (auto [p, e] : small) out[mpz_class(static_cast<unsigned long>(p))] += e;
    return;
  }
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent_big(n);
  factor_big_rec(d, out);
  factor_big_rec(n / d, out);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  static const u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : small) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : small) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<u64>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Factorization factor(u64 n) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  std::map<u64, int> m;
  for (u64 p : {2ULL, 3ULL, 5ULL}) {
    while (n % p == 0) {
      ++m[p];
      n /= p;
    }
  }
  for (u64 p = 7; p < 1000 && p * p <= n; p += 2) {
    while (n % p == 0) {
      ++m[p];
      n /= p;
    }
  }
  factor_rec(n, m);
  Factorization out;
  for (auto [p, e] : m) out.push_back({p, e});
  return out;
}

BigFactorization factor(const mpz_class& n0) {
  mpz_class n = abs(n0);
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  std::map<mpz_class, int> m;
  for (unsigned long p = 2; p < 2000; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++m[mpz_class(p)];
      n /= p;
    }
  }
  factor_big_rec(n, m);
  BigFactorization out;
  for (auto& [p, e] : m) out.push_back({p, e});
  return out;
}

bool is_squarefree(u64 n) {
  for (auto& pp : factor(n)) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

u64 euler_phi(u64 n) {
  u64 r = n;
  for (auto& pp : factor(n)) r = r / pp.prime * (pp.prime - 1);
  return r;
}

u64 radical(u64 n) {
  u64 r = 1;
  for (auto& pp : factor(n)) r *= pp.prime;
  return r;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> ds{1};
  for (auto& pp : factor(n)) {
    size_t cur = ds.size();
    u64 pk = 1;
    for (int k = 1; k <= pp.exponent; ++k) {
      pk *= pp.prime;
      for (size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  std::vector<bool> comp(n + 1, false);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t(i) * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

std::vector<std::uint32_t> smallest_prime_factor_sieve(std::uint32_t n) {
  std::vector<std::uint32_t> spf(n + 1, 0);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (spf[i]) continue;
    for (std::uint64_t j = i; j <= n; j += i) {
      if (!spf[j]) spf[j] = i;
    }
  }
  return spf;
}

u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  if (!is_prime(p)) throw std::invalid_argument("primitive_root: modulus is not prime");
  auto fs = factor(p - 1);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (auto& pp : fs) {
      if (powmod(g, (p - 1) / pp.prime, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

u64 primitive_root_prime_power(u64 p, int k) {
  u64 g = primitive_root(p);
  if (k == 1) return g;
  if (p == 2) throw std::invalid_argument("primitive_root_prime_power: (Z/2^k)^* is not cyclic");
  // Smallest generator of (Z/p^k)^*: g works modulo p^k iff g^(p-1) != 1 mod p^2.
  u64 p2 = p * p;
  auto fs = factor(p - 1);
  for (u64 h = 2;; ++h) {
    if (h % p == 0) continue;
    bool ok = true;
    for (auto& pp : fs) {
      if (powmod(h, (p - 1) / pp.prime, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok && powmod(h, p - 1, p2) != 1) return h;
  }
}

int legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (legendre(a, p) != 1) throw std::domain_error("sqrt_mod: non-residue");
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (legendre(z, p) != -1) ++z;
  u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

bool is_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

bool is_square(const mpq_class& q) {
  return is_square(mpz_class(q.get_num())) && is_square(mpz_class(q.get_den()));
}

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpq_class sqrt_exact(const mpq_class& q) {
  if (!is_square(q)) throw std::domain_error("sqrt_exact: not a rational square");
  mpq_class r(isqrt(q.get_num()), isqrt(q.get_den()));
  r.canonicalize();
  return r;
}

int valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  mpz_class m = n;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

int valuation(const mpq_class& q, const mpz_class& p) {
  return valuation(mpz_class(q.get_num()), p) - valuation(mpz_class(q.get_den()), p);
}

u64 to_u64(const mpz_class& n) {
  if (n < 0 || !n.fits_ulong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return n.get_ui();
}

std::string to_string(const Factorization& f) {
  std::ostringstream os;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) os << " * ";
    os << f[i].prime;
    if (f[i].exponent > 1) os << "^" << f[i].exponent;
  }
  if (f.empty()) os << "1";
  return os.str();
}

}  // namespace vtwist::numcore
