#include "vtwist/elliptic/curve.hpp"

#include <algorithm>

#include "vtwist/errors.hpp"
#include "vtwist/numcore/integer.hpp"

namespace vtwist::elliptic {

using numcore::mulmod;

std::string to_string(Reduction r) {
  switch (r) {
    case Reduction::Good:
      return "good";
    case Reduction::SplitMultiplicative:
      return "split multiplicative";
    case Reduction::NonsplitMultiplicative:
      return "nonsplit multiplicative";
    case Reduction::Additive:
      return "additive";
  }
  return "?";
}

EllipticCurve::EllipticCurve(std::array<long, 5> a, std::uint64_t conductor, int root_number, std::string label)
    : label_(std::move(label)), N_(conductor), w_(root_number), cache_(std::make_shared<Cache>()) {
  for (int i = 0; i < 5; ++i) a_[i] = a[i];
  auto W = model();
  disc_ = mpz_class(W.discriminant());
  c4_ = mpz_class(W.c4());
  c6_ = mpz_class(W.c6());
  if (disc_ == 0) throw SingularCurveError("curve " + label_ + " is singular");
  if (root_number != 1 && root_number != -1) throw ConfigError("root number must be +1 or -1");
  if (conductor == 0) throw ConfigError("conductor must be positive");
  // The conductor must be supported exactly on the primes of bad reduction.
  for (auto& pp : numcore::factor(disc_)) {
    if (N_ % pp.prime.get_ui() != 0)
      throw TheoryAlarm("conductor " + std::to_string(N_) + " misses bad prime " + pp.prime.get_str());
  }
  for (auto& pp : numcore::factor(N_)) {
    if (!mpz_divisible_ui_p(disc_.get_mpz_t(), pp.prime))
      throw TheoryAlarm("conductor " + std::to_string(N_) + " has good prime " + std::to_string(pp.prime));
  }
}

Weierstrass<mpq_class> EllipticCurve::model() const {
  return {mpq_class(a_[0]), mpq_class(a_[1]), mpq_class(a_[2]), mpq_class(a_[3]), mpq_class(a_[4])};
}

Reduction EllipticCurve::reduction_type(std::uint64_t p) const {
  if (!mpz_divisible_ui_p(disc_.get_mpz_t(), p)) return Reduction::Good;
  if (mpz_divisible_ui_p(c4_.get_mpz_t(), p)) return Reduction::Additive;
  return ap(p) == 1 ? Reduction::SplitMultiplicative : Reduction::NonsplitMultiplicative;
}

namespace {

std::uint64_t reduce(const mpz_class& a, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t count_points_2(const std::array<mpz_class, 5>& a) {
  std::uint64_t a1 = reduce(a[0], 2), a2 = reduce(a[1], 2), a3 = reduce(a[2], 2), a4 = reduce(a[3], 2),
                a6 = reduce(a[4], 2);
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < 2; ++x)
    for (std::uint64_t y = 0; y < 2; ++y)
      if ((y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6)) % 2 == 0) ++n;
  return n;
}

}  // namespace

std::uint64_t count_points_mod_p(const std::array<mpz_class, 5>& a, std::uint64_t p) {
  if (p == 2) return count_points_2(a);
  // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6 =: D(x); count via a
  // table of quadratic residues and finite differences of D.
  const std::uint64_t a1 = reduce(a[0], p), a2 = reduce(a[1], p), a3 = reduce(a[2], p), a4 = reduce(a[3], p),
                      a6 = reduce(a[4], p);
  const std::uint64_t b2 = (mulmod(a1, a1, p) + 4 * a2) % p;
  const std::uint64_t b4 = (mulmod(a1, a3, p) + 2 * a4) % p;
  const std::uint64_t b6 = (mulmod(a3, a3, p) + 4 * a6) % p;
  auto D = [&](std::uint64_t x) {
    std::uint64_t v = (4 * x + b2) % p;
    v = (mulmod(v, x, p) + 2 * b4) % p;
    return (mulmod(v, x, p) + b6) % p;
  };
  thread_local std::vector<std::int8_t> chi;
  chi.assign(p, -1);
  chi[0] = 0;
  for (std::uint64_t y = 1; y <= p / 2; ++y) chi[mulmod(y, y, p)] = 1;
  std::uint64_t d0 = D(0), d1 = D(1), d2 = D(2), d3 = D(3);
  // Forward differences of a cubic: the third one is constant.
  std::uint64_t f1 = (d1 + p - d0) % p;
  std::uint64_t f2 = (d2 + 2 * (p - d1) + d0) % p;
  std::uint64_t f3 = (d3 + 3 * (p - d2) + 3 * d1 + (p - d0)) % p;
  std::int64_t s = 0;
  std::uint64_t v = d0;
  for (std::uint64_t x = 0; x < p; ++x) {
    s += chi[v];
    v += f1;
    if (v >= p) v -= p;
    f1 += f2;
    if (f1 >= p) f1 -= p;
    f2 += f3;
    if (f2 >= p) f2 -= p;
  }
  return static_cast<std::uint64_t>(static_cast<std::int64_t>(p + 1) + s);
}

long EllipticCurve::ap(std::uint64_t p) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->ap.find(p);
    if (it != cache_->ap.end()) return it->second;
  }
  long v = static_cast<long>(p + 1) - static_cast<long>(count_points_mod_p(a_, p));
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->ap[p] = v;
  return v;
}

std::shared_ptr<const std::vector<std::int32_t>> EllipticCurve::an_table(std::size_t n) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (cache_->an && cache_->an->size() > n) return cache_->an;
  }
  auto spf = numcore::smallest_prime_factor_sieve(static_cast<std::uint32_t>(n));
  auto tab = std::make_shared<std::vector<std::int32_t>>(n + 1, 0);
  auto& an = *tab;
  if (n >= 1) an[1] = 1;
  for (std::size_t m = 2; m <= n; ++m) {
    std::uint64_t p = spf[m];
    std::size_t pk = p, rest = m / p;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    if (rest > 1) {
      an[m] = an[pk] * an[rest];
    } else if (pk == p) {
      an[m] = static_cast<std::int32_t>(ap(p));
    } else if (N_ % p == 0) {
      an[m] = an[p] * an[m / p];
    } else {
      an[m] = an[p] * an[m / p] - static_cast<std::int32_t>(p) * an[m / p / p];
    }
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->an = tab;
  return tab;
}

}  // namespace vtwist::elliptic
