#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vtwist/elliptic/weierstrass.hpp"
#include "vtwist/numcore/real.hpp"

namespace vtwist::elliptic {

enum class Reduction { Good, SplitMultiplicative, NonsplitMultiplicative, Additive };

std::string to_string(Reduction r);

// Elliptic curve over Q given by an integral, minimal Weierstrass model,
// with its conductor and global root number supplied by the caller.
class EllipticCurve {
 public:
  EllipticCurve(std::array<long, 5> a, std::uint64_t conductor, int root_number, std::string label = "");

  const std::string& label() const { return label_; }
  const std::array<mpz_class, 5>& ainvs() const { return a_; }
  Weierstrass<mpq_class> model() const;
  const mpz_class& discriminant() const { return disc_; }
  const mpz_class& c4() const { return c4_; }
  const mpz_class& c6() const { return c6_; }
  std::uint64_t conductor() const { return N_; }
  int root_number() const { return w_; }

  Reduction reduction_type(std::uint64_t p) const;
  // a_p = p + 1 - #E(F_p), valid at every prime for a minimal model.
  long ap(std::uint64_t p) const;
  // Coefficients a_1 .. a_n; entry 0 is unused. Cached and extended on demand.
  std::shared_ptr<const std::vector<std::int32_t>> an_table(std::size_t n) const;

  // Full real period: least positive real period times the number of real
  // components.
  numcore::Real real_period(mpfr_prec_t prec) const;

 private:
  std::string label_;
  std::array<mpz_class, 5> a_;
  mpz_class disc_, c4_, c6_;
  std::uint64_t N_;
  int w_;

  struct Cache {
    std::mutex mu;
    std::map<std::uint64_t, long> ap;
    std::shared_ptr<const std::vector<std::int32_t>> an;
  };
  std::shared_ptr<Cache> cache_;
};

// Number of points over F_p, including infinity.
std::uint64_t count_points_mod_p(const std::array<mpz_class, 5>& a, std::uint64_t p);

}  // namespace vtwist::elliptic
