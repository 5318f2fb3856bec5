#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vtwist/numcore/real.hpp"

namespace vtwist::dirichlet {

// Character of order dividing ell on (Z/q)^*, q a prime power, sending the
// generator g to zeta_ell^e.
struct Component {
  std::uint64_t q;
  std::uint64_t p;
  int k;
  std::uint64_t g;
  int e;
  bool operator==(const Component&) const = default;
};

// Primitive Dirichlet character of odd prime order ell. Values are exponents:
// chi(a) = zeta_ell^exponent(a) with zeta_ell = exp(2 pi i / ell).
class Character {
 public:
  Character() = default;
  static Character trivial(int ell);
  // Components must have coprime moduli; throws if any exponent is zero or a
  // modulus cannot carry a primitive order-ell character.
  Character(int ell, std::vector<Component> components);

  int ell() const { return ell_; }
  std::uint64_t conductor() const { return f_; }
  const std::vector<Component>& components() const { return comps_; }
  bool is_trivial() const { return comps_.empty(); }

  // Exponent of chi(a) in 0..ell-1, or nullopt when gcd(a, f) > 1.
  std::optional<int> exponent(std::uint64_t a) const;
  // exponent(a) for a = 0 .. f-1, with -1 marking non-units.
  std::vector<std::int8_t> exponent_table() const;

  Character power(int j) const;
  Character conj() const { return power(ell_ - 1); }
  Character operator*(const Character& o) const;  // coprime conductors only
  bool operator==(const Character& o) const { return ell_ == o.ell_ && comps_ == o.comps_; }

  // Lexicographically smallest exponent vector among chi^j, j = 1..ell-1.
  Character orbit_representative() const;
  bool is_orbit_representative() const { return *this == orbit_representative(); }

  // "(f; q1:e1, q2:e2)"
  std::string id() const;
  static Character parse(int ell, const std::string& id);

 private:
  int ell_ = 3;
  std::uint64_t f_ = 1;
  std::vector<Component> comps_;
};

// Whether f is the conductor of some primitive order-ell character.
bool is_admissible_conductor(std::uint64_t f, int ell);

// All primitive characters of exact order ell and conductor f.
std::vector<Character> characters_of_order(std::uint64_t f, int ell);

// All primitive order-ell characters with conductor <= X; with dedup, one
// representative per Galois orbit. Sorted by (conductor, id).
std::vector<Character> enumerate(int ell, std::uint64_t X, bool dedup = true);

// For chi of composite conductor, its prime-power components as characters.
std::vector<Character> factor_character(const Character& chi);

struct GaussSum {
  numcore::Complex value;
  double err;
};
GaussSum gauss_sum(const Character& chi, mpfr_prec_t prec);

}  // namespace vtwist::dirichlet
