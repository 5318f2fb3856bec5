#pragma once

#include <array>
#include <string>

#include <gmpxx.h>

namespace vtwist::cubicfield {

// a x^3 + b x^2 y + c x y^2 + d y^3. The ring attached to the form has the
// same discriminant; a monic cubic gives the form of its equation order.
struct BinaryCubicForm {
  mpz_class a, b, c, d;

  mpz_class discriminant() const;
  mpz_class content() const;
  // F(alpha x + beta y, gamma x + delta y)
  BinaryCubicForm substitute(const mpz_class& alpha, const mpz_class& beta, const mpz_class& gamma,
                             const mpz_class& delta) const;
  std::string str() const;
};

// Replaces F by a form of a ring that is maximal at p. Returns the number of
// index steps taken (each divides the discriminant by p^2).
int maximize_at(BinaryCubicForm& F, const mpz_class& p);

// Number of distinct roots of F in P^1(F_p).
int count_roots_mod_p(const BinaryCubicForm& F, const mpz_class& p);

}  // namespace vtwist::cubicfield
