#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vtwist/cubicfield/binary_cubic.hpp"
#include "vtwist/dirichlet/character.hpp"
#include "vtwist/numcore/number_field.hpp"

namespace vtwist::cubicfield {

enum class Splitting { Split, Inert, Ramified };
std::string to_string(Splitting s);

// Cyclic cubic field Q(xi), xi a root of x^3 + a2 x^2 + a1 x + a0.
struct CubicField {
  mpz_class a2, a1, a0;
  mpz_class poly_discriminant;
  mpz_class index;
  mpz_class field_discriminant;
  mpz_class conductor;
  mpz_class sqrt_poly_discriminant;  // positive square root
  BinaryCubicForm maximal_form;      // form of the maximal order
  numcore::FieldPtr K;
  std::optional<dirichlet::Character> matched;

  numcore::QPoly defining_poly() const;
  // "a2,a1,a0;conductor"
  std::string serialize() const;
};

// Throws ReducibleCubicError or NonCyclicFieldError. Primes in hint are tried
// first when factoring the polynomial discriminant; any cofactor is factored
// in full.
CubicField from_cubic(const numcore::QPoly& p, const std::vector<mpz_class>& hint = {});

// x -> x / d turning a monic rational cubic into a monic integral one.
numcore::QPoly integral_monic_model(const numcore::QPoly& p);

mpz_class field_discriminant(const numcore::QPoly& p);
mpz_class conductor(const CubicField& K);

Splitting splitting(const CubicField& K, const mpz_class& p);

// The orbit representative chi of order 3 and conductor f with
// chi(p) = 1 exactly at the split primes. Also stored in K.matched.
dirichlet::Character matching_character(CubicField& K);

// Image of e under the generator sigma taking xi to
// (-(a2 + xi) + d / f'(xi)) / 2, d = +sqrt(disc f).
numcore::NfElem galois_action(const CubicField& K, const numcore::NfElem& e);
numcore::NfElem sigma_of_generator(const CubicField& K);

}  // namespace vtwist::cubicfield
