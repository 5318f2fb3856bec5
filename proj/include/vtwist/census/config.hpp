#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <string>

#include <gmpxx.h>

#include "vtwist/elliptic/curve.hpp"

namespace vtwist::census {

// Flat "key = value" file; '#' starts a comment. Keys: label, a_invariants,
// conductor, root_number, precision_digits (optional, default 50).
struct CurveConfig {
  std::string label;
  std::array<mpq_class, 5> a_invariants;
  std::uint64_t conductor = 0;
  int root_number = 0;
  int precision_digits = 50;

  // Throws ConfigError for non-integral invariants.
  elliptic::EllipticCurve curve() const;
  std::string str() const;
};

CurveConfig parse_config(std::istream& in);
CurveConfig load_config(const std::string& path);

// "37b", "37a", "11a1".
CurveConfig builtin_config(const std::string& name);

}  // namespace vtwist::census
