#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "error.hpp"

namespace lierep {

using Rational = mpq_class;
using BigInt = mpz_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// "3/4", "-2", "0"
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) fail(ErrorCode::invalid_argument, "not a rational number: '" + s + "'");
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact inverse by Gauss-Jordan; throws on a singular input.
RationalMatrix inverse(RationalMatrix m);

// Rank over Q.
std::size_t rank(RationalMatrix m);

}  // namespace lierep
