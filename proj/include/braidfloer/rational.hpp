#pragma once

#include <gmpxx.h>

#include <string>

namespace bfh {

// Exact rational scalar for the incidence operator and domain vectors.
// Half-integers must be represented exactly, so no floating point anywhere.
using Rational = mpq_class;

inline bool isInteger(const Rational& q) { return q.get_den() == 1; }

inline bool isHalfInteger(const Rational& q) {
  return q.get_den() == 1 || q.get_den() == 2;
}

inline long asLong(const Rational& q) {
  mpz_class num = q.get_num();
  return num.get_si();
}

inline std::string toString(const Rational& q) { return q.get_str(); }

}  // namespace bfh
