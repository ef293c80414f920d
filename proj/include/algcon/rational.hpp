#pragma once

#include <gmpxx.h>

#include <string>

namespace algcon {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline int sign_of(const Rational& q) { return sgn(q); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Smallest-denominator rational strictly inside (lo, hi); lo < hi required.
Rational simplest_between(const Rational& lo, const Rational& hi);

/// Integer power of a rational, exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace algcon
