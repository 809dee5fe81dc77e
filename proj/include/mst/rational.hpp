#pragma once

#include <gmpxx.h>

#include <string>

#include "mst/errors.hpp"

namespace mst {

// Exact rational scalar. GMP keeps mpq_class values canonical
// (denominator > 0, gcd(|num|, den) = 1) through every arithmetic
// operation as long as the operands were canonical, so the only places
// that need care are the raw constructors wrapped below.
using Rational = mpq_class;
using Integer = mpz_class;

/// n/d reduced to canonical form; d may be negative or zero (zero throws).
inline Rational rat(long n, long d = 1) {
  if (d == 0) throw InputError("rational with zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Rational rat(const Integer& n, const Integer& d) {
  if (d == 0) throw InputError("rational with zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Parses "p/q" or "p" (decimal integers, optional sign).
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw InputError("cannot parse rational '" + text + "'");
  if (r.get_den() == 0) throw InputError("rational with zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace mst
