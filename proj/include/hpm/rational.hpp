#pragma once

#include <gmpxx.h>

#include <string>

namespace hpm {

/// Exact fraction in lowest terms with positive denominator.
using Rational = mpq_class;

inline Rational make_rational(long numerator, long denominator = 1) {
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

/// Parses "p", "p/q" or a finite decimal such as "-0.75" exactly.
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace hpm
