#pragma once

#include <vector>

#include "hpm/bigfloat.hpp"
#include "hpm/polynomial.hpp"

namespace hpm {

// Taylor coefficients of f(t) = u(t^2)^(1/2), where u solves the
// Thomas-Fermi equation u'' = sqrt(u^3 / x), u(0) = 1. In the variable t
// the equation reads
//
//   T(f, t) = t (f f'' + f'^2) - f f' - 2 t^2 f^3 = 0.
//
// Matching the coefficient of t^(n-1) gives, for n >= 3,
//
//   n (n - 2) f_n = 2 (f^3)_(n-3) - sum_{j+k=n, k<n} k (n - 2) f_j f_k
//
// with f_0 = 1 and f_1 = 0. At n = 2 the left side vanishes, so
// f_2 = u'(0) / 2 stays free: it is the slope parameter s.

/// f_0 .. f_nmax as exact polynomials in s.
struct SymbolicSeries {
  int nmax = 0;
  std::vector<SlopePolynomial> coeffs;

  const SlopePolynomial& operator[](int j) const { return coeffs.at(static_cast<size_t>(j)); }
};

/// f_0 .. f_nmax evaluated at a fixed slope value.
struct NumericSeries {
  int nmax = 0;
  BigFloat slope_s{Precision(10)};
  Precision precision{10};
  std::vector<BigFloat> coeffs;

  const BigFloat& operator[](int j) const { return coeffs.at(static_cast<size_t>(j)); }
};

/// Throws InvalidOrder when nmax < 3.
SymbolicSeries symbolic_coeffs(int nmax);

/// Same recurrence run directly in BigFloat at `precision` (+ guard digits).
NumericSeries numeric_coeffs(int nmax, const BigFloat& slope_s, Precision precision);

/// T(f_truncated, t) for the truncated numeric series.
BigFloat residual_check(const NumericSeries& series, const BigFloat& t);

}  // namespace hpm
