#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hpm/bigfloat.hpp"
#include "hpm/rational.hpp"

namespace hpm {

/// Exact univariate polynomial over the rationals in the free slope
/// parameter s = f2. Coefficient k multiplies s^k. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients and degree -1.
class SlopePolynomial {
 public:
  SlopePolynomial() = default;
  explicit SlopePolynomial(std::vector<Rational> coeffs);

  static SlopePolynomial constant(const Rational& c);
  static SlopePolynomial monomial(const Rational& c, int power);
  /// The polynomial s itself.
  static SlopePolynomial identity() { return monomial(Rational(1), 1); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(int power) const;
  const Rational& leading() const { return coeffs_.back(); }

  SlopePolynomial derivative() const;
  SlopePolynomial monic() const;

  Rational evaluate(const Rational& s) const;

  SlopePolynomial operator-() const;
  SlopePolynomial& operator+=(const SlopePolynomial& rhs);
  SlopePolynomial& operator-=(const SlopePolynomial& rhs);
  SlopePolynomial& operator*=(const SlopePolynomial& rhs);
  SlopePolynomial& operator*=(const Rational& rhs);

  friend SlopePolynomial operator+(SlopePolynomial a, const SlopePolynomial& b) { return a += b; }
  friend SlopePolynomial operator-(SlopePolynomial a, const SlopePolynomial& b) { return a -= b; }
  friend SlopePolynomial operator*(SlopePolynomial a, const SlopePolynomial& b) { return a *= b; }
  friend SlopePolynomial operator*(SlopePolynomial a, const Rational& b) { return a *= b; }
  friend bool operator==(const SlopePolynomial& a, const SlopePolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, e.g. "1/2*s^3 - 1/18".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

enum class PolyOp { Add, Sub, Mul };

SlopePolynomial poly_arith(const SlopePolynomial& a, const SlopePolynomial& b, PolyOp op);

/// Horner evaluation at `precision` decimal digits (>= 10), computed with
/// guard digits and rounded back.
BigFloat poly_eval(const SlopePolynomial& p, const BigFloat& s, Precision precision);

/// Quotient and remainder of a / b. Throws ZeroPolynomial when b is zero.
std::pair<SlopePolynomial, SlopePolynomial> divmod(const SlopePolynomial& a, const SlopePolynomial& b);

/// a / b where b is known to divide a. Throws InvalidArgument otherwise.
SlopePolynomial exact_divide(const SlopePolynomial& a, const SlopePolynomial& b);

/// Monic greatest common divisor; gcd(0, 0) is the zero polynomial.
SlopePolynomial gcd(SlopePolynomial a, SlopePolynomial b);

/// p divided by gcd(p, p'): same distinct roots, all simple.
SlopePolynomial square_free_part(const SlopePolynomial& p);

}  // namespace hpm
