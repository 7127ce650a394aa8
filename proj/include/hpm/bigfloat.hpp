#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "hpm/rational.hpp"

namespace hpm {

/// Working precision expressed in decimal digits.
class Precision {
 public:
  constexpr explicit Precision(int digits) : digits_(digits) {}

  constexpr int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept;

  constexpr Precision plus(int extra) const noexcept { return Precision(digits_ + extra); }
  constexpr auto operator<=>(const Precision&) const = default;

 private:
  int digits_;
};

/// Guard digits added on top of every caller-requested precision and
/// stripped from the results handed back.
inline constexpr int kGuardDigits = 10;

/// Arbitrary-precision binary floating value. Every value carries its own
/// precision; binary operations round to the larger of the two operand
/// precisions. There is no ambient default.
class BigFloat {
 public:
  explicit BigFloat(Precision precision);
  BigFloat(long value, Precision precision);
  BigFloat(const Rational& value, Precision precision);

  /// Parses a decimal literal such as "-0.794035511305688" or "1e-7".
  static BigFloat parse(std::string_view text, Precision precision);
  static BigFloat pow10(long exponent, Precision precision);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  Precision precision() const noexcept { return precision_; }

  /// Copy of this value rounded to another precision.
  BigFloat rounded(Precision precision) const;

  int sign() const noexcept { return mpfr_sgn(value_); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Base-10 logarithm of |x| as a double; -inf for zero.
  double log10_abs() const noexcept;

  /// Decimal rendering rounded to `significant` digits. Fixed notation is
  /// used for 1e-7 <= |x| < 1e21, scientific otherwise.
  std::string to_string(int significant) const;
  /// Decimal rendering at the full decimal precision of the value.
  std::string to_string() const { return to_string(precision_.digits()); }

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator*=(long rhs);
  BigFloat& operator/=(long rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  friend BigFloat operator*(BigFloat lhs, long rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, long rhs) { return lhs /= rhs; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  friend BigFloat abs(const BigFloat& x);
  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat log10(const BigFloat& x);

  mpfr_srcptr raw() const noexcept { return value_; }
  mpfr_ptr raw() noexcept { return value_; }

 private:
  void adopt_precision(const BigFloat& rhs);

  Precision precision_;
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log10(const BigFloat& x);

/// True when |a - b| <= 10^(-digits) * max(1, |a|, |b|).
bool agree_to_digits(const BigFloat& a, const BigFloat& b, int digits);

}  // namespace hpm
