#include "hpm/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <utility>

#include "hpm/error.hpp"

namespace hpm {

namespace {

constexpr double kBitsPerDigit = 3.3219280948873623;

struct MpfrStrDeleter {
  void operator()(char* p) const noexcept { mpfr_free_str(p); }
};

}  // namespace

mpfr_prec_t Precision::bits() const noexcept {
  return static_cast<mpfr_prec_t>(std::ceil(std::max(digits_, 1) * kBitsPerDigit)) + 2;
}

BigFloat::BigFloat(Precision precision) : precision_(precision) {
  mpfr_init2(value_, precision_.bits());
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, Precision precision) : precision_(precision) {
  mpfr_init2(value_, precision_.bits());
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, Precision precision) : precision_(precision) {
  mpfr_init2(value_, precision_.bits());
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view text, Precision precision) {
  BigFloat out(precision);
  std::string owned(text);
  if (owned.empty() || mpfr_set_str(out.value_, owned.c_str(), 10, MPFR_RNDN) != 0) {
    throw Error(ErrorKind::InvalidArgument, "not a decimal number: '" + owned + "'");
  }
  return out;
}

BigFloat BigFloat::pow10(long exponent, Precision precision) {
  BigFloat out(10, precision);
  if (exponent >= 0) {
    mpfr_pow_ui(out.value_, out.value_, static_cast<unsigned long>(exponent), MPFR_RNDN);
  } else {
    mpfr_pow_si(out.value_, out.value_, exponent, MPFR_RNDN);
  }
  return out;
}

BigFloat::BigFloat(const BigFloat& other) : precision_(other.precision_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : precision_(other.precision_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    precision_ = other.precision_;
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) {
    std::swap(precision_, other.precision_);
    mpfr_swap(value_, other.value_);
  }
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::rounded(Precision precision) const {
  BigFloat out(precision);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

double BigFloat::log10_abs() const noexcept {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  // Split into mantissa and binary exponent so huge exponents survive.
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, value_, MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
}

std::string BigFloat::to_string(int significant) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  significant = std::max(significant, 1);

  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, MpfrStrDeleter> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant), value_, MPFR_RNDN));
  std::string digits(raw.get());
  std::string sign_str;
  if (!digits.empty() && digits.front() == '-') {
    sign_str = "-";
    digits.erase(0, 1);
  }
  // value = 0.DIGITS * 10^exp10, so the leading digit has exponent exp10 - 1.
  const long lead = static_cast<long>(exp10) - 1;
  const auto n = static_cast<long>(digits.size());
  std::string body;
  if (lead >= -7 && lead < 21) {
    if (exp10 <= 0) {
      body = "0." + std::string(static_cast<size_t>(-exp10), '0') + digits;
    } else if (exp10 >= n) {
      body = digits + std::string(static_cast<size_t>(exp10 - n), '0');
    } else {
      body = digits.substr(0, static_cast<size_t>(exp10)) + "." + digits.substr(static_cast<size_t>(exp10));
    }
  } else {
    body = digits.substr(0, 1);
    if (n > 1) body += "." + digits.substr(1);
    body += "e" + std::to_string(lead);
  }
  return sign_str + body;
}

void BigFloat::adopt_precision(const BigFloat& rhs) {
  if (rhs.precision_ > precision_) {
    precision_ = rhs.precision_;
    mpfr_prec_round(value_, precision_.bits(), MPFR_RNDN);
  }
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  adopt_precision(rhs);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  adopt_precision(rhs);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  adopt_precision(rhs);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  adopt_precision(rhs);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x);
  mpfr_abs(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat out(x);
  mpfr_sqrt(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigFloat log10(const BigFloat& x) {
  BigFloat out(x);
  mpfr_log10(out.value_, out.value_, MPFR_RNDN);
  return out;
}

bool agree_to_digits(const BigFloat& a, const BigFloat& b, int digits) {
  const Precision p = std::max(a.precision(), b.precision());
  BigFloat scale(1, p);
  if (abs(a) > scale) scale = abs(a);
  if (abs(b) > scale) scale = abs(b);
  return abs(a - b) <= scale * BigFloat::pow10(-digits, p);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational literal");
  if (text.find('/') != std::string::npos) {
    Rational r;
    if (r.set_str(text, 10) != 0 || r.get_den() == 0) {
      throw Error(ErrorKind::InvalidArgument, "not a fraction: '" + text + "'");
    }
    r.canonicalize();
    return r;
  }
  // Decimal literal: [sign] digits [. digits] [e exponent]
  size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  std::string mantissa;
  long scale = 0;
  bool seen_point = false;
  for (; i < text.size() && text[i] != 'e' && text[i] != 'E'; ++i) {
    const char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      mantissa.push_back(c);
      if (seen_point) --scale;
    } else {
      throw Error(ErrorKind::InvalidArgument, "not a decimal: '" + text + "'");
    }
  }
  if (mantissa.empty()) throw Error(ErrorKind::InvalidArgument, "not a decimal: '" + text + "'");
  if (i < text.size()) {
    try {
      size_t used = 0;
      scale += std::stol(text.substr(i + 1), &used);
      if (used != text.size() - i - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad exponent in '" + text + "'");
    }
  }
  mpz_class num(mantissa, 10);
  mpz_class pow;
  mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational r = scale >= 0 ? Rational(num * pow) : Rational(num, pow);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace hpm
