#pragma once

#include <vector>

#include "hpm/bigfloat.hpp"
#include "hpm/polynomial.hpp"

namespace hpm {

struct RealRoot {
  BigFloat value;
  int multiplicity = 1;
  /// False only when the polynomial was too large for the exact Sturm
  /// count and the root was found by sign-change scanning alone.
  bool certified = true;

  bool is_simple() const noexcept { return multiplicity == 1; }
};

/// Degree up to which root counts are certified with exact Sturm sequences.
inline constexpr int kSturmDegreeLimit = 60;

/// Sturm chain of p: p, p', then negated remainders.
class SturmChain {
 public:
  explicit SturmChain(const SlopePolynomial& p);

  /// Number of distinct real roots in the half-open interval (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;

 private:
  int sign_variations(const Rational& x) const;

  std::vector<SlopePolynomial> chain_;
};

/// All real roots of p in [lo, hi], ascending, refined to `precision`
/// decimal digits, each with its exact multiplicity. Throws ZeroPolynomial
/// when p is identically zero.
std::vector<RealRoot> poly_real_roots(const SlopePolynomial& p, const Rational& lo, const Rational& hi,
                                      Precision precision);

}  // namespace hpm
