#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hpm/bigfloat.hpp"
#include "hpm/polynomial.hpp"
#include "hpm/series.hpp"

namespace hpm {

/// Hankel matrix of dimension D with entries f_(i+j+d+1), i, j = 0..D-1.
/// The displacement d must be >= 3 because f_4 is the first coefficient
/// that depends on the slope.
struct HankelSpec {
  int D = 1;
  int d = 3;

  /// Throws InvalidArgument for D < 1 or d < 3.
  void validate() const;
  /// Highest Taylor index used: 2(D-1) + d + 1.
  int required_order() const { return 2 * (D - 1) + d + 1; }
};

/// Practical bound on the dimension for exact determinants.
inline constexpr int kExactDimensionLimit = 12;

/// Exact determinant as a polynomial in s (fraction-free elimination).
/// Throws InsufficientSeries or DimensionTooLarge.
SlopePolynomial det_exact(const SymbolicSeries& series, const HankelSpec& spec);

struct DetSign {
  /// -1, 0 or +1; 0 means the sign could not be certified at the requested
  /// precision, not that the determinant vanishes.
  int sign = 0;
  double log10_magnitude = 0.0;
};

/// Determinant by partially pivoted elimination on the numeric series.
DetSign det_numeric(const NumericSeries& series, const HankelSpec& spec);
/// Builds the series at s itself and evaluates the determinant.
DetSign det_numeric(const HankelSpec& spec, const BigFloat& s, Precision precision);

/// Determinant value together with its sign certificate.
struct DetValue {
  BigFloat value;
  bool certified = false;
};
DetValue det_value(const HankelSpec& spec, const BigFloat& s, Precision precision);

/// Root of s -> det(s) nearest to `seed` inside [seed - w, seed + w].
/// The returned value carries the precision actually used, which exceeds
/// the request when the self-validation ladder had to escalate.
/// Throws NoSignChange or PrecisionExhausted.
BigFloat root_for(const HankelSpec& spec, const BigFloat& seed, const BigFloat& window_halfwidth,
                  Precision precision);

/// Working-precision schedule for root sequences.
struct PrecisionPolicy {
  /// Fixed digits for every D; empty means 40 + 2 D.
  std::optional<int> fixed_digits;

  static PrecisionPolicy automatic() { return {}; }
  static PrecisionPolicy fixed(int digits) { return {digits}; }

  Precision for_dimension(int D) const { return Precision(fixed_digits ? *fixed_digits : 40 + 2 * D); }
  bool is_automatic() const { return !fixed_digits.has_value(); }
};

/// Growth factor applied on each escalation and the number allowed.
inline constexpr double kEscalationFactor = 1.5;
inline constexpr int kMaxEscalations = 3;

struct RootRecord {
  int D = 0;
  BigFloat root_s{Precision(10)};
  /// |2 root(D) - 2 root(D-1)|; absent when D-1 has no record.
  std::optional<BigFloat> delta;
  int precision_used = 0;

  BigFloat two_f2() const { return root_s * 2; }
};

struct RootSequence {
  int d = 3;
  std::vector<RootRecord> records;
  /// Dimensions at which no real root continues the branch (the nearby
  /// roots left the real axis as a complex pair).
  std::vector<int> skipped;

  const RootRecord& last() const { return records.back(); }
};

/// Tracks the branch of roots f2^[D,d] for D = 2 .. Dmax.
///   D = 2:    every simple real root of the exact determinant in [-2, 0];
///   D = 3, 4: nearest simple root of the exact determinant, the branch
///             with the smallest |root(4) - root(3)| wins;
///   D >= 5:   nearest root of the numeric determinant within a window of
///             ten times the typical recent step, widened twice by a
///             factor of four before the dimension is skipped.
RootSequence root_sequence(int d, int Dmax, const PrecisionPolicy& policy = PrecisionPolicy::automatic());

/// Runs several sequences concurrently; results follow the order of `ds`.
std::vector<RootSequence> root_sequences(const std::vector<int>& ds, int Dmax,
                                         const PrecisionPolicy& policy = PrecisionPolicy::automatic());

/// Least-squares line log10(delta) = level + slope_per_D * D.
struct ConvergenceFit {
  double slope_per_D = 0.0;
  double level = 0.0;
  std::pair<int, int> Drange{0, 0};
  int points = 0;
};

/// Throws InsufficientData with fewer than 4 nonzero deltas in range.
ConvergenceFit convergence_fit(const RootSequence& seq, int Dmin, int Dmax);

}  // namespace hpm
