#include "hpm/hankel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <string>

#include "hpm/error.hpp"
#include "hpm/real_roots.hpp"

namespace hpm {

namespace {

/// Raised inside the root ladder when the current precision cannot
/// certify a sign or verify a bracket.
struct NeedsMorePrecision {};

BigFloat determinant(std::vector<BigFloat> a, int n) {
  const auto N = static_cast<size_t>(n);
  auto at = [&](size_t i, size_t j) -> BigFloat& { return a[i * N + j]; };
  const Precision p = a.front().precision();
  BigFloat det(1, p);
  for (size_t k = 0; k < N; ++k) {
    size_t pivot = k;
    for (size_t i = k + 1; i < N; ++i) {
      if (abs(at(i, k)) > abs(at(pivot, k))) pivot = i;
    }
    if (at(pivot, k).is_zero()) return BigFloat(p);
    if (pivot != k) {
      for (size_t j = k; j < N; ++j) std::swap(at(k, j), at(pivot, j));
      det = -det;
    }
    const BigFloat& pk = at(k, k);
    for (size_t i = k + 1; i < N; ++i) {
      if (at(i, k).is_zero()) continue;
      const BigFloat factor = at(i, k) / pk;
      for (size_t j = k + 1; j < N; ++j) at(i, j) -= factor * at(k, j);
    }
    det *= pk;
  }
  return det;
}

BigFloat hankel_det(const NumericSeries& series, const HankelSpec& spec, Precision precision) {
  const auto n = static_cast<size_t>(spec.D);
  std::vector<BigFloat> a;
  a.reserve(n * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      a.push_back(series[static_cast<int>(i + j) + spec.d + 1].rounded(precision));
    }
  }
  return determinant(std::move(a), spec.D);
}

void require_series(const HankelSpec& spec, int nmax) {
  spec.validate();
  if (nmax < spec.required_order()) {
    throw Error(ErrorKind::InsufficientSeries, "series order " + std::to_string(nmax) + " < required " +
                                                   std::to_string(spec.required_order()));
  }
}

/// Determinant at the series precision, certified against a second
/// evaluation carried out kGuardDigits lower.
DetValue certified_det(const NumericSeries& series, const HankelSpec& spec) {
  require_series(spec, series.nmax);
  BigFloat hi = hankel_det(series, spec, series.precision);
  const Precision low(std::max(series.precision.digits() - kGuardDigits, 5));
  BigFloat lo = hankel_det(series, spec, low);
  const bool agree = hi.sign() != 0 && hi.sign() == lo.sign() && abs(hi - lo) * 2 <= abs(hi);
  return {std::move(hi), agree};
}

BigFloat tolerance_at(const BigFloat& x, Precision p) {
  BigFloat scale(1, p);
  if (abs(x) > scale) scale = abs(x);
  return scale * BigFloat::pow10(-p.digits(), p);
}

struct Sample {
  BigFloat x;
  BigFloat value;
};

Sample sample(const HankelSpec& spec, const BigFloat& x, Precision p) {
  DetValue v = det_value(spec, x, p);
  if (!v.certified) throw NeedsMorePrecision{};
  return {x, std::move(v.value)};
}

/// Illinois iteration on a sign-changing bracket, stopping once the
/// bracket is narrower than the tolerance.
std::pair<BigFloat, BigFloat> shrink_bracket(const HankelSpec& spec, Sample lo, Sample hi, Precision p,
                                             Precision target) {
  if (hi.x < lo.x) std::swap(lo, hi);
  int stale_side = 0;
  int since_halving = 0;
  BigFloat width_mark = hi.x - lo.x;
  for (int iter = 0; iter < 8 * p.bits(); ++iter) {
    const BigFloat width = hi.x - lo.x;
    if (width <= tolerance_at(lo.x, target)) return {lo.x, hi.x};

    BigFloat c = hi.x - hi.value * width / (hi.value - lo.value);
    if (!(c > lo.x && c < hi.x) || since_halving >= 3) c = (lo.x + hi.x) / 2;
    DetValue v = det_value(spec, c, p);
    if (!v.certified) {
      // The iterate sits within resolution of the root while the far end
      // of the bracket may still be distant: close in around it directly.
      const BigFloat half = tolerance_at(c, target) / 2;
      DetValue left = det_value(spec, c - half, p);
      DetValue right = det_value(spec, c + half, p);
      if (left.certified && right.certified && left.value.sign() != right.value.sign()) {
        return {c - half, c + half};
      }
      throw NeedsMorePrecision{};
    }

    if (v.value.sign() == hi.value.sign()) {
      hi = {c, std::move(v.value)};
      if (stale_side == 1) lo.value /= 2;
      stale_side = 1;
    } else {
      lo = {c, std::move(v.value)};
      if (stale_side == -1) hi.value /= 2;
      stale_side = -1;
    }
    if ((hi.x - lo.x) * 2 <= width_mark) {
      width_mark = hi.x - lo.x;
      since_halving = 0;
    } else {
      ++since_halving;
    }
  }
  throw NeedsMorePrecision{};
}

/// Scans outward from the seed on a geometric grid, fine near the seed and
/// coarse at the window edge, at working precision `p`; the first bracket
/// found is refined to `target` digits.
BigFloat locate_root(const HankelSpec& spec, const BigFloat& seed_in, const BigFloat& w, Precision p,
                     Precision target) {
  constexpr double kScanGrowth = 1.25;
  constexpr int kScanDecades = 4;
  const int steps = static_cast<int>(std::ceil(kScanDecades / std::log10(kScanGrowth)));
  const BigFloat seed = seed_in.rounded(p);
  BigFloat offset = w.rounded(p) * BigFloat::pow10(-kScanDecades, p);
  BigFloat growth = BigFloat::parse("1.25", p);

  const Sample center = sample(spec, seed, p);
  Sample left = center;
  Sample right = center;
  for (int k = 0; k <= steps; ++k, offset *= growth) {
    std::vector<std::pair<Sample, Sample>> brackets;
    Sample r = sample(spec, seed + offset, p);
    if (r.value.sign() != right.value.sign()) brackets.emplace_back(right, r);
    right = std::move(r);
    Sample l = sample(spec, seed - offset, p);
    if (l.value.sign() != left.value.sign()) brackets.emplace_back(l, left);
    left = std::move(l);
    if (brackets.empty()) continue;

    std::optional<BigFloat> best;
    for (auto& [a, b] : brackets) {
      auto [lo, hi] = shrink_bracket(spec, a, b, p, target);
      // Re-verify the final bracket with twenty more digits.
      const Precision check = p.plus(20);
      if (lo != hi) {
        DetValue vlo = det_value(spec, lo, check);
        DetValue vhi = det_value(spec, hi, check);
        if (!vlo.certified || !vhi.certified || vlo.value.sign() == vhi.value.sign()) throw NeedsMorePrecision{};
      }
      BigFloat root = (lo + hi) / 2;
      if (!best || abs(root - seed) < abs(*best - seed)) best = std::move(root);
    }
    return best->rounded(p);
  }
  throw Error(ErrorKind::NoSignChange, "no sign change within " + w.to_string(6) + " of " + seed.to_string(20));
}

BigFloat nearest_to(const std::vector<BigFloat>& roots, const BigFloat& target) {
  const BigFloat* best = &roots.front();
  for (const auto& r : roots) {
    if (abs(r - target) < abs(*best - target)) best = &r;
  }
  return *best;
}

std::vector<BigFloat> simple_roots_in_search_interval(const SymbolicSeries& sym, const HankelSpec& spec,
                                                      Precision p) {
  const auto poly = det_exact(sym, spec);
  std::vector<BigFloat> out;
  if (poly.is_zero()) return out;
  for (auto& r : poly_real_roots(poly, Rational(-2), Rational(0), p)) {
    if (r.is_simple()) out.push_back(std::move(r.value));
  }
  return out;
}

/// Median of the last three steps |root(k) - root(k-1)| between records,
/// so one accidentally tiny or large step does not dictate the window.
BigFloat typical_step(const std::vector<RootRecord>& records) {
  std::vector<BigFloat> steps;
  for (size_t i = records.size() - 1; i > 0 && steps.size() < 3; --i) {
    steps.push_back(abs(records[i].root_s - records[i - 1].root_s));
  }
  std::sort(steps.begin(), steps.end(), [](const BigFloat& a, const BigFloat& b) { return a < b; });
  return steps[steps.size() / 2];
}

Error with_context(const Error& e, int d, int D) {
  return Error(e.kind(), "d=" + std::to_string(d) + ", D=" + std::to_string(D) + ": " + e.what());
}

}  // namespace

void HankelSpec::validate() const {
  if (D < 1) throw Error(ErrorKind::InvalidArgument, "Hankel dimension must be >= 1");
  if (d < 3) throw Error(ErrorKind::InvalidArgument, "Hankel displacement must be >= 3");
}

SlopePolynomial det_exact(const SymbolicSeries& series, const HankelSpec& spec) {
  require_series(spec, series.nmax);
  if (spec.D > kExactDimensionLimit) {
    throw Error(ErrorKind::DimensionTooLarge,
                "exact determinant limited to D <= " + std::to_string(kExactDimensionLimit));
  }
  const auto n = static_cast<size_t>(spec.D);
  std::vector<std::vector<SlopePolynomial>> m(n, std::vector<SlopePolynomial>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = series[static_cast<int>(i + j) + spec.d + 1];
  }
  // Bareiss: every division below is exact in Q[s].
  bool negate = false;
  SlopePolynomial previous = SlopePolynomial::constant(Rational(1));
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
      }
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

DetSign det_numeric(const NumericSeries& series, const HankelSpec& spec) {
  const DetValue v = certified_det(series, spec);
  DetSign out;
  out.sign = v.certified ? v.value.sign() : 0;
  out.log10_magnitude = v.value.log10_abs();
  return out;
}

DetValue det_value(const HankelSpec& spec, const BigFloat& s, Precision precision) {
  spec.validate();
  // The cross-check evaluation itself must resolve below 10^-precision.
  const NumericSeries series = numeric_coeffs(spec.required_order(), s, precision.plus(2 * kGuardDigits));
  DetValue v = certified_det(series, spec);
  v.value = v.value.rounded(precision);
  return v;
}

DetSign det_numeric(const HankelSpec& spec, const BigFloat& s, Precision precision) {
  spec.validate();
  const NumericSeries series = numeric_coeffs(spec.required_order(), s, precision.plus(kGuardDigits));
  return det_numeric(series, spec);
}

BigFloat root_for(const HankelSpec& spec, const BigFloat& seed, const BigFloat& window_halfwidth,
                  Precision precision) {
  spec.validate();
  if (window_halfwidth.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "window half-width must be positive");
  Precision p = precision;
  for (int attempt = 0;; ++attempt) {
    try {
      return locate_root(spec, seed, window_halfwidth, p, precision);
    } catch (const NeedsMorePrecision&) {
      if (attempt == kMaxEscalations) break;
      p = Precision(static_cast<int>(std::ceil(p.digits() * kEscalationFactor)));
    }
  }
  throw Error(ErrorKind::PrecisionExhausted,
              "root did not stabilize up to " + std::to_string(p.digits()) + " digits");
}

RootSequence root_sequence(int d, int Dmax, const PrecisionPolicy& policy) {
  if (d < 3) throw Error(ErrorKind::InvalidArgument, "displacement d must be >= 3");
  if (Dmax < 3) throw Error(ErrorKind::InvalidArgument, "Dmax must be >= 3");
  constexpr int kMaxConsecutiveSkips = 3;
  constexpr int kWindowExpansions = 2;

  RootSequence seq;
  seq.d = d;

  // Branch identification on exact determinants for D = 2, 3, 4.
  const SymbolicSeries sym = symbolic_coeffs(HankelSpec{4, d}.required_order());
  std::vector<std::vector<BigFloat>> exact_roots;
  for (int D = 2; D <= 4; ++D) {
    exact_roots.push_back(simple_roots_in_search_interval(sym, {D, d}, policy.for_dimension(D)));
    if (exact_roots.back().empty()) {
      throw with_context(Error(ErrorKind::NoSignChange, "no simple real root in [-2, 0]"), d, D);
    }
  }
  std::optional<std::array<BigFloat, 3>> branch;
  std::optional<BigFloat> best_gap;
  for (const auto& r2 : exact_roots[0]) {
    BigFloat r3 = nearest_to(exact_roots[1], r2);
    BigFloat r4 = nearest_to(exact_roots[2], r3);
    BigFloat gap = abs(r4 - r3);
    if (!best_gap || gap < *best_gap) {
      best_gap = gap;
      branch = std::array<BigFloat, 3>{r2, r3, r4};
    }
  }
  for (int D = 2; D <= std::min(4, Dmax); ++D) {
    RootRecord rec;
    rec.D = D;
    rec.root_s = (*branch)[static_cast<size_t>(D - 2)];
    rec.precision_used = policy.for_dimension(D).digits();
    if (D > 2) rec.delta = abs(rec.root_s - seq.records.back().root_s) * 2;
    seq.records.push_back(std::move(rec));
  }

  int consecutive_skips = 0;
  for (int D = 5; D <= Dmax; ++D) {
    const Precision p = policy.for_dimension(D);
    const RootRecord& last = seq.records.back();
    BigFloat window = typical_step(seq.records).rounded(p) * 10;
    const BigFloat floor = tolerance_at(last.root_s, p) * 10;
    if (window < floor) window = floor;

    std::optional<BigFloat> root;
    for (int expansion = 0; expansion <= kWindowExpansions && !root; ++expansion) {
      try {
        root = root_for({D, d}, last.root_s, window, p);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoSignChange) throw with_context(e, d, D);
        window *= 4;
      }
    }
    if (!root) {
      seq.skipped.push_back(D);
      if (++consecutive_skips > kMaxConsecutiveSkips) {
        throw with_context(Error(ErrorKind::NoSignChange, "branch lost for several dimensions"), d, D);
      }
      continue;
    }
    consecutive_skips = 0;
    RootRecord rec;
    rec.D = D;
    rec.precision_used = root->precision().digits();
    if (last.D == D - 1) rec.delta = abs(*root - last.root_s) * 2;
    rec.root_s = std::move(*root);
    seq.records.push_back(std::move(rec));
  }
  return seq;
}

std::vector<RootSequence> root_sequences(const std::vector<int>& ds, int Dmax, const PrecisionPolicy& policy) {
  std::vector<std::future<RootSequence>> jobs;
  jobs.reserve(ds.size());
  for (int d : ds) jobs.push_back(std::async(std::launch::async, [=] { return root_sequence(d, Dmax, policy); }));
  std::vector<RootSequence> out;
  out.reserve(ds.size());
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

ConvergenceFit convergence_fit(const RootSequence& seq, int Dmin, int Dmax) {
  long double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& rec : seq.records) {
    if (rec.D < Dmin || rec.D > Dmax || !rec.delta || rec.delta->is_zero()) continue;
    const long double x = rec.D;
    const long double y = rec.delta->log10_abs();
    n += 1;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  if (n < 4) {
    throw Error(ErrorKind::InsufficientData, "need at least 4 nonzero deltas in [" + std::to_string(Dmin) + ", " +
                                                 std::to_string(Dmax) + "]");
  }
  const long double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  ConvergenceFit fit;
  fit.slope_per_D = static_cast<double>(slope);
  fit.level = static_cast<double>((sy - slope * sx) / n);
  fit.Drange = {Dmin, Dmax};
  fit.points = static_cast<int>(n);
  return fit;
}

}  // namespace hpm
