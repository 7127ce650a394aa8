#include "hpm/series.hpp"

#include <string>

#include "hpm/error.hpp"

namespace hpm {

namespace {

void require_order(int nmax) {
  if (nmax < 3) throw Error(ErrorKind::InvalidOrder, "nmax must be >= 3, got " + std::to_string(nmax));
}

/// Runs the recurrence over any ring-like coefficient type. `scale(x, k)`
/// multiplies by an integer and `divide(x, k)` divides by one.
template <typename T, typename Scale, typename Divide>
std::vector<T> run_recurrence(int nmax, T one, T zero, T slope, Scale scale, Divide divide) {
  const auto n_terms = static_cast<size_t>(nmax) + 1;
  std::vector<T> f;
  f.reserve(n_terms);
  f.push_back(one);
  f.push_back(zero);
  f.push_back(slope);

  // Running square and cube, each entry filled once its inputs exist.
  std::vector<T> square;
  std::vector<T> cube;
  for (int n = 3; n <= nmax; ++n) {
    const auto m = static_cast<size_t>(n - 3);
    T sq = zero;
    for (size_t i = 0; i <= m; ++i) sq += f[i] * f[m - i];
    square.push_back(sq);
    T cu = zero;
    for (size_t i = 0; i <= m; ++i) cu += square[i] * f[m - i];
    cube.push_back(cu);

    T sum = zero;
    for (int k = 1; k < n; ++k) {
      if (k == n - 1) continue;  // f_1 = 0
      sum += scale(f[static_cast<size_t>(n - k)] * f[static_cast<size_t>(k)], k);
    }
    T numerator = scale(cube[m], 2) - scale(sum, n - 2);
    f.push_back(divide(numerator, n * (n - 2)));
  }
  f.resize(n_terms, zero);
  return f;
}

}  // namespace

SymbolicSeries symbolic_coeffs(int nmax) {
  require_order(nmax);
  auto scale = [](SlopePolynomial p, long k) { return p *= Rational(k); };
  auto divide = [](SlopePolynomial p, long k) { return p *= Rational(1, k); };
  SymbolicSeries out;
  out.nmax = nmax;
  out.coeffs = run_recurrence<SlopePolynomial>(nmax, SlopePolynomial::constant(Rational(1)), SlopePolynomial(),
                                               SlopePolynomial::identity(), scale, divide);
  return out;
}

NumericSeries numeric_coeffs(int nmax, const BigFloat& slope_s, Precision precision) {
  require_order(nmax);
  const Precision work = precision.plus(kGuardDigits);
  auto scale = [](BigFloat x, long k) { return x *= k; };
  auto divide = [](BigFloat x, long k) { return x /= k; };
  auto raw = run_recurrence<BigFloat>(nmax, BigFloat(1, work), BigFloat(work), slope_s.rounded(work), scale, divide);

  NumericSeries out;
  out.nmax = nmax;
  out.slope_s = slope_s.rounded(precision);
  out.precision = precision;
  out.coeffs.reserve(raw.size());
  for (const auto& c : raw) out.coeffs.push_back(c.rounded(precision));
  return out;
}

BigFloat residual_check(const NumericSeries& series, const BigFloat& t) {
  const Precision work = series.precision.plus(kGuardDigits);
  const BigFloat x = t.rounded(work);
  BigFloat f(work), fp(work), fpp(work);
  for (int j = series.nmax; j >= 0; --j) {
    fpp = fpp * x + fp;
    fp = fp * x + f;
    f = f * x + series[j];
  }
  // Horner above yields p(x), p'(x) and p''(x)/2.
  fpp *= 2;
  BigFloat residual = x * (f * fpp + fp * fp) - f * fp - x * x * f * f * f * 2;
  return residual.rounded(series.precision);
}

}  // namespace hpm
