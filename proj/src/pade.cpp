#include "hpm/pade.hpp"

#include <algorithm>
#include <string>

#include "hpm/error.hpp"

namespace hpm {

namespace {

/// Solves A x = rhs (n x n, row-major) with full pivoting.
std::vector<BigFloat> solve_full_pivot(std::vector<BigFloat> A, std::vector<BigFloat> rhs, size_t n,
                                       const BigFloat& singular_below) {
  auto at = [&](size_t i, size_t j) -> BigFloat& { return A[i * n + j]; };
  std::vector<size_t> col(n);
  for (size_t j = 0; j < n; ++j) col[j] = j;

  BigFloat scale = abs(rhs.empty() ? BigFloat(singular_below.precision()) : rhs.front());
  for (const auto& v : A) {
    if (abs(v) > scale) scale = abs(v);
  }
  const BigFloat threshold = scale * singular_below;

  for (size_t k = 0; k < n; ++k) {
    size_t pr = k, pc = k;
    for (size_t i = k; i < n; ++i) {
      for (size_t j = k; j < n; ++j) {
        if (abs(at(i, j)) > abs(at(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (abs(at(pr, pc)) <= threshold) {
      throw Error(ErrorKind::SingularSystem, "denominator system is singular at working precision");
    }
    if (pr != k) {
      for (size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pr, j));
      std::swap(rhs[k], rhs[pr]);
    }
    if (pc != k) {
      for (size_t i = 0; i < n; ++i) std::swap(at(i, k), at(i, pc));
      std::swap(col[k], col[pc]);
    }
    for (size_t i = k + 1; i < n; ++i) {
      if (at(i, k).is_zero()) continue;
      const BigFloat factor = at(i, k) / at(k, k);
      for (size_t j = k + 1; j < n; ++j) at(i, j) -= factor * at(k, j);
      rhs[i] -= factor * rhs[k];
    }
  }
  std::vector<BigFloat> y(n, BigFloat(singular_below.precision()));
  for (size_t k = n; k-- > 0;) {
    BigFloat acc = rhs[k];
    for (size_t j = k + 1; j < n; ++j) acc -= at(k, j) * y[j];
    y[k] = acc / at(k, k);
  }
  std::vector<BigFloat> x(n, BigFloat(singular_below.precision()));
  for (size_t k = 0; k < n; ++k) x[col[k]] = std::move(y[k]);
  return x;
}

struct Horner {
  BigFloat value;
  BigFloat slope;
};

Horner horner(const std::vector<BigFloat>& c, const BigFloat& t) {
  BigFloat v(t.precision()), d(t.precision());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * t + v;
    v = v * t + *it;
  }
  return {std::move(v), std::move(d)};
}

}  // namespace

PadeApproximant pade_construct(const NumericSeries& series, int M, int N) {
  if (M < 0 || N < 0) throw Error(ErrorKind::InvalidArgument, "Pade degrees must be non-negative");
  if (series.nmax < M + N) {
    throw Error(ErrorKind::InsufficientSeries,
                "series order " + std::to_string(series.nmax) + " < M + N = " + std::to_string(M + N));
  }
  const Precision p = series.precision;
  const Precision work = p.plus(kGuardDigits);
  auto c = [&](int j) { return j < 0 ? BigFloat(work) : series[j].rounded(work); };

  std::vector<BigFloat> b{BigFloat(1, work)};
  if (N > 0) {
    // sum_{k=1..N} b_k c_{M+i-k} = -c_{M+i},  i = 1..N
    const auto n = static_cast<size_t>(N);
    std::vector<BigFloat> A;
    std::vector<BigFloat> rhs;
    A.reserve(n * n);
    for (int i = 1; i <= N; ++i) {
      for (int k = 1; k <= N; ++k) A.push_back(c(M + i - k));
      rhs.push_back(-c(M + i));
    }
    auto tail = solve_full_pivot(std::move(A), std::move(rhs), n, BigFloat::pow10(-(p.digits() - 5), work));
    for (auto& v : tail) b.push_back(std::move(v));
  }
  std::vector<BigFloat> a;
  for (int i = 0; i <= M; ++i) {
    BigFloat acc(work);
    for (int k = 0; k <= std::min(i, N); ++k) acc += b[static_cast<size_t>(k)] * c(i - k);
    a.push_back(std::move(acc));
  }

  PadeApproximant P;
  P.M = M;
  P.N = N;
  for (auto& v : a) P.a.push_back(v.rounded(p));
  for (auto& v : b) P.b.push_back(v.rounded(p));
  P.slope_s = series.slope_s;
  P.precision = p;

  // Order matching, checked on the rounded coefficients handed back.
  const auto expansion = pade_taylor(P, M + N);
  BigFloat scale(1, p);
  for (int j = 0; j <= M + N; ++j) {
    if (abs(series[j]) > scale) scale = abs(series[j]);
  }
  const BigFloat allowed = scale * BigFloat::pow10(-(p.digits() - 8), p);
  for (int j = 0; j <= M + N; ++j) {
    if (abs(expansion[static_cast<size_t>(j)] - series[j]) > allowed) {
      throw Error(ErrorKind::SingularSystem, "approximant fails to match the series at order " + std::to_string(j));
    }
  }
  return P;
}

std::vector<BigFloat> pade_taylor(const PadeApproximant& P, int order) {
  const Precision work = P.precision.plus(kGuardDigits);
  std::vector<BigFloat> e;
  for (int j = 0; j <= order; ++j) {
    BigFloat acc = j <= P.M ? P.a[static_cast<size_t>(j)].rounded(work) : BigFloat(work);
    for (int k = 1; k <= std::min(j, P.N); ++k) {
      acc -= P.b[static_cast<size_t>(k)] * e[static_cast<size_t>(j - k)];
    }
    e.push_back(std::move(acc));
  }
  for (auto& v : e) v = v.rounded(P.precision);
  return e;
}

PadeValue pade_eval(const PadeApproximant& P, const BigFloat& t) {
  const Precision work = P.precision.plus(kGuardDigits);
  const BigFloat x = t.rounded(work);
  auto num = horner(P.a, x);
  auto den = horner(P.b, x);
  if (abs(den.value) <= BigFloat::pow10(-(P.precision.digits() - 10), work)) {
    throw Error(ErrorKind::PoleEncountered, "denominator vanishes at t = " + t.to_string(20));
  }
  BigFloat f = num.value / den.value;
  BigFloat fprime = (num.slope * den.value - num.value * den.slope) / (den.value * den.value);
  return {f.rounded(P.precision), fprime.rounded(P.precision)};
}

TFEvaluation tf_eval(const PadeApproximant& P, const BigFloat& x) {
  if (x.sign() < 0) throw Error(ErrorKind::InvalidArgument, "x must be non-negative");
  const Precision p = P.precision;
  if (x.is_zero()) return {x.rounded(p), BigFloat(1, p), (P.slope_s * 2).rounded(p)};
  const Precision work = p.plus(kGuardDigits);
  const BigFloat t = sqrt(x.rounded(work));
  const auto value = pade_eval(P, t);
  BigFloat u = value.f * value.f;
  BigFloat uprime = value.f * value.fprime / t;
  return {x.rounded(p), u.rounded(p), uprime.rounded(p)};
}

std::vector<TableRow> tf_table(const PadeApproximant& P, const std::vector<BigFloat>& xs) {
  std::vector<TableRow> rows;
  rows.reserve(xs.size());
  for (const auto& x : xs) {
    TableRow row{x, std::nullopt, {}};
    try {
      row.value = tf_eval(P, x);
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hpm
