#pragma once

#include <vector>

#include "hpm/polynomial.hpp"
#include "hpm/series.hpp"

namespace hpm::testing {

// Independent symbolic oracles: truncated power series in t with
// polynomial-in-s coefficients, and determinants by Laplace expansion.

using TSeries = std::vector<SlopePolynomial>;  // coefficient k multiplies t^k

inline TSeries mul(const TSeries& a, const TSeries& b) {
  TSeries out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline TSeries deriv(const TSeries& a) {
  TSeries out(a.size() > 1 ? a.size() - 1 : 1);
  for (size_t k = 1; k < a.size(); ++k) out[k - 1] = a[k] * Rational(static_cast<long>(k));
  return out;
}

// t^shift * a
inline TSeries shift(const TSeries& a, size_t by) {
  TSeries out(by, SlopePolynomial());
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

inline TSeries sub(TSeries a, const TSeries& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  return a;
}

// T(f, t) = t (f f'' + f'^2) - f f' - 2 t^2 f^3, expanded exactly.
inline TSeries transformed_equation(const TSeries& f) {
  const auto fp = deriv(f);
  const auto fpp = deriv(fp);
  auto first = shift(mul(f, fpp), 1);
  auto sq = shift(mul(fp, fp), 1);
  if (first.size() < sq.size()) first.resize(sq.size());
  for (size_t k = 0; k < sq.size(); ++k) first[k] += sq[k];
  auto cubic = shift(mul(mul(f, f), f), 2);
  for (auto& c : cubic) c *= Rational(2);
  return sub(sub(first, mul(f, fp)), cubic);
}

using Matrix = std::vector<std::vector<SlopePolynomial>>;

// Laplace expansion along the first row.
inline SlopePolynomial cofactor_det(const Matrix& m) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  SlopePolynomial total;
  for (size_t col = 0; col < n; ++col) {
    Matrix minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<SlopePolynomial> row;
      for (size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    const auto term = m[0][col] * cofactor_det(minor);
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

inline Matrix hankel_matrix(const SymbolicSeries& S, int D, int d) {
  Matrix m(static_cast<size_t>(D));
  for (int i = 0; i < D; ++i) {
    for (int j = 0; j < D; ++j) m[static_cast<size_t>(i)].push_back(S[i + j + d + 1]);
  }
  return m;
}

}  // namespace hpm::testing
