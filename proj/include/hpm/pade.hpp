#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpm/bigfloat.hpp"
#include "hpm/series.hpp"

namespace hpm {

/// Rational approximant [M/N](t) = sum a_j t^j / sum b_j t^j with b_0 = 1
/// whose Taylor expansion matches the source series through t^(M+N).
struct PadeApproximant {
  int M = 0;
  int N = 0;
  std::vector<BigFloat> a;
  std::vector<BigFloat> b;
  BigFloat slope_s{Precision(10)};
  Precision precision{10};
};

/// Solves the denominator conditions at orders M+1 .. M+N by Gaussian
/// elimination with full pivoting, then the numerator by convolution, and
/// checks the order-matching condition. Throws InsufficientSeries or
/// SingularSystem.
PadeApproximant pade_construct(const NumericSeries& series, int M, int N);

/// Taylor coefficients of a(t)/b(t) through t^order.
std::vector<BigFloat> pade_taylor(const PadeApproximant& P, int order);

struct PadeValue {
  BigFloat f;
  BigFloat fprime;
};

/// Value and derivative (quotient rule). Throws PoleEncountered when the
/// denominator vanishes at working precision.
PadeValue pade_eval(const PadeApproximant& P, const BigFloat& t);

/// Thomas-Fermi function from the approximant of f(t) = u(t^2)^(1/2):
/// u = f(sqrt x)^2 and u' = f f' / sqrt x, with u'(0) = 2 s exactly.
struct TFEvaluation {
  BigFloat x;
  BigFloat u;
  BigFloat uprime;
};

TFEvaluation tf_eval(const PadeApproximant& P, const BigFloat& x);

struct TableRow {
  BigFloat x;
  std::optional<TFEvaluation> value;
  std::string error;  // set when value is empty
};

/// One row per abscissa, in input order; failures are reported per row.
std::vector<TableRow> tf_table(const PadeApproximant& P, const std::vector<BigFloat>& xs);

}  // namespace hpm
