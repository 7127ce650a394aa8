#include <doctest.h>

#include <random>

#include "hpm/error.hpp"
#include "hpm/series.hpp"
#include "oracles.hpp"

using namespace hpm;
using namespace hpm::testing;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_SUITE("series") {

TEST_CASE("leading coefficients") {
  const auto S = symbolic_coeffs(6);
  CHECK(S[0] == SlopePolynomial::constant(1));
  CHECK(S[1].is_zero());
  CHECK(S[2] == SlopePolynomial::identity());
  CHECK(S[3] == SlopePolynomial::constant(q(2, 3)));
  CHECK(S[4] == SlopePolynomial::monomial(q(-1, 2), 2));
  CHECK(S[5] == SlopePolynomial::monomial(q(-4, 15), 1));
  CHECK(S[6] == SlopePolynomial::monomial(q(1, 2), 3) - SlopePolynomial::constant(q(1, 18)));
  CHECK_THROWS_AS(symbolic_coeffs(2), Error);
  CHECK_THROWS_AS(numeric_coeffs(2, BigFloat(1, Precision(20)), Precision(20)), Error);
}

TEST_CASE("constants and degree bound hold for every order") {
  for (int nmax : {3, 7, 20, 40}) {
    const auto S = symbolic_coeffs(nmax);
    REQUIRE(static_cast<int>(S.coeffs.size()) == nmax + 1);
    CHECK(S[0] == SlopePolynomial::constant(1));
    CHECK(S[1].is_zero());
    CHECK(S[3] == SlopePolynomial::constant(q(2, 3)));
    for (int j = 0; j <= nmax; ++j) CHECK(S[j].degree() <= j / 2);
  }
}

TEST_CASE("truncated series annihilates the transformed equation") {
  const int nmax = 20;
  const auto S = symbolic_coeffs(nmax);
  const auto T = transformed_equation(S.coeffs);
  for (int k = 0; k < nmax; ++k) {
    CAPTURE(k);
    CHECK(T[static_cast<size_t>(k)].is_zero());
  }
  CHECK_FALSE(T[static_cast<size_t>(nmax)].is_zero());
}

TEST_CASE("numeric series examples") {
  const Precision p(30);
  const auto N3 = numeric_coeffs(3, BigFloat::parse("0.37", p), p);
  REQUIRE(N3.coeffs.size() == 4);
  CHECK(N3[0] == BigFloat(1, p));
  CHECK(N3[1].is_zero());
  CHECK(N3[2] == BigFloat::parse("0.37", p));
  CHECK(agree_to_digits(N3[3], BigFloat(q(2, 3), p), 29));

  const auto s = BigFloat::parse("-0.794035511305688", p);
  const auto N = numeric_coeffs(6, s, p);
  CHECK(agree_to_digits(N[4], -(s * s) / 2, 28));
  CHECK(N[4].to_string(6) == "-0.315246");
}

TEST_CASE("numeric and symbolic backends agree") {
  SUBCASE("s = -4/5, 50 digits, j <= 40") {
    const Precision p(50);
    const Rational s = q(-4, 5);
    const auto S = symbolic_coeffs(40);
    const auto N = numeric_coeffs(40, BigFloat(s, p), p);
    for (int j = 0; j <= 40; ++j) {
      CAPTURE(j);
      CHECK(agree_to_digits(N[j], BigFloat(S[j].evaluate(s), p), 45));
    }
  }
  SUBCASE("random rational slopes in [-2, 0]") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-2000, 0);
    const Precision p(40);
    const auto S = symbolic_coeffs(30);
    for (int i = 0; i < 10; ++i) {
      const Rational s = make_rational(num(rng), 1000);
      const auto N = numeric_coeffs(30, BigFloat(s, p), p);
      for (int j = 0; j <= 30; ++j) {
        const BigFloat exact(S[j].evaluate(s), p);
        CHECK(abs(N[j] - exact) <= BigFloat::pow10(-(p.digits() - 5), p) * (abs(exact) + BigFloat(1, p)));
      }
    }
  }
}

TEST_CASE("residual") {
  const Precision p(40);
  const auto s = BigFloat::parse("-0.7940355113", p);
  SUBCASE("vanishes at the origin") {
    CHECK(residual_check(numeric_coeffs(10, s, p), BigFloat(p)).is_zero());
  }
  SUBCASE("scales like t^nmax") {
    const auto N = numeric_coeffs(10, s, p);
    const auto r1 = residual_check(N, BigFloat::parse("0.1", p));
    const auto r2 = residual_check(N, BigFloat::parse("0.2", p));
    const double ratio = (r2 / r1).to_double();
    CHECK(ratio == doctest::Approx(1024.0).epsilon(0.15));
  }
  SUBCASE("matches exact substitution at t = 1/2 for nmax = 20") {
    const Rational s_exact = parse_rational("-0.7940355113");
    const auto T = transformed_equation(symbolic_coeffs(20).coeffs);
    Rational exact = 0;
    for (auto it = T.rbegin(); it != T.rend(); ++it) exact = exact * q(1, 2) + it->evaluate(s_exact);
    const auto r = residual_check(numeric_coeffs(20, s, p), BigFloat::parse("0.5", p));
    CHECK(agree_to_digits(r, BigFloat(exact, p), 30));
    CHECK(abs(r) < BigFloat::pow10(-2, p));
  }
}

}  // TEST_SUITE
