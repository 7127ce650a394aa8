#include <doctest.h>

#include <cmath>
#include <string>

#include "hpm/cli.hpp"
#include "hpm/error.hpp"
#include "hpm/pade.hpp"
#include "table_reference.hpp"

using namespace hpm;

namespace {

NumericSeries geometric(int nmax, Precision p) {
  NumericSeries s;
  s.nmax = nmax;
  s.precision = p;
  s.slope_s = BigFloat(1, p);
  for (int j = 0; j <= nmax; ++j) s.coeffs.emplace_back(1, p);
  return s;
}

NumericSeries tf_series(int nmax, Precision p) {
  const auto s = BigFloat::parse(cli::kReferenceTwoF2, p) / 2;
  return numeric_coeffs(nmax, s, p);
}

}  // namespace

TEST_SUITE("pade") {

TEST_CASE("geometric series") {
  const Precision p(30);
  const auto P = pade_construct(geometric(4, p), 0, 1);
  REQUIRE(P.a.size() == 1);
  REQUIRE(P.b.size() == 2);
  CHECK(P.a[0] == BigFloat(1, p));
  CHECK(P.b[0] == BigFloat(1, p));
  CHECK(P.b[1] == BigFloat(-1, p));
  const auto v = pade_eval(P, BigFloat::parse("0.5", p));
  CHECK(v.f == BigFloat(2, p));
  CHECK(v.fprime == BigFloat(4, p));
  CHECK_THROWS_WITH_AS(pade_eval(P, BigFloat(1, p)), doctest::Contains("PoleEncountered"), Error);
}

TEST_CASE("degenerate inputs") {
  const Precision p(30);
  CHECK_THROWS_AS(pade_construct(geometric(4, p), 3, 3), Error);
  auto spike = geometric(4, p);
  for (int j = 1; j <= 4; ++j) spike.coeffs[static_cast<size_t>(j)] = BigFloat(p);
  CHECK_THROWS_WITH_AS(pade_construct(spike, 1, 1), doctest::Contains("SingularSystem"), Error);
}

TEST_CASE("zeroth order approximant is f0") {
  const Precision p(40);
  const auto P = pade_construct(tf_series(6, p), 0, 0);
  REQUIRE(P.a.size() == 1);
  CHECK(P.a[0] == BigFloat(1, p));
  CHECK(pade_eval(P, BigFloat::parse("0.7", p)).f == BigFloat(1, p));
}

TEST_CASE("order matching") {
  const Precision p(50);
  const auto series = tf_series(20, p);
  for (auto [M, N] : {std::pair{0, 0}, {2, 5}, {5, 8}, {4, 7}}) {
    CAPTURE(M);
    CAPTURE(N);
    const auto P = pade_construct(series, M, N);
    CHECK(P.b[0] == BigFloat(1, p));
    const auto e = pade_taylor(P, M + N);
    for (int j = 0; j <= M + N; ++j) {
      CHECK(abs(e[static_cast<size_t>(j)] - series[j]) <= BigFloat::pow10(-(p.digits() - 8), p));
    }
  }
}

TEST_CASE("derivative agrees with central difference") {
  const Precision p(60);
  const auto P = pade_construct(tf_series(13, p), 5, 8);
  const BigFloat h = BigFloat::pow10(-(p.digits() / 3), p);
  for (const char* t : {"0.3", "1", "2.5", "10"}) {
    const BigFloat x = BigFloat::parse(t, p);
    const auto v = pade_eval(P, x);
    const BigFloat fd = (pade_eval(P, x + h).f - pade_eval(P, x - h).f) / (h * 2);
    CAPTURE(t);
    CHECK(agree_to_digits(v.fprime, fd, 2 * p.digits() / 3 - 5));
  }
  const auto origin = pade_eval(P, BigFloat(p));
  CHECK(origin.f == BigFloat(1, p));
  CHECK(origin.fprime.is_zero());
}

TEST_CASE("Thomas-Fermi table") {
  const Precision p(50);
  const auto P = pade_construct(tf_series(13, p), 5, 8);

  const auto zero = tf_eval(P, BigFloat(p));
  CHECK(zero.u == BigFloat(1, p));
  CHECK(zero.uprime == P.slope_s * 2);
  CHECK_THROWS_AS(tf_eval(P, BigFloat(-1, p)), Error);

  std::vector<BigFloat> xs;
  for (const auto& row : testing::kReferenceTable) xs.push_back(BigFloat::parse(row.x, p));
  const auto rows = tf_table(P, xs);
  REQUIRE(rows.size() == testing::kReferenceTable.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& ref = testing::kReferenceTable[i];
    CAPTURE(ref.x);
    REQUIRE(rows[i].value.has_value());
    CHECK(testing::within_last_digit(rows[i].value->u, ref.u));
    CHECK(testing::within_last_digit(-rows[i].value->uprime, ref.minus_uprime));
    CHECK(rows[i].value->u.sign() > 0);
    if (i > 0) CHECK(rows[i].value->u < rows[i - 1].value->u);
  }
}

TEST_CASE("algebraic decay at large x") {
  const Precision p(50);
  const auto P = pade_construct(tf_series(13, p), 5, 8);
  const BigFloat x = BigFloat::pow10(6, p);
  const auto e = tf_eval(P, x);
  const BigFloat scaled = e.u * x * x * x;
  CHECK(scaled.is_finite());
  CHECK(scaled.sign() > 0);
}

TEST_CASE("table rows report their own failures") {
  const Precision p(30);
  const auto P = pade_construct(geometric(4, p), 0, 1);
  const auto rows = tf_table(P, {BigFloat::parse("0.25", p), BigFloat(1, p), BigFloat(-2, p)});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].value.has_value());
  CHECK_FALSE(rows[1].value.has_value());
  CHECK(rows[1].error.find("PoleEncountered") != std::string::npos);
  CHECK(rows[2].error.find("InvalidArgument") != std::string::npos);
}

}  // TEST_SUITE
