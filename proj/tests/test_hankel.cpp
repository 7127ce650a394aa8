#include <doctest.h>

#include <cmath>
#include <random>

#include "hpm/error.hpp"
#include "hpm/hankel.hpp"
#include "oracles.hpp"

using namespace hpm;
using namespace hpm::testing;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

BigFloat reference_two_f2(Precision p) { return BigFloat::parse("-1.5880710226113753127186845", p); }

}  // namespace

TEST_SUITE("hankel") {

TEST_CASE("HankelSpec validation") {
  CHECK_THROWS_AS((HankelSpec{0, 3}.validate()), Error);
  CHECK_THROWS_AS((HankelSpec{2, 2}.validate()), Error);
  CHECK_NOTHROW((HankelSpec{2, 3}.validate()));
  CHECK(HankelSpec{30, 3}.required_order() == 62);
}

TEST_CASE("det_exact examples") {
  const auto S = symbolic_coeffs(40);
  CHECK(det_exact(S, {1, 3}) == SlopePolynomial::monomial(q(-1, 2), 2));
  const auto f4 = SlopePolynomial::monomial(q(-1, 2), 2);
  const auto f6 = SlopePolynomial::monomial(q(1, 2), 3) - SlopePolynomial::constant(q(1, 18));
  CHECK(det_exact(S, {2, 3}) == f4 * f6 - SlopePolynomial::monomial(q(16, 225), 2));
  CHECK_THROWS_AS(det_exact(symbolic_coeffs(6), {2, 4}), Error);
  CHECK_THROWS_AS(det_exact(symbolic_coeffs(60), {kExactDimensionLimit + 1, 3}), Error);
}

TEST_CASE("det_exact equals cofactor expansion") {
  const auto S = symbolic_coeffs(20);
  for (int d = 3; d <= 5; ++d) {
    for (int D = 1; D <= 4; ++D) {
      CAPTURE(D);
      CAPTURE(d);
      CHECK(det_exact(S, {D, d}) == cofactor_det(hankel_matrix(S, D, d)));
    }
  }
}

TEST_CASE("det_numeric matches det_exact at random rationals") {
  const Precision p(40);
  const auto S = symbolic_coeffs(20);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-2000, 0);
  std::vector<Rational> points;
  while (points.size() < 20) {
    const Rational s = make_rational(num(rng), 997);
    if (s != 0) points.push_back(s);
  }
  for (int d = 3; d <= 5; ++d) {
    for (int D = 1; D <= 6; ++D) {
      const auto exact = det_exact(S, {D, d});
      for (const auto& s : points) {
        const Rational value = exact.evaluate(s);
        const auto numeric = det_numeric({D, d}, BigFloat(s, p), p);
        CAPTURE(D);
        CAPTURE(d);
        CHECK(numeric.sign == sgn(value));
        const double log_exact = BigFloat(value, p).log10_abs();
        CHECK(std::abs(numeric.log10_magnitude - log_exact) < 1e-9);
        const auto dv = det_value({D, d}, BigFloat(s, p), p);
        CHECK(dv.certified);
        CHECK(agree_to_digits(dv.value, BigFloat(value, p), p.digits() - 10));
      }
    }
  }
}

TEST_CASE("det_numeric examples") {
  const Precision p(40);
  const auto one = det_numeric({1, 3}, BigFloat(1, p), p);
  CHECK(one.sign == -1);
  CHECK(one.log10_magnitude == doctest::Approx(std::log10(0.5)));
  const auto lo = det_numeric({5, 3}, BigFloat::parse("-0.7945", p), p);
  const auto hi = det_numeric({5, 3}, BigFloat::parse("-0.7935", p), p);
  CHECK(lo.sign != 0);
  CHECK(hi.sign != 0);
  CHECK(lo.sign == -hi.sign);
}

TEST_CASE("root_for") {
  const Precision p(40);
  SUBCASE("no sign change in the window") {
    CHECK_THROWS_WITH_AS(root_for({1, 4}, BigFloat(-1, p), BigFloat::parse("0.5", p), p), doctest::Contains("NoSignChange"),
                         Error);
  }
  SUBCASE("D = 5 estimate") {
    const auto r = root_for({5, 3}, BigFloat::parse("-0.794", p), BigFloat::parse("0.01", p), p);
    CHECK(std::abs((r * 2).to_double() - (-1.588)) < 5e-4);
    CHECK(r.precision() >= p);
  }
  SUBCASE("D = 2 has a unique bracketed root") {
    const auto r = root_for({2, 3}, BigFloat::parse("-0.79", p), BigFloat::parse("0.3", p), p);
    // s^2 (-s^3/4 + 1/36 - 16/225): the nonzero real root has s^3 = -156/900
    CHECK(agree_to_digits(r * r * r, BigFloat(q(-156, 900), p), p.digits() - 3));
    CHECK(det_numeric({2, 3}, r, p).log10_magnitude < -35);
  }
}

TEST_CASE("root sequence structure") {
  const auto seq = root_sequence(3, 12, PrecisionPolicy::fixed(50));
  REQUIRE(seq.records.size() >= 10);
  CHECK(seq.records.front().D == 2);
  CHECK(seq.records.front().root_s.to_string(10) == "-0.5575631072");
  for (size_t i = 1; i < seq.records.size(); ++i) {
    const auto& prev = seq.records[i - 1];
    const auto& rec = seq.records[i];
    CHECK(rec.D > prev.D);
    if (rec.D == prev.D + 1) {
      REQUIRE(rec.delta.has_value());
      CHECK(*rec.delta == abs(rec.two_f2() - prev.two_f2()));
    } else {
      CHECK_FALSE(rec.delta.has_value());
    }
    CHECK(rec.precision_used >= 50);
  }
  const auto& d5 = seq.records[3];
  REQUIRE(d5.D == 5);
  CHECK(std::abs(d5.two_f2().to_double() + 1.588) < 5e-4);
  CHECK_THROWS_AS(root_sequence(2, 10), Error);
  CHECK_THROWS_AS(root_sequence(3, 2), Error);
}

TEST_CASE("automatic policy follows 40 + 2D") {
  CHECK(PrecisionPolicy::automatic().for_dimension(30).digits() == 100);
  CHECK(PrecisionPolicy::fixed(64).for_dimension(30).digits() == 64);
  const auto seq = root_sequence(3, 8);
  for (const auto& rec : seq.records) CHECK(rec.precision_used >= 40 + 2 * rec.D);
}

TEST_CASE("roots do not depend on working precision") {
  const auto a = root_sequence(3, 15, PrecisionPolicy::fixed(40));
  const auto b = root_sequence(3, 15, PrecisionPolicy::fixed(80));
  REQUIRE(a.records.size() == b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    CAPTURE(a.records[i].D);
    CHECK(a.records[i].D == b.records[i].D);
    CHECK(agree_to_digits(a.records[i].root_s, b.records[i].root_s, 35));
  }
}

TEST_CASE("sequences run concurrently in input order") {
  const auto seqs = root_sequences({4, 3}, 9, PrecisionPolicy::fixed(50));
  REQUIRE(seqs.size() == 2);
  CHECK(seqs[0].d == 4);
  CHECK(seqs[1].d == 3);
  const auto solo = root_sequence(3, 9, PrecisionPolicy::fixed(50));
  CHECK(seqs[1].last().root_s == solo.last().root_s);
}

TEST_CASE("convergence fit") {
  SUBCASE("exact geometric input") {
    RootSequence seq;
    for (int D = 2; D <= 12; ++D) {
      RootRecord rec;
      rec.D = D;
      rec.root_s = BigFloat(-1, Precision(30));
      if (D > 2) rec.delta = BigFloat::pow10(-D, Precision(30));
      seq.records.push_back(rec);
    }
    const auto fit = convergence_fit(seq, 5, 12);
    CHECK(fit.slope_per_D == doctest::Approx(-1.0));
    CHECK(fit.level == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(fit.points == 8);
    CHECK_THROWS_AS(convergence_fit(seq, 10, 12), Error);
  }
}

TEST_CASE("d = 3 steps shrink monotonically" * doctest::may_fail()) {
  const auto seq = root_sequence(3, 30);
  const BigFloat* previous = nullptr;
  for (const auto& rec : seq.records) {
    if (rec.D < 5 || !rec.delta) continue;
    if (previous) {
      CAPTURE(rec.D);
      CHECK(*rec.delta < *previous);
    }
    previous = &*rec.delta;
  }
  CHECK(agree_to_digits(seq.last().two_f2(), reference_two_f2(Precision(40)), 15));
}

}  // TEST_SUITE
