#include <doctest.h>

#include "anomcheck/modforms.hpp"
#include "support.hpp"

using namespace testing;

namespace {

ScalarSeries series(int order, std::initializer_list<std::pair<int, long>> terms) {
  ScalarSeries s(order, Rational(0));
  for (auto [h, c] : terms) s.set(h, Rational(c));
  return s;
}

ScalarSeries random_series(int order, std::mt19937& rng, bool unit) {
  std::uniform_int_distribution<int> cf(-6, 6);
  ScalarSeries s(order, Rational(0));
  for (int h = 0; h < order; ++h) s.set(h, frac(cf(rng), 1 + (h % 3)));
  if (unit) s.set(0, Rational(1 + (order % 4)));
  return s;
}

}  // namespace

TEST_SUITE("qhalf") {

TEST_CASE("half integers") {
  CHECK(HalfInteger::parse("3/2").halves() == 3);
  CHECK(HalfInteger::parse("1.5").halves() == 3);
  CHECK(HalfInteger::parse("2").halves() == 4);
  CHECK(HalfInteger::from_halves(5).to_string() == "5/2");
  CHECK_THROWS_AS(HalfInteger::parse("1/3"), PreconditionError);
}

TEST_CASE("products") {
  auto a = series(6, {{0, 1}, {1, 1}});
  auto b = series(6, {{0, 1}, {1, -1}});
  CHECK(qs_mul(a, b) == series(6, {{0, 1}, {2, -1}}));
  auto h = series(6, {{1, 1}});
  CHECK(qs_mul(h, h) == series(6, {{2, 1}}));
  auto d8 = divisor_series(DivisorSeries::Delta2, 12) * Rational(8);
  CHECK(qs_mul(d8, qs_inv(d8)) == ScalarSeries::constant(12, Rational(1)));
  CHECK(qs_mul(series(4, {{0, 1}}), series(6, {{0, 1}})).order() == 4);
}

TEST_CASE("inverse") {
  CHECK(qs_inv(series(8, {{0, 1}, {2, -1}})) == series(8, {{0, 1}, {2, 1}, {4, 1}, {6, 1}}));
  CHECK(qs_inv(series(8, {{0, 1}})) == series(8, {{0, 1}}));
  CHECK_THROWS_WITH_AS(qs_inv(series(8, {{1, 1}, {2, 3}})), "non-unit q-series", PreconditionError);
}

TEST_CASE("coefficients") {
  auto eps2 = divisor_series(DivisorSeries::Eps2, 6);
  auto delta2 = divisor_series(DivisorSeries::Delta2, 6);
  CHECK(eps2.coeff(HalfInteger::parse("1/2")) == 1);
  CHECK(delta2.coeff(0) == Rational(-1, 8));
  CHECK(series(6, {{0, 1}, {2, -1}}).coeff(1) == 0);
  CHECK_THROWS_AS(eps2.coeff(6), PreconditionError);
}

TEST_CASE("congruences") {
  auto one = series(6, {{0, 1}});
  auto other = series(6, {{0, 1}, {2, 1}});
  CHECK(qs_match_mod(one, one, 6).equal);
  CHECK(qs_match_mod(one, other, 2).equal);
  auto m = qs_match_mod(one, other, 3);
  CHECK_FALSE(m.equal);
  CHECK(m.first_mismatch == 2);
  CHECK_THROWS_AS(qs_match_mod(one, series(2, {{0, 1}}), 3), PreconditionError);
}

TEST_CASE("random ring and inverse laws, truncation monotonicity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = random_series(10, rng, true);
    auto b = random_series(10, rng, false);
    auto c = random_series(10, rng, false);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * qs_inv(a) == ScalarSeries::constant(10, Rational(1)));
    CHECK((a * b).truncated(5) == a.truncated(5) * b.truncated(5));
    CHECK(qs_inv(a).truncated(4) == qs_inv(a.truncated(4)));
    for (int h = 0; h < 10; ++h) CHECK((b + c).coeff(h) == b.coeff(h) + c.coeff(h));
  }
}

TEST_CASE("exp and log of series") {
  std::mt19937 rng(9);
  auto g = random_series(8, rng, false);
  g.set(0, Rational(0));
  CHECK(qs_log_unit(qs_exp_positive(g)) == g);
}

TEST_CASE("rendering") {
  CHECK(render(divisor_series(DivisorSeries::Delta2, 3)) == "-1/8 - 3*q^(1/2) - 3*q");
  CHECK(render(series(7, {{0, 2}, {2, 1}, {5, -4}, {6, 1}})) == "2 + q - 4*q^(5/2) + q^3");
  CHECK(render(ScalarSeries(4, Rational(0))) == "0");
}

}  // TEST_SUITE
