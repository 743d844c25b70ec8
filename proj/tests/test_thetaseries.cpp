#include <doctest.h>

#include "anomcheck/modforms.hpp"
#include "anomcheck/thetaseries.hpp"
#include "support.hpp"

using namespace testing;

namespace {

FormSeries binomial(const Form& one, const Form& c, int halves, int order) {
  FormSeries s = FormSeries::constant(order, one);
  s.set(halves, c);
  return s;
}

// prod_n (1 + s e^v q^{n-1/2})(1 + s e^{-v} q^{n-1/2}) / (1 + s q^{n-1/2})^2, multiplied out directly.
FormSeries half_integer_quotient(const Form& v, int sign, int order) {
  Form one = Form::one(v.ring());
  FormSeries num = FormSeries::constant(order, one);
  FormSeries den = FormSeries::constant(order, one);
  Form s = Form::constant(v.ring(), Rational(sign));
  for (int h = 1; h < order; h += 2) {
    num = num * binomial(one, s * exp_form(v), h, order) * binomial(one, s * exp_form(-v), h, order);
    den = den * binomial(one, s, h, order) * binomial(one, s, h, order);
  }
  return num * qs_inv(den);
}

}  // namespace

TEST_SUITE("thetaseries") {

TEST_CASE("normalized factors") {
  const int order = 9;
  auto ring = single_variable_ring(12);
  Form x = gen(ring, "x");
  CHECK(theta_factor(ThetaKind::Theta, x, order).coeff(0) == ahat_factor(12));
  CHECK(theta_factor(ThetaKind::Theta1, x, order).coeff(0) == cosh_half_factor(12));
  CHECK(theta_factor(ThetaKind::Theta2, Form::zero(ring), order) == FormSeries::constant(order, Form::one(ring)));
  CHECK(theta_factor(ThetaKind::Theta2, x, order) == half_integer_quotient(x, -1, order));
  CHECK(theta_factor(ThetaKind::Theta3, x, order) == half_integer_quotient(x, 1, order));
  for (auto kind : {ThetaKind::Theta, ThetaKind::Theta1, ThetaKind::Theta3}) {
    auto at_zero = theta_factor(kind, Form::zero(ring), order);
    CHECK(at_zero == FormSeries::constant(order, Form::one(ring)));
  }
  CHECK_THROWS_AS(theta_factor(ThetaKind::Theta, x * x, order), PreconditionError);
}

TEST_CASE("leading coefficients of the characters") {
  for (int l : {2, 3, 4}) {
    auto g = make_geometry(12, l, true, false, BasisMode::PowerSum);
    auto t2 = theta2_char(g, CharacterPath::BundleOps, 3);
    CHECK(t2.coeff(0) == Form::one(g.ring));
    Form expected = chern_char(g, CharacterOf::Xi).value * Rational(3) - chern_char(g, CharacterOf::W).value +
                    Form::constant(g.ring, Rational(2 * l - 6));
    CHECK(t2.coeff(1) == expected);
    CHECK(t2.coeff(1).constant_term() == 0);
    auto t1 = theta1_char(g, CharacterPath::BundleOps, 3);
    CHECK(t1.coeff(0) == Form::one(g.ring));
    CHECK(t1.coeff(1).is_zero());
  }
}

TEST_CASE("bundle operations and theta quotients agree to q^3") {
  const int order = 7;
  for (int dim : {4, 8, 12}) {
    for (int l : {2, 3, 4}) {
      for (bool xi : {true, false}) {
        auto g = make_geometry(dim, l, xi, false, BasisMode::PowerSum);
        CHECK(theta2_char(g, CharacterPath::BundleOps, order) == theta2_char(g, CharacterPath::ThetaQuotient, order));
        CHECK(theta1_char(g, CharacterPath::BundleOps, order) == theta1_char(g, CharacterPath::ThetaQuotient, order));
      }
    }
    auto tx = make_geometry(dim, dim / 2, true, true, BasisMode::PowerSum);
    CHECK(theta2_char(tx, CharacterPath::BundleOps, order) == theta2_char(tx, CharacterPath::ThetaQuotient, order));
  }
}

TEST_CASE("dense and power-sum characters agree") {
  auto d = make_geometry(8, 2, true, false, BasisMode::Dense);
  auto p = make_geometry(8, 2, true, false, BasisMode::PowerSum);
  auto a = theta2_char(d, CharacterPath::BundleOps, 5);
  auto b = theta2_char(p, CharacterPath::BundleOps, 5);
  for (int h = 0; h < 5; ++h) CHECK(pont(d, a.coeff(h)) == pont(p, b.coeff(h)));
}

TEST_CASE("assembled series") {
  const int order = 5;
  auto g = make_geometry(12, 3, true, false, BasisMode::PowerSum);
  Form w = a_hat(g) * cosh_half_c(g);
  Form d = p1_difference(g);
  auto p2 = assemble_series(g, AssembledSeries::P2, order);
  auto xi2 = assemble_series(g, AssembledSeries::Xi2, order);
  CHECK(p2.coeff(0) == w.degree_component(12));
  CHECK(xi2.coeff(0) == (divided_exp(d, Rational(1, 24)) * w).degree_component(8));
  FormSeries full = e2_exponential(d, order) * theta2_char(g, CharacterPath::BundleOps, order) *
                    FormSeries::constant(order, w);
  CHECK(p2 + xi2 * d == degree_component(full, 12));
  for (int h = 0; h < order; ++h) CHECK(p2.coeff(h).is_homogeneous(12));

  auto g8 = make_geometry(8, 3, true, false, BasisMode::PowerSum);
  CHECK_THROWS_AS(assemble_series(g8, AssembledSeries::P1, order), PreconditionError);
  CHECK_THROWS_AS(assemble_series(g, AssembledSeries::Q2, order), PreconditionError);
  CHECK_NOTHROW(assemble_series(g8, AssembledSeries::Pi2, order));
  CHECK(parse_assembled("Xi2") == AssembledSeries::Xi2);
  CHECK_THROWS_AS(parse_assembled("P3"), PreconditionError);
}

TEST_CASE("E2 exponentials") {
  auto g = make_geometry(8, 2, true, false, BasisMode::PowerSum);
  Form d = p1_difference(g);
  const int order = 6;
  auto e = e2_exponential(d, order);
  auto div = e2_divided_exponential(d, order);
  CHECK(div * d == e - FormSeries::constant(order, Form::one(g.ring)));
  CHECK(e.coeff(0) == exp_form(d * Rational(1, 24)));
  CHECK(div.coeff(0) == divided_exp(d, Rational(1, 24)));
}

}  // TEST_SUITE
