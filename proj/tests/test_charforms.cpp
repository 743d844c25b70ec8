#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

FormSeries constant_series(const Form& f, int order) { return FormSeries::constant(order, f); }

FormSeries linear_series(const Form& c0, const Form& c1, int halves, int order) {
  FormSeries s = constant_series(c0, order);
  s.set(halves, c1);
  return s;
}

// prod over roots y of (1 + s e^y t)(1 + s e^{-y} t), t = q^{halves/2}, in the dense basis.
FormSeries brute_lambda(const GeometrySpec& g, const std::vector<std::string>& roots, int sign, int halves, int order) {
  Form one = Form::one(g.ring);
  FormSeries out = constant_series(one, order);
  for (const auto& name : roots) {
    Form y = gen(g.ring, name);
    out = out * linear_series(one, exp_form(y) * Rational(sign), halves, order);
    out = out * linear_series(one, exp_form(-y) * Rational(sign), halves, order);
  }
  return out;
}

}  // namespace

TEST_SUITE("charforms") {

TEST_CASE("Ahat in low degrees") {
  auto g = make_geometry(12, 3, true, false, BasisMode::PowerSum);
  Form a = a_hat(g);
  CHECK(a.constant_term() == 1);
  CHECK(pont(g, a.degree_component(4)) == "-1/24*p1(TX)");
  CHECK(pont(g, a.degree_component(8)) == "7/5760*p1(TX)^2 - 1/1440*p2(TX)");
}

TEST_CASE("Lhat normalization and the spinor identity") {
  auto g4 = make_geometry(4, 2, false, true, BasisMode::PowerSum);
  CHECK(pont(g4, l_hat(g4).degree_component(4)) == "1/3*p1(TX)");
  CHECK(pont(g4, (a_hat(g4) * spinor_ch(g4, Bundle::W)).degree_component(4)) == "1/3*p1(TX)");
  auto g12 = make_geometry(12, 6, false, true, BasisMode::PowerSum);
  CHECK(l_hat(g12).constant_term() == 64);
  for (int dim : {4, 8, 12, 16, 20}) {
    auto g = make_geometry(dim, dim / 2, true, true, BasisMode::PowerSum);
    CHECK(l_hat(g) == a_hat(g) * spinor_ch(g, Bundle::T));
  }
}

TEST_CASE("Chern characters") {
  auto g = make_geometry(8, 3, true, false, BasisMode::PowerSum);
  auto w = chern_char(g, CharacterOf::W);
  CHECK(w.rank == 6);
  CHECK(w.value.constant_term() == 6);
  CHECK(pont(g, w.value.degree_component(4)) == "p1(W)");
  auto trivial = make_geometry(8, 3, false, false, BasisMode::PowerSum);
  CHECK(chern_char(trivial, CharacterOf::Xi).value == Form::constant(trivial.ring, Rational(2)));
  CHECK(chern_char(g, CharacterOf::Trivial, 5).value == Form::constant(g.ring, Rational(5)));
  CHECK(reduced(w).value.constant_term() == 0);
  CHECK(pont(g, chern_char(g, CharacterOf::Xi).value.degree_component(2)) == "0");
  CHECK(pont(g, chern_char(g, CharacterOf::Xi).value.degree_component(4)) == "c^2");
  CHECK(pont(g, chern_char(g, CharacterOf::Xi).value.degree_component(8)) == "1/12*c^4");
}

TEST_CASE("spinor character") {
  for (int l : {2, 3, 4}) {
    auto g = make_geometry(8, l, true, false, BasisMode::PowerSum);
    Form sp = spinor_ch(g, Bundle::W);
    CHECK(sp.constant_term() == pow2(l));
    Form expected = to_pontryagin(g, chern_char(g, CharacterOf::W).value.degree_component(4)) * Rational(pow2(l) / 8);
    CHECK(to_pontryagin(g, sp.degree_component(4)) == expected);
  }
}

TEST_CASE("Lambda and S characters") {
  const int order = 8;
  auto g = make_geometry(8, 2, true, false, BasisMode::Dense);
  Form one = Form::one(g.ring);
  Form u = gen(g.ring, "u");
  auto xi = chern_char(g, CharacterOf::Xi);
  FormSeries lam = lambda_s_char(g, PowerOp::Lambda, xi, {1, 1}, order);
  FormSeries expected = constant_series(one, order);
  expected.set(1, exp_form(u) + exp_form(-u));
  expected.set(2, one);
  CHECK(lam == expected);

  auto w = chern_char(g, CharacterOf::W);
  CHECK(lambda_s_char(g, PowerOp::Lambda, w, {1, 1}, order) == brute_lambda(g, g.w_gens, 1, 1, order));
  CHECK(lambda_s_char(g, PowerOp::Lambda, w, {-1, 2}, order) == brute_lambda(g, g.w_gens, -1, 2, order));
  CHECK(lambda_s_char(g, PowerOp::Sym, w, {1, 2}, order) * brute_lambda(g, g.w_gens, -1, 2, order) ==
        constant_series(one, order));

  // Lambda_t(W - 2l) = Lambda_t(W) (1 + t)^{-2l}
  FormSeries one_plus_t = linear_series(one, one, 1, order);
  FormSeries power = constant_series(one, order);
  for (int i = 0; i < w.rank; ++i) power = power * one_plus_t;
  CHECK(lambda_s_char(g, PowerOp::Lambda, reduced(w), {1, 1}, order) * power ==
        lambda_s_char(g, PowerOp::Lambda, w, {1, 1}, order));

  // Lambda_t(F - G) Lambda_t(G) = Lambda_t(F) with G = xi
  auto diff = w - xi;
  CHECK(lambda_s_char(g, PowerOp::Lambda, diff, {-1, 1}, order) * lambda_s_char(g, PowerOp::Lambda, xi, {-1, 1}, order) ==
        lambda_s_char(g, PowerOp::Lambda, w, {-1, 1}, order));
  CHECK_THROWS_AS(lambda_s_char(g, PowerOp::Lambda, w, {1, 0}, order), PreconditionError);
}

TEST_CASE("dense roots and power sums agree") {
  for (int dim : {4, 8, 12}) {
    for (int l : {2, 3}) {
      for (bool xi : {true, false}) {
        auto d = make_geometry(dim, l, xi, false, BasisMode::Dense);
        auto p = make_geometry(dim, l, xi, false, BasisMode::PowerSum);
        CHECK(pont(d, a_hat(d)) == pont(p, a_hat(p)));
        CHECK(pont(d, l_hat(d)) == pont(p, l_hat(p)));
        CHECK(pont(d, spinor_ch(d, Bundle::W)) == pont(p, spinor_ch(p, Bundle::W)));
        CHECK(pont(d, chern_char(d, CharacterOf::T).value) == pont(p, chern_char(p, CharacterOf::T).value));
        CHECK(pont(d, cosh_half_c(d)) == pont(p, cosh_half_c(p)));
        auto w_d = lambda_s_char(d, PowerOp::Sym, reduced(chern_char(d, CharacterOf::W)), {1, 2}, 5);
        auto w_p = lambda_s_char(p, PowerOp::Sym, reduced(chern_char(p, CharacterOf::W)), {1, 2}, 5);
        for (int h = 0; h < 5; ++h) CHECK(pont(d, w_d.coeff(h)) == pont(p, w_p.coeff(h)));
      }
    }
  }
}

TEST_CASE("Adams operations and p1 substitution") {
  auto g = make_geometry(8, 2, true, false, BasisMode::PowerSum);
  Form ch = chern_char(g, CharacterOf::W).value;
  CHECK(adams(ch, 1) == ch);
  CHECK(adams(ch, 3).degree_component(4) == ch.degree_component(4) * Rational(9));
  Form diff = to_pontryagin(g, p1_difference(g));
  CHECK(render(diff) == "p1(TX) - p1(W)");
  CHECK(impose_p1_equality(g, diff).is_zero());
  CHECK(p1_difference(make_geometry(8, 4, true, true, BasisMode::PowerSum)).is_zero());
}

}  // TEST_SUITE
