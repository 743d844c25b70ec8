#include <doctest.h>

#include "anomcheck/decompose.hpp"
#include "anomcheck/modforms.hpp"
#include "anomcheck/thetaseries.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Form closed_bracket(const GeometrySpec& g, bool case1) {
  int m = g.dim_x / 8;
  return chern_char(g, CharacterOf::W).value - chern_char(g, CharacterOf::Xi).value * Rational(3) +
         Form::constant(g.ring, Rational(48 * m - 2 * g.l + (case1 ? 30 : 6)));
}

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("solve recovers planted coefficients") {
  auto g = make_geometry(16, 2, true, false, BasisMode::PowerSum);
  std::mt19937 rng(21);
  for (int m : {0, 1, 2}) {
    for (int a : {2 * m, 2 * m + 1}) {
      const int order = m + 1;
      std::vector<Form> planted;
      FormSeries series(order, Form::zero(g.ring));
      for (int r = 0; r <= m; ++r) {
        planted.push_back(random_form(g.ring, rng));
        series = series + mul(basis_series(a, r, order), FormSeries::constant(order, planted.back()));
      }
      auto res = modular_decompose(series, m, a);
      REQUIRE(res.coefficients.size() == planted.size());
      for (std::size_t r = 0; r < planted.size(); ++r) CHECK(res.coefficients[r] == planted[r]);
    }
  }
}

TEST_CASE("preconditions") {
  auto g = make_geometry(12, 3, true, false, BasisMode::PowerSum);
  auto s = theta2_char(g, CharacterPath::BundleOps, 1);
  CHECK_THROWS_AS(modular_decompose(s, 1, 3), PreconditionError);
  CHECK_THROWS_AS(modular_decompose(theta2_char(g, CharacterPath::BundleOps, 3), 2, 3), PreconditionError);
  CHECK_THROWS_AS(case_for_dimension(6), PreconditionError);
  CHECK(basis_exponent(DecompositionCase::Dim8mPlus4, 2) == 5);
  CHECK(basis_exponent(DecompositionCase::Dim8m, 2) == 4);
}

TEST_CASE("basis leading terms") {
  auto b = basis_series(3, 1, 4);
  // (8 delta2)^1 eps2 = (-1 - 24 q^{1/2} ...)(q^{1/2} + 8 q ...)
  CHECK(b.coeff(0) == 0);
  CHECK(b.coeff(1) == -1);
  CHECK(b.coeff(2) == -32);
}

TEST_CASE("b and z coefficients in closed form") {
  for (int dim : {4, 8, 12, 16, 20}) {
    for (int l : {2, 5}) {
      for (bool xi : {true, false}) {
        auto g = make_geometry(dim, l, xi, false, BasisMode::PowerSum);
        const bool case1 = dim % 8 == 4;
        auto b = b_coeffs(g);
        CHECK(b.coefficients[0] == Form::constant(g.ring, Rational(case1 ? -1 : 1)));
        if (dim >= 8) CHECK(b.coefficients[1] == closed_bracket(g, case1) * Rational(case1 ? 1 : -1));
        auto report = closed_form_check(g);
        CHECK(report.ok);
        CHECK(report.checks.size() == (dim >= 8 ? 4u : 2u));
      }
    }
  }
}

TEST_CASE("beta and zeta in closed form") {
  auto g = make_geometry(12, 3, true, false, BasisMode::PowerSum);
  Form weight = divided_exp(p1_difference(g), Rational(1, 24)) * a_hat(g) * cosh_half_c(g);
  auto beta = beta_coeffs(g);
  CHECK(beta.coefficients[0] == -weight.degree_component(8));
  CHECK(beta.coefficients[1] == (weight * closed_bracket(g, true)).degree_component(8));
  auto g8 = make_geometry(8, 3, true, false, BasisMode::PowerSum);
  Form w8 = divided_exp(p1_difference(g8), Rational(1, 24)) * a_hat(g8) * cosh_half_c(g8);
  auto zeta = beta_coeffs(g8);
  CHECK(zeta.coefficients[0] == w8.degree_component(4));
  CHECK(zeta.coefficients[1] == -(w8 * closed_bracket(g8, false)).degree_component(4));
}

TEST_CASE("reconstruction, uniqueness and linearity") {
  for (int dim : {12, 16, 20}) {
    auto g = make_geometry(dim, 3, true, false, BasisMode::PowerSum);
    int m = dim / 8;
    int order = m + 1;
    auto series = theta2_char(g, CharacterPath::BundleOps, order);
    auto b = b_coeffs(g);
    CHECK(qs_match_mod(reconstruct(b, order), series, order).equal);
    auto broken = b;
    broken.coefficients[static_cast<std::size_t>(m)] += Form::one(g.ring);
    auto mm = qs_match_mod(reconstruct(broken, order), series, order);
    CHECK_FALSE(mm.equal);
    CHECK(mm.first_mismatch == m);

    auto other = theta1_char(g, CharacterPath::BundleOps, order);
    auto a = basis_exponent(case_for_dimension(dim), m);
    auto sum = modular_decompose(series + other, m, a);
    auto lhs = modular_decompose(series, m, a);
    auto rhs = modular_decompose(other, m, a);
    for (int r = 0; r <= m; ++r) {
      auto i = static_cast<std::size_t>(r);
      CHECK(sum.coefficients[i] == lhs.coefficients[i] + rhs.coefficients[i]);
    }
  }
}

TEST_CASE("theta quotient path gives the same decomposition") {
  auto g = make_geometry(12, 4, true, false, BasisMode::PowerSum);
  CHECK(b_coeffs(g, CharacterPath::ThetaQuotient).coefficients == b_coeffs(g).coefficients);
  CHECK(beta_coeffs(g, CharacterPath::ThetaQuotient).coefficients == beta_coeffs(g).coefficients);
}

TEST_CASE("second correction coefficient does not factor") {
  for (int dim : {16, 20}) {
    auto g = make_geometry(dim, 3, true, false, BasisMode::PowerSum);
    auto nf = non_factorization_witness(g);
    CHECK_FALSE(nf.factorizes);
    CHECK_FALSE(nf.coefficient == nf.product);
  }
  CHECK_THROWS_AS(non_factorization_witness(make_geometry(12, 3, true, false, BasisMode::PowerSum)), PreconditionError);
}

}  // TEST_SUITE
