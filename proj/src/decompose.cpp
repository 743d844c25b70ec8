#include "anomcheck/decompose.hpp"

#include "anomcheck/modforms.hpp"

namespace anomcheck {

DecompositionCase case_for_dimension(int dim) {
  if (dim <= 0 || dim % 4 != 0) throw PreconditionError("dimension must be a positive multiple of 4");
  return dim % 8 == 4 ? DecompositionCase::Dim8mPlus4 : DecompositionCase::Dim8m;
}

int m_for_dimension(int dim) {
  case_for_dimension(dim);
  return dim / 8;
}

int basis_exponent(DecompositionCase c, int m) { return c == DecompositionCase::Dim8mPlus4 ? 2 * m + 1 : 2 * m; }

ScalarSeries basis_series(int a, int r, int order_halves) {
  if (a - 2 * r < 0) throw PreconditionError("basis exponent too small for index r");
  ScalarSeries d8 = divisor_series(DivisorSeries::Delta2, order_halves) * Rational(8);
  ScalarSeries e2 = divisor_series(DivisorSeries::Eps2, order_halves);
  ScalarSeries out = ScalarSeries::constant(order_halves, Rational(1));
  for (int i = 0; i < a - 2 * r; ++i) out = out * d8;
  for (int i = 0; i < r; ++i) out = out * e2;
  return out;
}

DecompositionResult modular_decompose(const FormSeries& series, int m, int a, DecompositionCase which) {
  if (m < 0) throw PreconditionError("negative decomposition parameter m");
  if (a - 2 * m < 0) throw PreconditionError("basis exponent below 2m");
  const int n = m + 1;
  if (series.order() < n) throw PreconditionError("series truncated below q^((m+1)/2)");
  std::vector<ScalarSeries> basis;
  for (int r = 0; r <= m; ++r) basis.push_back(basis_series(a, r, n));
  DecompositionResult out;
  out.which = which;
  out.m = m;
  out.basis_exponent = a;
  for (int j = 0; j <= m; ++j) {
    Form rest = series.coeff(j);
    for (int r = 0; r < j; ++r) rest -= out.coefficients[static_cast<std::size_t>(r)] * basis[static_cast<std::size_t>(r)].coeff(j);
    Rational diag = basis[static_cast<std::size_t>(j)].coeff(j);
    if (is_zero(diag)) throw InternalError("singular decomposition diagonal");
    out.coefficients.push_back(rest * (1 / diag));
  }
  return out;
}

FormSeries reconstruct(const DecompositionResult& d, int order_halves) {
  if (d.coefficients.empty()) throw PreconditionError("empty decomposition");
  const auto& ring = d.coefficients.front().ring();
  FormSeries out(order_halves, Form::zero(ring));
  for (std::size_t r = 0; r < d.coefficients.size(); ++r) {
    ScalarSeries b = basis_series(d.basis_exponent, static_cast<int>(r), order_halves);
    out = out + mul(b, FormSeries::constant(order_halves, d.coefficients[r]));
  }
  return out;
}

namespace {

int verification_order(int m) { return m + 3; }

}  // namespace

DecompositionResult b_coeffs(const GeometrySpec& g, CharacterPath path) {
  auto which = case_for_dimension(g.dim_x);
  int m = m_for_dimension(g.dim_x);
  FormSeries theta = theta2_char(g, path, verification_order(m));
  return modular_decompose(theta, m, basis_exponent(which, m), which);
}

DecompositionResult beta_coeffs(const GeometrySpec& g, CharacterPath path) {
  auto which = case_for_dimension(g.dim_x);
  int m = m_for_dimension(g.dim_x);
  int degree = which == DecompositionCase::Dim8mPlus4 ? 8 * m : 8 * m - 4;
  int order = verification_order(m);
  FormSeries s = e2_divided_exponential(p1_difference(g), order) * theta2_char(g, path, order) *
                 (a_hat(g) * cosh_half_c(g));
  return modular_decompose(degree_component(s, degree), m, basis_exponent(which, m), which);
}

Form divided_weight(const GeometrySpec& g, const Form& x, int degree) {
  Form w = divided_exp(p1_difference(g), Rational(1, 24)) * a_hat(g) * cosh_half_c(g) * x;
  return w.degree_component(degree);
}

ClosedFormReport closed_form_check(const GeometrySpec& g) {
  auto which = case_for_dimension(g.dim_x);
  int m = m_for_dimension(g.dim_x);
  const bool case1 = which == DecompositionCase::Dim8mPlus4;
  const int degree = case1 ? 8 * m : 8 * m - 4;
  auto b = b_coeffs(g);
  auto beta = beta_coeffs(g);
  Form one = Form::one(g.ring);
  Form ch_w = chern_char(g, CharacterOf::W).value;
  Form ch_xi = chern_char(g, CharacterOf::Xi).value;
  // ch(W) - 3 ch(xi) + constant
  Form bracket = ch_w - ch_xi * Rational(3) + one * Rational(48 * m - 2 * g.l + (case1 ? 30 : 6));

  ClosedFormReport report;
  auto add = [&](std::string name, const Form& expected, const Form& computed) {
    bool eq = expected == computed;
    report.ok = report.ok && eq;
    report.checks.push_back({std::move(name), eq, expected, computed});
  };
  const char* f = case1 ? "b" : "z";
  const char* gk = case1 ? "beta" : "zeta";
  const Rational s = case1 ? Rational(-1) : Rational(1);
  add(std::string(f) + "0", one * s, b.coefficients[0]);
  add(std::string(gk) + "0", divided_weight(g, one, degree) * s, beta.coefficients[0]);
  if (m >= 1) {
    add(std::string(f) + "1", bracket * -s, b.coefficients[1]);
    add(std::string(gk) + "1", divided_weight(g, bracket, degree) * -s, beta.coefficients[1]);
  }
  return report;
}

NonFactorization non_factorization_witness(const GeometrySpec& g) {
  auto which = case_for_dimension(g.dim_x);
  int m = m_for_dimension(g.dim_x);
  if (m != 2) throw PreconditionError("non-factorization witness needs m = 2 (dim 16 or 20)");
  const int degree = which == DecompositionCase::Dim8mPlus4 ? 8 * m : 8 * m - 4;
  auto b = b_coeffs(g);
  auto beta = beta_coeffs(g);
  NonFactorization out{false, beta.coefficients[2], divided_weight(g, b.coefficients[2], degree)};
  out.factorizes = out.coefficient == out.product;
  return out;
}

}  // namespace anomcheck
