#pragma once

// Triangular solve of a q-series against the basis (8 delta2)^{a-2r} eps2^r
// modulo q^{(m+1)/2}.

#include <string>
#include <vector>

#include "anomcheck/charforms.hpp"
#include "anomcheck/qhalf.hpp"
#include "anomcheck/thetaseries.hpp"

namespace anomcheck {

// Case 1: dim 8m+4 (basis exponent 2m+1). Case 2: dim 8m (basis exponent 2m).
enum class DecompositionCase { Dim8mPlus4, Dim8m };

struct DecompositionResult {
  DecompositionCase which = DecompositionCase::Dim8mPlus4;
  int m = 0;
  int basis_exponent = 0;
  std::vector<Form> coefficients;
};

DecompositionCase case_for_dimension(int dim);
int m_for_dimension(int dim);
int basis_exponent(DecompositionCase c, int m);

// (8 delta2)^{a-2r} eps2^r to the given order.
ScalarSeries basis_series(int a, int r, int order_halves);

DecompositionResult modular_decompose(const FormSeries& series, int m, int a,
                                      DecompositionCase which = DecompositionCase::Dim8mPlus4);

// sum_r f_r (8 delta2)^{a-2r} eps2^r
FormSeries reconstruct(const DecompositionResult& d, int order_halves);

// ch(b_r) / ch(z_r) from ch(Theta2).
DecompositionResult b_coeffs(const GeometrySpec& g, CharacterPath path = CharacterPath::BundleOps);
// beta_r / zeta_r from the E2-weighted series.
DecompositionResult beta_coeffs(const GeometrySpec& g, CharacterPath path = CharacterPath::BundleOps);

// {(e^{D/24} - 1)/D * Ahat * cosh(c/2) * X}^{(degree)}, D = p1(TX) - p1(W).
Form divided_weight(const GeometrySpec& g, const Form& x, int degree);

struct ClosedFormCheck {
  std::string name;
  bool equal = false;
  Form expected;
  Form computed;
};

struct ClosedFormReport {
  bool ok = true;
  std::vector<ClosedFormCheck> checks;
};

ClosedFormReport closed_form_check(const GeometrySpec& g);

struct NonFactorization {
  bool factorizes = false;
  Form coefficient;  // beta_2 / zeta_2
  Form product;      // the divided-weight form of ch(b_2) / ch(z_2)
};

// Compares the r = 2 correction form with the naive product at m = 2.
NonFactorization non_factorization_witness(const GeometrySpec& g);

}  // namespace anomcheck
