#pragma once

#include <string>

#include "anomcheck/charforms.hpp"
#include "anomcheck/qhalf.hpp"

namespace anomcheck {

enum class ThetaKind { Theta, Theta1, Theta2, Theta3 };

enum class CharacterPath { BundleOps, ThetaQuotient };

// Normalized theta quotient with the Chern-root argument v (a degree-2 form):
//   Theta : (v/2)/sinh(v/2) prod (1-q^n)^2 / ((1-e^v q^n)(1-e^-v q^n))
//   Theta1: cosh(v/2) prod (1+e^v q^n)(1+e^-v q^n) / (1+q^n)^2
//   Theta2: prod (1-e^v q^{n-1/2})(1-e^-v q^{n-1/2}) / (1-q^{n-1/2})^2
//   Theta3: prod (1+e^v q^{n-1/2})(1+e^-v q^{n-1/2}) / (1+q^{n-1/2})^2
FormSeries theta_factor(ThetaKind kind, const Form& v, int order_halves);

FormSeries theta1_char(const GeometrySpec& g, CharacterPath path, int order_halves);
FormSeries theta2_char(const GeometrySpec& g, CharacterPath path, int order_halves);

enum class AssembledSeries { P1, P2, Xi2, Q1, Q2, Pi2 };

AssembledSeries parse_assembled(const std::string& name);

FormSeries assemble_series(const GeometrySpec& g, AssembledSeries which, int order_halves,
                           CharacterPath path = CharacterPath::BundleOps);

// exp(E2(q) z / 24) and (exp(E2(q) z / 24) - 1)/z as q-series of forms.
FormSeries e2_exponential(const Form& z, int order_halves);
FormSeries e2_divided_exponential(const Form& z, int order_halves);

}  // namespace anomcheck
