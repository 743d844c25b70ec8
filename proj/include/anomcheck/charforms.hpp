#pragma once

// Characteristic forms over formal Chern roots.
//
// Conventions (dimensionless roots): p1(TX) = sum x_j^2 over the 2k roots of a
// 4k-dimensional TX, p1(W) = sum y_k^2 over the l roots of a rank-2l bundle W,
// c = u for the rank-2 bundle xi.

#include <optional>
#include <string>
#include <vector>

#include "anomcheck/formring.hpp"
#include "anomcheck/qhalf.hpp"

namespace anomcheck {

enum class BasisMode { PowerSum, Dense };

std::string to_string(BasisMode mode);
BasisMode parse_basis_mode(const std::string& text);

enum class Bundle { T, W };

struct GeometrySpec {
  int dim_x = 4;
  int l = 2;
  bool xi_present = true;
  bool w_eq_tx = false;
  BasisMode mode = BasisMode::PowerSum;
  RingPtr ring;
  RingPtr pontryagin;
  // Root names (dense) or power-sum names pi_n (power sums), per bundle.
  std::vector<std::string> t_gens;
  std::vector<std::string> w_gens;
  std::optional<std::string> u_gen;

  int k() const { return dim_x / 4; }
  int root_count(Bundle b) const { return b == Bundle::T ? dim_x / 2 : l; }
  const std::vector<std::string>& gens(Bundle b) const { return b == Bundle::T ? t_gens : w_gens; }
};

// dim must be a positive multiple of 4; W = TX forces l = dim / 2.
GeometrySpec make_geometry(int dim, int l, bool xi_present, bool w_eq_tx, BasisMode mode);

// Ring of polynomials in one degree-2 variable "x", truncated at `dim`.
RingPtr single_variable_ring(int dim);

// Per-root products and sums of an even single-variable function f(x).
Form genus(const GeometrySpec& g, Bundle b, const Form& f);
Form root_sum(const GeometrySpec& g, Bundle b, const Form& f);
FormSeries genus(const GeometrySpec& g, Bundle b, const FormSeries& f);

// f(u), or f(0) when xi is trivial.
Form at_u(const GeometrySpec& g, const Form& f);
FormSeries at_u(const GeometrySpec& g, const FormSeries& f);

// Single-variable building blocks in single_variable_ring(dim).
Form ahat_factor(int dim);     // (x/2)/sinh(x/2)
Form lhat_factor(int dim);     // x/tanh(x/2)
Form cosh_half_factor(int dim);  // cosh(x/2)
Form exp_pair_factor(int dim);   // e^x + e^{-x}

Form a_hat(const GeometrySpec& g);
Form l_hat(const GeometrySpec& g);
Form spinor_ch(const GeometrySpec& g, Bundle b);
Form cosh_half_c(const GeometrySpec& g);
// p1(TX) - p1(W)
Form p1_difference(const GeometrySpec& g);

struct VirtualCharacter {
  Form value;
  int rank = 0;

  friend VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b) {
    return {a.value + b.value, a.rank + b.rank};
  }
  friend VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b) {
    return {a.value - b.value, a.rank - b.rank};
  }
  friend VirtualCharacter operator*(int n, const VirtualCharacter& a) {
    return {a.value * Rational(n), a.rank * n};
  }
};

enum class CharacterOf { W, Xi, T, Trivial };

// ch(W_C), ch(xi_C), ch(T_C X) or the trivial bundle C^n.
VirtualCharacter chern_char(const GeometrySpec& g, CharacterOf which, int trivial_rank = 0);
// E - rank(E)
VirtualCharacter reduced(const VirtualCharacter& e);

enum class PowerOp { Lambda, Sym };

// Formal parameter t = sign * q^{halves/2}.
struct FormalParameter {
  int sign = 1;
  int halves = 1;
};

// ch(Lambda_t(E)) or ch(S_t(E)) as a q-series, via Adams operations:
// log ch Lambda_t(E) = sum_m (-1)^{m+1} t^m psi^m(E) / m.
FormSeries lambda_s_char(const GeometrySpec& g, PowerOp op, const VirtualCharacter& e, FormalParameter t,
                         int order_halves);
// The logarithm alone, for accumulating long tensor products.
FormSeries lambda_s_log(const GeometrySpec& g, PowerOp op, const VirtualCharacter& e, FormalParameter t,
                        int order_halves);

// psi^m on a form: multiplies the degree-d part by m^{d/2}.
Form adams(const Form& e, int m);

// Pontryagin ring p_i(TX), p_i(W) (i <= k) and c, plus the conversion of any
// engine form into it. p_i(W) for i > l vanish for a rank-2l bundle.
RingPtr pontryagin_ring(const GeometrySpec& g);
Form to_pontryagin(const GeometrySpec& g, const Form& f);
// Substitutes p1(W) := p1(TX) in a Pontryagin-basis form.
Form impose_p1_equality(const GeometrySpec& g, const Form& pontryagin_form);

}  // namespace anomcheck
