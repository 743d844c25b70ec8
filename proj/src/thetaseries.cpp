#include "anomcheck/thetaseries.hpp"

#include "anomcheck/modforms.hpp"

namespace anomcheck {

namespace {

// 1 + c q^{halves/2}
FormSeries binomial(const RingPtr& ring, int order_halves, int halves, const Form& c) {
  FormSeries s = FormSeries::constant(order_halves, Form::one(ring));
  s.set(halves, c);
  return s;
}

// sum_n a_n v^{2n} for the coefficient list a.
Form even_series_in(const Form& v, const std::vector<Rational>& a) {
  Form out = Form::zero(v.ring());
  Form v2 = v * v;
  Form power = Form::one(v.ring());
  for (const auto& c : a) {
    if (power.is_zero()) break;
    out += power * c;
    power = power * v2;
  }
  return out;
}

}  // namespace

FormSeries theta_factor(ThetaKind kind, const Form& v, int order_halves) {
  if (order_halves < 1) throw PreconditionError("series order must be at least 1/2");
  if (!v.is_homogeneous(2)) throw PreconditionError("theta argument must be a degree-2 form");
  const auto& ring = v.ring();
  const int trunc = ring->truncation_degree();
  Form ev = exp_form(v);
  Form emv = exp_form(-v);
  Form one = Form::one(ring);
  FormSeries num = FormSeries::constant(order_halves, one);
  FormSeries den = FormSeries::constant(order_halves, one);
  Form prefix = one;
  switch (kind) {
    case ThetaKind::Theta: {
      std::vector<Rational> sinh_over;
      for (int n = 0; 4 * n <= trunc; ++n) sinh_over.push_back(pow2(-2 * n) / factorial(2 * n + 1));
      prefix = inv_unit(even_series_in(v, sinh_over));
      for (int n = 1; 2 * n < order_halves; ++n) {
        auto f = binomial(ring, order_halves, 2 * n, -one);
        num = num * f * f;
        den = den * binomial(ring, order_halves, 2 * n, -ev) * binomial(ring, order_halves, 2 * n, -emv);
      }
      break;
    }
    case ThetaKind::Theta1: {
      std::vector<Rational> cosh_half;
      for (int n = 0; 4 * n <= trunc; ++n) cosh_half.push_back(pow2(-2 * n) / factorial(2 * n));
      prefix = even_series_in(v, cosh_half);
      for (int n = 1; 2 * n < order_halves; ++n) {
        num = num * binomial(ring, order_halves, 2 * n, ev) * binomial(ring, order_halves, 2 * n, emv);
        auto f = binomial(ring, order_halves, 2 * n, one);
        den = den * f * f;
      }
      break;
    }
    case ThetaKind::Theta2:
    case ThetaKind::Theta3: {
      const Form sign = kind == ThetaKind::Theta2 ? -one : one;
      for (int n = 1; 2 * n - 1 < order_halves; ++n) {
        num = num * binomial(ring, order_halves, 2 * n - 1, sign * ev) *
              binomial(ring, order_halves, 2 * n - 1, sign * emv);
        auto f = binomial(ring, order_halves, 2 * n - 1, sign);
        den = den * f * f;
      }
      break;
    }
  }
  return num * qs_inv(den) * prefix;
}

namespace {

Form u_argument(const GeometrySpec& g) {
  return g.u_gen ? Form::generator(g.ring, *g.u_gen) : Form::zero(g.ring);
}

struct ReducedBundles {
  VirtualCharacter t, w, xi;
};

ReducedBundles reduced_bundles(const GeometrySpec& g) {
  return {reduced(chern_char(g, CharacterOf::T)), reduced(chern_char(g, CharacterOf::W)),
          reduced(chern_char(g, CharacterOf::Xi))};
}

}  // namespace

FormSeries theta2_char(const GeometrySpec& g, CharacterPath path, int order_halves) {
  if (order_halves < 1) throw PreconditionError("series order must be at least 1/2");
  if (path == CharacterPath::BundleOps) {
    auto b = reduced_bundles(g);
    VirtualCharacter w_minus = b.w - 2 * b.xi;
    FormSeries log(order_halves, Form::zero(g.ring));
    for (int n = 1; 2 * n - 1 < order_halves; ++n) {
      log = log + lambda_s_log(g, PowerOp::Lambda, w_minus, {-1, 2 * n - 1}, order_halves);
      log = log + lambda_s_log(g, PowerOp::Lambda, b.xi, {1, 2 * n - 1}, order_halves);
      if (2 * n < order_halves) {
        log = log + lambda_s_log(g, PowerOp::Sym, b.t, {1, 2 * n}, order_halves);
        log = log + lambda_s_log(g, PowerOp::Lambda, b.xi, {1, 2 * n}, order_halves);
      }
    }
    return qs_exp(log);
  }
  auto r1 = single_variable_ring(g.dim_x);
  Form x = Form::generator(r1, std::size_t{0});
  Form u = u_argument(g);
  FormSeries prod = genus(g, Bundle::T, theta_factor(ThetaKind::Theta, x, order_halves)) *
                    genus(g, Bundle::W, theta_factor(ThetaKind::Theta2, x, order_halves));
  FormSeries f2u_inv = qs_inv(theta_factor(ThetaKind::Theta2, u, order_halves));
  prod = prod * f2u_inv * f2u_inv * theta_factor(ThetaKind::Theta3, u, order_halves) *
         theta_factor(ThetaKind::Theta1, u, order_halves);
  return prod * (inv_unit(a_hat(g)) * inv_unit(cosh_half_c(g)));
}

FormSeries theta1_char(const GeometrySpec& g, CharacterPath path, int order_halves) {
  if (order_halves < 1) throw PreconditionError("series order must be at least 1/2");
  if (path == CharacterPath::BundleOps) {
    auto b = reduced_bundles(g);
    VirtualCharacter w_minus = b.w - 2 * b.xi;
    FormSeries log(order_halves, Form::zero(g.ring));
    for (int n = 1; 2 * n - 1 < order_halves; ++n) {
      log = log + lambda_s_log(g, PowerOp::Lambda, b.xi, {1, 2 * n - 1}, order_halves);
      log = log + lambda_s_log(g, PowerOp::Lambda, b.xi, {-1, 2 * n - 1}, order_halves);
      if (2 * n < order_halves) {
        log = log + lambda_s_log(g, PowerOp::Sym, b.t, {1, 2 * n}, order_halves);
        log = log + lambda_s_log(g, PowerOp::Lambda, w_minus, {1, 2 * n}, order_halves);
      }
    }
    return qs_exp(log);
  }
  auto r1 = single_variable_ring(g.dim_x);
  Form x = Form::generator(r1, std::size_t{0});
  Form u = u_argument(g);
  FormSeries prod = genus(g, Bundle::T, theta_factor(ThetaKind::Theta, x, order_halves)) *
                    genus(g, Bundle::W, theta_factor(ThetaKind::Theta1, x, order_halves));
  FormSeries f1u_inv = qs_inv(theta_factor(ThetaKind::Theta1, u, order_halves));
  prod = prod * f1u_inv * f1u_inv * theta_factor(ThetaKind::Theta3, u, order_halves) *
         theta_factor(ThetaKind::Theta2, u, order_halves);
  Form cosh_u = cosh_half_c(g);
  Form fix = inv_unit(a_hat(g)) * inv_unit(spinor_ch(g, Bundle::W)) * cosh_u * cosh_u * pow2(g.l);
  return prod * fix;
}

AssembledSeries parse_assembled(const std::string& name) {
  if (name == "P1") return AssembledSeries::P1;
  if (name == "P2") return AssembledSeries::P2;
  if (name == "Xi2") return AssembledSeries::Xi2;
  if (name == "Q1") return AssembledSeries::Q1;
  if (name == "Q2") return AssembledSeries::Q2;
  if (name == "Pi2") return AssembledSeries::Pi2;
  throw PreconditionError("unknown assembled series '" + name + "'");
}

FormSeries e2_exponential(const Form& z, int order_halves) {
  ScalarSeries s = eisenstein(1, order_halves) * Rational(1, 24);
  return qs_exp(mul(s, FormSeries::constant(order_halves, z)));
}

FormSeries e2_divided_exponential(const Form& z, int order_halves) {
  return divided_exp(z, eisenstein(1, order_halves) * Rational(1, 24));
}

FormSeries assemble_series(const GeometrySpec& g, AssembledSeries which, int order_halves, CharacterPath path) {
  const bool p_series =
      which == AssembledSeries::P1 || which == AssembledSeries::P2 || which == AssembledSeries::Xi2;
  if (p_series && g.dim_x % 8 != 4) throw PreconditionError("P-series need dimension 8m+4");
  if (!p_series && g.dim_x % 8 != 0) throw PreconditionError("Q-series need dimension 8m");
  const int m = g.dim_x / 8;
  const int top = p_series ? 8 * m + 4 : 8 * m;
  const int lower = p_series ? 8 * m : 8 * m - 4;
  Form ahat = a_hat(g);
  Form cosh_u = cosh_half_c(g);
  Form d = p1_difference(g);
  switch (which) {
    case AssembledSeries::P1:
    case AssembledSeries::Q1: {
      Form base = ahat * spinor_ch(g, Bundle::W) * inv_unit(cosh_u * cosh_u);
      FormSeries s = e2_exponential(d, order_halves) * theta1_char(g, path, order_halves) * base;
      return degree_component(s, top);
    }
    case AssembledSeries::P2:
    case AssembledSeries::Q2:
      return degree_component(theta2_char(g, path, order_halves) * (ahat * cosh_u), top);
    case AssembledSeries::Xi2:
    case AssembledSeries::Pi2: {
      FormSeries s = e2_divided_exponential(d, order_halves) * theta2_char(g, path, order_halves) * (ahat * cosh_u);
      return degree_component(s, lower);
    }
  }
  throw InternalError("unhandled assembled series");
}

}  // namespace anomcheck
