#include "anomcheck/charforms.hpp"

#include <map>
#include <mutex>

#include "anomcheck/symmetric.hpp"

namespace anomcheck {

std::string to_string(BasisMode mode) { return mode == BasisMode::PowerSum ? "powersum" : "dense"; }

BasisMode parse_basis_mode(const std::string& text) {
  if (text == "powersum") return BasisMode::PowerSum;
  if (text == "dense") return BasisMode::Dense;
  throw PreconditionError("unknown basis '" + text + "'");
}

namespace {

std::string indexed(const std::string& stem, int i, const std::string& suffix = "") {
  return stem + std::to_string(i) + suffix;
}

std::vector<std::string> pontryagin_names(const char* bundle, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(indexed("p", i, std::string("(") + bundle + ")"));
  return out;
}

}  // namespace

GeometrySpec make_geometry(int dim, int l, bool xi_present, bool w_eq_tx, BasisMode mode) {
  if (dim <= 0 || dim % 4 != 0) throw PreconditionError("dimension must be a positive multiple of 4");
  if (l < 1) throw PreconditionError("rank parameter l must be positive");
  if (w_eq_tx && l != dim / 2) throw PreconditionError("W = TX requires l = dim/2");
  GeometrySpec g;
  g.dim_x = dim;
  g.l = l;
  g.xi_present = xi_present;
  g.w_eq_tx = w_eq_tx;
  g.mode = mode;
  const int k = dim / 4;
  std::vector<GeneratorSpec> gens;
  if (mode == BasisMode::Dense) {
    for (int j = 1; j <= dim / 2; ++j) g.t_gens.push_back(indexed("x", j));
    if (!w_eq_tx) {
      for (int j = 1; j <= l; ++j) g.w_gens.push_back(indexed("y", j));
    }
    for (const auto& n : g.t_gens) gens.push_back({n, 2});
    for (const auto& n : g.w_gens) gens.push_back({n, 2});
  } else {
    for (int n = 1; n <= k; ++n) g.t_gens.push_back(indexed("pi", n, "(T)"));
    if (!w_eq_tx) {
      for (int n = 1; n <= k; ++n) g.w_gens.push_back(indexed("pi", n, "(W)"));
    }
    for (int n = 1; n <= k; ++n) gens.push_back({g.t_gens[n - 1], 4 * n});
    for (int n = 1; n <= static_cast<int>(g.w_gens.size()); ++n) gens.push_back({g.w_gens[n - 1], 4 * n});
  }
  if (w_eq_tx) g.w_gens = g.t_gens;
  if (xi_present) {
    g.u_gen = "u";
    gens.push_back({"u", 2});
  }
  g.ring = ring_new(gens, dim);

  std::vector<GeneratorSpec> pgens;
  for (const auto& n : pontryagin_names("TX", k)) pgens.push_back({n, 4 * (static_cast<int>(pgens.size()) + 1)});
  if (!w_eq_tx) {
    int i = 1;
    for (const auto& n : pontryagin_names("W", k)) pgens.push_back({n, 4 * i++});
  }
  if (xi_present) pgens.push_back({"c", 2});
  g.pontryagin = ring_new(pgens, dim);
  return g;
}

RingPtr single_variable_ring(int dim) {
  static std::mutex mu;
  static std::map<int, RingPtr> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(dim);
  if (it != cache.end()) return it->second;
  auto ring = ring_new({{"x", 2}}, dim);
  cache.emplace(dim, ring);
  return ring;
}

namespace {

void require_single_variable(const GeometrySpec& g, const RingPtr& r) {
  if (!same_ring(*r, *single_variable_ring(g.dim_x))) throw IncompatibleRings();
}

// Coefficients f_n of x^{2n}; rejects odd powers.
std::vector<Rational> even_coefficients(const Form& f, int k) {
  const auto& ring = *f.ring();
  std::vector<Rational> out(static_cast<std::size_t>(2 * k + 1), Rational(0));
  for (const auto& t : f.terms()) {
    int e = ring.exponent(t.key, 0);
    if (e % 2 != 0) throw InternalError("single-variable function is not even");
    out[static_cast<std::size_t>(e / 2)] = t.coef;
  }
  return out;
}

Form substitute(const Form& f, const RingPtr& target, const std::string& name) {
  return apply_homomorphism(f, target, {Form::generator(target, name)});
}

// sum_n c_n pi_n for a family of power-sum generators.
Form power_sum_combination(const GeometrySpec& g, Bundle b, const std::vector<Rational>& coeffs) {
  Form out = Form::zero(g.ring);
  const auto& names = g.gens(b);
  for (std::size_t n = 1; n < coeffs.size(); ++n) {
    if (is_zero(coeffs[n])) continue;
    if (n > names.size()) continue;  // beyond the truncation
    out += Form::generator(g.ring, names[n - 1]) * coeffs[n];
  }
  return out;
}

}  // namespace

Form genus(const GeometrySpec& g, Bundle b, const Form& f) {
  require_single_variable(g, f.ring());
  if (g.mode == BasisMode::Dense) {
    Form out = Form::one(g.ring);
    for (const auto& root : g.gens(b)) out *= substitute(f, g.ring, root);
    return out;
  }
  Rational c0 = f.constant_term();
  if (is_zero(c0)) throw PreconditionError("genus of a function vanishing at zero");
  Form h = log_unit(f * (1 / c0));
  auto coeffs = even_coefficients(h, g.k());
  return exp_form(power_sum_combination(g, b, coeffs)) * rational_pow(c0, g.root_count(b));
}

Form root_sum(const GeometrySpec& g, Bundle b, const Form& f) {
  require_single_variable(g, f.ring());
  if (g.mode == BasisMode::Dense) {
    Form out = Form::zero(g.ring);
    for (const auto& root : g.gens(b)) out += substitute(f, g.ring, root);
    return out;
  }
  auto coeffs = even_coefficients(f, g.k());
  return power_sum_combination(g, b, coeffs) + Form::constant(g.ring, coeffs[0] * g.root_count(b));
}

FormSeries genus(const GeometrySpec& g, Bundle b, const FormSeries& f) {
  require_single_variable(g, f.zero().ring());
  const int order = f.order();
  if (g.mode == BasisMode::Dense) {
    FormSeries out = FormSeries::constant(order, Form::one(g.ring));
    for (const auto& root : g.gens(b)) {
      out = out * f.map([&](const Form& c) { return substitute(c, g.ring, root); });
    }
    return out;
  }
  ScalarSeries c0 = f.map([](const Form& c) { return c.constant_term(); });
  FormSeries normalized = mul(qs_inv(c0), f);
  FormSeries log_series = qs_log(normalized);
  FormSeries exponent(order, Form::zero(g.ring));
  for (const auto& [e, c] : log_series.coefficients()) {
    auto coeffs = even_coefficients(c, g.k());
    exponent.set(e, power_sum_combination(g, b, coeffs) + Form::constant(g.ring, coeffs[0] * g.root_count(b)));
  }
  ScalarSeries scale = ScalarSeries::constant(order, Rational(1));
  for (int i = 0; i < g.root_count(b); ++i) scale = scale * c0;
  return mul(scale, qs_exp(exponent));
}

Form at_u(const GeometrySpec& g, const Form& f) {
  require_single_variable(g, f.ring());
  if (g.u_gen) return substitute(f, g.ring, *g.u_gen);
  return Form::constant(g.ring, f.constant_term());
}

FormSeries at_u(const GeometrySpec& g, const FormSeries& f) {
  return f.map([&](const Form& c) { return at_u(g, c); });
}

Form ahat_factor(int dim) {
  auto r = single_variable_ring(dim);
  // sinh(x/2)/(x/2) = sum (x/2)^{2n} / (2n+1)!
  std::vector<std::pair<MonomialKey, Rational>> pairs;
  for (int n = 0; 4 * n <= dim; ++n) {
    pairs.emplace_back(r->power_key(0, 2 * n), pow2(-2 * n) / factorial(2 * n + 1));
  }
  return inv_unit(Form::from_pairs(r, pairs));
}

Form lhat_factor(int dim) {
  auto r = single_variable_ring(dim);
  Form x = Form::generator(r, std::size_t{0});
  Form ex = exp_form(x);
  // (e^x - 1)/x = sum x^n/(n+1)!
  std::vector<std::pair<MonomialKey, Rational>> pairs;
  for (int n = 0; 2 * n <= dim; ++n) pairs.emplace_back(r->power_key(0, n), 1 / factorial(n + 1));
  return (ex + Form::one(r)) * inv_unit(Form::from_pairs(r, pairs));
}

Form cosh_half_factor(int dim) {
  auto r = single_variable_ring(dim);
  std::vector<std::pair<MonomialKey, Rational>> pairs;
  for (int n = 0; 4 * n <= dim; ++n) pairs.emplace_back(r->power_key(0, 2 * n), pow2(-2 * n) / factorial(2 * n));
  return Form::from_pairs(r, pairs);
}

Form exp_pair_factor(int dim) {
  auto r = single_variable_ring(dim);
  Form x = Form::generator(r, std::size_t{0});
  return exp_form(x) + exp_form(-x);
}

Form a_hat(const GeometrySpec& g) { return genus(g, Bundle::T, ahat_factor(g.dim_x)); }

Form l_hat(const GeometrySpec& g) { return genus(g, Bundle::T, lhat_factor(g.dim_x)); }

Form spinor_ch(const GeometrySpec& g, Bundle b) {
  return genus(g, b, cosh_half_factor(g.dim_x) * Rational(2));
}

Form cosh_half_c(const GeometrySpec& g) { return at_u(g, cosh_half_factor(g.dim_x)); }

Form p1_difference(const GeometrySpec& g) {
  auto r = single_variable_ring(g.dim_x);
  Form x2 = pow(Form::generator(r, std::size_t{0}), 2);
  return root_sum(g, Bundle::T, x2) - root_sum(g, Bundle::W, x2);
}

VirtualCharacter chern_char(const GeometrySpec& g, CharacterOf which, int trivial_rank) {
  switch (which) {
    case CharacterOf::W: return {root_sum(g, Bundle::W, exp_pair_factor(g.dim_x)), 2 * g.l};
    case CharacterOf::T: return {root_sum(g, Bundle::T, exp_pair_factor(g.dim_x)), g.dim_x};
    case CharacterOf::Xi: return {at_u(g, exp_pair_factor(g.dim_x)), 2};
    case CharacterOf::Trivial: return {Form::constant(g.ring, Rational(trivial_rank)), trivial_rank};
  }
  throw InternalError("unhandled character");
}

VirtualCharacter reduced(const VirtualCharacter& e) {
  return {e.value - Form::constant(e.value.ring(), Rational(e.rank)), 0};
}

Form adams(const Form& e, int m) {
  std::vector<std::pair<MonomialKey, Rational>> pairs;
  pairs.reserve(e.size());
  for (const auto& t : e.terms()) pairs.emplace_back(t.key, t.coef * rational_pow(Rational(m), t.degree / 2));
  return Form::from_pairs(e.ring(), pairs);
}

FormSeries lambda_s_log(const GeometrySpec& g, PowerOp op, const VirtualCharacter& e, FormalParameter t,
                        int order_halves) {
  if (t.halves <= 0) throw PreconditionError("non-convergent formal parameter");
  if (t.sign != 1 && t.sign != -1) throw PreconditionError("formal parameter must be +q^e or -q^e");
  if (!same_ring(*e.value.ring(), *g.ring)) throw IncompatibleRings();
  FormSeries out(order_halves, Form::zero(g.ring));
  for (int m = 1; m * t.halves < order_halves; ++m) {
    int sign_m = (m % 2 == 1) ? t.sign : 1;
    Rational coef(sign_m, m);
    if (op == PowerOp::Lambda && m % 2 == 0) coef = -coef;
    out.set(m * t.halves, adams(e.value, m) * coef);
  }
  return out;
}

FormSeries lambda_s_char(const GeometrySpec& g, PowerOp op, const VirtualCharacter& e, FormalParameter t,
                         int order_halves) {
  return qs_exp(lambda_s_log(g, op, e, t, order_halves));
}

RingPtr pontryagin_ring(const GeometrySpec& g) { return g.pontryagin; }

Form to_pontryagin(const GeometrySpec& g, const Form& f) {
  if (!same_ring(*f.ring(), *g.ring)) throw IncompatibleRings();
  const int k = g.k();
  auto tx = pontryagin_names("TX", k);
  auto w = pontryagin_names("W", std::min(k, g.l));
  std::vector<Passthrough> pass;
  if (g.u_gen) pass.emplace_back(*g.u_gen, "c");
  if (g.mode == BasisMode::PowerSum) {
    std::vector<SymmetricFamily> fams{{g.t_gens, tx}};
    if (!g.w_eq_tx) fams.push_back({g.w_gens, w});
    return newton_reduce(f, g.pontryagin, fams, pass);
  }
  std::vector<RootFamily> fams{{g.t_gens, tx}};
  if (!g.w_eq_tx) fams.push_back({g.w_gens, w});
  return symmetric_reduce(f, g.pontryagin, fams, pass);
}

Form impose_p1_equality(const GeometrySpec& g, const Form& pontryagin_form) {
  if (!same_ring(*pontryagin_form.ring(), *g.pontryagin)) throw IncompatibleRings();
  if (g.w_eq_tx) return pontryagin_form;
  const auto& ring = g.pontryagin;
  std::vector<Form> images;
  for (const auto& gen : ring->generators()) {
    images.push_back(Form::generator(ring, gen.name == "p1(W)" ? std::string("p1(TX)") : gen.name));
  }
  return apply_homomorphism(pontryagin_form, ring, images);
}

}  // namespace anomcheck
