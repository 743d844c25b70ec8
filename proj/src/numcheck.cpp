#include "anomcheck/numcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace anomcheck {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};
constexpr double kEvalTarget = 1e-16;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_upper_half_plane(Complex tau) {
  if (!(tau.imag() > 0.0)) throw PreconditionError("tau must lie in the upper half plane");
}

Complex q_power(Complex tau, double e) { return std::exp(2.0 * kPi * kI * tau * e); }

struct Truncation {
  int terms;
  double bound;
};

// Smallest term count (starting from the sample's truncation) whose tail bound meets the target.
Truncation choose_terms(const std::function<double(int)>& bound, const ComplexSample& s, double target) {
  int n = std::max(1, s.truncation);
  double b = bound(n);
  if (b <= target) return {n, b};
  int need = n;
  while (bound(need) > target) {
    need += need / 4 + 1;
    if (need > 1000000) throw PreconditionError("no truncation reaches the requested tolerance");
  }
  if (!s.auto_raise) {
    throw PreconditionError("truncation q^" + std::to_string(n) + " is insufficient; need q^" + std::to_string(need));
  }
  return {need, bound(need)};
}

// Relative tail of prod_{j>N} (1 + z_j) with sum_{j>N} |z_j| <= c x^{N+1} / (1 - r).
double product_tail(double c, double x, double r, int n) {
  double first = c * std::pow(x, n + 1);
  if (first > 0.5) return kInf;
  double s = first / (1.0 - r);
  return s > 0.25 ? kInf : 4.0 * s;
}

// sum_{s>N} s^p x^s / (1 - r^s) by a geometric majorant.
double lambert_tail(int p, double x, double r, int n) {
  double ratio = std::pow(static_cast<double>(n + 2) / (n + 1), p) * x;
  if (ratio >= 1.0) return kInf;
  return std::pow(n + 1.0, p) * std::pow(x, n + 1) / ((1.0 - ratio) * (1.0 - r));
}

struct LambertSum {
  Complex value;
  double bound;
};

// sum_{s>=1} sign(s) s^p z^s / (1 - q^s), with z = q (half = false) or q^{1/2}.
LambertSum lambert(int p, bool half, bool alternating, Complex tau, const ComplexSample& s) {
  const double r = std::exp(-2.0 * kPi * tau.imag());
  const double x = half ? std::sqrt(r) : r;
  auto t = choose_terms([&](int n) { return lambert_tail(p, x, r, n); }, s, kEvalTarget);
  Complex q = q_power(tau, 1.0);
  Complex z = half ? q_power(tau, 0.5) : q;
  Complex zs = 1.0, qs = 1.0, sum = 0.0;
  for (int k = 1; k <= t.terms; ++k) {
    zs *= z;
    qs *= q;
    double sign = alternating && k % 2 == 0 ? -1.0 : 1.0;
    sum += sign * std::pow(static_cast<double>(k), p) * zs / (1.0 - qs);
  }
  return {sum, t.bound};
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

struct ThetaEval {
  Complex value;
  double bound;
};

ThetaEval theta_eval(ThetaKind kind, const ComplexSample& s) {
  require_upper_half_plane(s.tau);
  const double r = std::exp(-2.0 * kPi * s.tau.imag());
  const double a = std::exp(2.0 * kPi * std::abs(s.v.imag()));
  const bool half = kind == ThetaKind::Theta2 || kind == ThetaKind::Theta3;
  auto t = choose_terms(
      [&](int n) { return half ? product_tail((1.0 + 2.0 * a) / std::sqrt(r), r, r, n) : product_tail(1.0 + 2.0 * a, r, r, n); },
      s, kEvalTarget);
  const Complex q = q_power(s.tau, 1.0);
  const Complex qh = q_power(s.tau, 0.5);
  const Complex e = std::exp(2.0 * kPi * kI * s.v);
  const Complex einv = 1.0 / e;
  Complex prod = 1.0;
  Complex qj = 1.0;
  for (int j = 1; j <= t.terms; ++j) {
    qj *= q;
    Complex shifted = qj / qh;  // q^{j-1/2}
    switch (kind) {
      case ThetaKind::Theta:
        prod *= (1.0 - qj) * (1.0 - e * qj) * (1.0 - einv * qj);
        break;
      case ThetaKind::Theta1:
        prod *= (1.0 - qj) * (1.0 + e * qj) * (1.0 + einv * qj);
        break;
      case ThetaKind::Theta2:
        prod *= (1.0 - qj) * (1.0 - e * shifted) * (1.0 - einv * shifted);
        break;
      case ThetaKind::Theta3:
        prod *= (1.0 - qj) * (1.0 + e * shifted) * (1.0 + einv * shifted);
        break;
    }
  }
  const Complex q8 = q_power(s.tau, 0.125);
  if (kind == ThetaKind::Theta) prod *= 2.0 * q8 * std::sin(kPi * s.v);
  if (kind == ThetaKind::Theta1) prod *= 2.0 * q8 * std::cos(kPi * s.v);
  return {prod, t.bound};
}

ComplexSample at(const ComplexSample& base, Complex tau, Complex v) {
  ComplexSample s = base;
  s.tau = tau;
  s.v = v;
  return s;
}

Complex sqrt_tau_over_i(Complex tau) { return std::sqrt(tau / kI); }

struct Deviation {
  double dev = 0.0;
  double bound = 0.0;
};

Deviation theta_law(ThetaKind kind, bool s_law, const ComplexSample& s) {
  const Complex tau = s.tau;
  const Complex v = s.v;
  auto ev = [&](ThetaKind k, Complex t, Complex w) { return theta_eval(k, at(s, t, w)); };
  ThetaEval lhs{}, rhs{};
  Complex factor = 1.0;
  if (!s_law) {
    lhs = ev(kind, tau + 1.0, v);
    switch (kind) {
      case ThetaKind::Theta:
      case ThetaKind::Theta1:
        rhs = ev(kind, tau, v);
        factor = std::exp(kI * kPi / 4.0);
        break;
      case ThetaKind::Theta2:
        rhs = ev(ThetaKind::Theta3, tau, v);
        break;
      case ThetaKind::Theta3:
        rhs = ev(ThetaKind::Theta2, tau, v);
        break;
    }
  } else {
    lhs = ev(kind, -1.0 / tau, v);
    factor = sqrt_tau_over_i(tau) * std::exp(kPi * kI * tau * v * v);
    switch (kind) {
      case ThetaKind::Theta:
        rhs = ev(ThetaKind::Theta, tau, tau * v);
        factor /= kI;
        break;
      case ThetaKind::Theta1:
        rhs = ev(ThetaKind::Theta2, tau, tau * v);
        break;
      case ThetaKind::Theta2:
        rhs = ev(ThetaKind::Theta1, tau, tau * v);
        break;
      case ThetaKind::Theta3:
        rhs = ev(ThetaKind::Theta3, tau, tau * v);
        break;
    }
  }
  Complex r = factor * rhs.value;
  return {std::abs(lhs.value - r), std::max(lhs.bound * std::abs(lhs.value), rhs.bound * std::abs(r))};
}

struct EisensteinEval {
  Complex value;
  double bound;
};

EisensteinEval eisenstein_eval(int k, const ComplexSample& s) {
  require_upper_half_plane(s.tau);
  if (k < 1) throw PreconditionError("Eisenstein index must be positive");
  const double c = Rational(Rational(4 * k) / bernoulli(2 * k)).get_d();
  auto sum = lambert(2 * k - 1, false, false, s.tau, s);
  return {1.0 - c * sum.value, std::abs(c) * sum.bound};
}

Deviation e2_law(const std::string& law, const ComplexSample& s) {
  const Complex tau = s.tau;
  auto e2 = [&](Complex t) { return eisenstein_eval(1, at(s, t, 0.0)); };
  if (law == "E2-T") {
    auto a = e2(tau + 1.0), b = e2(tau);
    return {std::abs(a.value - b.value), a.bound + b.bound};
  }
  if (law == "E2-S") {
    auto a = e2(-1.0 / tau), b = e2(tau);
    Complex rhs = tau * tau * b.value - 6.0 * kI * tau / kPi;
    return {std::abs(a.value - rhs), a.bound + std::abs(tau * tau) * b.bound};
  }
  // general matrices of SL2(Z)
  Deviation worst;
  const int mats[][4] = {{1, 0, 2, 1}, {2, 1, 1, 1}, {1, -1, 1, 0}};
  for (const auto& m : mats) {
    Complex ct = static_cast<double>(m[2]) * tau + static_cast<double>(m[3]);
    Complex image = (static_cast<double>(m[0]) * tau + static_cast<double>(m[1])) / ct;
    auto a = e2(image), b = e2(tau);
    Complex rhs = ct * ct * b.value - 6.0 * kI * static_cast<double>(m[2]) * ct / kPi;
    worst.dev = std::max(worst.dev, std::abs(a.value - rhs));
    worst.bound = std::max(worst.bound, a.bound + std::abs(ct * ct) * b.bound);
  }
  return worst;
}

struct Nullwerte {
  Complex t1, t2, t3;
  double bound;
};

Nullwerte nullwerte(const ComplexSample& base, Complex tau) {
  auto a = theta_eval(ThetaKind::Theta1, at(base, tau, 0.0));
  auto b = theta_eval(ThetaKind::Theta2, at(base, tau, 0.0));
  auto c = theta_eval(ThetaKind::Theta3, at(base, tau, 0.0));
  return {a.value, b.value, c.value, std::max({a.bound, b.bound, c.bound})};
}

Complex divisor_from(DivisorSeries id, const Nullwerte& n) {
  auto p4 = [](Complex z) { return (z * z) * (z * z); };
  switch (id) {
    case DivisorSeries::Delta1:
      return (p4(n.t2) + p4(n.t3)) / 8.0;
    case DivisorSeries::Eps1:
      return p4(n.t2) * p4(n.t3) / 16.0;
    case DivisorSeries::Delta2:
      return -(p4(n.t1) + p4(n.t3)) / 8.0;
    case DivisorSeries::Eps2:
      return p4(n.t1) * p4(n.t3) / 16.0;
  }
  throw InternalError("unhandled divisor series");
}

Deviation delta_eps_law(const ComplexSample& s) {
  const Complex tau = s.tau;
  auto image = nullwerte(s, -1.0 / tau);
  auto here = nullwerte(s, tau);
  Complex t2 = tau * tau;
  double d1 = std::abs(divisor_from(DivisorSeries::Delta2, image) - t2 * divisor_from(DivisorSeries::Delta1, here));
  double d2 = std::abs(divisor_from(DivisorSeries::Eps2, image) - t2 * t2 * divisor_from(DivisorSeries::Eps1, here));
  // quartic combinations amplify the relative error of each nullwert by at most 8
  return {std::max(d1, d2), 8.0 * std::max(image.bound, here.bound) * std::max(1.0, std::abs(t2 * t2))};
}

template <class F>
NumericReport timed(const std::string& id, double tol, F&& body) {
  auto start = std::chrono::steady_clock::now();
  NumericReport rep;
  rep.id = id;
  rep.tolerance = tol;
  body(rep);
  rep.pass = rep.max_deviation < tol;
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

Complex eval_theta(ThetaKind kind, const ComplexSample& s) { return theta_eval(kind, s).value; }

Complex eval_theta_prime(const ComplexSample& s) {
  require_upper_half_plane(s.tau);
  const double r = std::exp(-2.0 * kPi * s.tau.imag());
  auto t = choose_terms([&](int n) { return product_tail(3.0, r, r, n); }, s, kEvalTarget);
  const Complex q = q_power(s.tau, 1.0);
  Complex prod = 1.0, qj = 1.0;
  for (int j = 1; j <= t.terms; ++j) {
    qj *= q;
    prod *= (1.0 - qj) * (1.0 - qj) * (1.0 - qj);
  }
  return 2.0 * kPi * q_power(s.tau, 0.125) * prod;
}

Complex eval_eisenstein(int k, const ComplexSample& s) { return eisenstein_eval(k, s).value; }

Complex eval_divisor(DivisorSeries id, const ComplexSample& s) {
  require_upper_half_plane(s.tau);
  return divisor_from(id, nullwerte(s, s.tau));
}

Complex eval_series(const ScalarSeries& series, Complex tau) {
  Complex sum = 0.0;
  for (const auto& [e, c] : series.coefficients()) sum += to_complex(c) * q_power(tau, 0.5 * e);
  return sum;
}

std::vector<std::string> transformation_laws() {
  return {"theta-S",  "theta-T",  "theta1-S", "theta1-T", "theta2-S",   "theta2-T",
          "theta3-S", "theta3-T", "E2-S",     "E2-T",     "E2-gamma",   "delta-eps-S"};
}

std::vector<ComplexSample> default_tau_grid() {
  std::vector<ComplexSample> out;
  for (Complex tau : {Complex(0, 1), Complex(0, 1.5), Complex(0.5, 1), Complex(-0.4, 1.2), Complex(0.25, 0.8)}) {
    ComplexSample s;
    s.tau = tau;
    s.v = Complex(0.2, 0.05);
    out.push_back(s);
  }
  return out;
}

NumericReport check_transformation(const std::string& law, const std::vector<ComplexSample>& samples) {
  auto laws = transformation_laws();
  if (std::find(laws.begin(), laws.end(), law) == laws.end()) {
    throw PreconditionError("unknown transformation law '" + law + "'");
  }
  for (const auto& s : samples) require_upper_half_plane(s.tau);
  return timed(law, 1e-9, [&](NumericReport& rep) {
    for (const auto& s : samples) {
      Deviation d;
      if (law.rfind("theta", 0) == 0) {
        auto dash = law.find('-');
        std::string stem = law.substr(0, dash);
        ThetaKind kind = stem == "theta"    ? ThetaKind::Theta
                         : stem == "theta1" ? ThetaKind::Theta1
                         : stem == "theta2" ? ThetaKind::Theta2
                                            : ThetaKind::Theta3;
        d = theta_law(kind, law.substr(dash + 1) == "S", s);
      } else if (law.rfind("E2", 0) == 0) {
        d = e2_law(law, s);
      } else {
        d = delta_eps_law(s);
      }
      rep.max_deviation = std::max(rep.max_deviation, d.dev);
      rep.tail_bound = std::max(rep.tail_bound, d.bound);
    }
  });
}

PropositionKind parse_proposition(const std::string& name) {
  if (name == "P") return PropositionKind::P;
  if (name == "Q") return PropositionKind::Q;
  throw PreconditionError("unknown proposition '" + name + "' (expected P or Q)");
}

namespace {

// Coefficients of x^{2n}, n = 1..k, in log of a single-variable unit.
std::vector<Rational> log_coefficients(const Form& unit, int k) {
  Form lg = log_unit(unit * (1 / unit.constant_term()));
  std::vector<Rational> out(static_cast<std::size_t>(k + 1), Rational(0));
  for (const auto& t : lg.terms()) {
    int e = lg.ring()->exponent(t.key, 0);
    if (e % 2 == 0 && e / 2 <= k) out[static_cast<std::size_t>(e / 2)] = t.coef;
  }
  return out;
}

struct LogWeights {
  std::vector<Complex> c;  // index n = 1..k
  double bound = 0.0;
};

// [x^{2n}] log of the normalized theta quotient at tau.
LogWeights log_weights(ThetaKind kind, int dim, Complex tau, const ComplexSample& s) {
  const int k = dim / 4;
  LogWeights w;
  w.c.assign(static_cast<std::size_t>(k + 1), Complex(0.0));
  std::vector<Rational> base(static_cast<std::size_t>(k + 1), Rational(0));
  if (kind == ThetaKind::Theta) base = log_coefficients(ahat_factor(dim), k);
  if (kind == ThetaKind::Theta1) base = log_coefficients(cosh_half_factor(dim), k);
  const bool half = kind == ThetaKind::Theta2 || kind == ThetaKind::Theta3;
  const bool alternating = kind == ThetaKind::Theta1 || kind == ThetaKind::Theta3;
  const double sign = kind == ThetaKind::Theta2 ? -1.0 : 1.0;
  for (int n = 1; n <= k; ++n) {
    auto sum = lambert(2 * n - 1, half, alternating, tau, s);
    double scale = 2.0 / factorial_d(2 * n);
    w.c[static_cast<std::size_t>(n)] = to_complex(base[static_cast<std::size_t>(n)]) + sign * scale * sum.value;
    w.bound = std::max(w.bound, scale * sum.bound);
  }
  return w;
}

struct ComplexBlocks {
  std::vector<ComplexForm> pi_t, pi_w, u_pow;  // index n = 1..k
  ComplexForm d;
};

ComplexBlocks complex_blocks(const GeometrySpec& g) {
  auto r1 = single_variable_ring(g.dim_x);
  ComplexBlocks b{{}, {}, {}, ComplexForm::zero(g.ring)};
  auto cx = [](const Form& f) { return f.map_coefficients([](const Rational& c) { return to_complex(c); }); };
  b.pi_t.push_back(ComplexForm::zero(g.ring));
  b.pi_w.push_back(ComplexForm::zero(g.ring));
  b.u_pow.push_back(ComplexForm::zero(g.ring));
  for (int n = 1; n <= g.k(); ++n) {
    Form x2n = Form::monomial(r1, r1->power_key(0, 2 * n), Rational(1));
    b.pi_t.push_back(cx(root_sum(g, Bundle::T, x2n)));
    b.pi_w.push_back(cx(root_sum(g, Bundle::W, x2n)));
    b.u_pow.push_back(cx(at_u(g, x2n)));
  }
  b.d = cx(p1_difference(g));
  return b;
}

struct ThetaSide {
  ComplexForm log;  // without the E2 term
  Complex e2;
  double bound;
};

// log of genus_T(theta) genus_W(w_kind) w_kind(u)^{-2} theta3(u) other(u) at tau.
ThetaSide theta_side(const GeometrySpec& g, const ComplexBlocks& b, ThetaKind w_kind, ThetaKind other, Complex tau,
                     const ComplexSample& s) {
  auto wt = log_weights(ThetaKind::Theta, g.dim_x, tau, s);
  auto ww = log_weights(w_kind, g.dim_x, tau, s);
  auto w3 = log_weights(ThetaKind::Theta3, g.dim_x, tau, s);
  auto wo = log_weights(other, g.dim_x, tau, s);
  ComplexForm log = ComplexForm::zero(g.ring);
  for (int n = 1; n <= g.k(); ++n) {
    auto i = static_cast<std::size_t>(n);
    log += b.pi_t[i] * wt.c[i];
    log += b.pi_w[i] * ww.c[i];
    log += b.u_pow[i] * (-2.0 * ww.c[i] + w3.c[i] + wo.c[i]);
  }
  auto e2 = eisenstein_eval(1, at(s, tau, 0.0));
  double bound = std::max({wt.bound, ww.bound, w3.bound, wo.bound, e2.bound});
  return {log, e2.value, bound};
}

double max_abs(const ComplexForm& f) {
  double m = 0.0;
  for (const auto& t : f.terms()) m = std::max(m, std::abs(t.coef));
  return m;
}

void require_class(PropositionKind which, const GeometrySpec& g) {
  if (which == PropositionKind::P && g.dim_x % 8 != 4) throw PreconditionError("the P identity needs dimension 8m+4");
  if (which == PropositionKind::Q && g.dim_x % 8 != 0) throw PreconditionError("the Q identity needs dimension 8m");
}

}  // namespace

NumericReport check_proposition(PropositionKind which, const GeometrySpec& g, const ComplexSample& s,
                                const PropositionOptions& options) {
  require_upper_half_plane(s.tau);
  require_class(which, g);
  if (g.dim_x > 12) throw PreconditionError("numeric proposition checks are limited to dimension 12");
  if (s.tau.imag() < 2.0) throw PreconditionError("proposition samples need Im(tau) >= 2, i.e. |q| <= e^{-4 pi}");
  const double tol = 1e-8;
  return timed(which == PropositionKind::P ? "P" : "Q", tol, [&](NumericReport& rep) {
    rep.dim = g.dim_x;
    rep.l = g.l;
    rep.w_eq_tx = g.w_eq_tx;
    rep.xi = g.xi_present;
    const int m = g.dim_x / 8;
    const int top = g.dim_x;
    const int lower = top - 4;
    const int weight = (which == PropositionKind::P ? 4 * m + 2 : 4 * m) + options.weight_shift;
    auto b = complex_blocks(g);
    const Complex tau = s.tau;
    const Complex image = -1.0 / tau;
    const Complex two_l = std::pow(2.0, g.l);

    auto left = theta_side(g, b, ThetaKind::Theta1, ThetaKind::Theta2, image, s);
    ComplexForm lhs = exp_form(left.log + b.d * (left.e2 / 24.0)).degree_component(top) * two_l;

    auto right = theta_side(g, b, ThetaKind::Theta2, ThetaKind::Theta1, tau, s);
    ComplexForm f = exp_form(right.log);
    ComplexForm p2 = f.degree_component(top);
    ComplexForm xi2 = (divided_exp(b.d, right.e2 / 24.0) * f).degree_component(lower);
    ComplexForm inner = options.drop_correction ? p2 : p2 + b.d * xi2;
    ComplexForm rhs = inner * (two_l * std::pow(tau, weight));

    rep.max_deviation = max_abs(lhs - rhs);
    rep.magnitude = max_abs(rhs);
    rep.tail_bound = std::max(left.bound, right.bound);
    if (rep.tail_bound > tol / 10.0) throw InternalError("tail bound above a tenth of the tolerance");
    if (lhs.is_zero()) rep.max_deviation = kInf;  // a vacuous comparison is not a pass
  });
}

NumericReport coherence_check(const ModularSeriesId& id, const ComplexSample& s, int order_halves) {
  require_upper_half_plane(s.tau);
  return timed("coherence-" + id.name(), 1e-12, [&](NumericReport& rep) {
    Complex exact = eval_series(modular_series(id, order_halves), s.tau);
    Complex numeric;
    switch (id.kind) {
      case ModularSeriesId::Kind::Divisor:
        numeric = eval_divisor(id.divisor, s);
        break;
      case ModularSeriesId::Kind::Eisenstein:
        numeric = eval_eisenstein(id.index, s);
        break;
      case ModularSeriesId::Kind::ThetaNull: {
        ThetaKind k = id.index == 1 ? ThetaKind::Theta1 : id.index == 2 ? ThetaKind::Theta2 : ThetaKind::Theta3;
        numeric = eval_theta(k, at(s, s.tau, 0.0));
        if (id.index == 1) numeric /= 2.0 * q_power(s.tau, 0.125);
        break;
      }
      case ModularSeriesId::Kind::ThetaPrimeNull:
        numeric = eval_theta_prime(s) / (2.0 * kPi * q_power(s.tau, 0.125));
        break;
    }
    rep.max_deviation = std::abs(exact - numeric);
    rep.tail_bound = std::pow(std::exp(-kPi * s.tau.imag()), order_halves);
  });
}

NumericReport series_coherence(const GeometrySpec& g, AssembledSeries which, const ComplexSample& s,
                               int order_halves) {
  require_upper_half_plane(s.tau);
  const bool p_series =
      which == AssembledSeries::P1 || which == AssembledSeries::P2 || which == AssembledSeries::Xi2;
  require_class(p_series ? PropositionKind::P : PropositionKind::Q, g);
  return timed("series-coherence", 1e-10, [&](NumericReport& rep) {
    rep.dim = g.dim_x;
    rep.l = g.l;
    rep.w_eq_tx = g.w_eq_tx;
    rep.xi = g.xi_present;
    FormSeries exact = assemble_series(g, which, order_halves);
    ComplexForm summed = ComplexForm::zero(g.ring);
    for (const auto& [e, c] : exact.coefficients()) {
      Complex qe = q_power(s.tau, 0.5 * e);
      summed += c.map_coefficients([&](const Rational& x) { return to_complex(x) * qe; });
    }
    auto b = complex_blocks(g);
    const int top = g.dim_x;
    ComplexForm numeric = ComplexForm::zero(g.ring);
    double bound = 0.0;
    if (which == AssembledSeries::P1 || which == AssembledSeries::Q1) {
      auto side = theta_side(g, b, ThetaKind::Theta1, ThetaKind::Theta2, s.tau, s);
      numeric = exp_form(side.log + b.d * (side.e2 / 24.0)).degree_component(top) * std::pow(2.0, g.l);
      bound = side.bound;
    } else {
      auto side = theta_side(g, b, ThetaKind::Theta2, ThetaKind::Theta1, s.tau, s);
      ComplexForm f = exp_form(side.log);
      bool lower = which == AssembledSeries::Xi2 || which == AssembledSeries::Pi2;
      numeric = lower ? (divided_exp(b.d, side.e2 / 24.0) * f).degree_component(top - 4) : f.degree_component(top);
      bound = side.bound;
    }
    rep.max_deviation = max_abs(summed - numeric);
    rep.magnitude = max_abs(numeric);
    if (numeric.is_zero()) rep.max_deviation = kInf;
    rep.tail_bound = bound;
  });
}

}  // namespace anomcheck
