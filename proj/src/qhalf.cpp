#include "anomcheck/qhalf.hpp"

namespace anomcheck {

HalfInteger HalfInteger::parse(const std::string& text) {
  Rational value = parse_rational(text);
  Rational twice = value * 2;
  if (twice.get_den() != 1 || !twice.get_num().fits_sint_p()) {
    throw PreconditionError("'" + text + "' is not a half-integer");
  }
  return from_halves(static_cast<int>(twice.get_num().get_si()));
}

std::string HalfInteger::to_string() const {
  if (halves_ % 2 == 0) return std::to_string(halves_ / 2);
  return std::to_string(halves_) + "/2";
}

FormSeries mul(const ScalarSeries& s, const FormSeries& f) {
  FormSeries out(std::min(s.order(), f.order()), f.zero());
  std::map<int, Form> acc;
  for (const auto& [es, cs] : s.coefficients()) {
    for (const auto& [ef, cf] : f.coefficients()) {
      if (es + ef >= out.order()) break;
      Form term = cf * cs;
      auto it = acc.find(es + ef);
      if (it == acc.end()) {
        acc.emplace(es + ef, std::move(term));
      } else {
        it->second += term;
      }
    }
  }
  for (auto& [e, c] : acc) out.set(e, std::move(c));
  return out;
}

FormSeries lift(const ScalarSeries& s, const RingPtr& ring) {
  return s.map([&ring](const Rational& r) { return Form::constant(ring, r); });
}

FormSeries qs_exp(const FormSeries& g) {
  if (g.order() == 0) return g;
  Form head = g.coeff(0);
  FormSeries tail = g - FormSeries::constant(g.order(), head);
  return qs_exp_positive(tail) * exp_form(head);
}

FormSeries qs_log(const FormSeries& f) {
  if (f.order() == 0) return f;
  Form head = f.coeff(0);
  if (head.constant_term() != 1) throw PreconditionError("q-series log needs constant term 1");
  FormSeries normalized = f * inv_unit(head);
  return qs_log_unit(normalized) + FormSeries::constant(f.order(), log_unit(head));
}

FormSeries degree_component(const FormSeries& s, int degree) {
  return s.map([degree](const Form& f) { return f.degree_component(degree); });
}

FormSeries divided_exp(const Form& z, const ScalarSeries& s) {
  if (!is_zero(z.constant_term())) throw PreconditionError("non-nilpotent exponent");
  const auto& ring = z.ring();
  FormSeries result(s.order(), Form::zero(ring));
  ScalarSeries spow = s;
  Form zpow = Form::one(ring);
  for (int n = 1; !zpow.is_zero(); ++n) {
    if (n > 1) spow = spow * s;
    Rational inv_fact = 1 / factorial(n);
    result = result + mul(spow, FormSeries::constant(s.order(), zpow * inv_fact));
    zpow = zpow * z;
  }
  return result;
}

std::string render_q_power(int halves) {
  if (halves == 0) return "1";
  if (halves == 2) return "q";
  if (halves % 2 == 0) return "q^" + std::to_string(halves / 2);
  return "q^(" + std::to_string(halves) + "/2)";
}

std::string render(const ScalarSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : s.coefficients()) {
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += render_q_power(e);
    } else {
      out += to_string(mag) + "*" + render_q_power(e);
    }
  }
  return out;
}

std::string render(const FormSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : s.coefficients()) {
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += c.size() > 1 && s.coefficients().size() > 1 ? "(" + render(c) + ")" : render(c);
    } else {
      out += "(" + render(c) + ")*" + render_q_power(e);
    }
  }
  return out;
}

}  // namespace anomcheck
