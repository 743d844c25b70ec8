#pragma once

#include <random>

#include "anomcheck/charforms.hpp"
#include "anomcheck/formring.hpp"
#include "anomcheck/qhalf.hpp"

namespace testing {

using namespace anomcheck;

// mpq_class(a, b) does not reduce; arithmetic on unreduced values is undefined.
inline Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

inline Form gen(const RingPtr& r, const std::string& name) { return Form::generator(r, name); }
inline Form num(const RingPtr& r, long a, long b = 1) { return Form::constant(r, frac(a, b)); }

// Random form with small rational coefficients and no constant term.
inline Form random_nilpotent(const RingPtr& r, std::mt19937& rng, int terms = 5) {
  std::uniform_int_distribution<int> gi(0, static_cast<int>(r->size()) - 1);
  std::uniform_int_distribution<int> pw(1, 3);
  std::uniform_int_distribution<int> cf(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  Form out = Form::zero(r);
  for (int t = 0; t < terms; ++t) {
    Form mono = Form::one(r);
    int factors = pw(rng);
    for (int f = 0; f < factors; ++f) mono *= Form::generator(r, static_cast<std::size_t>(gi(rng)));
    out += mono * frac(cf(rng), den(rng));
  }
  return out;
}

inline Form random_form(const RingPtr& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> cf(-5, 5);
  return random_nilpotent(r, rng) + Form::constant(r, Rational(cf(rng)));
}

// Power-sum rendering of a Pontryagin-basis form.
inline std::string pont(const GeometrySpec& g, const Form& f) { return render(to_pontryagin(g, f)); }

}  // namespace testing
