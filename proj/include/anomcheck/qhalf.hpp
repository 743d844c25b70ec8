#pragma once

// Truncated formal series in q^{1/2}. Exponents are stored as integer counts
// of half-steps: key 2e holds the coefficient of q^e. A series of order N
// (in half-steps) keeps exactly the coefficients of q^{0}, ..., q^{(N-1)/2}.

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "anomcheck/error.hpp"
#include "anomcheck/formring.hpp"
#include "anomcheck/scalar.hpp"

namespace anomcheck {

// An exact half-integer, stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_halves(int halves) { return HalfInteger(halves); }
  static constexpr HalfInteger whole(int n) { return HalfInteger(2 * n); }
  // Accepts "3", "3/2", "1.5".
  static HalfInteger parse(const std::string& text);

  constexpr int halves() const { return halves_; }
  std::string to_string() const;

  constexpr auto operator<=>(const HalfInteger&) const = default;

 private:
  constexpr explicit HalfInteger(int halves) : halves_(halves) {}
  int halves_ = 0;
};

// Coefficient-domain hooks, overloaded for Rational and Form.
inline Rational zero_like(const Rational&) { return 0; }
inline Rational one_like(const Rational&) { return 1; }
inline bool same_domain(const Rational&, const Rational&) { return true; }
inline Rational inverse_of(const Rational& r) {
  if (is_zero(r)) throw PreconditionError("non-unit q-series");
  return 1 / r;
}

inline Form zero_like(const Form& f) { return Form::zero(f.ring()); }
inline Form one_like(const Form& f) { return Form::one(f.ring()); }
inline bool is_zero(const Form& f) { return f.is_zero(); }
inline bool same_domain(const Form& a, const Form& b) { return same_ring(*a.ring(), *b.ring()); }
inline Form inverse_of(const Form& f) {
  if (is_zero(f.constant_term())) throw PreconditionError("non-unit q-series");
  return inv_unit(f);
}

template <class C>
class QSeries {
 public:
  // Zero series of the given order; `zero` fixes the coefficient domain.
  QSeries(int order_halves, C zero) : order_(order_halves), zero_(std::move(zero)) {
    if (order_ < 0) throw PreconditionError("negative q-series order");
  }

  static QSeries constant(int order_halves, const C& c) {
    QSeries s(order_halves, zero_like(c));
    s.set(0, c);
    return s;
  }
  // c * q^{halves/2}
  static QSeries monomial(int order_halves, int halves, const C& c) {
    QSeries s(order_halves, zero_like(c));
    if (halves < order_halves) s.set(halves, c);
    return s;
  }

  int order() const { return order_; }
  const C& zero() const { return zero_; }
  const std::map<int, C>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of q^{halves/2}; rejects exponents at or beyond the truncation.
  C coeff(int halves) const {
    if (halves < 0 || halves >= order_) {
      throw PreconditionError("coefficient q^(" + HalfInteger::from_halves(halves).to_string() +
                              ") beyond truncation");
    }
    auto it = coeffs_.find(halves);
    return it == coeffs_.end() ? zero_ : it->second;
  }
  C coeff(HalfInteger e) const { return coeff(e.halves()); }

  void set(int halves, C c) {
    if (halves < 0) throw PreconditionError("negative q-exponent");
    if (halves >= order_) return;
    if (!same_domain(c, zero_)) throw IncompatibleRings();
    if (anomcheck::is_zero(c)) {
      coeffs_.erase(halves);
    } else {
      coeffs_.insert_or_assign(halves, std::move(c));
    }
  }

  QSeries truncated(int order_halves) const {
    QSeries out(std::min(order_halves, order_), zero_);
    for (const auto& [e, c] : coeffs_) {
      if (e < out.order_) out.coeffs_.emplace(e, c);
    }
    return out;
  }

  template <class F>
  auto map(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    QSeries<D> out(order_, f(zero_));
    for (const auto& [e, c] : coeffs_) out.set(e, f(c));
    return out;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) { return combine(a, b, false); }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return combine(a, b, true); }
  QSeries operator-() const {
    QSeries out(order_, zero_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
    return out;
  }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    if (!same_domain(a.zero_, b.zero_)) throw IncompatibleRings();
    QSeries out(std::min(a.order_, b.order_), a.zero_);
    std::map<int, C> acc;
    for (const auto& [ea, ca] : a.coeffs_) {
      for (const auto& [eb, cb] : b.coeffs_) {
        if (ea + eb >= out.order_) break;
        C prod = ca * cb;
        auto it = acc.find(ea + eb);
        if (it == acc.end()) {
          acc.emplace(ea + eb, std::move(prod));
        } else {
          it->second = it->second + prod;
        }
      }
    }
    for (auto& [e, c] : acc) out.set(e, std::move(c));
    return out;
  }

  // Coefficient-wise scaling by a fixed element of the coefficient domain.
  friend QSeries operator*(const QSeries& a, const C& c) {
    QSeries out(a.order_, a.zero_);
    for (const auto& [e, x] : a.coeffs_) out.set(e, x * c);
    return out;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.order_ == b.order_ && same_domain(a.zero_, b.zero_) && a.coeffs_ == b.coeffs_;
  }

 private:
  static QSeries combine(const QSeries& a, const QSeries& b, bool subtract) {
    if (!same_domain(a.zero_, b.zero_)) throw IncompatibleRings();
    QSeries out(std::min(a.order_, b.order_), a.zero_);
    for (const auto& [e, c] : a.coeffs_) {
      if (e < out.order_) out.coeffs_.emplace(e, c);
    }
    for (const auto& [e, c] : b.coeffs_) {
      if (e >= out.order_) continue;
      auto it = out.coeffs_.find(e);
      C next = it == out.coeffs_.end() ? (subtract ? C(-c) : c)
                                       : (subtract ? C(it->second - c) : C(it->second + c));
      out.set(e, std::move(next));
    }
    return out;
  }

  int order_;
  C zero_;
  std::map<int, C> coeffs_;
};

using ScalarSeries = QSeries<Rational>;
using FormSeries = QSeries<Form>;

// Multiplies a form-valued series by a scalar series (Cauchy product).
FormSeries mul(const ScalarSeries& s, const FormSeries& f);
// Embeds a scalar series as a form-valued series over `ring`.
FormSeries lift(const ScalarSeries& s, const RingPtr& ring);

template <class C>
QSeries<C> qs_mul(const QSeries<C>& a, const QSeries<C>& b) {
  return a * b;
}

// Inverse of a series whose q^0 coefficient is a unit.
template <class C>
QSeries<C> qs_inv(const QSeries<C>& a) {
  const int n = a.order();
  QSeries<C> out(n, a.zero());
  if (n == 0) return out;
  C lead = inverse_of(a.coeff(0));
  std::vector<C> b(static_cast<std::size_t>(n), a.zero());
  b[0] = lead;
  for (int k = 1; k < n; ++k) {
    C sum = a.zero();
    for (const auto& [e, c] : a.coefficients()) {
      if (e == 0) continue;
      if (e > k) break;
      sum = sum + c * b[static_cast<std::size_t>(k - e)];
    }
    b[static_cast<std::size_t>(k)] = -(sum * lead);
  }
  for (int k = 0; k < n; ++k) out.set(k, b[static_cast<std::size_t>(k)]);
  return out;
}

// exp of a series whose q^0 coefficient is zero, via n f_n = sum_k k g_k f_{n-k}.
template <class C>
QSeries<C> qs_exp_positive(const QSeries<C>& g) {
  const int n = g.order();
  QSeries<C> out(n, g.zero());
  if (n == 0) return out;
  if (!is_zero(g.coeff(0))) throw PreconditionError("q-series exp needs vanishing constant term");
  std::vector<C> f(static_cast<std::size_t>(n), g.zero());
  f[0] = one_like(g.zero());
  for (int k = 1; k < n; ++k) {
    C sum = g.zero();
    for (const auto& [e, c] : g.coefficients()) {
      if (e > k) break;
      sum = sum + c * f[static_cast<std::size_t>(k - e)] * Rational(e);
    }
    f[static_cast<std::size_t>(k)] = sum * Rational(1, k);
  }
  for (int k = 0; k < n; ++k) out.set(k, f[static_cast<std::size_t>(k)]);
  return out;
}

// log of a series with q^0 coefficient exactly one_like(zero).
template <class C>
QSeries<C> qs_log_unit(const QSeries<C>& f) {
  const int n = f.order();
  QSeries<C> out(n, f.zero());
  if (n == 0) return out;
  if (!(f.coeff(0) == one_like(f.zero()))) throw PreconditionError("q-series log needs constant term 1");
  std::vector<C> g(static_cast<std::size_t>(n), f.zero());
  for (int k = 1; k < n; ++k) {
    C sum = f.coeff(k) * Rational(k);
    for (int j = 1; j < k; ++j) {
      auto it = f.coefficients().find(k - j);
      if (it == f.coefficients().end()) continue;
      sum = sum - g[static_cast<std::size_t>(j)] * it->second * Rational(j);
    }
    g[static_cast<std::size_t>(k)] = sum * Rational(1, k);
  }
  for (int k = 1; k < n; ++k) out.set(k, g[static_cast<std::size_t>(k)]);
  return out;
}

// exp of a form-valued series whose q^0 coefficient is nilpotent.
FormSeries qs_exp(const FormSeries& g);
// log of a form-valued series whose q^0 coefficient has degree-0 part 1.
FormSeries qs_log(const FormSeries& f);

// Coefficient-wise degree selection {.}^{(d)}.
FormSeries degree_component(const FormSeries& s, int degree);

// sum_{n>=1} s^n z^{n-1}/n! with a scalar q-series in the s slot.
FormSeries divided_exp(const Form& z, const ScalarSeries& s);

struct MatchResult {
  bool equal = true;
  // First exponent (in half-steps) at which the series differ.
  std::optional<int> first_mismatch;
};

// True iff all coefficients below q^{order/2} agree exactly.
template <class C>
MatchResult qs_match_mod(const QSeries<C>& a, const QSeries<C>& b, int order_halves) {
  if (a.order() < order_halves || b.order() < order_halves) {
    throw PreconditionError("q-series truncated below the congruence order");
  }
  for (int e = 0; e < order_halves; ++e) {
    if (!(a.coeff(e) == b.coeff(e))) return {false, e};
  }
  return {true, std::nullopt};
}

// "-1/8 - 3*q^(1/2) - 3*q"; form coefficients are parenthesised.
std::string render(const ScalarSeries& s);
std::string render(const FormSeries& s);
std::string render_q_power(int halves);

}  // namespace anomcheck
