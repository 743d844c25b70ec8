#pragma once

// Truncated graded-commutative polynomial rings over even-degree generators.
//
// A RingDescriptor fixes an ordered list of named generators and a truncation
// degree; any monomial of total degree above the truncation is identically
// zero. BasicForm<S> is a sparse element of such a ring with coefficients in
// S (exact Rational for verification, Complex for numeric checks).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "anomcheck/error.hpp"
#include "anomcheck/scalar.hpp"

namespace anomcheck {

// Exponent vector packed into fixed-width bit fields.
using MonomialKey = unsigned __int128;

struct MonomialKeyHash {
  std::size_t operator()(MonomialKey k) const noexcept {
    auto lo = static_cast<std::uint64_t>(k);
    auto hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ull;
    h ^= hi + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct GeneratorSpec {
  std::string name;
  int degree = 2;

  bool operator==(const GeneratorSpec&) const = default;
};

class RingDescriptor {
 public:
  RingDescriptor(std::vector<GeneratorSpec> generators, int truncation_degree);

  const std::vector<GeneratorSpec>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  int truncation_degree() const { return truncation_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  MonomialKey pack(std::span<const int> exponents) const;
  std::vector<int> unpack(MonomialKey key) const;
  int exponent(MonomialKey key, std::size_t generator) const;
  int degree(MonomialKey key) const;
  // Key of generator^power; power must keep the degree within truncation.
  MonomialKey power_key(std::size_t generator, int power) const;

  bool operator==(const RingDescriptor& other) const {
    return truncation_ == other.truncation_ && generators_ == other.generators_;
  }

 private:
  std::vector<GeneratorSpec> generators_;
  int truncation_;
  std::vector<int> shift_;
  std::vector<int> width_;
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

// Validates and builds a ring: even degrees >= 2, distinct names, positive even
// truncation no smaller than the largest generator degree.
RingPtr ring_new(std::vector<GeneratorSpec> generators, int truncation_degree);

inline bool same_ring(const RingDescriptor& a, const RingDescriptor& b) {
  return &a == &b || a == b;
}

template <class S>
class BasicForm {
 public:
  struct Term {
    MonomialKey key;
    int degree;
    S coef;
  };

  explicit BasicForm(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw PreconditionError("form without a ring");
  }

  static BasicForm zero(RingPtr ring) { return BasicForm(std::move(ring)); }
  static BasicForm one(RingPtr ring) { return constant(std::move(ring), S(1)); }
  static BasicForm constant(RingPtr ring, const S& value) {
    return monomial(std::move(ring), MonomialKey{0}, value);
  }
  static BasicForm monomial(RingPtr ring, MonomialKey key, const S& value) {
    BasicForm f(std::move(ring));
    int deg = f.ring_->degree(key);
    if (!is_zero_scalar(value) && deg <= f.ring_->truncation_degree()) {
      f.terms_.push_back(Term{key, deg, value});
    }
    return f;
  }
  static BasicForm generator(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw PreconditionError("generator index out of range");
    auto key = ring->power_key(index, 1);
    return monomial(std::move(ring), key, S(1));
  }
  static BasicForm generator(RingPtr ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!idx) throw PreconditionError("unknown generator '" + std::string(name) + "'");
    return generator(std::move(ring), *idx);
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S constant_term() const {
    if (!terms_.empty() && terms_.front().degree == 0) return terms_.front().coef;
    return S(0);
  }

  S coefficient(MonomialKey key) const {
    for (const auto& t : terms_) {
      if (t.key == key) return t.coef;
    }
    return S(0);
  }

  // Smallest degree carrying a nonzero coefficient; -1 for the zero form.
  int min_degree() const { return terms_.empty() ? -1 : terms_.front().degree; }
  int max_degree() const { return terms_.empty() ? -1 : terms_.back().degree; }

  bool is_homogeneous(int degree) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [degree](const Term& t) { return t.degree == degree; });
  }

  BasicForm degree_component(int j) const {
    if (j < 0 || j > ring_->truncation_degree() || j % 2 != 0) {
      throw PreconditionError("degree component " + std::to_string(j) + " out of range");
    }
    BasicForm out(ring_);
    for (const auto& t : terms_) {
      if (t.degree == j) out.terms_.push_back(t);
    }
    return out;
  }

  BasicForm& operator+=(const BasicForm& other) { return *this = merge(*this, other, false); }
  BasicForm& operator-=(const BasicForm& other) { return *this = merge(*this, other, true); }

  BasicForm& operator*=(const S& s) {
    if (is_zero_scalar(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coef *= s;
    return *this;
  }

  BasicForm operator-() const {
    BasicForm out = *this;
    for (auto& t : out.terms_) t.coef = -t.coef;
    return out;
  }

  friend BasicForm operator+(const BasicForm& a, const BasicForm& b) { return merge(a, b, false); }
  friend BasicForm operator-(const BasicForm& a, const BasicForm& b) { return merge(a, b, true); }
  friend BasicForm operator*(BasicForm a, const S& s) { return a *= s; }
  friend BasicForm operator*(const S& s, BasicForm a) { return a *= s; }

  friend BasicForm operator*(const BasicForm& a, const BasicForm& b) {
    check_same(a, b);
    const int trunc = a.ring_->truncation_degree();
    std::unordered_map<MonomialKey, S, MonomialKeyHash> acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 16));
    S prod;
    for (const auto& ta : a.terms_) {
      const int room = trunc - ta.degree;
      for (const auto& tb : b.terms_) {
        if (tb.degree > room) break;
        prod = ta.coef;
        prod *= tb.coef;
        auto [it, inserted] = acc.try_emplace(ta.key + tb.key, prod);
        if (!inserted) it->second += prod;
      }
    }
    return from_accumulator(a.ring_, std::move(acc));
  }

  BasicForm& operator*=(const BasicForm& other) { return *this = *this * other; }

  friend bool operator==(const BasicForm& a, const BasicForm& b) {
    if (!same_ring(*a.ring_, *b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coef != b.terms_[i].coef) return false;
    }
    return true;
  }

  // Builds a form from (key, coefficient) pairs, summing repeated keys and
  // discarding anything above the truncation.
  static BasicForm from_pairs(RingPtr ring, const std::vector<std::pair<MonomialKey, S>>& pairs) {
    std::unordered_map<MonomialKey, S, MonomialKeyHash> acc;
    for (const auto& [key, coef] : pairs) {
      if (ring->degree(key) > ring->truncation_degree()) continue;
      auto [it, inserted] = acc.try_emplace(key, coef);
      if (!inserted) it->second += coef;
    }
    return from_accumulator(std::move(ring), std::move(acc));
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    BasicForm<T> out(ring_);
    std::vector<std::pair<MonomialKey, T>> pairs;
    pairs.reserve(terms_.size());
    for (const auto& t : terms_) pairs.emplace_back(t.key, f(t.coef));
    return BasicForm<T>::from_pairs(ring_, pairs);
  }

 private:
  static bool is_zero_scalar(const S& s) { return anomcheck::is_zero(s); }

  static void check_same(const BasicForm& a, const BasicForm& b) {
    if (!same_ring(*a.ring_, *b.ring_)) throw IncompatibleRings();
  }

  static bool term_less(const Term& x, const Term& y) {
    return x.degree != y.degree ? x.degree < y.degree : x.key < y.key;
  }

  static BasicForm from_accumulator(RingPtr ring,
                                    std::unordered_map<MonomialKey, S, MonomialKeyHash>&& acc) {
    BasicForm out(std::move(ring));
    out.terms_.reserve(acc.size());
    for (auto& [key, coef] : acc) {
      if (is_zero_scalar(coef)) continue;
      out.terms_.push_back(Term{key, out.ring_->degree(key), std::move(coef)});
    }
    std::sort(out.terms_.begin(), out.terms_.end(), term_less);
    return out;
  }

  static BasicForm merge(const BasicForm& a, const BasicForm& b, bool subtract) {
    check_same(a, b);
    BasicForm out(a.ring_);
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      if (ib == b.terms_.end() || (ia != a.terms_.end() && term_less(*ia, *ib))) {
        out.terms_.push_back(*ia++);
      } else if (ia == a.terms_.end() || term_less(*ib, *ia)) {
        Term t = *ib++;
        if (subtract) t.coef = -t.coef;
        out.terms_.push_back(std::move(t));
      } else {
        S c = ia->coef;
        if (subtract) {
          c -= ib->coef;
        } else {
          c += ib->coef;
        }
        if (!is_zero_scalar(c)) out.terms_.push_back(Term{ia->key, ia->degree, std::move(c)});
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  RingPtr ring_;
  std::vector<Term> terms_;  // sorted by (degree, key); no zero coefficients
};

using Form = BasicForm<Rational>;
using ComplexForm = BasicForm<Complex>;

// exp of a nilpotent form (zero degree-0 part).
template <class S>
BasicForm<S> exp_form(const BasicForm<S>& a) {
  if (!is_zero(a.constant_term())) throw PreconditionError("non-nilpotent exponent");
  auto result = BasicForm<S>::one(a.ring());
  auto term = result;
  for (int n = 1; !a.is_zero(); ++n) {
    term = term * a;
    if (term.is_zero()) break;
    term *= S(1) / S(n);
    result += term;
  }
  return result;
}

// Inverse of a form whose degree-0 part is a nonzero scalar.
template <class S>
BasicForm<S> inv_unit(const BasicForm<S>& a) {
  S c = a.constant_term();
  if (is_zero(c)) throw PreconditionError("non-invertible form");
  S c_inv = S(1) / c;
  auto nil = a - BasicForm<S>::constant(a.ring(), c);
  nil *= -c_inv;
  auto result = BasicForm<S>::one(a.ring());
  auto term = result;
  while (true) {
    term = term * nil;
    if (term.is_zero()) break;
    result += term;
  }
  result *= c_inv;
  return result;
}

// log of a form with degree-0 part exactly 1.
template <class S>
BasicForm<S> log_unit(const BasicForm<S>& a) {
  if (a.constant_term() != S(1)) throw PreconditionError("logarithm needs unit constant term 1");
  auto nil = a - BasicForm<S>::one(a.ring());
  auto result = BasicForm<S>::zero(a.ring());
  auto power = BasicForm<S>::one(a.ring());
  for (int n = 1;; ++n) {
    power = power * nil;
    if (power.is_zero()) break;
    auto term = power;
    term *= S(n % 2 == 1 ? 1 : -1) / S(n);
    result += term;
  }
  return result;
}

// (e^{s z} - 1) / z as the finite series sum_{n>=1} s^n z^{n-1} / n!.
template <class S>
BasicForm<S> divided_exp(const BasicForm<S>& z, const S& s) {
  if (!is_zero(z.constant_term())) throw PreconditionError("non-nilpotent exponent");
  auto result = BasicForm<S>::constant(z.ring(), s);
  auto zpow = BasicForm<S>::one(z.ring());
  S spow = s;
  S fact = S(1);
  for (int n = 2;; ++n) {
    zpow = zpow * z;
    if (zpow.is_zero()) break;
    spow *= s;
    fact *= S(n);
    auto term = zpow;
    term *= spow / fact;
    result += term;
  }
  return result;
}

template <class S>
BasicForm<S> pow(const BasicForm<S>& a, int n) {
  if (n < 0) return pow(inv_unit(a), -n);
  auto result = BasicForm<S>::one(a.ring());
  auto base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

// Ring homomorphism determined by the image of every source generator.
template <class S>
BasicForm<S> apply_homomorphism(const BasicForm<S>& a, const RingPtr& target,
                                const std::vector<BasicForm<S>>& images) {
  const auto& src = *a.ring();
  if (images.size() != src.size()) throw PreconditionError("homomorphism needs one image per generator");
  for (const auto& img : images) {
    if (!same_ring(*img.ring(), *target)) throw IncompatibleRings();
  }
  std::vector<std::vector<BasicForm<S>>> powers(src.size());
  auto power_of = [&](std::size_t g, int e) -> const BasicForm<S>& {
    auto& cache = powers[g];
    if (cache.empty()) cache.push_back(BasicForm<S>::one(target));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[g]);
    return cache[static_cast<std::size_t>(e)];
  };
  auto result = BasicForm<S>::zero(target);
  for (const auto& t : a.terms()) {
    auto term = BasicForm<S>::constant(target, t.coef);
    for (std::size_t g = 0; g < src.size(); ++g) {
      int e = src.exponent(t.key, g);
      if (e > 0) term = term * power_of(g, e);
    }
    result += term;
  }
  return result;
}

// Graded-lex rendering: ascending degree, then lexicographically descending
// exponent vectors in generator order; e.g. "-1/24*p1(TX) + 1/24*p1(W)".
std::string render(const Form& f);
std::string render(const ComplexForm& f);

// Renders a single monomial ("1" for the empty monomial).
std::string render_monomial(const RingDescriptor& ring, MonomialKey key);

extern template class BasicForm<Rational>;
extern template class BasicForm<Complex>;

}  // namespace anomcheck
