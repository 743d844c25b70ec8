#include "anomcheck/formring.hpp"

#include <bit>
#include <set>
#include <sstream>

namespace anomcheck {

template class BasicForm<Rational>;
template class BasicForm<Complex>;

RingDescriptor::RingDescriptor(std::vector<GeneratorSpec> generators, int truncation_degree)
    : generators_(std::move(generators)), truncation_(truncation_degree) {
  if (truncation_ <= 0 || truncation_ % 2 != 0) {
    throw PreconditionError("truncation degree must be a positive even integer");
  }
  std::set<std::string> names;
  int shift = 0;
  for (const auto& g : generators_) {
    if (g.degree % 2 != 0) throw PreconditionError("odd-degree generator '" + g.name + "'");
    if (g.degree < 2) throw PreconditionError("generator degree must be at least 2");
    if (g.name.empty()) throw PreconditionError("generator without a name");
    if (!names.insert(g.name).second) throw PreconditionError("duplicate generator name '" + g.name + "'");
    if (g.degree > truncation_) {
      throw PreconditionError("truncation degree below generator degree of '" + g.name + "'");
    }
    auto max_exp = static_cast<unsigned>(truncation_ / g.degree);
    int width = static_cast<int>(std::bit_width(max_exp));
    shift_.push_back(shift);
    width_.push_back(width);
    shift += width;
  }
  if (shift > 128) throw PreconditionError("ring too large for packed monomial keys");
}

RingPtr ring_new(std::vector<GeneratorSpec> generators, int truncation_degree) {
  return std::make_shared<const RingDescriptor>(std::move(generators), truncation_degree);
}

std::optional<std::size_t> RingDescriptor::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

MonomialKey RingDescriptor::pack(std::span<const int> exponents) const {
  if (exponents.size() != generators_.size()) throw PreconditionError("exponent vector has wrong length");
  MonomialKey key = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    int e = exponents[i];
    if (e < 0 || e * generators_[i].degree > truncation_) {
      throw PreconditionError("exponent out of range for generator '" + generators_[i].name + "'");
    }
    key |= static_cast<MonomialKey>(e) << shift_[i];
  }
  return key;
}

int RingDescriptor::exponent(MonomialKey key, std::size_t generator) const {
  MonomialKey mask = (MonomialKey{1} << width_[generator]) - 1;
  return static_cast<int>((key >> shift_[generator]) & mask);
}

std::vector<int> RingDescriptor::unpack(MonomialKey key) const {
  std::vector<int> out(generators_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = exponent(key, i);
  return out;
}

int RingDescriptor::degree(MonomialKey key) const {
  int d = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i) d += exponent(key, i) * generators_[i].degree;
  return d;
}

MonomialKey RingDescriptor::power_key(std::size_t generator, int power) const {
  if (power < 0 || power * generators_.at(generator).degree > truncation_) {
    throw PreconditionError("generator power beyond truncation");
  }
  return static_cast<MonomialKey>(power) << shift_[generator];
}

std::string render_monomial(const RingDescriptor& ring, MonomialKey key) {
  std::string out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    int e = ring.exponent(key, i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.generators()[i].name;
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

template <class S>
std::vector<const typename BasicForm<S>::Term*> graded_lex(const BasicForm<S>& f) {
  const auto& ring = *f.ring();
  std::vector<const typename BasicForm<S>::Term*> order;
  for (const auto& t : f.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [&ring](const auto* a, const auto* b) {
    if (a->degree != b->degree) return a->degree < b->degree;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      int ea = ring.exponent(a->key, i);
      int eb = ring.exponent(b->key, i);
      if (ea != eb) return ea > eb;
    }
    return false;
  });
  return order;
}

}  // namespace

std::string render(const Form& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto* t : graded_lex(f)) {
    bool negative = sgn(t->coef) < 0;
    Rational mag = abs(t->coef);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t->degree == 0) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += render_monomial(*f.ring(), t->key);
    } else {
      out += to_string(mag) + "*" + render_monomial(*f.ring(), t->key);
    }
  }
  return out;
}

std::string render(const ComplexForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto* t : graded_lex(f)) {
    if (!out.empty()) out += " + ";
    out += to_string(t->coef);
    if (t->degree != 0) out += "*" + render_monomial(*f.ring(), t->key);
  }
  return out;
}

}  // namespace anomcheck
