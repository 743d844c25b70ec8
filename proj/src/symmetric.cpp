#include "anomcheck/symmetric.hpp"

#include <map>
#include <optional>

namespace anomcheck {
namespace {

Form generator_or_zero(const RingPtr& ring, const std::vector<std::string>& names, std::size_t i) {
  if (i < names.size()) {
    if (ring->index_of(names[i])) return Form::generator(ring, names[i]);
  }
  return Form::zero(ring);
}

std::size_t require_index(const RingDescriptor& ring, const std::string& name) {
  auto idx = ring.index_of(name);
  if (!idx) throw PreconditionError("generator '" + name + "' missing from ring");
  return *idx;
}

}  // namespace

Form newton_reduce(const Form& a, const RingPtr& target, const std::vector<SymmetricFamily>& families,
                   const std::vector<Passthrough>& passthrough) {
  const auto& src = *a.ring();
  std::vector<std::optional<Form>> images(src.size());
  for (const auto& fam : families) {
    std::vector<Form> pi{Form::zero(target)};  // pi[0] unused
    for (std::size_t n = 1; n <= fam.power_sums.size(); ++n) {
      const long signed_n = n % 2 == 1 ? static_cast<long>(n) : -static_cast<long>(n);
      Form value = generator_or_zero(target, fam.elementary, n - 1) * Rational(signed_n);
      for (std::size_t i = 1; i < n; ++i) {
        Form term = generator_or_zero(target, fam.elementary, i - 1) * pi[n - i];
        if (i % 2 == 1) {
          value += term;
        } else {
          value -= term;
        }
      }
      pi.push_back(value);
      if (auto idx = src.index_of(fam.power_sums[n - 1])) images[*idx] = pi.back();
    }
  }
  for (const auto& [from, to] : passthrough) {
    if (auto idx = src.index_of(from)) images[*idx] = Form::generator(target, to);
  }
  std::vector<Form> resolved;
  for (std::size_t g = 0; g < src.size(); ++g) {
    if (!images[g]) throw PreconditionError("no image for generator '" + src.generators()[g].name + "'");
    resolved.push_back(*images[g]);
  }
  return apply_homomorphism(a, target, resolved);
}

Form newton_expand(const Form& a, const RingPtr& target, const std::vector<SymmetricFamily>& families,
                   const std::vector<Passthrough>& passthrough) {
  const auto& src = *a.ring();
  std::vector<std::optional<Form>> images(src.size());
  for (const auto& fam : families) {
    std::vector<Form> e{Form::one(target)};
    for (std::size_t n = 1; n <= fam.elementary.size(); ++n) {
      Form value = Form::zero(target);
      for (std::size_t i = 1; i <= n; ++i) {
        Form term = e[n - i] * generator_or_zero(target, fam.power_sums, i - 1);
        if (i % 2 == 1) {
          value += term;
        } else {
          value -= term;
        }
      }
      value *= Rational(1, static_cast<long>(n));
      e.push_back(value);
      if (auto idx = src.index_of(fam.elementary[n - 1])) images[*idx] = e.back();
    }
  }
  for (const auto& [from, to] : passthrough) {
    if (auto idx = src.index_of(from)) images[*idx] = Form::generator(target, to);
  }
  std::vector<Form> resolved;
  for (std::size_t g = 0; g < src.size(); ++g) {
    if (!images[g]) throw PreconditionError("no image for generator '" + src.generators()[g].name + "'");
    resolved.push_back(*images[g]);
  }
  return apply_homomorphism(a, target, resolved);
}

Form symmetric_reduce(const Form& a, const RingPtr& target, const std::vector<RootFamily>& families,
                      const std::vector<Passthrough>& passthrough) {
  const auto& src_ptr = a.ring();
  const auto& src = *src_ptr;

  // Variable order for the lexicographic leading term: roots family by
  // family, then passthrough generators.
  struct FamilyIndex {
    std::vector<std::size_t> roots;
    std::vector<std::size_t> target_elementary;  // may be shorter than roots
    std::vector<Form> elementary_in_source;      // lazily filled e_i(x^2)
  };
  std::vector<FamilyIndex> fams;
  std::vector<std::size_t> lex_order;
  std::vector<bool> covered(src.size(), false);
  for (const auto& f : families) {
    FamilyIndex fi;
    for (const auto& r : f.roots) {
      auto idx = require_index(src, r);
      fi.roots.push_back(idx);
      lex_order.push_back(idx);
      covered[idx] = true;
    }
    for (const auto& e : f.elementary) fi.target_elementary.push_back(require_index(*target, e));
    // e_i of the squared roots, via the generating product prod_j (1 + x_j^2 t).
    std::vector<Form> poly{Form::one(src_ptr)};
    for (auto root : fi.roots) {
      Form sq = pow(Form::generator(src_ptr, root), 2);
      std::vector<Form> next(poly.size() + 1, Form::zero(src_ptr));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + 1] += poly[i] * sq;
      }
      poly = std::move(next);
    }
    fi.elementary_in_source.assign(poly.begin() + 1, poly.end());
    fams.push_back(std::move(fi));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pass_idx;
  for (const auto& [from, to] : passthrough) {
    auto fi = src.index_of(from);
    if (!fi) continue;
    pass_idx.emplace_back(*fi, require_index(*target, to));
    lex_order.push_back(*fi);
    covered[*fi] = true;
  }

  auto lex_greater = [&](const std::vector<int>& x, const std::vector<int>& y) {
    for (auto g : lex_order) {
      if (x[g] != y[g]) return x[g] > y[g];
    }
    return false;
  };

  std::map<std::vector<int>, Form> power_cache;
  auto cached_product = [&](const std::vector<int>& exps_per_elementary) -> const Form& {
    auto it = power_cache.find(exps_per_elementary);
    if (it != power_cache.end()) return it->second;
    Form prod = Form::one(src_ptr);
    std::size_t pos = 0;
    for (const auto& fi : fams) {
      for (std::size_t i = 0; i < fi.elementary_in_source.size(); ++i, ++pos) {
        if (exps_per_elementary[pos] > 0) prod = prod * pow(fi.elementary_in_source[i], exps_per_elementary[pos]);
      }
    }
    return power_cache.emplace(exps_per_elementary, std::move(prod)).first->second;
  };

  Form rem = a;
  std::vector<std::pair<MonomialKey, Rational>> out_terms;
  while (!rem.is_zero()) {
    const Form::Term* lead = nullptr;
    std::vector<int> lead_exps;
    for (const auto& t : rem.terms()) {
      auto exps = src.unpack(t.key);
      if (!lead || lex_greater(exps, lead_exps)) {
        lead = &t;
        lead_exps = std::move(exps);
      }
    }
    for (std::size_t g = 0; g < src.size(); ++g) {
      if (!covered[g] && lead_exps[g] != 0) {
        throw InternalError("form involves generator '" + src.generators()[g].name + "' outside the symmetric families");
      }
    }
    std::vector<int> target_exps(target->size(), 0);
    std::vector<int> elem_exps;
    for (const auto& fi : fams) {
      std::vector<int> lambda;
      for (auto r : fi.roots) {
        if (lead_exps[r] % 2 != 0) throw InternalError("form is not even in the roots");
        lambda.push_back(lead_exps[r] / 2);
      }
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        int next = i + 1 < lambda.size() ? lambda[i + 1] : 0;
        int mult = lambda[i] - next;
        if (mult < 0) throw InternalError("form is not symmetric in the roots");
        elem_exps.push_back(mult);
        if (mult > 0) {
          if (i >= fi.target_elementary.size()) throw InternalError("elementary class beyond target ring");
          target_exps[fi.target_elementary[i]] += mult;
        }
      }
    }
    Form correction = cached_product(elem_exps) * lead->coef;
    for (const auto& [s, t] : pass_idx) {
      if (lead_exps[s] > 0) {
        target_exps[t] += lead_exps[s];
        correction = correction * pow(Form::generator(src_ptr, s), lead_exps[s]);
      }
    }
    out_terms.emplace_back(target->pack(target_exps), lead->coef);
    rem -= correction;
  }
  return Form::from_pairs(target, out_terms);
}

}  // namespace anomcheck
