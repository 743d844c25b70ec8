#include "anomcheck/anomaly.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "anomcheck/modforms.hpp"
#include "anomcheck/thetaseries.hpp"

namespace anomcheck {

namespace {

struct Decompositions {
  DecompositionResult b;
  DecompositionResult beta;
};

using GeometryKey = std::tuple<int, int, bool, bool, BasisMode>;

// b_r and beta_r are shared by most identities at a given geometry.
Decompositions decompositions(const GeometrySpec& g) {
  static std::mutex mu;
  static std::map<GeometryKey, std::shared_future<Decompositions>> cache;
  GeometryKey key{g.dim_x, g.l, g.xi_present, g.w_eq_tx, g.mode};
  std::promise<Decompositions> promise;
  std::shared_future<Decompositions> fut;
  bool owner = false;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
      fut = promise.get_future().share();
      cache.emplace(key, fut);
      owner = true;
    } else {
      fut = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value({b_coeffs(g), beta_coeffs(g)});
    } catch (...) {
      promise.set_exception(std::current_exception());
      std::lock_guard lock(mu);
      cache.erase(key);
    }
  }
  return fut.get();
}

struct Blocks {
  const GeometrySpec& g;
  int m;
  bool case1;
  int top;
  int lower;
  Form ahat, sp, cosh, cosh2_inv, d, one, ch_w, ch_xi_minus_2, ch_t;

  explicit Blocks(const GeometrySpec& geo)
      : g(geo),
        m(geo.dim_x / 8),
        case1(geo.dim_x % 8 == 4),
        top(geo.dim_x),
        lower(geo.dim_x - 4),
        ahat(a_hat(geo)),
        sp(spinor_ch(geo, Bundle::W)),
        cosh(cosh_half_c(geo)),
        cosh2_inv(inv_unit(cosh * cosh)),
        d(p1_difference(geo)),
        one(Form::one(geo.ring)),
        ch_w(chern_char(geo, CharacterOf::W).value),
        ch_xi_minus_2(chern_char(geo, CharacterOf::Xi).value - Form::constant(geo.ring, Rational(2))),
        ch_t(chern_char(geo, CharacterOf::T).value) {}

  Form twisted_spinor() const { return ahat * sp * cosh2_inv; }
  Form at(const Form& f, int degree) const { return f.degree_component(degree); }
  Form divided(const Form& f, int degree) const {
    return (divided_exp(d, Rational(1, 24)) * f).degree_component(degree);
  }
  // {F}^{(deg)} + D {div F}^{(deg-4)}
  Form corrected(const Form& f, int degree) const { return at(f, degree) + d * divided(f, degree - 4); }
  Form exp_weighted(const Form& f, int degree) const {
    return (exp_form(d * Rational(1, 24)) * f).degree_component(degree);
  }
  Rational weight(int r) const { return pow2(g.l + 2 * m + (case1 ? 1 : 0) - 6 * r); }
};

std::string r_label(const char* stem, int r) { return std::string(stem) + "_" + std::to_string(r); }

// Left side minus the b/z sum; with `with_correction` also minus D times the correction.
std::vector<IdentityTerm> general_terms(const GeometrySpec& g, bool twisted, bool with_correction) {
  Blocks k(g);
  auto dec = decompositions(g);
  const char* b = k.case1 ? "b" : "z";
  const char* beta = k.case1 ? "beta" : "zeta";
  Form lhs = twisted ? k.twisted_spinor() : k.ahat * k.sp;
  Form weight = twisted ? k.ahat * k.cosh : k.ahat;
  std::vector<IdentityTerm> out;
  out.push_back({twisted ? "{Ahat Sp/cosh^2}" : "{Ahat Sp}", Rational(1), k.at(lhs, k.top)});
  for (int r = 0; r <= k.m; ++r) {
    out.push_back({r_label(b, r), -k.weight(r), k.at(weight * dec.b.coefficients[static_cast<std::size_t>(r)], k.top)});
  }
  if (with_correction) {
    for (int r = 0; r <= k.m; ++r) {
      out.push_back({std::string("D*") + r_label(beta, r), -k.weight(r), k.d * dec.beta.coefficients[static_cast<std::size_t>(r)]});
    }
    out.push_back({"D*{div lhs}", Rational(1), k.d * k.divided(lhs, k.lower)});
  }
  return out;
}

// (1/8){Lhat (/cosh^2)} = sum_r 2^{6m-6r} {Ahat ch(b_r) (cosh)} with W = TX.
std::vector<IdentityTerm> signature_terms(const GeometrySpec& g, bool twisted) {
  Blocks k(g);
  auto dec = decompositions(g);
  Form lhs = twisted ? l_hat(g) * k.cosh2_inv : l_hat(g);
  Form weight = twisted ? k.ahat * k.cosh : k.ahat;
  std::vector<IdentityTerm> out;
  out.push_back({"{Lhat}", Rational(1, 8), k.at(lhs, k.top)});
  for (int r = 0; r <= k.m; ++r) {
    out.push_back({r_label("b", r), -pow2(6 * k.m - 6 * r),
                   k.at(weight * dec.b.coefficients[static_cast<std::size_t>(r)], k.top)});
  }
  return out;
}

struct Piece {
  std::string label;
  Rational coef;
  Form form;
};

// The explicit dim 8 / dim 12 right-hand sides.
std::vector<Piece> explicit_rhs(const Blocks& k, int dim, bool twisted) {
  const int l = k.g.l;
  Form w = twisted ? k.cosh : k.one;
  std::vector<Piece> out;
  if (dim == 8) {
    out.push_back({"Ahat chW", -pow2(l - 4), k.ahat * k.ch_w * w});
    out.push_back({"Ahat", pow2(l - 3) * (l + 8), k.ahat * w});
    if (twisted) out.push_back({"Ahat (ch xi - 2)", pow2(l - 4) * 3, k.ahat * k.ch_xi_minus_2 * w});
  } else {
    out.push_back({"Ahat chW", pow2(l - 3), k.ahat * k.ch_w * w});
    out.push_back({"Ahat", -pow2(l - 2) * (l - 4), k.ahat * w});
    if (twisted) out.push_back({"Ahat (ch xi - 2)", -pow2(l - 3) * 3, k.ahat * k.ch_xi_minus_2 * w});
  }
  return out;
}

Form explicit_lhs(const Blocks& k, bool twisted) { return twisted ? k.twisted_spinor() : k.ahat * k.sp; }

std::vector<IdentityTerm> explicit_terms(const GeometrySpec& g, int dim, bool twisted) {
  Blocks k(g);
  std::vector<IdentityTerm> out;
  out.push_back({"lhs", Rational(1), k.corrected(explicit_lhs(k, twisted), dim)});
  for (auto& p : explicit_rhs(k, dim, twisted)) out.push_back({p.label, -p.coef, k.corrected(p.form, dim)});
  return out;
}

std::vector<IdentityTerm> exponential_terms(const GeometrySpec& g, int dim, bool twisted) {
  Blocks k(g);
  std::vector<IdentityTerm> out;
  out.push_back({"lhs", Rational(1), k.exp_weighted(explicit_lhs(k, twisted), dim)});
  for (auto& p : explicit_rhs(k, dim, twisted)) out.push_back({p.label, -p.coef, k.exp_weighted(p.form, dim)});
  return out;
}

std::vector<IdentityTerm> dim4_terms(const GeometrySpec& g, bool twisted) {
  Blocks k(g);
  Form lhs = explicit_lhs(k, twisted);
  Form w = twisted ? k.ahat * k.cosh : k.ahat;
  return {{"lhs", Rational(1), k.at(lhs, 4)},
          {"Ahat", pow2(g.l + 1), k.at(w, 4)},
          {"D", pow2(g.l - 3), k.d}};
}

std::vector<IdentityTerm> dim12_signature_terms(const GeometrySpec& g) {
  Blocks k(g);
  return {{"{Lhat/cosh^2}", Rational(1), k.at(l_hat(g) * k.cosh2_inv, 12)},
          {"Ahat chW", Rational(-8), k.at(k.ahat * k.ch_w * k.cosh, 12)},
          {"Ahat", Rational(32), k.at(k.ahat * k.cosh, 12)},
          {"Ahat (ch xi - 2)", Rational(24), k.at(k.ahat * k.ch_xi_minus_2 * k.cosh, 12)}};
}

std::vector<IdentityTerm> dim12_spin_mod_p1_terms(const GeometrySpec& g) {
  Blocks k(g);
  const int l = g.l;
  return {{"{Ahat Sp}", Rational(1), k.at(k.ahat * k.sp, 12)},
          {"Ahat chW", -pow2(l - 3), k.at(k.ahat * k.ch_w, 12)},
          {"Ahat", pow2(l - 2) * (l - 4), k.at(k.ahat, 12)}};
}

std::vector<IdentityTerm> agw_terms(const GeometrySpec& g) {
  Blocks k(g);
  auto c = derive_signature_coefficients(g);
  return {{"{Lhat}", Rational(1), k.at(l_hat(g), 12)},
          {"Ahat ch(T)", -c.ch_coefficient, k.at(k.ahat * k.ch_t, 12)},
          {"Ahat", -c.ahat_coefficient, k.at(k.ahat, 12)}};
}

IdentitySpec make(std::string id, std::string description, DimensionClass dims, int exact_dim, XiRequirement xi,
                  WRequirement w, bool modulo_p1, std::function<std::vector<IdentityTerm>(const GeometrySpec&)> build) {
  return IdentitySpec{std::move(id), std::move(description), dims, exact_dim, xi, w, modulo_p1, std::move(build)};
}

std::vector<IdentitySpec> build_registry() {
  using D = DimensionClass;
  using X = XiRequirement;
  using W = WRequirement;
  std::vector<IdentitySpec> r;
  auto general = [](bool twisted, bool corr) {
    return [twisted, corr](const GeometrySpec& g) { return general_terms(g, twisted, corr); };
  };
  r.push_back(make("thm1.1-case1", "twisted spinor form in dim 8m+4 equals the b_r sum plus (p1(TX)-p1(W)) times the correction form",
                   D::Dim8mPlus4, 0, X::Any, W::Any, false, general(true, true)));
  r.push_back(make("thm1.1-case2", "twisted spinor form in dim 8m equals the z_r sum plus (p1(TX)-p1(W)) times the correction form",
                   D::Dim8m, 0, X::Any, W::Any, false, general(true, true)));
  r.push_back(make("cor1.2-case1", "dim 8m+4 twisted cancellation under p1(TX) = p1(W)", D::Dim8mPlus4, 0, X::Any,
                   W::Any, true, general(true, false)));
  r.push_back(make("cor1.2-case2", "dim 8m twisted cancellation under p1(TX) = p1(W)", D::Dim8m, 0, X::Any, W::Any,
                   true, general(true, false)));
  r.push_back(make("cor1.2-w-eq-tx", "signature form over cosh^2 against the b_r sum with W = TX", D::Dim8mPlus4, 0,
                   X::Any, W::EqualsTX, false, [](const GeometrySpec& g) { return signature_terms(g, true); }));
  r.push_back(make("cor1.3-case1", "dim 8m+4 untwisted identity with correction form", D::Dim8mPlus4, 0, X::Trivial,
                   W::Any, false, general(false, true)));
  r.push_back(make("cor1.3-case2", "dim 8m untwisted identity with correction form", D::Dim8m, 0, X::Trivial, W::Any,
                   false, general(false, true)));
  r.push_back(make("cor1.4-case1", "dim 8m+4 untwisted cancellation under p1(TX) = p1(W)", D::Dim8mPlus4, 0,
                   X::Trivial, W::Any, true, general(false, false)));
  r.push_back(make("cor1.4-case2", "dim 8m untwisted cancellation under p1(TX) = p1(W)", D::Dim8m, 0, X::Trivial,
                   W::Any, true, general(false, false)));
  r.push_back(make("cor1.4-w-eq-tx", "signature form against the b_r sum with W = TX", D::Dim8mPlus4, 0, X::Trivial,
                   W::EqualsTX, false, [](const GeometrySpec& g) { return signature_terms(g, false); }));
  r.push_back(make("cor1.5-dim4-xi", "dim 4 twisted identity", D::Exact, 4, X::Any, W::Any, false,
                   [](const GeometrySpec& g) { return dim4_terms(g, true); }));
  r.push_back(make("cor1.5-dim4-spin", "dim 4 untwisted identity", D::Exact, 4, X::Trivial, W::Any, false,
                   [](const GeometrySpec& g) { return dim4_terms(g, false); }));
  r.push_back(make("cor1.5-dim8-xi", "dim 8 twisted identity with divided-difference correction", D::Exact, 8, X::Any,
                   W::Any, false, [](const GeometrySpec& g) { return explicit_terms(g, 8, true); }));
  r.push_back(make("cor1.5-dim8-spin", "dim 8 untwisted identity with divided-difference correction", D::Exact, 8,
                   X::Trivial, W::Any, false, [](const GeometrySpec& g) { return explicit_terms(g, 8, false); }));
  r.push_back(make("cor1.5-dim12-xi", "dim 12 twisted identity with divided-difference correction", D::Exact, 12,
                   X::Any, W::Any, false, [](const GeometrySpec& g) { return explicit_terms(g, 12, true); }));
  r.push_back(make("cor1.5-dim12-spin", "dim 12 untwisted identity with divided-difference correction", D::Exact, 12,
                   X::Trivial, W::Any, false, [](const GeometrySpec& g) { return explicit_terms(g, 12, false); }));
  r.push_back(make("remark1.6-dim8-xi", "dim 8 twisted identity weighted by exp(D/24)", D::Exact, 8, X::Any, W::Any,
                   false, [](const GeometrySpec& g) { return exponential_terms(g, 8, true); }));
  r.push_back(make("remark1.6-dim8-spin", "dim 8 untwisted identity weighted by exp(D/24)", D::Exact, 8, X::Trivial,
                   W::Any, false, [](const GeometrySpec& g) { return exponential_terms(g, 8, false); }));
  r.push_back(make("remark1.6-dim12-xi", "dim 12 twisted identity weighted by exp(D/24)", D::Exact, 12, X::Any,
                   W::Any, false, [](const GeometrySpec& g) { return exponential_terms(g, 12, true); }));
  r.push_back(make("remark1.6-dim12-spin", "dim 12 untwisted identity weighted by exp(D/24)", D::Exact, 12,
                   X::Trivial, W::Any, false, [](const GeometrySpec& g) { return exponential_terms(g, 12, false); }));
  r.push_back(make("agw-0.1", "{Lhat}^(12) = 8{Ahat ch(TX)}^(12) - 32{Ahat}^(12), coefficients read off the decomposition",
                   D::Exact, 12, X::Trivial, W::EqualsTX, false, agw_terms));
  r.push_back(make("liu-0.2", "untwisted b_r cancellation in dim 8m+4 under p1(TX) = p1(W)", D::Dim8mPlus4, 0,
                   X::Trivial, W::Any, true, general(false, false)));
  r.push_back(make("liu-0.3", "dim 12 untwisted cancellation under p1(TX) = p1(W)", D::Exact, 12, X::Trivial, W::Any,
                   true, dim12_spin_mod_p1_terms));
  r.push_back(make("liu-0.4", "(1/8){Lhat}^(8m+4) as the b_r sum", D::Dim8mPlus4, 0, X::Trivial, W::EqualsTX, false,
                   [](const GeometrySpec& g) { return signature_terms(g, false); }));
  r.push_back(make("hz-0.5", "twisted b_r cancellation in dim 8m+4 under p1(TX) = p1(W)", D::Dim8mPlus4, 0, X::Any,
                   W::Any, true, general(true, false)));
  r.push_back(make("hz-0.6", "dim 12 twisted signature cancellation with W = TX", D::Exact, 12, X::Any, W::EqualsTX,
                   false, dim12_signature_terms));
  r.push_back(make("diff-0.7", "dim 12 untwisted identity with p1 difference", D::Exact, 12, X::Trivial, W::Any, false,
                   [](const GeometrySpec& g) { return explicit_terms(g, 12, false); }));
  std::sort(r.begin(), r.end(), [](const IdentitySpec& a, const IdentitySpec& b) { return a.id < b.id; });
  return r;
}

}  // namespace

const std::vector<IdentitySpec>& registry() {
  static const std::vector<IdentitySpec> r = build_registry();
  return r;
}

const IdentitySpec& find_identity(const std::string& id) {
  for (const auto& s : registry()) {
    if (s.id == id) return s;
  }
  throw PreconditionError("unknown identity '" + id + "'");
}

std::vector<std::string> all_identity_ids() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.push_back(s.id);
  return out;
}

std::string admissibility(const IdentitySpec& spec, int dim, int l, bool xi, bool w_eq_tx) {
  if (dim <= 0 || dim % 4 != 0) return "dimension must be a positive multiple of 4";
  switch (spec.dims) {
    case DimensionClass::Dim8mPlus4:
      if (dim % 8 != 4) return spec.id + " requires dimension 8m+4";
      break;
    case DimensionClass::Dim8m:
      if (dim % 8 != 0) return spec.id + " requires dimension 8m";
      break;
    case DimensionClass::Exact:
      if (dim != spec.exact_dim) return spec.id + " requires dim " + std::to_string(spec.exact_dim);
      break;
  }
  if (spec.xi == XiRequirement::Trivial && xi) return spec.id + " requires trivial xi";
  if (spec.w == WRequirement::EqualsTX && !w_eq_tx) return spec.id + " requires W = TX";
  if (spec.w == WRequirement::Generic && w_eq_tx) return spec.id + " requires generic W";
  if (w_eq_tx && l != dim / 2) return "W = TX requires l = dim/2";
  if (l < 1) return "rank parameter l must be positive";
  return {};
}

Form residual_of(const IdentitySpec& spec, const GeometrySpec& g, const std::vector<IdentityTerm>& terms) {
  Form sum = Form::zero(g.ring);
  for (const auto& t : terms) sum += t.form * t.coef;
  Form p = to_pontryagin(g, sum);
  return spec.modulo_p1 ? impose_p1_equality(g, p) : p;
}

namespace {

void require_admissible(const IdentitySpec& spec, const GeometrySpec& g) {
  auto why = admissibility(spec, g.dim_x, g.l, g.xi_present, g.w_eq_tx);
  if (!why.empty()) throw PreconditionError(why);
}

}  // namespace

VerificationReport verify_identity(const std::string& id, const GeometrySpec& g) {
  const auto& spec = find_identity(id);
  require_admissible(spec, g);
  auto start = std::chrono::steady_clock::now();
  Form residual = residual_of(spec, g, spec.build(g));
  auto stop = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = id;
  rep.dim = g.dim_x;
  rep.l = g.l;
  rep.w_eq_tx = g.w_eq_tx;
  rep.xi = g.xi_present;
  rep.pass = residual.is_zero();
  rep.residual = rep.pass ? "" : render(residual);
  rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  rep.basis = g.mode;
  return rep;
}

std::vector<VerificationReport> run_suite(const SuiteParams& params) {
  struct Job {
    std::string id;
    int dim, l;
    bool xi, w;
    BasisMode mode;
  };
  std::vector<Job> jobs;
  for (const auto& id : params.ids) {
    const auto& spec = find_identity(id);
    for (int dim : params.dims) {
      for (bool w : params.w_eq_tx_values) {
        std::vector<int> ls = w ? std::vector<int>{dim / 2} : params.ls;
        for (int l : ls) {
          for (bool xi : params.xi_values) {
            if (!admissibility(spec, dim, l, xi, w).empty()) continue;
            for (auto mode : params.modes) jobs.push_back({id, dim, l, xi, w, mode});
          }
        }
      }
    }
  }
  std::vector<VerificationReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        const auto& j = jobs[i];
        out[i] = verify_identity(j.id, make_geometry(j.dim, j.l, j.xi, j.w, j.mode));
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned n = params.threads ? params.threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::sort(out.begin(), out.end(), [](const VerificationReport& a, const VerificationReport& b) {
    return std::tie(a.id, a.dim, a.l, a.w_eq_tx, a.xi, a.basis) < std::tie(b.id, b.dim, b.l, b.w_eq_tx, b.xi, b.basis);
  });
  return out;
}

Form build_correction(const GeometrySpec& g) {
  Blocks k(g);
  auto dec = decompositions(g);
  Form out = Form::zero(g.ring);
  for (int r = 0; r <= k.m; ++r) out += dec.beta.coefficients[static_cast<std::size_t>(r)] * k.weight(r);
  return out - k.divided(k.twisted_spinor(), k.lower);
}

BridgeReport constant_term_bridge(const GeometrySpec& g) {
  Blocks k(g);
  auto dec = decompositions(g);
  const int a = basis_exponent(case_for_dimension(g.dim_x), k.m);
  ScalarSeries d8 = divisor_series(DivisorSeries::Delta1, 1) * Rational(8);
  ScalarSeries e1 = divisor_series(DivisorSeries::Eps1, 1);
  BridgeReport rep;
  Form rhs = Form::zero(g.ring);
  for (int r = 0; r <= k.m; ++r) {
    Rational c = pow2(g.l) * rational_pow(d8.coeff(0), a - 2 * r) * rational_pow(e1.coeff(0), r);
    rep.constants.push_back(c);
    rep.expected_constants.push_back(k.weight(r));
    const auto i = static_cast<std::size_t>(r);
    Form h = k.at(k.ahat * k.cosh * dec.b.coefficients[i], k.top) + k.d * dec.beta.coefficients[i];
    rhs += h * c;
  }
  auto which = k.case1 ? AssembledSeries::P1 : AssembledSeries::Q1;
  Form lhs = assemble_series(g, which, 1).coeff(0);
  Form lhs_p = to_pontryagin(g, lhs);
  Form rhs_p = to_pontryagin(g, rhs);
  rep.lhs = render(lhs_p);
  rep.rhs = render(rhs_p);
  rep.ok = lhs_p == rhs_p && rep.constants == rep.expected_constants &&
           lhs == k.exp_weighted(k.twisted_spinor(), k.top);
  return rep;
}

std::vector<MutationOutcome> mutation_check(const std::string& id, const GeometrySpec& g) {
  const auto& spec = find_identity(id);
  require_admissible(spec, g);
  auto terms = spec.build(g);
  std::vector<MutationOutcome> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    MutationOutcome o;
    o.label = terms[i].label;
    o.original = terms[i].coef;
    o.mutated = is_zero(o.original) ? Rational(1) : Rational(o.original * 2);
    o.inert = residual_of(spec, g, {{terms[i].label, Rational(1), terms[i].form}}).is_zero();
    auto mutated = terms;
    mutated[i].coef = o.mutated;
    Form res = residual_of(spec, g, mutated);
    o.detected = !res.is_zero();
    o.residual = render(res);
    out.push_back(std::move(o));
  }
  return out;
}

DerivedCoefficients derive_signature_coefficients(const GeometrySpec& g) {
  if (g.dim_x != 12 || !g.w_eq_tx || g.xi_present) {
    throw PreconditionError("signature coefficients need dim 12, W = TX and trivial xi");
  }
  auto dec = decompositions(g);
  const Form& b0 = dec.b.coefficients.at(0);
  Form rest = dec.b.coefficients.at(1) - chern_char(g, CharacterOf::T).value;
  if (b0.max_degree() > 0 || rest.max_degree() > 0) {
    throw InternalError("decomposition at dim 12 is not of the form b0 = const, b1 = T + const");
  }
  // (1/8) Lhat = 2^6 Ahat b0 + Ahat b1 in top degree
  const int m = 1;
  DerivedCoefficients c;
  c.ch_coefficient = Rational(8) * pow2(6 * m - 6);
  c.ahat_coefficient = Rational(8) * (pow2(6 * m) * b0.constant_term() + rest.constant_term());
  return c;
}

EquivalenceReport exponential_form_equivalence(const std::string& variant, const GeometrySpec& g) {
  const auto& divided = find_identity("cor1.5-" + variant);
  const auto& weighted = find_identity("remark1.6-" + variant);
  require_admissible(divided, g);
  require_admissible(weighted, g);
  auto t1 = divided.build(g);
  auto t2 = weighted.build(g);
  EquivalenceReport rep;
  Form base1 = residual_of(divided, g, t1);
  Form base2 = residual_of(weighted, g, t2);
  rep.equal = base1 == base2;
  // perturb the first right-hand coefficient in both
  t1[1].coef += 1;
  t2[1].coef += 1;
  Form p1 = residual_of(divided, g, t1);
  Form p2 = residual_of(weighted, g, t2);
  rep.equal_perturbed = p1 == p2;
  rep.perturbed_nonzero = !p1.is_zero();
  return rep;
}

}  // namespace anomcheck
