#pragma once

// Registry of cancellation identities and their exact verification.
//
// Every identity is stored as a list of labelled terms sum_i c_i F_i whose
// total must vanish in the Pontryagin ring (optionally after imposing
// p1(W) = p1(TX)). Keeping the rational coefficients c_i separate from the
// forms F_i is what makes single-coefficient mutation possible.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "anomcheck/charforms.hpp"
#include "anomcheck/decompose.hpp"

namespace anomcheck {

enum class DimensionClass { Dim8mPlus4, Dim8m, Exact };
enum class XiRequirement { Any, Trivial };
enum class WRequirement { Any, Generic, EqualsTX };

struct IdentityTerm {
  std::string label;
  Rational coef;
  Form form;
};

struct IdentitySpec {
  std::string id;
  std::string description;
  DimensionClass dims = DimensionClass::Dim8mPlus4;
  int exact_dim = 0;
  XiRequirement xi = XiRequirement::Any;
  WRequirement w = WRequirement::Any;
  // The identity only holds once p1(W) = p1(TX) is imposed.
  bool modulo_p1 = false;
  std::function<std::vector<IdentityTerm>(const GeometrySpec&)> build;
};

const std::vector<IdentitySpec>& registry();
const IdentitySpec& find_identity(const std::string& id);

// Empty string when the geometry parameters are admissible, otherwise the reason.
std::string admissibility(const IdentitySpec& spec, int dim, int l, bool xi, bool w_eq_tx);

// Sum of the terms, rewritten in Pontryagin classes (and reduced mod p1 when required).
Form residual_of(const IdentitySpec& spec, const GeometrySpec& g, const std::vector<IdentityTerm>& terms);

struct VerificationReport {
  std::string id;
  int dim = 0;
  int l = 0;
  bool w_eq_tx = false;
  bool xi = true;
  bool pass = false;
  std::string residual;  // "" on pass
  long long millis = 0;
  BasisMode basis = BasisMode::PowerSum;
};

VerificationReport verify_identity(const std::string& id, const GeometrySpec& g);

struct SuiteParams {
  std::vector<std::string> ids;
  std::vector<int> dims{4, 8, 12};
  std::vector<int> ls{2, 3, 4};
  std::vector<bool> xi_values{true, false};
  std::vector<bool> w_eq_tx_values{false, true};
  std::vector<BasisMode> modes{BasisMode::PowerSum};
  unsigned threads = 0;  // 0: hardware concurrency
};

// All admissible (identity, geometry) pairs; W = TX pairs use l = dim/2 once per
// dimension. Sorted by id, dim, l, W flag, xi flag, basis.
std::vector<VerificationReport> run_suite(const SuiteParams& params);

std::vector<std::string> all_identity_ids();

// The form multiplying p1(TX) - p1(W) on the right of the general identity:
// sum_r 2^{l+2m+1-6r} beta_r - {div * Ahat Sp / cosh^2}^{(8m)} for dim 8m+4,
// and the zeta analogue for dim 8m.
Form build_correction(const GeometrySpec& g);

struct BridgeReport {
  bool ok = false;
  std::vector<Rational> constants;  // 2^l [(8 delta1)^{a-2r} eps1^r]_{q^0}
  std::vector<Rational> expected_constants;
  std::string lhs;
  std::string rhs;
};

// Compares the q^0 coefficient of the P1 (Q1) series with the delta1/eps1
// weighted sum of h_r = {Ahat cosh ch(b_r)} + (p1(TX) - p1(W)) beta_r.
BridgeReport constant_term_bridge(const GeometrySpec& g);

struct MutationOutcome {
  std::string label;
  Rational original;
  Rational mutated;
  bool inert = false;     // the term's form vanishes, so no coefficient change is visible
  bool detected = false;  // mutated residual is nonzero
  std::string residual;
};

// c -> 2c (or 0 -> 1) on each term in turn.
std::vector<MutationOutcome> mutation_check(const std::string& id, const GeometrySpec& g);

struct DerivedCoefficients {
  Rational ch_coefficient;
  Rational ahat_coefficient;
};

// Coefficients of {Ahat ch(TX)} and {Ahat} in {Lhat}^{(12)}, read off the
// decomposition at dim 12 with W = TX and xi trivial.
DerivedCoefficients derive_signature_coefficients(const GeometrySpec& g);

struct EquivalenceReport {
  bool equal = false;            // both residual forms agree
  bool equal_perturbed = false;  // and still agree after perturbing the right-hand side
  bool perturbed_nonzero = false;
};

// The exponential-weighted rewriting of a dim 8/12 identity against its
// divided-difference form; `variant` is one of dim8-xi, dim8-spin, dim12-xi, dim12-spin.
EquivalenceReport exponential_form_equivalence(const std::string& variant, const GeometrySpec& g);

}  // namespace anomcheck
