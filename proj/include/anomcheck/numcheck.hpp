#pragma once

// Double-precision evaluation of theta functions, Eisenstein series and the
// level-2 forms, used to test transformation laws that have no meaning for
// truncated formal q-series.

#include <string>
#include <vector>

#include "anomcheck/charforms.hpp"
#include "anomcheck/modforms.hpp"
#include "anomcheck/thetaseries.hpp"

namespace anomcheck {

struct ComplexSample {
  Complex tau{0.0, 1.0};
  Complex v{0.0, 0.0};
  // Starting number of q-steps kept in partial products and sums.
  int truncation = 12;
  // Raise the truncation until the tail bound is small enough; otherwise reject.
  bool auto_raise = true;
};

// Full theta functions (q^{1/8} and trigonometric prefactors included), q = e^{2 pi i tau}.
Complex eval_theta(ThetaKind kind, const ComplexSample& s);
// d/dv theta(v, tau) at v = 0.
Complex eval_theta_prime(const ComplexSample& s);
Complex eval_eisenstein(int k, const ComplexSample& s);
Complex eval_divisor(DivisorSeries id, const ComplexSample& s);

// Sum of an exact q^{1/2}-series at q^{1/2} = e^{pi i tau}.
Complex eval_series(const ScalarSeries& series, Complex tau);

struct NumericReport {
  std::string id;
  int dim = 0;
  int l = 0;
  bool w_eq_tx = false;
  bool xi = false;
  bool pass = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  double tail_bound = 0.0;
  // Largest coefficient magnitude on the compared right-hand side.
  double magnitude = 0.0;
  long long millis = 0;
};

// theta-S, theta-T, theta1-S, ..., theta3-T, E2-S, E2-T, E2-gamma, delta-eps-S
std::vector<std::string> transformation_laws();
NumericReport check_transformation(const std::string& law, const std::vector<ComplexSample>& samples);

// Five points near the standard fundamental domain, with a fixed theta argument.
std::vector<ComplexSample> default_tau_grid();

enum class PropositionKind { P, Q };
PropositionKind parse_proposition(const std::string& name);

// Deliberate distortions of the right-hand side, for negative controls.
struct PropositionOptions {
  int weight_shift = 0;
  bool drop_correction = false;
};

// P1(-1/tau) against 2^l tau^{4m+2} (P2 + (p1(TX)-p1(W)) Xi2)(tau) (and the Q
// analogue with tau^{4m}), compared coefficient by coefficient over complex forms.
NumericReport check_proposition(PropositionKind which, const GeometrySpec& g, const ComplexSample& s,
                                const PropositionOptions& options = {});

// Exact q-coefficients from modforms summed at tau against the product or
// Lambert-series evaluation of the same function.
NumericReport coherence_check(const ModularSeriesId& id, const ComplexSample& s, int order_halves = 40);

// The truncated exact series of an assembled P/Q quantity, summed at tau,
// against its numeric evaluation.
NumericReport series_coherence(const GeometrySpec& g, AssembledSeries which, const ComplexSample& s,
                               int order_halves);

}  // namespace anomcheck
