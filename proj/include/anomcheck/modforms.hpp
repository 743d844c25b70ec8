#pragma once

// q-expansions of the level-2 modular forms delta/epsilon, Eisenstein series
// and Jacobi theta nullwerte. All orders are exclusive bounds in half-steps.

#include <optional>
#include <string>
#include <vector>

#include "anomcheck/qhalf.hpp"

namespace anomcheck {

enum class DivisorSeries { Delta1, Eps1, Delta2, Eps2 };

struct ModularSeriesId {
  enum class Kind { Divisor, Eisenstein, ThetaNull, ThetaPrimeNull } kind = Kind::Divisor;
  DivisorSeries divisor = DivisorSeries::Delta1;
  int index = 0;  // k for E_{2k}, j for theta_j

  // delta1, eps1, delta2, eps2, E2, E4, ..., theta1, theta2, theta3, theta-prime
  static ModularSeriesId parse(const std::string& name);
  std::string name() const;
};

ScalarSeries divisor_series(DivisorSeries id, int order_halves);

// Exact Bernoulli number B_n (B_1 = -1/2 convention).
Rational bernoulli(int n);

// E_{2k}; k = 1 gives the quasimodular E_2.
ScalarSeries eisenstein(int k, int order_halves);

// theta_j(0, tau) with the 2 q^{1/8} prefactor of theta_1 dropped.
ScalarSeries theta_null(int j, int order_halves);
// theta'(0, tau) / (2 pi) with the q^{1/8} prefactor dropped: prod (1 - q^n)^3.
ScalarSeries theta_prime_null(int order_halves);

ScalarSeries modular_series(const ModularSeriesId& id, int order_halves);

struct NullwertEntry {
  std::string name;
  bool equal = true;
  std::optional<int> first_mismatch;
};

struct NullwertReport {
  bool ok = true;
  std::vector<NullwertEntry> entries;
};

// Compares the divisor-sum expansions with the quartic theta combinations.
NullwertReport nullwert_identity_check(int order_halves);

}  // namespace anomcheck
