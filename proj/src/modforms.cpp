#include "anomcheck/modforms.hpp"

#include <map>
#include <mutex>

namespace anomcheck {

ModularSeriesId ModularSeriesId::parse(const std::string& name) {
  if (name == "delta1") return {Kind::Divisor, DivisorSeries::Delta1, 0};
  if (name == "eps1") return {Kind::Divisor, DivisorSeries::Eps1, 0};
  if (name == "delta2") return {Kind::Divisor, DivisorSeries::Delta2, 0};
  if (name == "eps2") return {Kind::Divisor, DivisorSeries::Eps2, 0};
  if (name == "theta-prime") return {Kind::ThetaPrimeNull, DivisorSeries::Delta1, 0};
  if (name.size() == 6 && name.rfind("theta", 0) == 0 && name[5] >= '1' && name[5] <= '3') {
    return {Kind::ThetaNull, DivisorSeries::Delta1, name[5] - '0'};
  }
  if (name.size() >= 2 && name[0] == 'E') {
    std::size_t pos = 0;
    int w = 0;
    try {
      w = std::stoi(name.substr(1), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == name.size() - 1 && w >= 2 && w % 2 == 0) return {Kind::Eisenstein, DivisorSeries::Delta1, w / 2};
  }
  throw PreconditionError("unknown series '" + name + "'");
}

std::string ModularSeriesId::name() const {
  switch (kind) {
    case Kind::Divisor:
      switch (divisor) {
        case DivisorSeries::Delta1: return "delta1";
        case DivisorSeries::Eps1: return "eps1";
        case DivisorSeries::Delta2: return "delta2";
        case DivisorSeries::Eps2: return "eps2";
      }
      break;
    case Kind::Eisenstein: return "E" + std::to_string(2 * index);
    case Kind::ThetaNull: return "theta" + std::to_string(index);
    case Kind::ThetaPrimeNull: return "theta-prime";
  }
  return "?";
}

namespace {

void require_order(int order_halves) {
  if (order_halves < 1) throw PreconditionError("series order must be at least 1/2");
}

}  // namespace

ScalarSeries divisor_series(DivisorSeries id, int order_halves) {
  require_order(order_halves);
  ScalarSeries s(order_halves, Rational(0));
  switch (id) {
    case DivisorSeries::Delta1:
      s.set(0, Rational(1, 4));
      for (int n = 1; 2 * n < order_halves; ++n) {
        long sum = 0;
        for (int d = 1; d <= n; d += 2) {
          if (n % d == 0) sum += d;
        }
        s.set(2 * n, Rational(6 * sum));
      }
      break;
    case DivisorSeries::Eps1:
      s.set(0, Rational(1, 16));
      for (int n = 1; 2 * n < order_halves; ++n) {
        mpz_class sum = 0;
        for (int d = 1; d <= n; ++d) {
          if (n % d != 0) continue;
          mpz_class cube = mpz_class(d) * d * d;
          if (d % 2 == 1) {
            sum -= cube;
          } else {
            sum += cube;
          }
        }
        s.set(2 * n, Rational(sum));
      }
      break;
    case DivisorSeries::Delta2:
      s.set(0, Rational(-1, 8));
      for (int n = 1; n < order_halves; ++n) {
        long sum = 0;
        for (int d = 1; d <= n; d += 2) {
          if (n % d == 0) sum += d;
        }
        s.set(n, Rational(-3 * sum));
      }
      break;
    case DivisorSeries::Eps2:
      for (int n = 1; n < order_halves; ++n) {
        mpz_class sum = 0;
        for (int d = 1; d <= n; ++d) {
          if (n % d == 0 && (n / d) % 2 == 1) sum += mpz_class(d) * d * d;
        }
        s.set(n, Rational(sum));
      }
      break;
  }
  return s;
}

Rational bernoulli(int n) {
  if (n < 0) throw PreconditionError("negative Bernoulli index");
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    Rational sum = 0;
    mpz_class binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      sum += binom * cache[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    cache.push_back(-sum / (m + 1));
  }
  return cache[static_cast<std::size_t>(n)];
}

ScalarSeries eisenstein(int k, int order_halves) {
  require_order(order_halves);
  if (k < 1) throw PreconditionError("Eisenstein index must be positive");
  Rational factor = Rational(-4 * k) / bernoulli(2 * k);
  ScalarSeries s(order_halves, Rational(0));
  s.set(0, Rational(1));
  for (int n = 1; 2 * n < order_halves; ++n) {
    mpz_class sigma = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(2 * k - 1));
      sigma += p;
    }
    s.set(2 * n, factor * sigma);
  }
  return s;
}

namespace {

// 1 + sign * q^{halves/2}
ScalarSeries binomial(int order_halves, int halves, int sign) {
  ScalarSeries s = ScalarSeries::constant(order_halves, Rational(1));
  s.set(halves, Rational(sign));
  return s;
}

}  // namespace

ScalarSeries theta_null(int j, int order_halves) {
  require_order(order_halves);
  if (j < 1 || j > 3) throw PreconditionError("theta nullwert index must be 1, 2 or 3");
  ScalarSeries out = ScalarSeries::constant(order_halves, Rational(1));
  for (int n = 1; 2 * n - 1 < order_halves; ++n) {
    if (2 * n < order_halves) out = out * binomial(order_halves, 2 * n, -1);
    switch (j) {
      case 1:
        if (2 * n < order_halves) {
          auto f = binomial(order_halves, 2 * n, 1);
          out = out * f * f;
        }
        break;
      case 2: {
        auto f = binomial(order_halves, 2 * n - 1, -1);
        out = out * f * f;
        break;
      }
      case 3: {
        auto f = binomial(order_halves, 2 * n - 1, 1);
        out = out * f * f;
        break;
      }
    }
  }
  return out;
}

ScalarSeries theta_prime_null(int order_halves) {
  require_order(order_halves);
  ScalarSeries out = ScalarSeries::constant(order_halves, Rational(1));
  for (int n = 1; 2 * n < order_halves; ++n) {
    auto f = binomial(order_halves, 2 * n, -1);
    out = out * f * f * f;
  }
  return out;
}

ScalarSeries modular_series(const ModularSeriesId& id, int order_halves) {
  switch (id.kind) {
    case ModularSeriesId::Kind::Divisor: return divisor_series(id.divisor, order_halves);
    case ModularSeriesId::Kind::Eisenstein: return eisenstein(id.index, order_halves);
    case ModularSeriesId::Kind::ThetaNull: return theta_null(id.index, order_halves);
    case ModularSeriesId::Kind::ThetaPrimeNull: return theta_prime_null(order_halves);
  }
  throw InternalError("unhandled series kind");
}

NullwertReport nullwert_identity_check(int order_halves) {
  require_order(order_halves);
  auto fourth = [](const ScalarSeries& s) {
    auto sq = s * s;
    return sq * sq;
  };
  auto t1 = fourth(theta_null(1, order_halves)) * Rational(16);
  // reinstate (2 q^{1/8})^4 = 16 q^{1/2}
  ScalarSeries t1_full(order_halves, Rational(0));
  for (const auto& [e, c] : t1.coefficients()) t1_full.set(e + 1, c);
  auto t2 = fourth(theta_null(2, order_halves));
  auto t3 = fourth(theta_null(3, order_halves));

  struct Pair {
    const char* name;
    ScalarSeries divisor;
    ScalarSeries theta;
  };
  std::vector<Pair> pairs{
      {"delta1", divisor_series(DivisorSeries::Delta1, order_halves), (t2 + t3) * Rational(1, 8)},
      {"eps1", divisor_series(DivisorSeries::Eps1, order_halves), t2 * t3 * Rational(1, 16)},
      {"delta2", divisor_series(DivisorSeries::Delta2, order_halves), (t1_full + t3) * Rational(-1, 8)},
      {"eps2", divisor_series(DivisorSeries::Eps2, order_halves), t1_full * t3 * Rational(1, 16)},
  };
  NullwertReport report;
  for (const auto& p : pairs) {
    auto m = qs_match_mod(p.divisor, p.theta, order_halves);
    report.entries.push_back({p.name, m.equal, m.first_mismatch});
    report.ok = report.ok && m.equal;
  }
  return report;
}

}  // namespace anomcheck
