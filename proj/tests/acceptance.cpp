// Acceptance run: one line per criterion, exit status 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

#include "anomcheck/anomaly.hpp"
#include "anomcheck/decompose.hpp"
#include "anomcheck/modforms.hpp"
#include "anomcheck/numcheck.hpp"
#include "anomcheck/thetaseries.hpp"

using namespace anomcheck;

namespace {

constexpr double kSuiteSeconds = 60.0;
constexpr double kExtendedSeconds = 600.0;
constexpr double kNumericSeconds = 10.0;
constexpr double kLawTolerance = 1e-9;
constexpr double kPropositionTolerance = 1e-8;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "exception: " << e.what() << "; ";
  }
  o.detail << "elapsed " << seconds_since(start) << " s";
  if (!o.pass) ++failures;
  std::printf("criterion %d: %s  %s (%s)\n", n, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.str().c_str());
  std::fflush(stdout);
}

std::vector<int> l_range() { return {2, 3, 4, 5, 6}; }

// Runs one identity over dims x l x xi x W and checks every report passes.
void theorem_grid(Outcome& o, const std::string& id, std::vector<int> dims, std::vector<int> ls, double limit) {
  SuiteParams p;
  p.ids = {id};
  p.dims = std::move(dims);
  p.ls = std::move(ls);
  auto start = Clock::now();
  auto reports = run_suite(p);
  double t = seconds_since(start);
  int pass = 0;
  for (const auto& r : reports) {
    pass += r.pass;
    o.require(r.pass, r.id + " dim " + std::to_string(r.dim) + " l " + std::to_string(r.l));
  }
  o.require(!reports.empty(), "no admissible geometry for " + id);
  o.require(t < limit, id + " exceeded the time limit");
  o.detail << id << " " << pass << "/" << reports.size() << " in " << t << " s; ";
}

Form closed_bracket(const GeometrySpec& g) {
  const int m = g.dim_x / 8;
  const bool case1 = g.dim_x % 8 == 4;
  return chern_char(g, CharacterOf::W).value - chern_char(g, CharacterOf::Xi).value * Rational(3) +
         Form::constant(g.ring, Rational(48 * m - 2 * g.l + (case1 ? 30 : 6)));
}

std::string pont(const GeometrySpec& g, const Form& f) { return render(to_pontryagin(g, f)); }

}  // namespace

int main() {
  criterion(1, "dimension 8m+4 theorem, exact zero residual", [](Outcome& o) {
    theorem_grid(o, "thm1.1-case1", {4, 12}, l_range(), kSuiteSeconds);
    theorem_grid(o, "thm1.1-case1", {20}, {2, 3}, kExtendedSeconds);
  });

  criterion(2, "dimension 8m theorem, exact zero residual", [](Outcome& o) {
    theorem_grid(o, "thm1.1-case2", {8}, l_range(), kSuiteSeconds);
    theorem_grid(o, "thm1.1-case2", {16}, l_range(), kExtendedSeconds);
  });

  criterion(3, "six low-dimensional identities, four weighted variants and their equivalence", [](Outcome& o) {
    int checked = 0;
    for (const char* id : {"cor1.5-dim4-xi", "cor1.5-dim4-spin", "cor1.5-dim8-xi", "cor1.5-dim8-spin",
                           "cor1.5-dim12-xi", "cor1.5-dim12-spin", "remark1.6-dim8-xi", "remark1.6-dim8-spin",
                           "remark1.6-dim12-xi", "remark1.6-dim12-spin"}) {
      const std::string s(id);
      const int dim = s.find("dim12") != std::string::npos ? 12 : s.find("dim8") != std::string::npos ? 8 : 4;
      const bool xi = s.ends_with("xi");
      for (int l : l_range()) {
        auto r = verify_identity(id, make_geometry(dim, l, xi, false, BasisMode::PowerSum));
        o.require(r.pass, s + " l " + std::to_string(l));
        ++checked;
      }
    }
    for (const char* v : {"dim8-xi", "dim8-spin", "dim12-xi", "dim12-spin"}) {
      const std::string s(v);
      for (int l : l_range()) {
        auto g = make_geometry(s.starts_with("dim12") ? 12 : 8, l, s.ends_with("xi"), false, BasisMode::PowerSum);
        auto e = exponential_form_equivalence(v, g);
        o.require(e.equal && e.equal_perturbed && e.perturbed_nonzero, s + " equivalence l " + std::to_string(l));
        ++checked;
      }
    }
    o.detail << checked << " checks; ";
  });

  criterion(4, "signature identity coefficients derived through the decomposition", [](Outcome& o) {
    auto g = make_geometry(12, 6, false, true, BasisMode::PowerSum);
    auto b = b_coeffs(g);
    o.require(b.m == 1, "m = 1");
    o.require(b.coefficients.at(0) == Form::constant(g.ring, Rational(-1)), "b0 = -1");
    o.require(b.coefficients.at(1) == chern_char(g, CharacterOf::T).value + Form::constant(g.ring, Rational(60)),
              "b1 = T + 60");
    auto c = derive_signature_coefficients(g);
    o.require(c.ch_coefficient == 8, "coefficient of {Ahat ch T}");
    o.require(c.ahat_coefficient == -32, "coefficient of {Ahat}");
    // the derived coefficients close the identity
    Form lhs = l_hat(g).degree_component(12);
    Form rhs = (a_hat(g) * chern_char(g, CharacterOf::T).value * c.ch_coefficient +
                a_hat(g) * c.ahat_coefficient).degree_component(12);
    o.require(!lhs.is_zero() && to_pontryagin(g, lhs - rhs).is_zero(), "derived identity holds");
    o.require(verify_identity("agw-0.1", g).pass, "registry identity");
    o.detail << "coefficients " << to_string(c.ch_coefficient) << ", " << to_string(c.ahat_coefficient) << "; ";
  });

  criterion(5, "closed forms of b_r, z_r, beta_r, zeta_r for r = 0, 1 at m = 1, 2", [](Outcome& o) {
    int checked = 0;
    for (int dim : {8, 12, 16, 20}) {
      const bool case1 = dim % 8 == 4;
      for (int l : l_range()) {
        for (bool xi : {true, false}) {
          auto g = make_geometry(dim, l, xi, false, BasisMode::PowerSum);
          const std::string where = "dim " + std::to_string(dim) + " l " + std::to_string(l);
          auto b = b_coeffs(g);
          auto beta = beta_coeffs(g);
          const int sign = case1 ? 1 : -1;
          Form bracket = closed_bracket(g);
          o.require(b.coefficients.at(0) == Form::constant(g.ring, Rational(-sign)), where + " r = 0");
          o.require(b.coefficients.at(1) == bracket * Rational(sign), where + " r = 1");
          Form weight = divided_exp(p1_difference(g), Rational(1, 24)) * a_hat(g) * cosh_half_c(g);
          const int deg = dim - 4;
          o.require(beta.coefficients.at(0) == weight.degree_component(deg) * Rational(-sign), where + " beta0");
          o.require(beta.coefficients.at(1) == (weight * bracket).degree_component(deg) * Rational(sign),
                    where + " beta1");
          // the constant of the bracket once ch W - 3 ch xi is removed
          Form rest = b.coefficients.at(1) * Rational(sign) - chern_char(g, CharacterOf::W).value +
                      chern_char(g, CharacterOf::Xi).value * Rational(3);
          const int m = dim / 8;
          o.require(rest == Form::constant(g.ring, Rational(48 * m - 2 * l + (case1 ? 30 : 6))), where + " constant");
          o.require(closed_form_check(g).ok, where + " library closed forms");
          ++checked;
        }
      }
    }
    o.detail << checked << " geometries; ";
  });

  criterion(6, "bundle operations vs theta quotients to q^3, dense vs power-sum bases", [](Outcome& o) {
    const int order = 7;
    int checked = 0;
    for (int dim : {4, 8, 12}) {
      for (int l : {2, 3, 4}) {
        for (bool xi : {true, false}) {
          auto g = make_geometry(dim, l, xi, false, BasisMode::PowerSum);
          const std::string where = "dim " + std::to_string(dim) + " l " + std::to_string(l);
          o.require(theta2_char(g, CharacterPath::BundleOps, order) ==
                        theta2_char(g, CharacterPath::ThetaQuotient, order),
                    where + " theta2");
          o.require(theta1_char(g, CharacterPath::BundleOps, order) ==
                        theta1_char(g, CharacterPath::ThetaQuotient, order),
                    where + " theta1");
          ++checked;
        }
      }
    }
    for (int dim : {4, 8, 12}) {
      for (int l : {2, 3}) {
        for (bool xi : {true, false}) {
          auto d = make_geometry(dim, l, xi, false, BasisMode::Dense);
          auto p = make_geometry(dim, l, xi, false, BasisMode::PowerSum);
          const std::string where = "dense dim " + std::to_string(dim) + " l " + std::to_string(l);
          o.require(pont(d, a_hat(d)) == pont(p, a_hat(p)), where + " Ahat");
          o.require(pont(d, l_hat(d)) == pont(p, l_hat(p)), where + " Lhat");
          o.require(pont(d, spinor_ch(d, Bundle::W)) == pont(p, spinor_ch(p, Bundle::W)), where + " spinor");
          auto sd = theta2_char(d, CharacterPath::BundleOps, 5);
          auto sp = theta2_char(p, CharacterPath::BundleOps, 5);
          for (int h = 0; h < 5; ++h) o.require(pont(d, sd.coeff(h)) == pont(p, sp.coeff(h)), where + " theta2");
          ++checked;
        }
      }
    }
    o.detail << checked << " geometries; ";
  });

  criterion(7, "divisor sums equal theta nullwert expressions to q^20, E2 leading coefficients", [](Outcome& o) {
    const int order = 41;
    auto t1 = theta_null(1, order);
    auto t2 = theta_null(2, order);
    auto t3 = theta_null(3, order);
    auto fourth = [](const ScalarSeries& s) { return s * s * s * s; };
    ScalarSeries q_half(order, Rational(0));
    q_half.set(1, Rational(1));
    auto th1 = q_half * fourth(t1) * Rational(16);
    o.require(divisor_series(DivisorSeries::Delta1, order) == (fourth(t2) + fourth(t3)) * Rational(1, 8), "delta1");
    o.require(divisor_series(DivisorSeries::Eps1, order) == fourth(t2) * fourth(t3) * Rational(1, 16), "eps1");
    o.require(divisor_series(DivisorSeries::Delta2, order) == (th1 + fourth(t3)) * Rational(-1, 8), "delta2");
    o.require(divisor_series(DivisorSeries::Eps2, order) == th1 * fourth(t3) * Rational(1, 16), "eps2");
    o.require(nullwert_identity_check(order).ok, "library nullwert report");
    auto e2 = eisenstein(1, 8);
    o.require(e2.coeff(0) == 1 && e2.coeff(2) == -24 && e2.coeff(4) == -72 && e2.coeff(6) == -96, "E2");
  });

  criterion(8, "numeric transformation laws and propositions", [](Outcome& o) {
    double worst_law = 0.0;
    auto grid = default_tau_grid();
    for (const auto& law : transformation_laws()) {
      auto start = Clock::now();
      auto rep = check_transformation(law, grid);
      o.require(rep.max_deviation < kLawTolerance, law);
      o.require(seconds_since(start) < kNumericSeconds, law + " time");
      worst_law = std::max(worst_law, rep.max_deviation);
    }
    double worst_prop = 0.0;
    double smallest_magnitude = std::numeric_limits<double>::infinity();
    int props = 0;
    for (int dim : {4, 8, 12}) {
      for (int l : {2, 3}) {
        for (bool xi : {true, false}) {
          auto g = make_geometry(dim, l, xi, false, BasisMode::PowerSum);
          auto kind = dim % 8 == 4 ? PropositionKind::P : PropositionKind::Q;
          for (Complex tau : {Complex(0.0, 2.0), Complex(0.3, 2.2)}) {
            ComplexSample s;
            s.tau = tau;
            auto start = Clock::now();
            auto rep = check_proposition(kind, g, s);
            const std::string where = "proposition dim " + std::to_string(dim) + " l " + std::to_string(l);
            o.require(rep.max_deviation < kPropositionTolerance, where);
            o.require(seconds_since(start) < kNumericSeconds, where + " time");
            worst_prop = std::max(worst_prop, rep.max_deviation);
            smallest_magnitude = std::min(smallest_magnitude, rep.magnitude);
            ++props;
          }
        }
      }
    }
    o.detail << "worst law deviation " << worst_law << ", worst proposition deviation " << worst_prop << " over "
             << props << " samples (smallest compared magnitude " << smallest_magnitude << "); ";
  });

  criterion(9, "every registered identity detects single-coefficient mutations", [](Outcome& o) {
    int ids = 0;
    int mutations = 0;
    for (const auto& spec : registry()) {
      bool found = false;
      for (int dim : {4, 8, 12, 16}) {
        for (bool tx : {false, true}) {
          for (bool xi : {true, false}) {
            const int l = tx ? dim / 2 : 3;
            if (found || !admissibility(spec, dim, l, xi, tx).empty()) continue;
            found = true;
            auto g = make_geometry(dim, l, xi, tx, BasisMode::PowerSum);
            o.require(verify_identity(spec.id, g).pass, spec.id + " unmutated");
            int live = 0;
            for (const auto& m : mutation_check(spec.id, g)) {
              if (m.inert) continue;
              ++live;
              ++mutations;
              o.require(m.detected && !m.residual.empty(), spec.id + " term " + m.label);
            }
            o.require(live > 0, spec.id + " has no load-bearing coefficient");
          }
        }
      }
      o.require(found, spec.id + " has no admissible geometry");
      ++ids;
    }
    o.detail << ids << " identities, " << mutations << " mutations; ";
  });

  std::printf("%s\n", failures == 0 ? "all criteria pass" : "some criteria fail");
  return failures == 0 ? 0 : 1;
}
