#include "anomcheck/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "anomcheck/anomaly.hpp"
#include "anomcheck/decompose.hpp"
#include "anomcheck/modforms.hpp"
#include "anomcheck/numcheck.hpp"
#include "anomcheck/thetaseries.hpp"

namespace anomcheck {

namespace {

using json = nlohmann::json;

struct Globals {
  std::string config;
  std::string format = "text";
  std::string out_path;
  bool no_timing = false;
};

struct VerifyArgs {
  std::string suite;
  bool extended = false;
  std::string id;
  std::optional<int> dim;
  std::optional<int> l;
  bool w_eq_tx = false;
  bool no_xi = false;
  std::string basis = "powersum";
  unsigned threads = 0;
};

struct ExpandArgs {
  std::string series;
  int order = 4;
  int dim = 4;
  int l = 2;
  bool no_xi = false;
  bool w_eq_tx = false;
  std::string basis = "powersum";
  std::string path = "bundle";
};

struct DecomposeArgs {
  std::optional<int> dim;
  int l = 2;
  bool no_xi = false;
  bool w_eq_tx = false;
  std::string which = "auto";
  std::string basis = "powersum";
  std::string path = "bundle";
};

struct NumcheckArgs {
  std::string law;
  std::string prop;
  std::string tau;
  std::string v = "0.2,0.05";
  int dim = 4;
  int l = 2;
  bool no_xi = false;
  bool w_eq_tx = false;
  int truncation = 12;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    out.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return out;
}

Complex parse_complex(const std::string& text, const std::string& flag) {
  auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t p1 = 0;
    std::size_t p2 = 0;
    std::string re = trim(text.substr(0, comma));
    std::string im = trim(text.substr(comma + 1));
    double a = std::stod(re, &p1);
    double b = std::stod(im, &p2);
    if (p1 != re.size() || p2 != im.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError(flag + " expects RE,IM, got '" + text + "'");
  }
}

BasisMode basis_from(const std::string& name) {
  try {
    return parse_basis_mode(name);
  } catch (const PreconditionError&) {
    throw UsageError("unknown basis '" + name + "' (expected powersum or dense)");
  }
}

CharacterPath path_from(const std::string& name) {
  if (name == "bundle") return CharacterPath::BundleOps;
  if (name == "theta") return CharacterPath::ThetaQuotient;
  throw UsageError("unknown path '" + name + "' (expected bundle or theta)");
}

std::string q_label(int halves) { return halves == 0 ? "q^0" : render_q_power(halves); }

std::string rational_text(const Rational& r) { return to_string(r); }

json report_json(const VerificationReport& r, bool timing) {
  return {{"id", r.id},
          {"dim", r.dim},
          {"l", r.l},
          {"w_eq_tx", r.w_eq_tx},
          {"xi", r.xi},
          {"status", r.pass ? "pass" : "fail"},
          {"residual", r.residual},
          {"millis", timing ? r.millis : 0}};
}

json report_json(const NumericReport& r, bool timing) {
  return {{"id", r.id},
          {"dim", r.dim},
          {"l", r.l},
          {"w_eq_tx", r.w_eq_tx},
          {"xi", r.xi},
          {"status", r.pass ? "pass" : "fail"},
          {"max_deviation", r.max_deviation},
          {"millis", timing ? r.millis : 0}};
}

std::string geometry_text(int dim, int l, bool xi, bool w_eq_tx) {
  std::ostringstream os;
  os << "dim=" << dim << " l=" << l << " xi=" << (xi ? "present" : "trivial") << " W=" << (w_eq_tx ? "TX" : "generic");
  return os.str();
}

class Runner {
 public:
  explicit Runner(std::ostream& out) : out_(out) {}

  int emit(const Globals& g, json doc, const std::string& text, bool all_pass, long long wall, bool wall_line = true) {
    doc["tool"] = {{"name", "anomcheck"}, {"version", kToolVersion}};
    doc["wall_millis"] = g.no_timing ? 0 : wall;
    std::string body;
    if (g.format == "json") {
      body = doc.dump(2) + "\n";
    } else {
      body = text;
      if (wall_line && !g.no_timing) body += "wall time: " + std::to_string(wall) + " ms\n";
    }
    if (g.out_path.empty()) {
      out_ << body;
    } else {
      std::ofstream f(g.out_path, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + g.out_path + "'");
      f << body;
    }
    return all_pass ? kExitPass : kExitFail;
  }

  int verify(const Globals& g, const VerifyArgs& a) {
    auto start = std::chrono::steady_clock::now();
    if (!a.suite.empty() && a.suite != "default" && a.suite != "extended") {
      throw UsageError("unknown suite '" + a.suite + "' (expected default or extended)");
    }
    if (a.suite.empty() && a.id.empty()) throw UsageError("verify needs --suite or --id");
    SuiteParams p;
    p.threads = a.threads;
    p.modes = {basis_from(a.basis)};
    if (a.id.empty()) {
      p.ids = all_identity_ids();
    } else {
      try {
        find_identity(a.id);
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
      p.ids = {a.id};
    }
    if (a.suite == "extended" || a.extended) p.dims = {4, 8, 12, 16, 20};
    if (a.no_xi) p.xi_values = {false};
    if (a.w_eq_tx) p.w_eq_tx_values = {true};
    if (a.dim) {
      p.dims = {*a.dim};
      if (!a.no_xi) p.xi_values = {true};
      if (!a.w_eq_tx) p.w_eq_tx_values = {false};
    }
    if (a.l) {
      if (a.w_eq_tx && a.dim && *a.l != *a.dim / 2) throw UsageError("W = TX requires --w-rank equal to dim/2");
      p.ls = {*a.l};
    }
    if (a.dim && !a.id.empty()) {
      const auto& spec = find_identity(a.id);
      int l = a.w_eq_tx ? *a.dim / 2 : a.l.value_or(p.ls.front());
      std::string why = admissibility(spec, *a.dim, l, !a.no_xi, a.w_eq_tx);
      if (!why.empty()) throw UsageError(why);
    } else if (a.dim && (*a.dim <= 0 || *a.dim % 4 != 0)) {
      throw UsageError("dimension must be a positive multiple of 4");
    }

    auto reports = run_suite(p);
    auto wall = elapsed(start);

    json doc;
    doc["params"] = {{"command", "verify"},
                     {"suite", a.suite.empty() ? "single" : a.suite},
                     {"ids", p.ids},
                     {"dims", p.dims},
                     {"ls", p.ls},
                     {"xi", p.xi_values},
                     {"w_eq_tx", p.w_eq_tx_values},
                     {"basis", a.basis}};
    json list = json::array();
    std::ostringstream text;
    int pass = 0;
    for (const auto& r : reports) {
      list.push_back(report_json(r, !g.no_timing));
      pass += r.pass ? 1 : 0;
      text << (r.pass ? "pass  " : "FAIL  ") << r.id << "  " << geometry_text(r.dim, r.l, r.xi, r.w_eq_tx);
      if (!g.no_timing) text << "  " << r.millis << " ms";
      text << "\n";
      if (!r.pass) text << "      residual: " << r.residual << "\n";
    }
    int fail = static_cast<int>(reports.size()) - pass;
    doc["reports"] = list;
    doc["summary"] = {{"total", reports.size()}, {"pass", pass}, {"fail", fail}};
    text << pass << " passed, " << fail << " failed\n";
    return emit(g, doc, text.str(), fail == 0, wall);
  }

  int expand(const Globals& g, const ExpandArgs& a) {
    auto start = std::chrono::steady_clock::now();
    if (a.order < 0) throw UsageError("--order must be non-negative");
    const int halves = 2 * a.order;
    json doc;
    doc["params"] = {{"command", "expand"}, {"series", a.series}, {"order", a.order}};
    std::ostringstream text;
    json coeffs = json::object();

    const bool form_series = a.series == "theta2-char" || a.series == "theta1-char" || a.series == "P1" ||
                             a.series == "P2" || a.series == "Xi2" || a.series == "Q1" || a.series == "Q2" ||
                             a.series == "Pi2";
    if (form_series) {
      if (a.dim <= 0 || a.dim % 4 != 0) throw UsageError("dimension must be a positive multiple of 4");
      auto geom = make_geometry(a.dim, a.w_eq_tx ? a.dim / 2 : a.l, !a.no_xi, a.w_eq_tx, basis_from(a.basis));
      auto path = path_from(a.path);
      FormSeries s = a.series == "theta2-char"   ? theta2_char(geom, path, halves)
                     : a.series == "theta1-char" ? theta1_char(geom, path, halves)
                                                 : assemble_series(geom, parse_assembled(a.series), halves, path);
      doc["params"]["dim"] = a.dim;
      doc["params"]["l"] = geom.l;
      doc["params"]["xi"] = !a.no_xi;
      doc["params"]["w_eq_tx"] = a.w_eq_tx;
      for (int e = 0; e < halves; ++e) {
        std::string rendered = render(to_pontryagin(geom, s.coeff(e)));
        coeffs[q_label(e)] = rendered;
        text << q_label(e) << ": " << rendered << "\n";
      }
      doc["rendering"] = nullptr;
    } else {
      ModularSeriesId id;
      try {
        id = ModularSeriesId::parse(a.series);
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
      ScalarSeries s = modular_series(id, halves);
      for (int e = 0; e < halves; ++e) {
        if (!is_zero(s.coeff(e))) coeffs[q_label(e)] = rational_text(s.coeff(e));
      }
      doc["rendering"] = render(s);
      text << render(s) << "\n";
    }
    doc["coefficients"] = coeffs;
    return emit(g, doc, text.str(), true, elapsed(start), false);
  }

  int decompose(const Globals& g, const DecomposeArgs& a) {
    auto start = std::chrono::steady_clock::now();
    if (!a.dim) throw UsageError("decompose needs --dim");
    const int dim = *a.dim;
    if (dim <= 0 || dim % 4 != 0) throw UsageError("dimension must be a positive multiple of 4");
    auto which = case_for_dimension(dim);
    const bool case1 = which == DecompositionCase::Dim8mPlus4;
    if (a.which != "auto" && a.which != "1" && a.which != "2") {
      throw UsageError("--case expects auto, 1 or 2");
    }
    if ((a.which == "1" && !case1) || (a.which == "2" && case1)) {
      throw UsageError("--case " + a.which + " does not match dim " + std::to_string(dim));
    }
    int l = a.w_eq_tx ? dim / 2 : a.l;
    if (l < 1) throw UsageError("--w-rank must be positive");
    auto geom = make_geometry(dim, l, !a.no_xi, a.w_eq_tx, basis_from(a.basis));
    auto path = path_from(a.path);
    auto b = b_coeffs(geom, path);
    auto beta = beta_coeffs(geom, path);
    auto closed = closed_form_check(geom);
    const int m = b.m;

    json doc;
    doc["params"] = {{"command", "decompose"}, {"dim", dim},           {"l", l},
                     {"xi", !a.no_xi},         {"w_eq_tx", a.w_eq_tx}, {"basis", a.basis}};
    doc["case"] = case1 ? 1 : 2;
    doc["m"] = m;
    doc["basis_exponent"] = b.basis_exponent;
    std::ostringstream text;
    text << "case " << (case1 ? 1 : 2) << " (dim " << (case1 ? "8m+4" : "8m") << "), m = " << m
         << ", basis exponent " << b.basis_exponent << "\n";
    const std::string f = case1 ? "b" : "z";
    const std::string gk = case1 ? "beta" : "zeta";
    json coeffs = json::object();
    for (int r = 0; r <= m; ++r) {
      std::string v = render(to_pontryagin(geom, b.coefficients[static_cast<std::size_t>(r)]));
      coeffs[f + std::to_string(r)] = v;
      text << f << r << " = " << v << "\n";
    }
    for (int r = 0; r <= m; ++r) {
      std::string v = render(to_pontryagin(geom, beta.coefficients[static_cast<std::size_t>(r)]));
      coeffs[gk + std::to_string(r)] = v;
      text << gk << r << " = " << v << "\n";
    }
    doc["coefficients"] = coeffs;

    bool ok = true;
    json checks = json::array();
    auto add = [&](const std::string& name, bool pass) {
      ok = ok && pass;
      checks.push_back({{"name", name}, {"status", pass ? "pass" : "fail"}});
      text << (pass ? "pass  " : "FAIL  ") << name << "\n";
    };
    for (const auto& c : closed.checks) add("closed form " + c.name, c.equal);
    int order = m + 1;
    auto series = theta2_char(geom, path, order);
    add("reconstruction " + f, reconstruct(b, order) == series);
    doc["checks"] = checks;
    if (m == 2) {
      auto nf = non_factorization_witness(geom);
      doc["factorizes"] = nf.factorizes;
      text << gk << "2 " << (nf.factorizes ? "equals" : "differs from")
           << " the divided weight of " << f << "2\n";
    }
    return emit(g, doc, text.str(), ok, elapsed(start));
  }

  int numcheck(const Globals& g, const NumcheckArgs& a) {
    auto start = std::chrono::steady_clock::now();
    if (!a.law.empty() && !a.prop.empty()) {
      throw UsageError("numcheck takes either --law or --prop, not both");
    }
    std::vector<NumericReport> reports;
    json params = {{"command", "numcheck"}};
    if (!a.prop.empty()) {
      PropositionKind kind;
      try {
        kind = parse_proposition(a.prop);
      } catch (const PreconditionError& e) {
        throw UsageError(e.what());
      }
      if (a.tau.empty()) throw UsageError("--prop needs --tau");
      if (a.dim <= 0 || a.dim % 4 != 0) throw UsageError("dimension must be a positive multiple of 4");
      ComplexSample s;
      s.tau = parse_complex(a.tau, "--tau");
      s.truncation = a.truncation;
      int l = a.w_eq_tx ? a.dim / 2 : a.l;
      auto geom = make_geometry(a.dim, l, !a.no_xi, a.w_eq_tx, BasisMode::PowerSum);
      reports.push_back(check_proposition(kind, geom, s));
      params.update({{"prop", a.prop}, {"dim", a.dim}, {"l", l}, {"xi", !a.no_xi}, {"w_eq_tx", a.w_eq_tx}, {"tau", a.tau}});
    } else {
      std::vector<ComplexSample> samples;
      if (a.tau.empty()) {
        samples = default_tau_grid();
      } else {
        ComplexSample s;
        s.tau = parse_complex(a.tau, "--tau");
        s.v = parse_complex(a.v, "--v");
        samples.push_back(s);
      }
      for (auto& s : samples) s.truncation = a.truncation;
      std::vector<std::string> laws = a.law.empty() ? transformation_laws() : std::vector<std::string>{a.law};
      auto known = transformation_laws();
      for (const auto& law : laws) {
        if (std::find(known.begin(), known.end(), law) == known.end()) {
          throw UsageError("unknown transformation law '" + law + "'");
        }
        reports.push_back(check_transformation(law, samples));
      }
      params.update({{"laws", laws}, {"tau", a.tau.empty() ? "grid" : a.tau}});
    }

    json doc;
    doc["params"] = params;
    json list = json::array();
    std::ostringstream text;
    int pass = 0;
    for (const auto& r : reports) {
      list.push_back(report_json(r, !g.no_timing));
      pass += r.pass ? 1 : 0;
      char buf[96];
      std::snprintf(buf, sizeof buf, "max_deviation=%.3e tolerance=%.0e", r.max_deviation, r.tolerance);
      text << (r.pass ? "pass  " : "FAIL  ") << r.id;
      if (r.dim > 0) text << "  " << geometry_text(r.dim, r.l, r.xi, r.w_eq_tx);
      text << "  " << buf;
      if (!g.no_timing) text << "  " << r.millis << " ms";
      text << "\n";
    }
    int fail = static_cast<int>(reports.size()) - pass;
    doc["reports"] = list;
    doc["summary"] = {{"total", reports.size()}, {"pass", pass}, {"fail", fail}};
    text << pass << " passed, " << fail << " failed\n";
    return emit(g, doc, text.str(), fail == 0, elapsed(start));
  }

 private:
  static long long elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }

  std::ostream& out_;
};

void add_geometry_flags(CLI::App* sub, bool& no_xi, bool& w_eq_tx, std::string& basis) {
  sub->add_flag("--no-xi", no_xi, "Take the auxiliary complex line bundle trivial");
  sub->add_flag("--w-eq-tx", w_eq_tx, "Take W = TX (forces l = dim/2)");
  sub->add_option("--basis", basis, "powersum or dense");
}

// Splits off --config, then turns each key=value entry into --key=value placed
// in front of the command-line flags of the same scope, so explicit flags win.
std::vector<std::string> apply_config(const std::vector<std::string>& args, CLI::App& app) {
  std::vector<std::string> rest;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return rest;
  auto entries = read_config(path);
  auto sub_pos = std::find_if(rest.begin(), rest.end(), [&](const std::string& a) {
    return a.empty() || a[0] != '-' ? app.get_subcommand_no_throw(a) != nullptr : false;
  });
  CLI::App* sub = sub_pos == rest.end() ? nullptr : app.get_subcommand_no_throw(*sub_pos);
  std::vector<std::string> global_flags;
  std::vector<std::string> sub_flags;
  for (const auto& [key, value] : entries) {
    std::string flag = "--" + key + "=" + value;
    if (app.get_option_no_throw("--" + key) != nullptr) {
      global_flags.push_back(flag);
    } else if (sub != nullptr && sub->get_option_no_throw("--" + key) != nullptr) {
      sub_flags.push_back(flag);
    } else {
      bool elsewhere = false;
      for (const auto* s : app.get_subcommands({})) elsewhere = elsewhere || s->get_option_no_throw("--" + key) != nullptr;
      if (!elsewhere) throw UsageError("unknown config key '" + key + "'");
    }
  }
  std::vector<std::string> out(global_flags);
  if (sub_pos == rest.end()) {
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  out.insert(out.end(), rest.begin(), sub_pos + 1);
  out.insert(out.end(), sub_flags.begin(), sub_flags.end());
  out.insert(out.end(), sub_pos + 1, rest.end());
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric checks of anomaly cancellation formulas", "anomcheck"};
  app.option_defaults()->take_last();
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--config", globals.config, "Flat key=value file presetting flags");
  app.add_option("--format", globals.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", globals.out_path, "Write the document to this file");
  app.add_flag("--no-timing", globals.no_timing, "Zero all timings for byte-stable output");
  app.set_version_flag("--version", kToolVersion);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Exact residuals of the registered identities");
  verify->add_option("--suite", va.suite, "default or extended");
  verify->add_flag("--extended", va.extended, "Add dimensions 16 and 20");
  verify->add_option("--id", va.id, "Identity key");
  verify->add_option("--dim", va.dim, "Dimension of X");
  verify->add_option("--w-rank", va.l, "l, with rank W = 2l");
  verify->add_option("--threads", va.threads, "Worker threads (0: all cores)");
  add_geometry_flags(verify, va.no_xi, va.w_eq_tx, va.basis);

  ExpandArgs ea;
  auto* expand = app.add_subcommand("expand", "Print a truncated q-expansion");
  expand->add_option("--series", ea.series, "Series name")->required();
  expand->add_option("--order", ea.order, "Truncate modulo q^N");
  expand->add_option("--dim", ea.dim, "Dimension of X");
  expand->add_option("--w-rank", ea.l, "l, with rank W = 2l");
  expand->add_option("--path", ea.path, "bundle or theta");
  add_geometry_flags(expand, ea.no_xi, ea.w_eq_tx, ea.basis);

  DecomposeArgs da;
  auto* decompose = app.add_subcommand("decompose", "Modular decomposition coefficients and closed forms");
  decompose->add_option("--dim", da.dim, "Dimension of X");
  decompose->add_option("--w-rank", da.l, "l, with rank W = 2l");
  decompose->add_option("--case", da.which, "auto, 1 or 2");
  decompose->add_option("--path", da.path, "bundle or theta");
  add_geometry_flags(decompose, da.no_xi, da.w_eq_tx, da.basis);

  NumcheckArgs na;
  auto* numcheck = app.add_subcommand("numcheck", "Double-precision transformation checks");
  numcheck->add_option("--law", na.law, "Transformation law id");
  numcheck->add_option("--prop", na.prop, "P or Q");
  numcheck->add_option("--tau", na.tau, "RE,IM");
  numcheck->add_option("--v", na.v, "RE,IM theta argument for the laws");
  numcheck->add_option("--dim", na.dim, "Dimension of X");
  numcheck->add_option("--w-rank", na.l, "l, with rank W = 2l");
  numcheck->add_option("--truncation", na.truncation, "Initial number of q-steps");
  numcheck->add_flag("--no-xi", na.no_xi, "Take the auxiliary complex line bundle trivial");
  numcheck->add_flag("--w-eq-tx", na.w_eq_tx, "Take W = TX");

  Runner runner(out);
  try {
    auto full = apply_config(args, app);
    std::vector<std::string> reversed(full.rbegin(), full.rend());
    app.parse(reversed);
    if (verify->parsed()) return runner.verify(globals, va);
    if (expand->parsed()) return runner.expand(globals, ea);
    if (decompose->parsed()) return runner.decompose(globals, da);
    return runner.numcheck(globals, na);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "anomcheck: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "anomcheck: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "anomcheck: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "anomcheck: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace anomcheck
