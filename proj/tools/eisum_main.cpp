// eisum: Ei-sum resummation of the Painlevé I asymptotic series.

#include "eisum/commands.hpp"
#include "eisum/error.hpp"
#include "eisum/literal.hpp"

#include "CLI11.hpp"
#include "ode_oracle.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace eisum;

constexpr int kVerifyMismatch = 7;

struct CommonFlags {
  std::string config, n, precision_bits, theta, z0, grid, preset, format, out, strategy;
  std::vector<std::string> set;
};

void add_common(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--config", f.config, "key = value config file");
  sub->add_option("--n", f.n, "Padé half-order N (2N Ei terms)");
  sub->add_option("--precision-bits", f.precision_bits, "working precision in bits");
  sub->add_option("--theta", f.theta, "Laplace direction, e.g. 0, pi, -pi/4, auto");
  sub->add_option("--z0", f.z0, "Taylor centre, e.g. 5+i");
  sub->add_option("--grid", f.grid, "origin,step,nx,ny[,mirror]");
  sub->add_option("--preset", f.preset, "grid preset: rhp or lhp");
  sub->add_option("--format", f.format, "csv or json");
  sub->add_option("--out", f.out, "output path (default stdout)");
  sub->add_option("--strategy", f.strategy, "Ei evaluation: oracle or dyadic");
  sub->add_option("--set", f.set, "override any config key: key=value");
}

RunConfig resolve(const CommonFlags& f) {
  RunConfig cfg = f.config.empty() ? RunConfig{} : load_config(f.config);
  auto apply = [&](const char* key, const std::string& v) {
    if (!v.empty()) cfg.set(key, v);
  };
  for (const auto& kv : f.set) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) fail(ErrorKind::InvalidArgument, "--set expects key=value");
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  apply("N", f.n);
  apply("precision_bits", f.precision_bits);
  apply("theta", f.theta);
  apply("z0", f.z0);
  apply("grid_preset", f.preset);
  apply("grid", f.grid);
  apply("format", f.format);
  apply("out", f.out);
  apply("strategy", f.strategy);
  cfg.validate();
  return cfg;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) fail(ErrorKind::Io, "cannot write '" + cfg.out_path + "'");
  out << text;
  if (!out) fail(ErrorKind::Io, "write to '" + cfg.out_path + "' failed");
}

/// Checks the genuine poles nearest z0 against direct integration of the ODE.
bool verify_with_ode(const PoleRun& run, double tol, std::ostream& log) {
  testing::OdeState start{run.seed.z0, run.seed.c0, run.seed.c1};
  bool ok = true;
  int checked = 0;
  log << "ode check (tolerance " << tol << ")\n";
  for (const auto& r : run.reports) {
    if (r.classification != PoleClass::Genuine) continue;
    if (checked++ == 5) break;
    const Complex p = testing::ode_locate_pole(start, r.location);
    const double d = static_cast<double>(abs(p - r.location));
    const bool good = d < tol;
    ok = ok && good;
    log << "  pade " << r.location.to_double() << "  ode " << p.to_double() << "  |diff| " << d
        << (good ? "  ok" : "  MISMATCH") << "\n";
  }
  if (checked == 0) {
    log << "  no genuine poles to check\n";
    ok = false;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ei-sum resummation of the Painlevé I asymptotic series"};
  app.require_subcommand(1);

  int order = 30;
  auto* coeffs = app.add_subcommand("coeffs", "exact asymptotic coefficients of h as JSON");
  coeffs->add_option("--order", order, "highest power of 1/x");
  std::string coeffs_out;
  coeffs->add_option("--out", coeffs_out, "output path (default stdout)");

  CommonFlags summate_f, grid_f, poles_f, greens_f, ei_f;
  auto* summate = app.add_subcommand("summate", "build the Ei-sum: poles/residues JSON and a summary");
  add_common(summate, summate_f);

  auto* grid = app.add_subcommand("residual-grid", "log10 |ODE residual| of the Ei-sum on a grid");
  add_common(grid, grid_f);

  auto* poles = app.add_subcommand("poles", "tritronquee poles from a Padé approximant at z0");
  add_common(poles, poles_f);
  bool verify_ode = false, self_test = false;
  double ode_tol = 1e-3;
  std::string pole_order;
  poles->add_flag("--verify-ode", verify_ode, "cross-check genuine poles by ODE integration");
  poles->add_option("--ode-tol", ode_tol, "tolerance for --verify-ode");
  poles->add_flag("--self-test", self_test, "run on 1/(z-2) instead");
  poles->add_option("--pole-order", pole_order, "half-order of the z-plane Padé");

  auto* greens = app.add_subcommand("greens", "conformal map psi and Green's rate G");
  add_common(greens, greens_f);
  std::string w_text, eps_text = "1/100";
  std::optional<int> rate_n, rate_m;
  greens->add_option("--w", w_text, "single Borel-plane point (default: the grid)");
  greens->add_option("--rate-n", rate_n, "n in (G + eps)^(n+m); default N");
  greens->add_option("--rate-m", rate_m, "m in (G + eps)^(n+m); default N");
  greens->add_option("--eps", eps_text, "eps in (G + eps)^(n+m)");

  auto* ei = app.add_subcommand("ei-eval", "evaluate Ei+ and e^{-x} Ei+");
  add_common(ei, ei_f);
  std::string x_text, method = "oracle";
  int winding = 0;
  ei->add_option("--x", x_text, "point, e.g. 3+2i")->required();
  ei->add_option("--winding", winding, "sheet of the logarithm");
  ei->add_option("--method", method, "oracle or dyadic")->check(CLI::IsMember({"oracle", "dyadic"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code(ErrorKind::InvalidArgument);
  }

  try {
    if (*coeffs) {
      RunConfig cfg;
      cfg.out_path = coeffs_out;
      emit(cfg, cmd_coeffs(order));
    } else if (*summate) {
      const RunConfig cfg = resolve(summate_f);
      const auto out = cmd_summate(cfg);
      emit(cfg, out.poles_json);
      (cfg.out_path.empty() ? std::cerr : std::cout) << out.summary;
    } else if (*grid) {
      const RunConfig cfg = resolve(grid_f);
      emit(cfg, cmd_residual_grid(cfg));
    } else if (*poles) {
      if (!pole_order.empty()) poles_f.set.push_back("pole_order=" + pole_order);
      const RunConfig cfg = resolve(poles_f);
      if (self_test) {
        emit(cfg, format_poles(pole_self_test(), cfg.format));
        return 0;
      }
      const auto run = run_pole_search(cfg);
      emit(cfg, format_poles(run.reports, cfg.format));
      if (verify_ode && !verify_with_ode(run, ode_tol, std::cerr)) return kVerifyMismatch;
    } else if (*greens) {
      const RunConfig cfg = resolve(greens_f);
      GreensRequest req;
      if (!w_text.empty()) req.w = parse_gaussian(w_text);
      req.n = rate_n.value_or(cfg.N);
      req.m = rate_m.value_or(cfg.N);
      req.eps = parse_rational(eps_text);
      emit(cfg, cmd_greens(cfg, req));
    } else if (*ei) {
      const RunConfig cfg = resolve(ei_f);
      emit(cfg, cmd_ei_eval(cfg, parse_gaussian(x_text), winding,
                            method == "dyadic" ? EiMethod::Dyadic : EiMethod::Oracle));
    }
  } catch (const Error& e) {
    std::cerr << "eisum: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}
