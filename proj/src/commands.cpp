#include "eisum/commands.hpp"

#include "eisum/error.hpp"
#include "eisum/exact_series.hpp"
#include "eisum/literal.hpp"
#include "eisum/stahl.hpp"

#include "json.hpp"

#include <cmath>
#include <sstream>

namespace eisum {

namespace {

using ojson = nlohmann::ordered_json;

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << (v == 0 ? 0.0 : v);
  return os.str();
}

ojson pair(const Complex& z) { return ojson::array({to_decimal(z.re), to_decimal(z.im)}); }

ojson exact_pair(const GaussianRational& z) {
  return ojson::array({format_rational(z.re), format_rational(z.im)});
}

}  // namespace

std::string cmd_coeffs(int order) { return to_json(generate_h_coefficients(order)); }

EiSumApproximant build_approximant(const RunConfig& cfg) {
  cfg.validate();
  PrecisionScope scope(static_cast<unsigned>(cfg.precision_bits));
  const auto borel = borel_transform(generate_h_coefficients(std::max(2, 2 * cfg.N)));
  const auto pade = build_pade(borel, cfg.N, cfg.N);
  auto set = partial_fractions(pade, cfg.precision_bits);
  return assemble(std::move(set), cfg.theta_value(), cfg.sum_options());
}

double imaginary_axis_fraction(const PoleResidueSet& set, double band) {
  if (set.entries.empty()) return 0;
  int near = 0;
  for (const auto& e : set.entries)
    if (std::abs(static_cast<double>(e.pole.re)) < band) ++near;
  return static_cast<double>(near) / static_cast<double>(set.entries.size());
}

SummateOutput cmd_summate(const RunConfig& cfg) {
  const auto approx = build_approximant(cfg);
  PrecisionScope scope(static_cast<unsigned>(cfg.precision_bits));
  const auto& set = approx.poles;
  std::ostringstream s;
  s << "N: " << cfg.N << "\n";
  s << "Pade orders: [" << set.n << "/" << set.m << "]\n";
  s << "poles: " << set.entries.size() << "\n";
  s << "polynomial part terms: " << set.polynomial_part.size() << "\n";
  s << "theta: " << to_decimal(approx.theta) << "\n";
  s << "Stokes angles: theta1 = " << to_decimal(approx.theta1)
    << ", theta2 = " << to_decimal(approx.theta2) << "\n";
  s << "root residual bound: " << to_decimal(set.root_residual_bound) << "\n";
  s << "reconstruction error: " << to_decimal(set.reconstruction_error) << "\n";
  s << "share of poles within 0.2 of the imaginary axis: " << num(imaginary_axis_fraction(set, 0.2))
    << "\n";
  if (!set.entries.empty()) {
    s << "smallest pole: " << num(static_cast<double>(set.entries.front().pole.re)) << " "
      << num(static_cast<double>(set.entries.front().pole.im)) << "i\n";
  }
  return {to_json(set), s.str()};
}

std::string format_residual_grid(const std::vector<GridValue>& values, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    std::string out = "re,im,log10_residual\n";
    for (const auto& v : values) {
      out += format_rational(v.x.re) + "," + format_rational(v.x.im) + ",";
      out += v.log10_residual ? num(*v.log10_residual) : "nan:" + v.failure;
      out += "\n";
    }
    return out;
  }
  auto arr = ojson::array();
  for (const auto& v : values) {
    ojson j;
    j["x"] = exact_pair(v.x);
    j["log10_residual"] = v.log10_residual ? ojson(*v.log10_residual) : ojson(nullptr);
    if (!v.log10_residual) j["failure"] = v.failure;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string cmd_residual_grid(const RunConfig& cfg) {
  const auto approx = build_approximant(cfg);
  return format_residual_grid(residual_grid(approx, cfg.grid), cfg.format);
}

PoleRun run_pole_search(const RunConfig& cfg) {
  const auto approx = build_approximant(cfg);
  PrecisionScope scope(static_cast<unsigned>(cfg.precision_bits));
  PoleRun run;
  const Complex z0 = to_complex(cfg.z0);
  run.seed = seed_from_approximant(approx, z0, 2 * cfg.pole_order);
  run.reports = locate_poles(taylor_coefficients(run.seed), z0, cfg.pole_order, cfg.pole_order,
                             cfg.pole_options());
  return run;
}

std::string format_poles(const std::vector<PoleReport>& reports, OutputFormat format) {
  return format == OutputFormat::Csv ? to_csv(reports) : to_json(reports);
}

std::vector<PoleReport> pole_self_test() {
  PrecisionScope scope(256);
  std::vector<Complex> c;
  Real scale = Real(1) / 2;
  for (int k = 0; k <= 8; ++k) {
    c.push_back(Complex(Real(-scale)));
    scale /= 2;
  }
  PoleSearchOptions opt;
  opt.precision_bits = 256;
  return locate_poles(c, Complex(), 4, 4, opt);
}

std::string cmd_greens(const RunConfig& cfg, const GreensRequest& req) {
  PrecisionScope scope(static_cast<unsigned>(cfg.precision_bits));
  std::vector<GaussianRational> pts;
  if (req.w) pts.push_back(*req.w);
  else pts = grid_points(cfg.grid);
  const Real eps = to_real(req.eps);

  const bool csv = cfg.format == OutputFormat::Csv;
  std::string out = csv ? "re,im,psi_re,psi_im,G,rate,vacuous\n" : "";
  auto arr = ojson::array();
  for (const auto& p : pts) {
    try {
      const Complex w = to_complex(p);
      const Complex ps = psi(w);
      const auto rep = error_rate_report(w, req.n, req.m, eps);
      if (csv) {
        out += format_rational(p.re) + "," + format_rational(p.im) + "," + to_decimal(ps.re) + "," +
               to_decimal(ps.im) + "," + to_decimal(abs(ps)) + "," + to_decimal(rep.rate) + "," +
               (rep.vacuous ? "true" : "false") + "\n";
      } else {
        ojson j;
        j["w"] = exact_pair(p);
        j["psi"] = pair(ps);
        j["G"] = to_decimal(abs(ps));
        j["rate"] = to_decimal(rep.rate);
        j["vacuous"] = rep.vacuous;
        arr.push_back(std::move(j));
      }
    } catch (const Error& e) {
      if (!req.w && e.kind() == ErrorKind::OnCut) {
        if (csv) out += format_rational(p.re) + "," + format_rational(p.im) + ",nan:on-cut,,,,\n";
        else arr.push_back(ojson{{"w", exact_pair(p)}, {"failure", to_string(e.kind())}});
        continue;
      }
      throw;
    }
  }
  return csv ? out : arr.dump(2) + "\n";
}

std::string cmd_ei_eval(const RunConfig& cfg, const GaussianRational& xq, int winding,
                        EiMethod method) {
  PrecisionScope scope(static_cast<unsigned>(cfg.precision_bits));
  const Complex x = to_complex(xq);
  Complex ei, scaled;
  std::optional<Real> bound;
  std::string region;
  if (method == EiMethod::Oracle) {
    ei = ei_oracle(x, winding);
    scaled = exp(-x) * ei;
  } else {
    EiDyadicOptions opt;
    opt.c0 = cfg.c0.convert_to<double>();
    const auto ev = ei_dyadic(x, cfg.dyadic, opt);
    const Complex jump = Complex(Real(0), 2 * real_pi() * Real(winding));
    scaled = ev.value + jump * exp(-x);
    ei = exp(x) * ev.value + jump;
    bound = ev.remainder_bound;
    region = to_string(ev.region);
  }
  if (cfg.format == OutputFormat::Csv) {
    std::string out = "method,ei_re,ei_im,scaled_re,scaled_im,remainder_bound,region\n";
    out += std::string(method == EiMethod::Oracle ? "oracle" : "dyadic") + "," + to_decimal(ei.re) +
           "," + to_decimal(ei.im) + "," + to_decimal(scaled.re) + "," + to_decimal(scaled.im) + "," +
           (bound ? to_decimal(*bound) : std::string()) + "," + region + "\n";
    return out;
  }
  ojson j;
  j["method"] = method == EiMethod::Oracle ? "oracle" : "dyadic";
  j["x"] = exact_pair(xq);
  j["winding"] = winding;
  j["ei"] = pair(ei);
  j["scaled"] = pair(scaled);
  if (method == EiMethod::Dyadic) {
    j["remainder_bound"] = bound ? ojson(to_decimal(*bound)) : ojson(nullptr);
    j["region"] = region;
  }
  return j.dump(2) + "\n";
}

}  // namespace eisum
