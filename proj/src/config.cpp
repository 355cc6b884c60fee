#include "eisum/config.hpp"

#include "eisum/error.hpp"
#include "eisum/literal.hpp"

#include <fstream>
#include <sstream>

namespace eisum {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace

GridSpec RunConfig::preset_grid(const std::string& name) {
  if (name == "rhp") return {GaussianRational{Rational(1), Rational(-1)}, Rational(1, 10), 32, 32, false};
  if (name == "lhp")
    return {GaussianRational{Rational(-1), Rational(-3, 2)}, Rational(1, 10), 32, 32, true};
  fail(ErrorKind::InvalidArgument, "unknown grid preset '" + name + "' (expected rhp or lhp)");
}

GridSpec parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(trim(item));
  if (parts.size() != 4 && parts.size() != 5)
    fail(ErrorKind::InvalidArgument, "grid must be origin,step,nx,ny[,mirror]: '" + text + "'");
  GridSpec g;
  g.origin = parse_gaussian(parts[0]);
  g.step = parse_rational(parts[1]);
  g.nx = parse_int(parts[2]);
  g.ny = parse_int(parts[3]);
  if (parts.size() == 5) {
    if (parts[4] != "mirror") fail(ErrorKind::InvalidArgument, "grid flag must be 'mirror'");
    g.mirror_re = true;
  }
  return g;
}

const std::map<std::string, std::string>& config_keys() {
  static const std::map<std::string, std::string> keys{
      {"N", "Padé half-order (2N Ei terms)"},
      {"precision_bits", "working precision in bits"},
      {"theta", "Laplace direction: rational, k*pi/d, or auto"},
      {"strategy", "Ei evaluation: oracle or dyadic"},
      {"dyadic.n", "dyadic k = 0 block length"},
      {"dyadic.ell", "dyadic k >= 1 block length"},
      {"dyadic.bigN", "dyadic levels"},
      {"dyadic.c0", "constant in the R_N bound"},
      {"stokes_margin", "minimum distance of theta from a Stokes direction (rad)"},
      {"z0", "Taylor centre for the pole search"},
      {"pole_order", "half-order of the z-plane Padé"},
      {"tau", "genuine threshold relative to the median residue"},
      {"tau_prime", "spurious threshold relative to the median residue"},
      {"merge_radius", "root merging radius"},
      {"stability_tol", "genuine poles must move less than this"},
      {"grid_preset", "rhp or lhp"},
      {"grid", "origin,step,nx,ny[,mirror]"},
      {"format", "csv or json"},
      {"out", "output path"},
  };
  return keys;
}

void RunConfig::set(const std::string& key, const std::string& value_in) {
  const std::string value = trim(value_in);
  if (key == "N") N = parse_int(value);
  else if (key == "precision_bits") precision_bits = parse_int(value);
  else if (key == "theta") {
    if (value != "auto") {
      PrecisionScope scope(64);
      (void)parse_angle(value);
    }
    theta = value;
  } else if (key == "strategy") {
    if (value == "oracle") strategy = EiStrategy::Oracle;
    else if (value == "dyadic") strategy = EiStrategy::Dyadic;
    else fail(ErrorKind::InvalidArgument, "strategy must be oracle or dyadic");
  } else if (key == "dyadic.n") dyadic.n = parse_int(value);
  else if (key == "dyadic.ell") dyadic.ell = parse_int(value);
  else if (key == "dyadic.bigN") dyadic.bigN = parse_int(value);
  else if (key == "dyadic.c0") c0 = parse_rational(value);
  else if (key == "stokes_margin") stokes_margin = parse_rational(value);
  else if (key == "z0") z0 = parse_gaussian(value);
  else if (key == "pole_order") pole_order = parse_int(value);
  else if (key == "tau") tau = parse_rational(value);
  else if (key == "tau_prime") tau_prime = parse_rational(value);
  else if (key == "merge_radius") merge_radius = parse_rational(value);
  else if (key == "stability_tol") stability_tol = parse_rational(value);
  else if (key == "grid_preset") {
    grid = preset_grid(value);
    grid_preset = value;
  } else if (key == "grid") {
    grid = parse_grid(value);
    grid_preset = "custom";
  } else if (key == "format") {
    if (value == "csv") format = OutputFormat::Csv;
    else if (value == "json") format = OutputFormat::Json;
    else fail(ErrorKind::InvalidArgument, "format must be csv or json");
  } else if (key == "out") out_path = value;
  else fail(ErrorKind::InvalidArgument, "unknown config key '" + key + "'");
}

void RunConfig::validate() const {
  if (N < 1) fail(ErrorKind::InvalidArgument, "N must be at least 1");
  if (precision_bits < 64 || precision_bits > 1 << 20)
    fail(ErrorKind::InvalidArgument, "precision_bits must be in [64, 2^20]");
  if (dyadic.n < 1 || dyadic.ell < 1 || dyadic.bigN < 1)
    fail(ErrorKind::InvalidArgument, "dyadic truncation lengths must be positive");
  if (c0 <= 0) fail(ErrorKind::InvalidArgument, "dyadic.c0 must be positive");
  if (stokes_margin <= 0) fail(ErrorKind::InvalidArgument, "stokes_margin must be positive");
  if (pole_order < 3) fail(ErrorKind::InvalidArgument, "pole_order must be at least 3");
  if (tau <= 0 || tau_prime <= 0 || tau_prime > tau)
    fail(ErrorKind::InvalidArgument, "need 0 < tau_prime <= tau");
  if (merge_radius < 0 || stability_tol <= 0)
    fail(ErrorKind::InvalidArgument, "merge_radius must be >= 0 and stability_tol > 0");
  if (grid.step <= 0) fail(ErrorKind::InvalidArgument, "grid step must be positive");
  if (grid.nx < 1 || grid.ny < 1 || static_cast<long>(grid.nx) * grid.ny > kMaxGridPoints)
    fail(ErrorKind::InvalidArgument, "grid size out of range");
}

Real RunConfig::theta_value() const {
  if (theta == "auto") return grid_preset == "lhp" ? real_pi() : Real(0);
  return parse_angle(theta);
}

EiSumOptions RunConfig::sum_options() const {
  EiSumOptions o;
  o.strategy = strategy;
  o.dyadic = dyadic;
  o.dyadic_options.c0 = to_double(c0);
  o.precision_bits = precision_bits;
  o.stokes_margin = to_double(stokes_margin);
  return o;
}

PoleSearchOptions RunConfig::pole_options() const {
  PoleSearchOptions o;
  o.precision_bits = precision_bits;
  o.tau = to_double(tau);
  o.tau_prime = to_double(tau_prime);
  o.merge_radius = to_double(merge_radius);
  o.stability_tol = to_double(stability_tol);
  return o;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open config file '" + path + "'");
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::InvalidArgument, path + ":" + std::to_string(lineno) + ": expected key = value");
    try {
      cfg.set(trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const Error& e) {
      fail(e.kind(), path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  cfg.config_path = path;
  return cfg;
}

}  // namespace eisum
