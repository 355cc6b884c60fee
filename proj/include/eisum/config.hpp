#pragma once

// Run configuration shared by the CLI subcommands. The file format is flat
// `key = value` text, one entry per line, '#' starts a comment. Numeric
// values are exact decimal or rational strings.

#include "eisum/ei.hpp"
#include "eisum/numeric.hpp"
#include "eisum/resummation.hpp"
#include "eisum/tritronquee.hpp"

#include <map>
#include <string>

namespace eisum {

enum class OutputFormat { Csv, Json };

struct RunConfig {
  /// Padé half-order in the Borel plane; 2N Ei terms.
  int N = 25;
  int precision_bits = 512;
  /// Laplace direction: a rational, optionally times pi, or "auto" for pi
  /// with the lhp grid preset and 0 otherwise.
  std::string theta = "auto";
  EiStrategy strategy = EiStrategy::Oracle;
  DyadicTruncation dyadic;
  Rational c0 = 1;
  Rational stokes_margin = Rational(1, 1000);

  GaussianRational z0{Rational(5), Rational(1)};
  /// Half-order of the z-plane Padé.
  int pole_order = 80;
  Rational tau = Rational(1, 100);
  Rational tau_prime = Rational(1, 1000000);
  Rational merge_radius = Rational(1, 20);
  Rational stability_tol = Rational(1, 100);

  /// "rhp", "lhp" or "custom".
  std::string grid_preset = "rhp";
  GridSpec grid = preset_grid("rhp");

  OutputFormat format = OutputFormat::Csv;
  std::string out_path;
  std::string config_path;

  static GridSpec preset_grid(const std::string& name);

  /// Applies one key; unknown keys and malformed values raise
  /// invalid-argument.
  void set(const std::string& key, const std::string& value);

  /// Cross-field checks (orders, precision, grid size).
  void validate() const;

  /// theta at the working precision, with "auto" resolved.
  Real theta_value() const;
  EiSumOptions sum_options() const;
  PoleSearchOptions pole_options() const;
};

/// Keys accepted by RunConfig::set.
const std::map<std::string, std::string>& config_keys();

/// Defaults overridden by the entries of the file; raises io on read errors.
RunConfig load_config(const std::string& path);

/// Parses "origin,step,nx,ny", e.g. "1-i,1/10,32,32".
GridSpec parse_grid(const std::string& text);

}  // namespace eisum
