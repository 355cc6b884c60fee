#pragma once

// Subcommand bodies behind the eisum CLI. Each returns the text it would
// write, so outputs can be compared byte for byte.

#include "eisum/config.hpp"
#include "eisum/resummation.hpp"
#include "eisum/tritronquee.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eisum {

/// RationalSeries JSON of h through x^{-order}.
std::string cmd_coeffs(int order);

/// h series, Borel transform, [N/N] Padé, partial fractions, assembly.
EiSumApproximant build_approximant(const RunConfig& cfg);

struct SummateOutput {
  std::string poles_json;
  std::string summary;
};
SummateOutput cmd_summate(const RunConfig& cfg);

/// Share of poles within `band` of the imaginary axis.
double imaginary_axis_fraction(const PoleResidueSet& set, double band);

/// CSV `re,im,log10_residual` (failures as nan:<reason>) or JSON.
std::string cmd_residual_grid(const RunConfig& cfg);
std::string format_residual_grid(const std::vector<GridValue>& values, OutputFormat format);

struct PoleRun {
  TaylorSeed seed;
  std::vector<PoleReport> reports;
};
PoleRun run_pole_search(const RunConfig& cfg);
std::string format_poles(const std::vector<PoleReport>& reports, OutputFormat format);

/// Pole search on the Maclaurin coefficients of 1/(z - 2): one genuine pole
/// at 2 with residue 1.
std::vector<PoleReport> pole_self_test();

struct GreensRequest {
  std::optional<GaussianRational> w;  ///< single point; otherwise cfg.grid
  int n = 25;
  int m = 25;
  Rational eps = Rational(1, 100);
};
std::string cmd_greens(const RunConfig& cfg, const GreensRequest& req);

enum class EiMethod { Oracle, Dyadic };
std::string cmd_ei_eval(const RunConfig& cfg, const GaussianRational& x, int winding, EiMethod method);

}  // namespace eisum
