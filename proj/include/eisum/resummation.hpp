#pragma once

// The Ei-sum approximant
//   f(x) = sum_k c_k L_theta{1/(p - p_k)}(x) + sum_j s_j j! / x^{j+1},
// i.e. -sum_k c_k e^{-p_k x} Ei+(p_k x) on the sheets selected by the
// Laplace direction, plus the transform of the polynomial part of P/Q.

#include "eisum/ei.hpp"
#include "eisum/numeric.hpp"
#include "eisum/pade.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eisum {

enum class EiStrategy { Oracle, Dyadic };

struct EiSumOptions {
  EiStrategy strategy = EiStrategy::Oracle;
  DyadicTruncation dyadic;
  EiDyadicOptions dyadic_options;
  int precision_bits = 512;
  /// Minimum angular distance between theta and any pole argument.
  double stokes_margin = 1e-3;
  double oracle_cutoff = 60.0;
};

struct EiSumApproximant {
  PoleResidueSet poles;
  Real theta;
  /// Neighbouring pole arguments, lifted so that theta1 < theta < theta2.
  Real theta1;
  Real theta2;
  EiSumOptions options;
};

/// Validates the direction against the pole arguments (stokes-collision)
/// and records the bracketing Stokes angles.
EiSumApproximant assemble(PoleResidueSet poles, const Real& theta, const EiSumOptions& options = {});

struct EiSumJet {
  Complex value;
  Complex d1;
  Complex d2;
  /// sum_k |c_k| * (Ei remainder bound) under the dyadic strategy.
  std::optional<Real> error_estimate;
  /// Laplace direction actually used.
  Real direction;
};

/// Value and closed-form derivatives. The Laplace ray is rotated inside
/// (theta1, theta2) towards -arg x, which continues f analytically over the
/// union of the half-planes; `direction` pins the ray instead.
EiSumJet evaluate_jet(const EiSumApproximant& approx, const Complex& x,
                      std::optional<Real> direction = std::nullopt);

Complex evaluate(const EiSumApproximant& approx, const Complex& x);
/// order 1 or 2.
Complex derivatives(const EiSumApproximant& approx, const Complex& x, int order);
/// h'' + h'/x + h - 4/(25x^2) + h^2/2 - 4h/(25x^2).
Complex h_residual(const EiSumApproximant& approx, const Complex& x);
Complex h_residual(const EiSumJet& jet, const Complex& x);

/// Points origin + step (i + j i) for i < nx, j < ny, row by row in j. With
/// mirror_re the real offsets run leftwards: origin - step i + step j i.
struct GridSpec {
  GaussianRational origin;
  Rational step;
  int nx = 0;
  int ny = 0;
  bool mirror_re = false;
};

inline constexpr long kMaxGridPoints = 1'000'000;

std::vector<GaussianRational> grid_points(const GridSpec& grid);

struct GridValue {
  GaussianRational x;
  /// log10 |residual|; absent on failure.
  std::optional<double> log10_residual;
  /// Failure reason code when log10_residual is absent.
  std::string failure;
};

std::vector<GridValue> residual_grid(const EiSumApproximant& approx, const GridSpec& grid);

}  // namespace eisum
