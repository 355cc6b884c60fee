#pragma once

// Poles of the tritronquee solution of y'' = 6 y^2 - z, found from a Padé
// approximant of its Taylor series at a point z0 where the Ei-sum is valid.
// The Ei-sum approximates h in
//   y(z) = -sqrt(z/6) (1 + h(x)),   x(z) = (24 z)^{5/4} / 30.

#include "eisum/numeric.hpp"
#include "eisum/resummation.hpp"

#include <string>
#include <vector>

namespace eisum {

struct TaylorSeed {
  Complex z0;
  Complex c0;  ///< y(z0)
  Complex c1;  ///< y'(z0)
  int order = 0;
};

/// x(z) = (24 z)^{5/4} / 30 with principal powers.
Complex boutroux_x(const Complex& z);

/// c0 = -sqrt(z0/6)(1 + h), and by the chain rule with dx/dz = (24 z)^{1/4}:
///   c1 = -(1 + h) / (2 sqrt(6 z0)) - sqrt(z0/6) h'(x) (24 z0)^{1/4}.
TaylorSeed seed_from_approximant(const EiSumApproximant& approx, const Complex& z0, int order);

/// Taylor coefficients c_0 .. c_order of y about z0 at the working precision:
/// n(n-1) c_n = 6 sum_{j=0}^{n-2} c_j c_{n-2-j} - z0 [n=2] - [n=3].
std::vector<Complex> taylor_coefficients(const TaylorSeed& seed);

enum class PoleClass { Genuine, Spurious, Borderline };

const char* to_string(PoleClass c) noexcept;

struct PoleReport {
  Complex location;
  double residue_magnitude = 0;
  PoleClass classification = PoleClass::Borderline;
  /// Distance to the nearest pole of the approximant two orders lower.
  double stability = 0;
  /// Number of denominator roots merged into this pole.
  int roots = 1;
};

struct PoleSearchOptions {
  int precision_bits = 512;
  /// Genuine needs residue magnitude >= tau * median.
  double tau = 1e-2;
  /// Spurious when residue magnitude < tau_prime * median.
  double tau_prime = 1e-6;
  /// Genuine also needs stability below this.
  double stability_tol = 1e-2;
  /// Roots closer than this are merged into one pole; a double pole of y
  /// shows up as a split pair with large opposite residues.
  double merge_radius = 0.05;
  /// Order drop for the stability re-run.
  int stability_shift = 2;
};

/// Padé [n/m] at z0 of the series with the given Taylor coefficients, then
/// root merging, residue classification and the stability re-run. Reports
/// are sorted by distance from z0.
std::vector<PoleReport> locate_poles(const std::vector<Complex>& coeffs, const Complex& z0, int n,
                                     int m, const PoleSearchOptions& options = {});

/// Merged poles of a pole/residue set: location is the |c|-weighted mean,
/// magnitude the largest |c| of the cluster.
std::vector<PoleReport> merge_poles(const PoleResidueSet& set, double radius);

std::string to_json(const std::vector<PoleReport>& reports);
std::string to_csv(const std::vector<PoleReport>& reports);

}  // namespace eisum
