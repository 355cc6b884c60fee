#pragma once

// The exponential integral Ei+ on its logarithmic Riemann surface.
//
// Sheet convention: winding 0 is the sheet where arg x is taken in
// (-pi/2, 3pi/2], i.e. the plane cut along -i[0, inf). On that sheet
//   Ei+(x) = gamma + ln|x| + i(arg x - pi) - Ein(-x),
// which is the standard Ei(x) - i pi for x > 0 and -E1(|x|) for x < 0.
// Winding w adds 2 pi i w.

#include "eisum/numeric.hpp"

#include <optional>

namespace eisum {

/// x (x+1) ... (x+k-1); 1 for k = 0.
Complex pochhammer(const Complex& x, int k);

struct EiOracleOptions {
  /// Above this modulus the Ein series is refused (use-asymptotic-path).
  double cutoff = 60.0;
};

/// Ei+(x) on the sheet with the given winding, from the Ein power series
/// with guard bits sized to the cancellation.
Complex ei_oracle(const Complex& x, int branch_winding, const EiOracleOptions& options = {});

/// e^{w} E1(w) by continued fraction; nullopt when it fails to converge
/// (w close to the negative real axis or too small).
std::optional<Complex> scaled_e1_continued_fraction(const Complex& w);

/// F(z, phi) = int_0^{inf e^{i phi}} e^{-q z} / (1 - q) dq for phi in
/// (-pi, pi] \ {0} and Re(z e^{i phi}) > 0. This is e^{-z} Ei+(z) on the sheet
/// selected by the ray; see kernel_winding().
Complex laplace_kernel(const Complex& z, const Real& phi, const EiOracleOptions& options = {});

/// Winding of the Ei+ sheet that laplace_kernel(z, phi) evaluates.
int kernel_winding(const Complex& z, const Real& phi);

// ---------------------------------------------------------------------------
// Dyadic factorial expansion.

struct DyadicTruncation {
  int n = 40;     ///< length of the k = 0 block
  int ell = 40;   ///< length of each k >= 1 block
  int bigN = 20;  ///< number of dyadic levels
  /// Cut placement; only beta = pi i (cut along -i[0, inf)) is evaluated.
  std::optional<Complex> beta;
};

enum class EiRegion {
  /// Re(x/beta) > c, i.e. Im x > c pi.
  RealPartPositive,
  /// Im(x/beta) > c, i.e. Re x < -c pi.
  ImagPartPositive,
  /// Im(x/beta) < -c, i.e. Re x > c pi.
  ImagPartNegative,
  /// No region applies; no remainder bound is available.
  Indeterminate,
};

const char* to_string(EiRegion region) noexcept;

struct EiDyadicOptions {
  double c0 = 1.0;
  /// Region parameter; default min(1, dist(x, cut)/2)/2.
  std::optional<double> c;
  /// When false, a point outside every region is evaluated anyway and
  /// reported as Indeterminate instead of raising no-valid-contour.
  bool require_bound = true;
};

struct EiEvaluation {
  /// e^{-x} Ei+(x) on the winding-0 sheet.
  Complex value;
  /// Absent for EiRegion::Indeterminate.
  std::optional<Real> remainder_bound;
  EiRegion region = EiRegion::Indeterminate;
  /// Contributions to remainder_bound.
  Real block_tail_bound;
  std::optional<Real> rn_bound;
};

EiEvaluation ei_dyadic(const Complex& x, const DyadicTruncation& trunc,
                       const EiDyadicOptions& options = {});

/// Region parameter used when none is configured.
double default_region_c(const Complex& x);

/// The closed-form bound on R_N for beta = pi i, or nullopt outside every
/// region; also reports the region.
std::optional<Real> rn_bound(const Complex& x, int bigN, double c, double c0, EiRegion& region);

/// Upper bound on |(1-z) sum_{k>=n+1} z^k k! / (x)_{k+1}| for |z| < 1.
Real rho_tail(const Complex& z, const Complex& x, int n);

}  // namespace eisum
