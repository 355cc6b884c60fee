#pragma once

// Green's function rate for the Borel-plane domain
//   Omega = C \ { i t : |t| >= 1 }
// with the conformal map psi onto the unit disk, psi(0) = 0.

#include "eisum/numeric.hpp"

namespace eisum {

/// psi(w) = i (1 - sqrt(1 + w^2)) / w, evaluated as -i w / (1 + sqrt(1 + w^2))
/// with the principal root. That form is regular at 0 and its branch cut is
/// exactly the slit pair. Points on the slits raise on-cut.
Complex psi(const Complex& w);

/// G(w) = |psi(w)|, in [0, 1) on Omega.
Real green_rate(const Complex& w);

struct CapacityRate {
  Complex w;
  Complex psi;
  Real G;
  /// G^{n+m}.
  Real predicted_rate(int n, int m) const;
};

CapacityRate capacity_rate(const Complex& w);

struct ErrorRateReport {
  Real rate;  ///< (G + eps)^{n+m}
  /// G + eps >= 1: the bound says nothing.
  bool vacuous = false;
};

ErrorRateReport error_rate_report(const Complex& w, int n, int m, const Real& eps);

}  // namespace eisum
