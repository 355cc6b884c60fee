#pragma once

#include "eisum/exact_series.hpp"
#include "eisum/numeric.hpp"
#include "eisum/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eisum {

/// [n/m] approximant P/Q in the local variable t = z - base_point, with
/// Q(0) = 1. `m` is the denominator order actually used; it can be smaller
/// than the requested order when the linear system was singular.
template <class T>
struct PadeApproximant {
  Polynomial<T> numerator;
  Polynomial<T> denominator;
  int n = 0;
  int m = 0;
  int requested_m = 0;
  /// Number of times m was reduced because of a singular system.
  int reductions = 0;
  GaussianRational base_point;
};

using RealPade = PadeApproximant<Rational>;
using ComplexPade = PadeApproximant<GaussianRational>;

struct PadeOptions {
  /// Upper bound on order reductions before giving up; unset means down to
  /// m = 0.
  std::optional<int> max_reductions;
};

/// Solves the order conditions for [n/m] from the Maclaurin coefficients
/// f_0, f_1, ... of the function about base_point. Needs n + m + 1
/// coefficients.
template <class T>
PadeApproximant<T> build_pade(const std::vector<T>& coeffs, int n, int m,
                              const GaussianRational& base_point = {},
                              const PadeOptions& options = {});

/// Padé approximant of a Borel-plane series about p = 0.
RealPade build_pade(const RationalSeries& series, int n, int m, const PadeOptions& options = {});

/// Exact Maclaurin coefficients of P/Q about the base point.
template <class T>
std::vector<T> maclaurin(const PadeApproximant<T>& pade, int count);

/// 512 bits, raised to 8*degree + 128 for large degrees.
int default_root_precision(int degree);

/// All roots of Q, located in the z-plane (base point added back), sorted by
/// modulus and then by argument. Aberth-Ehrlich iteration: a coarse phase at
/// low precision, then polishing until every root satisfies
///   |Q(r)| <= 2^{-precision_bits+8} * sum_j |q_j| |r - z0|^j.
template <class T>
std::vector<Complex> denominator_roots(const PadeApproximant<T>& pade, int precision_bits);

/// Same algorithm on an arbitrary complex polynomial (coefficients lowest
/// degree first) at the current working precision.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, int precision_bits);

struct PoleResidue {
  Complex pole;
  Complex residue;
};

/// P/Q = S(t) + sum_k c_k / (z - p_k).
struct PoleResidueSet {
  std::vector<PoleResidue> entries;
  /// Coefficients of the polynomial part S in powers of t = z - base_point.
  std::vector<Complex> polynomial_part;
  int n = 0;
  int m = 0;
  int precision_bits = 0;
  /// max_k |Q(p_k)|.
  Real root_residual_bound;
  /// Largest relative mismatch between the Maclaurin coefficients of the
  /// pole/residue form and those of P/Q through order n + m.
  Real reconstruction_error;
  GaussianRational base_point;
};

template <class T>
PoleResidueSet partial_fractions(const PadeApproximant<T>& pade, int precision_bits);

std::string to_json(const PoleResidueSet& set);
PoleResidueSet pole_set_from_json(const std::string& text);

}  // namespace eisum
