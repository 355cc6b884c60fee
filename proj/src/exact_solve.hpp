#pragma once

// Exact linear solves over Z and Z[i], used by the Padé construction.

#include "eisum/numeric.hpp"

#include <optional>
#include <vector>

namespace eisum::detail {

struct GaussianInteger {
  Integer re;
  Integer im;
  bool is_zero() const { return re == 0 && im == 0; }
};

template <class R>
struct RingSolution {
  /// det(A) * x, integral by Cramer's rule.
  std::vector<R> y;
  R det;
};

/// Solves the square system given as augmented rows (A | b). Returns nullopt
/// exactly when A is singular.
std::optional<RingSolution<Integer>> solve_exact(std::vector<std::vector<Integer>> rows);
std::optional<RingSolution<GaussianInteger>> solve_exact(
    std::vector<std::vector<GaussianInteger>> rows);

/// Fraction-free Bareiss elimination; the reference algorithm behind
/// solve_exact and its fallback for singular or nearly singular inputs.
std::optional<RingSolution<Integer>> solve_bareiss(std::vector<std::vector<Integer>> rows);
std::optional<RingSolution<GaussianInteger>> solve_bareiss(
    std::vector<std::vector<GaussianInteger>> rows);

}  // namespace eisum::detail
