#pragma once

#include "eisum/numeric.hpp"

#include <string>
#include <vector>

namespace eisum {

enum class SeriesKind {
  /// Index k multiplies x^{-(k+1)}.
  AsymptoticInverseX,
  /// Index k multiplies p^k.
  BorelMaclaurin,
};

/// Truncated power series with exact rational coefficients, stored densely
/// from index `offset` on. Zero coefficients inside the range are explicit.
struct RationalSeries {
  SeriesKind kind = SeriesKind::AsymptoticInverseX;
  int offset = 0;
  std::vector<Rational> coeffs;

  /// Coefficient at absolute index k; zero outside the stored range.
  Rational at(int k) const;
  /// One past the last stored index.
  int end_index() const { return offset + static_cast<int>(coeffs.size()); }

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

/// Formal solution h = sum_k a_k x^{-(k+1)} of
///   h'' + h'/x + h - 4/(25x^2) + h^2/2 - 4h/(25x^2) = 0
/// decaying at infinity, for indices k = 1 .. order, i.e. through the
/// x^{-(order+1)} term. The first nonzero term is 4/25 x^{-2}, so the result
/// has offset 1. Requires order >= 2.
RationalSeries generate_h_coefficients(int order);

/// a_k x^{-(k+1)}  ->  a_k p^k / k!.
RationalSeries borel_transform(const RationalSeries& series);

std::string to_json(const RationalSeries& series);
RationalSeries series_from_json(const std::string& text);

}  // namespace eisum
