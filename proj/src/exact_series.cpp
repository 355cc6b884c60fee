#include "eisum/exact_series.hpp"

#include "eisum/error.hpp"

#include "json.hpp"

namespace eisum {

Rational RationalSeries::at(int k) const {
  if (k < offset || k >= end_index()) return Rational(0);
  return coeffs[static_cast<std::size_t>(k - offset)];
}

RationalSeries generate_h_coefficients(int order) {
  if (order < 2) fail(ErrorKind::InvalidArgument, "h-series order must be at least 2");

  // Write h = sum_{s>=1} b_s x^{-s}, so a_k = b_{k+1}. Since
  //   h'' + h'/x = sum_s s^2 b_s x^{-s-2},
  // the coefficient of x^{-s} in the equation reads
  //   (s-2)^2 b_{s-2} + b_s - (4/25)[s=2] + (1/2) sum_{i=1}^{s-1} b_i b_{s-i}
  //     - (4/25) b_{s-2} = 0,
  // which determines b_s from lower terms. b_1 = 0 and b_0 = 0 (decay).
  const int top = order + 1;  // highest power s computed
  std::vector<Rational> b(static_cast<std::size_t>(top + 1), Rational(0));
  const Rational four_25(4, 25);
  for (int s = 2; s <= top; ++s) {
    Rational v = (four_25 - Rational((s - 2) * (s - 2))) * b[static_cast<std::size_t>(s - 2)];
    if (s == 2) v += four_25;
    Rational conv(0);
    for (int i = 1; i < s; ++i)
      conv += b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(s - i)];
    v -= conv / 2;
    b[static_cast<std::size_t>(s)] = v;
  }

  RationalSeries out;
  out.kind = SeriesKind::AsymptoticInverseX;
  out.offset = 1;
  out.coeffs.assign(b.begin() + 2, b.end());
  return out;
}

RationalSeries borel_transform(const RationalSeries& series) {
  if (series.kind != SeriesKind::AsymptoticInverseX)
    fail(ErrorKind::InvalidArgument, "Borel transform expects an asymptotic series in 1/x");
  if (series.offset < 0) fail(ErrorKind::InvalidArgument, "negative series offset");

  RationalSeries out;
  out.kind = SeriesKind::BorelMaclaurin;
  out.offset = series.offset;
  Integer fact = 1;
  for (int k = 2; k <= series.offset; ++k) fact *= k;
  for (std::size_t i = 0; i < series.coeffs.size(); ++i) {
    const int k = series.offset + static_cast<int>(i);
    if (k > 0 && i > 0) fact *= k;
    out.coeffs.push_back(series.coeffs[i] / Rational(fact));
  }
  return out;
}

namespace {

const char* kind_name(SeriesKind k) {
  return k == SeriesKind::AsymptoticInverseX ? "asymptotic_inverse_x" : "borel_maclaurin";
}

std::string rational_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace

std::string to_json(const RationalSeries& series) {
  nlohmann::ordered_json j;
  j["kind"] = kind_name(series.kind);
  j["offset"] = series.offset;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : series.coeffs) arr.push_back(rational_string(c));
  j["coeffs"] = std::move(arr);
  return j.dump(2) + "\n";
}

RationalSeries series_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Io, std::string("malformed series JSON: ") + e.what());
  }
  RationalSeries s;
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == kind_name(SeriesKind::AsymptoticInverseX)) {
      s.kind = SeriesKind::AsymptoticInverseX;
    } else if (kind == kind_name(SeriesKind::BorelMaclaurin)) {
      s.kind = SeriesKind::BorelMaclaurin;
    } else {
      fail(ErrorKind::Io, "unknown series kind '" + kind + "'");
    }
    s.offset = j.at("offset").get<int>();
    for (const auto& c : j.at("coeffs")) s.coeffs.emplace_back(c.get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Io, std::string("malformed series JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    fail(ErrorKind::Io, std::string("bad rational in series JSON: ") + e.what());
  }
  return s;
}

}  // namespace eisum
