#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eisum/error.hpp"
#include "eisum/stahl.hpp"

#include <cmath>
#include <random>

using namespace eisum;
namespace bmp = boost::multiprecision;

namespace {

Complex w_at(double re, double im) { return Complex(Real(re), Real(im)); }

bool near_cut(const Complex& w, double margin) {
  const double re = w.re.convert_to<double>(), im = w.im.convert_to<double>();
  return std::abs(re) < margin && std::abs(im) > 1 - margin;
}

/// Distance from w to the slits (-i inf, -i] and [i, i inf).
double slit_distance(double re, double im) {
  const double a = std::abs(im);
  return a >= 1 ? std::abs(re) : std::hypot(re, a - 1);
}

}  // namespace

TEST_CASE("normalisation and the value at 1") {
  PrecisionScope scope(128);
  CHECK(psi(Complex()).is_zero());
  CHECK(green_rate(Complex()) == 0);
  CHECK(abs(green_rate(Complex(1)) - (bmp::sqrt(Real(2)) - 1)) < Real(1e-30));
  // Direct evaluation of i (1 - sqrt(1 + w^2)) / w away from 0.
  for (const Complex& w : {w_at(0.3, 0.2), w_at(-2, 5), w_at(0.01, -0.7)}) {
    const Complex direct = Complex(Real(0), Real(1)) * (Complex(1) - sqrt(Complex(1) + w * w)) / w;
    CHECK(abs(direct - psi(w)) < Real(1e-30));
  }
}

TEST_CASE("points on the slits raise on-cut") {
  PrecisionScope scope(128);
  for (const Complex& w : {w_at(0, 1), w_at(0, -1), w_at(0, 2.5), w_at(0, -40)}) {
    try {
      psi(w);
      FAIL("expected on-cut");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OnCut);
    }
  }
  CHECK(green_rate(w_at(0, 0.999)) < 1);
}

TEST_CASE("|psi| tends to 1 at the slit from both sides") {
  PrecisionScope scope(128);
  for (double t : {1.001, 1.01, 1.1}) {
    for (double side : {-1e-12, 1e-12}) {
      for (double sign : {-1.0, 1.0}) {
        const Real g = green_rate(w_at(side, sign * t));
        CHECK(g <= 1);
        CHECK(g >= 1 - Real(1e-3));
      }
    }
  }
}

TEST_CASE("symmetries and range") {
  PrecisionScope scope(128);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int i = 0; i < 200; ++i) {
    const Complex w = w_at(u(rng), u(rng));
    if (near_cut(w, 1e-9)) continue;
    const Real g = green_rate(w);
    CHECK(g >= 0);
    CHECK(g < 1);
    CHECK(abs(green_rate(-w) - g) < Real(1e-30));
    CHECK(abs(green_rate(conj(w)) - g) < Real(1e-30));
  }
}

TEST_CASE("-log G is harmonic away from 0 and the slits") {
  PrecisionScope scope(128);
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-3, 3);
  const Real h("1e-3");
  int done = 0;
  while (done < 50) {
    const Complex w = w_at(u(rng), u(rng));
    // The stencil error is about h^2 / |w|^4 from the zero of psi alone, so
    // stay outside |w| = 1.5 and away from the branch points.
    const double re = w.re.convert_to<double>(), im = w.im.convert_to<double>();
    if (std::hypot(re, im) < 1.5 || slit_distance(re, im) < 0.5) continue;
    auto f = [&](const Complex& v) { return -bmp::log(green_rate(v)); };
    const Real lap = (f(w + Complex(h)) + f(w - Complex(h)) + f(w + Complex(Real(0), h)) +
                      f(w - Complex(Real(0), h)) - 4 * f(w)) /
                     (h * h);
    CHECK(abs(lap) < Real(1e-6));
    ++done;
  }
}

TEST_CASE("distinct samples map to distinct points") {
  PrecisionScope scope(128);
  std::vector<Complex> img;
  for (int i = -6; i <= 6; ++i)
    for (int j = -6; j <= 6; ++j) {
      const Complex w = w_at(0.37 * i + 0.01, 0.41 * j);
      img.push_back(psi(w));
    }
  for (std::size_t a = 0; a < img.size(); ++a)
    for (std::size_t b = a + 1; b < img.size(); ++b) CHECK(abs(img[a] - img[b]) > Real(1e-6));
}

TEST_CASE("error rate report") {
  PrecisionScope scope(128);
  const auto r = error_rate_report(Complex(1), 25, 25, Real("0.01"));
  CHECK(!r.vacuous);
  const Real expected = bmp::pow(bmp::sqrt(Real(2)) - 1 + Real("0.01"), 50);
  CHECK(abs(r.rate - expected) < Real(1e-30) * expected);
  const auto v = error_rate_report(w_at(0, 0.9999), 5, 5, Real("0.5"));
  CHECK(v.vacuous);
  CHECK(v.rate >= 1);
  const auto cap = capacity_rate(Complex(1));
  CHECK(abs(cap.predicted_rate(25, 25) - bmp::pow(bmp::sqrt(Real(2)) - 1, 50)) < Real(1e-40));
  CHECK_THROWS_AS(error_rate_report(Complex(1), 1, 1, Real(0)), Error);
}
