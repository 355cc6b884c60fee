#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eisum/ei.hpp"
#include "eisum/error.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <random>

using namespace eisum;
using cd = std::complex<double>;

namespace {

/// Ramanujan's series for the real exponential integral, x > 0.
Real ramanujan_ei(const Real& x) {
  Real outer = 0, inner = 0, term = 1;
  for (int n = 1; n < 400; ++n) {
    term *= x / n;  // x^n / n!
    if ((n - 1) % 2 == 0) inner += Real(1) / (n - 1 + 1);  // adds 1/(2k+1) when n = 2k+1
    const Real t = term / boost::multiprecision::ldexp(Real(1), n - 1) * inner;
    outer += (n % 2 == 1) ? t : Real(-t);
  }
  return real_euler_gamma() + boost::multiprecision::log(x) + boost::multiprecision::exp(x / 2) * outer;
}

/// Composite Simpson on [0, b] with `n` (even) panels.
cd simpson(const std::function<cd(double)>& f, double b, int n) {
  const double h = b / n;
  cd s = f(0) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0;
}

/// F(z, phi) by quadrature along q = s e^{i phi}.
cd kernel_by_quadrature(cd z, double phi) {
  const cd dir = std::polar(1.0, phi);
  return simpson([&](double s) { return std::exp(-s * dir * z) / (1.0 - s * dir) * dir; }, 60.0 / std::real(dir * z),
                 200000);
}

}  // namespace

TEST_CASE("Pochhammer symbol") {
  PrecisionScope scope(128);
  CHECK(pochhammer(Complex(1), 0) == Complex(1));
  CHECK(pochhammer(Complex(1), 5) == Complex(120));
  CHECK(pochhammer(Complex(Real(1) / 2), 2) == Complex(Real(3) / 4));
}

TEST_CASE("Ei+(1) is Ei(1) - i pi") {
  PrecisionScope scope(256);
  const Complex v = ei_oracle(Complex(1), 0);
  CHECK(abs(v.re - ramanujan_ei(Real(1))) < Real("1e-70"));
  CHECK(abs(v.im + real_pi()) < Real("1e-70"));
  CHECK(std::abs(v.re.convert_to<double>() - 1.8951178163559368) < 1e-15);
  for (double x : {0.25, 3.5, 17.0}) {
    const Complex w = ei_oracle(Complex(Real(x)), 0);
    CHECK(abs(w.re - ramanujan_ei(Real(x))) < Real("1e-60") * (1 + abs(w.re)));
  }
}

TEST_CASE("e^{-x} Ei+(x) at x = -5 against quadrature") {
  PrecisionScope scope(256);
  const Complex v = exp(Complex(5)) * ei_oracle(Complex(Real(-5)), 0);
  const double q = std::real(simpson([](double p) { return cd(std::exp(-5 * p) / (1 + p)); }, 30.0, 60000));
  CHECK(std::abs(v.re.convert_to<double>() + q) < 1e-10);
  CHECK(abs(v.im) < Real("1e-70"));
  CHECK(std::abs(ei_oracle(Complex(Real(-5)), 0).re.convert_to<double>() + 0.0011482955912753257) < 1e-15);
}

TEST_CASE("monodromy adds exactly 2 pi i per winding") {
  PrecisionScope scope(256);
  for (const Complex& x : {Complex(Real(2), Real(1)), Complex(Real(-3), Real(0.5)), Complex(Real(0.1), Real(-4))}) {
    for (int w = -2; w <= 1; ++w) {
      const Complex d = ei_oracle(x, w + 1) - ei_oracle(x, w);
      CHECK(abs(d.re) < Real("1e-70"));
      CHECK(abs(d.im - 2 * real_pi()) < Real("1e-70"));
    }
  }
}

TEST_CASE("oracle refuses large arguments and the origin") {
  PrecisionScope scope(128);
  try {
    ei_oracle(Complex(Real(61)), 0);
    FAIL("expected use-asymptotic-path");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UseAsymptoticPath);
  }
  CHECK_THROWS_AS(ei_oracle(Complex(), 0), Error);
}

TEST_CASE("Laplace kernel against quadrature along the ray") {
  PrecisionScope scope(256);
  struct Case {
    cd z;
    double phi;
  };
  for (const Case& c : {Case{{-2, 0}, M_PI}, Case{{1, 1}, -M_PI / 4}, Case{{3, -2}, 0.4}, Case{{-1, 2}, -2.0},
                        Case{{0.5, 0.1}, 1.2}}) {
    const cd v = laplace_kernel(from_double(c.z), Real(c.phi)).to_double();
    const cd q = kernel_by_quadrature(c.z, c.phi);
    CHECK(std::abs(v - q) < 1e-9 * (1 + std::abs(q)));
  }
}

TEST_CASE("continued fraction and series agree above the cutoff") {
  PrecisionScope scope(256);
  EiOracleOptions series_only;
  series_only.cutoff = 200;
  for (const cd z : {cd(70, 5), cd(-65, 20), cd(10, 68), cd(-40, -60)}) {
    for (double phi : {-1.0, 0.7}) {
      const Complex zz = from_double(z);
      if (zz.re * std::cos(phi) - zz.im * std::sin(phi) <= 0) continue;
      const Complex a = laplace_kernel(zz, Real(phi));
      const Complex b = laplace_kernel(zz, Real(phi), series_only);
      CHECK(abs(a - b) < Real("1e-60") * (1 + abs(b)));
    }
  }
  CHECK(!scaled_e1_continued_fraction(Complex(Real(-5), Real(0))));
}

TEST_CASE("dyadic expansion at 3+2i is within its remainder bound") {
  PrecisionScope scope(256);
  const Complex x(Real(3), Real(2));
  const auto ev = ei_dyadic(x, DyadicTruncation{40, 40, 20, {}});
  REQUIRE(ev.remainder_bound);
  const Complex ref = exp(-x) * ei_oracle(x, 0);
  CHECK(abs(ev.value - ref) <= *ev.remainder_bound);
  CHECK(ev.region != EiRegion::Indeterminate);
}

TEST_CASE("dyadic conformance on a random sample") {
  PrecisionScope scope(192);
  std::mt19937 rng(20240611);
  std::uniform_real_distribution<double> lr(std::log(0.5), std::log(50.0));
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  int determinate = 0;
  for (int i = 0; i < 100; ++i) {
    double a = ang(rng);
    if (std::abs(a + M_PI / 2) < 1e-3) a += 0.01;
    const Complex x = from_double(std::polar(std::exp(lr(rng)), a));
    const auto ev = ei_dyadic(x, DyadicTruncation{}, EiDyadicOptions{1.0, std::nullopt, false});
    if (!ev.remainder_bound) continue;
    ++determinate;
    const Complex ref = exp(-x) * ei_oracle(x, 0);
    CHECK(abs(ev.value - ref) <= *ev.remainder_bound);
  }
  CHECK(determinate >= 90);
}

TEST_CASE("R_N bound at least halves per extra dyadic level where Im x > c pi") {
  PrecisionScope scope(128);
  for (const Complex& x : {Complex(Real(1), Real(5)), Complex(Real(-3), Real(10)), Complex(Real(0), Real(2))}) {
    for (int N = 5; N < 25; ++N) {
      EiRegion r1, r2;
      const auto a = rn_bound(x, N, 0.25, 1.0, r1);
      const auto b = rn_bound(x, N + 1, 0.25, 1.0, r2);
      REQUIRE(a);
      REQUIRE(b);
      CHECK(r1 == EiRegion::RealPartPositive);
      CHECK(*b <= *a / 2);
    }
  }
}

TEST_CASE("block tail decays like |x|^-(ell+1) for large x") {
  PrecisionScope scope(128);
  const int ell = 6;
  const Complex z(Real(1) / 2);
  const double x1 = 100, x2 = 10000;
  const double r1 = rho_tail(z, Complex(Real(x1), Real(1)), ell - 1).convert_to<double>();
  const double r2 = rho_tail(z, Complex(Real(x2), Real(1)), ell - 1).convert_to<double>();
  const double slope = std::log(r2 / r1) / std::log(x2 / x1);
  CHECK(slope == doctest::Approx(-(ell + 1)).epsilon(0.02));
}

TEST_CASE("dyadic argument checks") {
  PrecisionScope scope(128);
  DyadicTruncation bad_beta;
  bad_beta.beta = Complex(Real(0), Real(2));
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  CHECK(kind_of([&] { ei_dyadic(Complex(Real(1), Real(1)), bad_beta); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { ei_dyadic(Complex(Real(0), Real(-2)), DyadicTruncation{}); }) == ErrorKind::OnCut);
  CHECK(kind_of([&] { ei_dyadic(Complex(Real(0.5), Real(0.5)), DyadicTruncation{}, EiDyadicOptions{1.0, 1.0, true}); }) ==
        ErrorKind::NoValidContour);
  CHECK(kind_of([&] { ei_dyadic(Complex(Real(1)), DyadicTruncation{0, 40, 20, {}}); }) == ErrorKind::InvalidArgument);
  DyadicTruncation pi_i;
  pi_i.beta = Complex(Real(0), real_pi());
  CHECK(ei_dyadic(Complex(Real(1), Real(2)), pi_i).remainder_bound);
}
