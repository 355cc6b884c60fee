#include "ode_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace eisum::testing {

namespace bmp = boost::multiprecision;

namespace {

/// Taylor coefficients of y about s.z from y'' = 6 y^2 - z.
std::vector<Complex> expand(const OdeState& s, int order) {
  std::vector<Complex> a{s.y, s.dy};
  for (int n = 2; n <= order; ++n) {
    Complex conv;
    for (int j = 0; j + 2 <= n; ++j) conv += a[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(n - 2 - j)];
    Complex rhs = conv * Real(6);
    if (n == 2) rhs -= s.z;
    if (n == 3) rhs -= Complex(1);
    a.push_back(rhs / Real((n - 1) * n));
  }
  return a;
}

double radius(const std::vector<Complex>& a) {
  double r = std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(a.size()) - 1;
  for (int k = n - 5; k <= n; ++k) {
    const Real m = abs(a[static_cast<std::size_t>(k)]);
    if (m == 0) continue;
    r = std::min(r, std::exp(-static_cast<double>(bmp::log(m)) / k));
  }
  return r;
}

OdeState advance(const OdeState& s, const std::vector<Complex>& a, const Complex& h) {
  Complex y, dy;
  for (std::size_t k = a.size(); k-- > 0;) {
    y = y * h + a[k];
    if (k > 0) dy = dy * h + a[k] * Real(static_cast<int>(k));
  }
  return {s.z + h, y, dy};
}

}  // namespace

OdeState ode_integrate(const OdeState& start, const Complex& target, const OdeOptions& options) {
  PrecisionScope scope(static_cast<unsigned>(options.precision_bits));
  OdeState s{rebase(start.z), rebase(start.y), rebase(start.dy)};
  const Complex goal = rebase(target);
  for (int steps = 0; steps < 100000; ++steps) {
    const Complex rest = goal - s.z;
    const Real dist = abs(rest);
    if (dist == 0) return s;
    const auto a = expand(s, options.order);
    const double r = options.step_fraction * radius(a);
    if (dist <= r) return advance(s, a, rest);
    s = advance(s, a, rest * (Real(r) / dist));
  }
  throw std::runtime_error("ode_integrate: step budget exhausted");
}

Complex ode_locate_pole(const OdeState& start, const Complex& guess, const OdeOptions& options) {
  PrecisionScope scope(static_cast<unsigned>(options.precision_bits));
  const Complex g = rebase(guess);
  const Complex away = rebase(start.z) - g;
  const OdeState base = ode_integrate(start, g + away * (Real(options.standoff) / abs(away)), options);

  // u = 1/y about the base point; its disk reaches past the pole up to the
  // nearest zero of y.
  const auto a = expand(base, options.pole_order);
  std::vector<Complex> u{Complex(1) / a[0]};
  for (std::size_t n = 1; n < a.size(); ++n) {
    Complex acc;
    for (std::size_t k = 1; k <= n; ++k) acc += a[k] * u[n - k];
    u.push_back(-(acc / a[0]));
  }
  const Real tol = bmp::ldexp(Real(1), -options.precision_bits / 2);
  Complex t = g - base.z;
  Real last = -1;
  for (int it = 0; it < 100; ++it) {
    Complex v, dv;
    for (std::size_t k = u.size(); k-- > 0;) {
      v = v * t + u[k];
      if (k > 0) dv = dv * t + u[k] * Real(static_cast<int>(k));
    }
    // Double zero of u: Newton with multiplicity 2.
    const Complex step = v * Real(2) / dv;
    t -= step;
    // Stop at the tolerance, or once the steps stop shrinking: the double
    // zero is only resolved to about the square root of the noise in u.
    const Real size = abs(step);
    if (size < tol || (last >= 0 && size > last / 2)) return base.z + t;
    last = size;
  }
  throw std::runtime_error("ode_locate_pole: Newton did not converge");
}

}  // namespace eisum::testing
