#include "eisum/stahl.hpp"

#include "eisum/error.hpp"

namespace eisum {

namespace bmp = boost::multiprecision;

Complex psi(const Complex& w) {
  if (w.re == 0 && bmp::abs(w.im) >= 1)
    fail(ErrorKind::OnCut, "w = " + to_decimal(w.im) + "i lies on the slit {it : |t| >= 1}");
  const Complex s = sqrt(Complex(1) + w * w);
  return Complex(Real(0), Real(-1)) * w / (Complex(1) + s);
}

Real green_rate(const Complex& w) { return abs(psi(w)); }

Real CapacityRate::predicted_rate(int n, int m) const { return bmp::pow(G, n + m); }

CapacityRate capacity_rate(const Complex& w) {
  CapacityRate r;
  r.w = w;
  r.psi = psi(w);
  r.G = abs(r.psi);
  return r;
}

ErrorRateReport error_rate_report(const Complex& w, int n, int m, const Real& eps) {
  if (eps <= 0) fail(ErrorKind::InvalidArgument, "eps must be positive");
  if (n < 0 || m < 0) fail(ErrorKind::InvalidArgument, "orders must be non-negative");
  const Real base = green_rate(w) + eps;
  return {bmp::pow(base, n + m), base >= 1};
}

}  // namespace eisum
