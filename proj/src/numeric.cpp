#include "eisum/numeric.hpp"

#include <mpfr.h>

#include <cmath>
#include <sstream>

namespace eisum {

namespace bmp = boost::multiprecision;

namespace {

unsigned digits10_for_bits(unsigned bits) {
  unsigned d = bmp::detail::digits2_2_10(bits);
  while (bmp::detail::digits10_2_2(d) < bits) ++d;
  return d == 0 ? 1 : d;
}

}  // namespace

PrecisionScope::PrecisionScope(unsigned bits)
    : saved_digits10_(Real::default_precision()) {
  Real::default_precision(digits10_for_bits(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits10_); }

unsigned working_precision_bits() {
  return static_cast<unsigned>(bmp::detail::digits10_2_2(Real::default_precision()));
}

Real rebase(const Real& x) {
  Real r;
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

Real real_pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real real_euler_gamma() {
  Real r;
  mpfr_const_euler(r.backend().data(), MPFR_RNDN);
  return r;
}

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

Real to_real(const Integer& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.backend().data(), MPFR_RNDN);
  return r;
}

Rational exact_rational(const Real& x) {
  Rational q;
  mpfr_get_q(q.backend().data(), x.backend().data());
  return q;
}

std::string to_decimal(const Real& x) {
  if (x == 0) return "0";
  // Enough decimal digits to round-trip a binary float of this precision.
  const auto prec = mpfr_get_prec(x.backend().data());
  const auto digits = static_cast<std::streamsize>(
      std::ceil(static_cast<double>(prec) * 0.30102999566398120) + 1);
  std::ostringstream os;
  os.precision(digits);
  os << std::scientific << x;
  return os.str();
}

std::string to_decimal(const Rational& q) { return to_decimal(to_real(q)); }

// ---------------------------------------------------------------------------

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  // Smith's algorithm keeps intermediate magnitudes bounded.
  if (abs(o.re) >= abs(o.im)) {
    Real t = o.im / o.re;
    Real d = o.re + o.im * t;
    Real r = (re + im * t) / d;
    im = (im - re * t) / d;
    re = std::move(r);
  } else {
    Real t = o.re / o.im;
    Real d = o.re * t + o.im;
    Real r = (re * t + im) / d;
    im = (im * t - re) / d;
    re = std::move(r);
  }
  return *this;
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }

Real arg(const Complex& z) {
  if (z.im == 0 && z.re < 0) return real_pi();
  return boost::multiprecision::atan2(z.im, z.re);
}

Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Complex log(const Complex& z) { return {boost::multiprecision::log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return {};
  Real m = abs(z);
  Real r = boost::multiprecision::sqrt((m + abs(z.re)) / 2);
  if (z.re >= 0) return {r, z.im / (2 * r)};
  Real i = z.im < 0 ? Real(-r) : r;
  return {abs(z.im) / (2 * r), i};
}

Complex pow(const Complex& z, const Real& w) {
  if (z.is_zero()) return {};
  return exp(log(z) * w);
}

Complex polar(const Real& r, const Real& theta) {
  return {r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta)};
}

Complex from_double(std::complex<double> z) { return {Real(z.real()), Real(z.imag())}; }

Complex rebase(const Complex& z) { return {rebase(z.re), rebase(z.im)}; }

// ---------------------------------------------------------------------------

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  return {a.re + b.re, a.im + b.im};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  return {a.re - b.re, a.im - b.im};
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  if (a.im == 0 && b.im == 0) return {a.re * b.re, 0};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.im == 0) return {a.re / b.re, a.im / b.re};
  Rational d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}

Complex to_complex(const Rational& q) { return {to_real(q), Real(0)}; }

Complex to_complex(const GaussianRational& q) { return {to_real(q.re), to_real(q.im)}; }

GaussianRational exact_gaussian(const Complex& z) {
  return {exact_rational(z.re), exact_rational(z.im)};
}

std::string to_string(const GaussianRational& q) {
  std::string s = q.re.str();
  if (q.im == 0) return s;
  if (q.im > 0) s += "+";
  return s + q.im.str() + "i";
}

}  // namespace eisum
