#pragma once

// Number types used across the library: exact integers and rationals (GMP),
// variable-precision binary floats (MPFR) and complex numbers over both.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <string>

namespace eisum {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

/// Sets the precision (in bits) of every Real created while the scope is
/// alive. Scopes nest; the previous precision is restored on exit.
///
/// The underlying MPFR default is process-wide, so concurrent callers must
/// agree on the working precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_digits10_;
};

/// Precision in bits of a Real constructed now.
unsigned working_precision_bits();

/// Copy of x rounded to the working precision. Plain copies of a Real keep
/// the precision of their source.
Real rebase(const Real& x);

Real real_pi();
Real real_euler_gamma();
Real to_real(const Rational& q);
Real to_real(const Integer& z);
/// Exact value of the binary float.
Rational exact_rational(const Real& x);
/// Scientific-notation decimal string with enough digits to round-trip the
/// value at its own precision.
std::string to_decimal(const Real& x);
std::string to_decimal(const Rational& q);

// ---------------------------------------------------------------------------
// Complex over Real. std::complex<T> is unspecified for non-builtin T, hence
// a dedicated type.

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(implicit)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT(implicit)
  Complex(double r, double i) : re(r), im(i) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }

  bool is_zero() const { return re == 0 && im == 0; }
  std::complex<double> to_double() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
inline Complex operator/(Complex a, const Real& s) { return a /= s; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline bool operator==(const Complex& a, const Complex& b) {
  return a.re == b.re && a.im == b.im;
}

Complex conj(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real abs(const Complex& z);
/// Principal argument in (-pi, pi].
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal logarithm.
Complex log(const Complex& z);
/// Principal square root (Re >= 0).
Complex sqrt(const Complex& z);
/// Principal power z^w = exp(w log z).
Complex pow(const Complex& z, const Real& w);
Complex polar(const Real& r, const Real& theta);
Complex from_double(std::complex<double> z);
Complex rebase(const Complex& z);

// ---------------------------------------------------------------------------
// Exact complex rationals a + b i.

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(int r) : re(r), im(0) {}  // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
bool operator==(const GaussianRational& a, const GaussianRational& b);
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) {
  return !(a == b);
}

Complex to_complex(const Rational& q);
Complex to_complex(const GaussianRational& q);
GaussianRational exact_gaussian(const Complex& z);
std::string to_string(const GaussianRational& q);

}  // namespace eisum
