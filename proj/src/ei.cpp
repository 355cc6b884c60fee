#include "eisum/ei.hpp"

#include "eisum/error.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace eisum {

namespace bmp = boost::multiprecision;
using cd = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

int guard_bits_for(double modulus) {
  return 64 + static_cast<int>(std::ceil(modulus * 1.4426950408889634));
}

/// -Ein(-x) = sum_{k>=1} x^k / (k k!), summed to the working precision.
Complex minus_ein_neg(const Complex& x) {
  const unsigned wp = working_precision_bits();
  const Real eps2 = bmp::ldexp(Real(1), -2 * static_cast<int>(wp) - 4);
  const double ax = static_cast<double>(abs(x));
  Complex sum;
  Complex p = x;  // x^k / k!
  for (int k = 1;; ++k) {
    Complex term = p / Real(k);
    sum += term;
    // Past k > 2|x| the terms shrink at least geometrically with ratio 1/2,
    // so the tail is below twice the last term.
    if (k > 2 * ax + 2 && norm(term) * 4 <= eps2 * norm(sum)) break;
    if (sum.is_zero() && k > 2 * ax + 2) break;
    p = p * x / Real(k + 1);
  }
  return sum;
}

Real lifted_arg_winding0(const Complex& x) {
  // arg x in (-pi/2, 3pi/2].
  Real a = arg(x);
  const Real half_pi = real_pi() / 2;
  if (a <= -half_pi) a += 2 * real_pi();
  return a;
}

double normalize_angle(double a) {
  // into (-pi, pi]
  a = std::remainder(a, 2 * kPi);
  if (a <= -kPi) a += 2 * kPi;
  return a;
}

}  // namespace

Complex pochhammer(const Complex& x, int k) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "Pochhammer index must be non-negative");
  Complex acc(1);
  for (int i = 0; i < k; ++i) acc *= x + Complex(i);
  return acc;
}

Complex ei_oracle(const Complex& x, int branch_winding, const EiOracleOptions& options) {
  if (x.is_zero()) fail(ErrorKind::Domain, "Ei+ is singular at 0");
  const double ax = static_cast<double>(abs(x));
  if (ax > options.cutoff)
    fail(ErrorKind::UseAsymptoticPath,
         "|x| = " + std::to_string(ax) + " exceeds the Ein series cutoff " +
             std::to_string(options.cutoff));
  const unsigned bits = working_precision_bits();
  Complex value;
  {
    PrecisionScope wp(bits + static_cast<unsigned>(guard_bits_for(ax)));
    const Complex xs = rebase(x);
    const Real pi = real_pi();
    value = minus_ein_neg(xs);
    value.re += real_euler_gamma() + bmp::log(abs(xs));
    value.im += lifted_arg_winding0(xs) - pi + 2 * pi * branch_winding;
  }
  return rebase(value);
}

std::optional<Complex> scaled_e1_continued_fraction(const Complex& w) {
  // e^w E1(w) = 1/(w+1 - 1/(w+3 - 4/(w+5 - 9/(w+7 - ...)))), modified Lentz.
  const unsigned wp = working_precision_bits();
  const Real eps = bmp::ldexp(Real(1), -static_cast<int>(wp) + 2);
  const Real tiny = bmp::ldexp(Real(1), -static_cast<int>(4 * wp));
  Complex f(tiny, Real(0));
  Complex c = f;
  Complex d;
  for (int k = 1; k <= 20000; ++k) {
    const Complex a = k == 1 ? Complex(1) : Complex(Real(-(k - 1)) * Real(k - 1), Real(0));
    const Complex b = w + Complex(2 * k - 1);
    d = b + a * d;
    if (d.is_zero()) d = Complex(tiny, Real(0));
    c = b + a / c;
    if (c.is_zero()) c = Complex(tiny, Real(0));
    d = Complex(1) / d;
    const Complex delta = c * d;
    f *= delta;
    if (abs(delta - Complex(1)) < eps) return f;
  }
  return std::nullopt;
}

int kernel_winding(const Complex& z, const Real& phi_in) {
  const double phi = normalize_angle(static_cast<double>(phi_in));
  const double a = std::atan2(static_cast<double>(z.im), static_cast<double>(z.re));
  // Lift arg z into (-phi - pi/2, -phi + pi/2).
  const double alpha = a + 2 * kPi * std::round((-phi - a) / (2 * kPi));
  const double big_l = alpha + (phi > 0 ? kPi : -kPi);
  double a0 = a;
  if (a0 <= -kPi / 2) a0 += 2 * kPi;
  return static_cast<int>(std::lround((big_l - a0 + kPi) / (2 * kPi)));
}

Complex laplace_kernel(const Complex& z, const Real& phi, const EiOracleOptions& options) {
  const double ph = normalize_angle(static_cast<double>(phi));
  if (ph == 0.0)
    fail(ErrorKind::InvalidArgument, "Laplace ray through the pole at q = 1");
  if (z.is_zero()) fail(ErrorKind::Domain, "Laplace kernel is singular at z = 0");
  const Complex rot = z * polar(Real(1), phi);
  if (rot.re <= 0) fail(ErrorKind::Domain, "point outside the half-plane of the Laplace ray");

  const int w = kernel_winding(z, phi);
  const double az = static_cast<double>(abs(z));
  if (az <= options.cutoff) return exp(-z) * ei_oracle(z, w, options);

  // Large |z|: F = -g(-z) + 2 pi i j e^{-z}, g(w) = e^w E1(w), where j counts
  // the sheets between the principal log of -z and the lifted argument.
  {
    const unsigned bits = working_precision_bits();
    Complex value;
    bool ok = false;
    {
      PrecisionScope wp(bits + 32);
      const Complex zs = rebase(z);
      if (auto g = scaled_e1_continued_fraction(-zs)) {
        const double a = std::atan2(static_cast<double>(zs.im), static_cast<double>(zs.re));
        const double alpha = a + 2 * kPi * std::round((-ph - a) / (2 * kPi));
        const double big_l = alpha + (ph > 0 ? kPi : -kPi);
        const double arg_neg = static_cast<double>(arg(-zs));
        const long j = std::lround((big_l - arg_neg) / (2 * kPi));
        value = -*g;
        if (j != 0) value += Complex(Real(0), 2 * real_pi() * Real(j)) * exp(-zs);
        ok = true;
      }
    }
    if (ok) return rebase(value);
  }
  EiOracleOptions unbounded = options;
  unbounded.cutoff = std::numeric_limits<double>::infinity();
  return exp(-z) * ei_oracle(z, w, unbounded);
}

// ---------------------------------------------------------------------------

const char* to_string(EiRegion region) noexcept {
  switch (region) {
    case EiRegion::RealPartPositive: return "re_x_over_beta_positive";
    case EiRegion::ImagPartPositive: return "im_x_over_beta_positive";
    case EiRegion::ImagPartNegative: return "im_x_over_beta_negative";
    case EiRegion::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

double default_region_c(const Complex& x) {
  const double re = static_cast<double>(x.re), im = static_cast<double>(x.im);
  const double dist = im >= 0 ? std::hypot(re, im) : std::abs(re);
  return std::min(1.0, dist / 2) / 2;
}

std::optional<Real> rn_bound(const Complex& x, int bigN, double c, double c0, EiRegion& region) {
  // With beta = pi i:  Re(x/beta) = Im x / pi,  Im(x/beta) = -Re x / pi.
  const Real pi = real_pi();
  const Real u = x.im / pi;
  const Real v = -x.re / pi;
  const Real scale = Real(c0) * bmp::ldexp(Real(1), bigN - 1);
  if (u > c) {
    region = EiRegion::RealPartPositive;
    return Real(1) / (scale * u);
  }
  if (v > c) {
    region = EiRegion::ImagPartPositive;
    return Real(1) / (scale * v);
  }
  if (v < -c) {
    region = EiRegion::ImagPartNegative;
    return Real(1) / (scale * -v);
  }
  region = EiRegion::Indeterminate;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// rho_tail works in double precision on logarithms of term moduli; only an
// upper bound is needed and the terms span far more than the double range.

namespace {

double log_abs_sin_pi(cd w) {
  const double a = w.real(), b = w.imag();
  if (std::abs(kPi * b) > 30) return kPi * std::abs(b) - std::log(2.0);
  const double s = std::sin(kPi * a), sh = std::sinh(kPi * b);
  return 0.5 * std::log(s * s + sh * sh);
}

/// log |Gamma(w)|.
double log_abs_gamma(cd w) {
  if (w.real() < 0.5) {
    const double ls = log_abs_sin_pi(w);
    if (!std::isfinite(ls)) return std::numeric_limits<double>::infinity();
    return std::log(kPi) - ls - log_abs_gamma(1.0 - w);
  }
  double acc = 0;
  while (w.real() < 15) {
    acc -= std::log(std::abs(w));
    w += 1.0;
  }
  static const double b[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66,
                             -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
  cd s = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2 * kPi);
  cd wp = w;
  const cd w2 = w * w;
  for (int j = 1; j <= 8; ++j) {
    s += b[j - 1] / (2.0 * j * (2.0 * j - 1) * wp);
    wp *= w2;
  }
  return acc + s.real();
}

/// log of |z|^k k! / |(x)_{k+1}|.
double log_term(double log_az, cd x, long long k) {
  const double kk = static_cast<double>(k);
  return kk * log_az + std::lgamma(kk + 1) - log_abs_gamma(x + kk + 1.0) + log_abs_gamma(x);
}

double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

}  // namespace

Real rho_tail(const Complex& z, const Complex& x, int n) {
  const cd zd = z.to_double();
  const cd xd = x.to_double();
  const double az = std::abs(zd);
  if (az >= 1) fail(ErrorKind::InvalidArgument, "rho_tail needs |z| < 1");
  if (az == 0) return Real(0);
  const long long k0 = std::max(0, n + 1);
  const double log_az = std::log(az);

  // For s = k+1, t_{k+1}/t_k = |z| s / |x + s|. The ratio is at most
  // r = (1+|z|)/2 once (1-rho^2) s^2 + 2 Re(x) s + |x|^2 >= 0, rho = |z|/r.
  const double r = (1 + az) / 2;
  const double rho = az / r;
  const double a = 1 - rho * rho;
  const double re = xd.real();
  const double ax2 = std::norm(xd);
  const double disc = re * re - a * ax2;
  const double s_plus = disc < 0 ? -1e300 : (-re + std::sqrt(disc)) / a;
  long long kstar = k0;
  if (s_plus - 1 > static_cast<double>(k0)) {
    if (s_plus > 1e15)
      fail(ErrorKind::BoundUnavailable, "term ratio of the remainder series never settles below 1");
    kstar = static_cast<long long>(std::ceil(s_plus - 1));
  }

  double total = -std::numeric_limits<double>::infinity();
  const long long count = kstar - k0;
  constexpr long long kExplicit = 4096;
  if (count <= kExplicit) {
    double lt = log_term(log_az, xd, k0);
    for (long long k = k0; k < kstar; ++k) {
      total = log_add(total, lt);
      const double den = std::abs(xd + static_cast<double>(k + 1));
      if (den == 0) fail(ErrorKind::BoundUnavailable, "remainder series hits a pole");
      lt += std::log(az * static_cast<double>(k + 1) / den);
    }
  } else {
    // Terms fall, then rise while s in (s1, s2), then fall; the largest term
    // of the range sits at an endpoint or next to s2.
    const double a1 = 1 - az * az;
    const double d1 = re * re - a1 * ax2;
    const double s2 = d1 < 0 ? 0 : (-re + std::sqrt(d1)) / a1;
    double peak = std::max(log_term(log_az, xd, k0), log_term(log_az, xd, kstar - 1));
    const long long c = static_cast<long long>(std::floor(s2));
    for (long long k = c - 2; k <= c + 2; ++k)
      if (k >= k0 && k < kstar) peak = std::max(peak, log_term(log_az, xd, k));
    total = std::log(static_cast<double>(count)) + peak;
  }
  const double tail = log_term(log_az, xd, kstar) - std::log(1 - r);
  total = log_add(total, tail);
  if (!std::isfinite(total))
    fail(ErrorKind::BoundUnavailable, "remainder series hits a pole of the Pochhammer symbol");
  total += std::log(std::abs(1.0 - zd)) + 1e-6;
  return bmp::exp(Real(total));
}

// ---------------------------------------------------------------------------

namespace {

/// (1-z) sum_{j=0}^{len-1} z^j j! / (Y)_{j+1}.
Complex dyadic_block(const Complex& z, const Complex& y, int len) {
  Complex term = Complex(1) / y;  // j = 0
  Complex sum;
  for (int j = 0; j < len; ++j) {
    sum += term;
    term = term * z * Real(j + 1) / (y + Complex(j + 1));
  }
  return (Complex(1) - z) * sum;
}

}  // namespace

EiEvaluation ei_dyadic(const Complex& x, const DyadicTruncation& trunc,
                       const EiDyadicOptions& options) {
  if (trunc.n < 1 || trunc.ell < 1 || trunc.bigN < 1)
    fail(ErrorKind::InvalidArgument, "dyadic truncation needs n, ell, bigN >= 1");
  const unsigned bits = working_precision_bits();
  const Real pi = real_pi();
  if (trunc.beta) {
    if (trunc.beta->is_zero()) fail(ErrorKind::InvalidArgument, "beta must be nonzero");
    const Complex d = *trunc.beta - Complex(Real(0), pi);
    if (abs(d) > bmp::ldexp(Real(1), -static_cast<int>(bits) / 2))
      fail(ErrorKind::InvalidArgument, "only beta = pi i is supported for evaluation");
  }
  if (x.is_zero()) fail(ErrorKind::OnCut, "x = 0 lies on the cut");
  const Real tol = bmp::ldexp(Real(1), -static_cast<int>(bits) / 2) * std::max(Real(1), abs(x));
  if (x.im <= 0 && bmp::abs(x.re) <= tol)
    fail(ErrorKind::OnCut, "x lies on the cut -i[0, inf)");

  EiEvaluation out;
  const double c = options.c ? *options.c : default_region_c(x);
  out.rn_bound = rn_bound(x, trunc.bigN, c, options.c0, out.region);
  if (!out.rn_bound && options.require_bound)
    fail(ErrorKind::NoValidContour, "x lies in none of the remainder regions for c = " +
                                        std::to_string(c));

  Complex value;
  Real tails = 0;
  {
    PrecisionScope wp(bits + 32);
    const Complex y = rebase(x) / Complex(Real(0), real_pi());
    const Complex half(Real(1) / 2, Real(0));
    value = -dyadic_block(half, y, trunc.n);
    tails += rho_tail(half, y, trunc.n - 1);
    for (int k = 1; k < trunc.bigN; ++k) {
      const Complex ek = polar(Real(1), real_pi() / bmp::ldexp(Real(1), k));
      const Complex zk = ek / (Complex(1) + ek);
      const Complex yk = y * bmp::ldexp(Real(1), k);
      value += dyadic_block(zk, yk, trunc.ell);
      tails += rho_tail(zk, yk, trunc.ell - 1);
    }
  }
  out.value = rebase(value);
  out.block_tail_bound = rebase(tails);
  if (out.rn_bound) out.remainder_bound = out.block_tail_bound + *out.rn_bound;
  return out;
}

}  // namespace eisum
