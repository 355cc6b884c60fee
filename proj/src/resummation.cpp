#include "eisum/resummation.hpp"

#include "eisum/error.hpp"

#include <cmath>

namespace eisum {

namespace bmp = boost::multiprecision;

namespace {

/// Angle reduced into (-pi, pi].
Real reduce_angle(const Real& a) {
  const Real two_pi = 2 * real_pi();
  Real r = a - two_pi * bmp::floor(a / two_pi);  // [0, 2pi)
  if (r > real_pi()) r -= two_pi;
  return r;
}

/// Angle reduced into (0, 2pi].
Real positive_angle(const Real& a) {
  const Real two_pi = 2 * real_pi();
  Real r = a - two_pi * bmp::floor(a / two_pi);
  if (r == 0) r = two_pi;
  return r;
}

}  // namespace

EiSumApproximant assemble(PoleResidueSet poles, const Real& theta, const EiSumOptions& options) {
  if (options.precision_bits < 32)
    fail(ErrorKind::InvalidArgument, "precision_bits must be at least 32");
  PrecisionScope scope(static_cast<unsigned>(options.precision_bits));
  EiSumApproximant out;
  out.theta = rebase(theta);
  out.options = options;

  const Real margin(options.stokes_margin);
  Real up = 2 * real_pi();
  Real down = 2 * real_pi();
  for (const auto& e : poles.entries) {
    if (e.pole.is_zero()) fail(ErrorKind::InvalidArgument, "pole at the origin");
    const Real a = arg(e.pole);
    const Real d = reduce_angle(a - out.theta);
    if (bmp::abs(d) < margin)
      fail(ErrorKind::StokesCollision,
           "direction " + to_decimal(out.theta) + " is within " + std::to_string(options.stokes_margin) +
               " rad of the Stokes direction of pole " + to_decimal(e.pole.re) + " + " +
               to_decimal(e.pole.im) + "i");
    up = std::min(up, positive_angle(a - out.theta));
    down = std::min(down, positive_angle(out.theta - a));
  }
  if (poles.entries.empty()) {
    up = real_pi();
    down = real_pi();
  }
  out.theta1 = out.theta - down;
  out.theta2 = out.theta + up;
  out.poles = std::move(poles);
  return out;
}

EiSumJet evaluate_jet(const EiSumApproximant& approx, const Complex& x_in,
                      std::optional<Real> direction) {
  const auto& opt = approx.options;
  PrecisionScope scope(static_cast<unsigned>(opt.precision_bits));
  const Complex x = rebase(x_in);
  if (x.is_zero()) fail(ErrorKind::Domain, "x = 0 is outside the domain");

  const Real pi = real_pi();
  const Real margin(opt.stokes_margin);
  Real phi;
  if (direction) {
    phi = rebase(*direction);
    const Real lifted = approx.theta + reduce_angle(phi - approx.theta);
    if (lifted <= approx.theta1 || lifted >= approx.theta2)
      fail(ErrorKind::StokesCollision, "requested direction leaves the Stokes sector");
    phi = lifted;
  } else {
    // arg x lifted into (-theta - pi, -theta + pi], then the ray direction
    // -arg x is clamped into the sector.
    const Real ax = -approx.theta + reduce_angle(arg(x) + approx.theta);
    phi = -ax;
    const Real lo = approx.theta1 + margin, hi = approx.theta2 - margin;
    if (phi < lo) phi = lo;
    if (phi > hi) phi = hi;
  }
  const Complex rot = x * polar(Real(1), phi);
  if (rot.re <= 0)
    fail(ErrorKind::Domain, "x lies outside the continuation domain of the Stokes sector");

  EiSumJet jet;
  jet.direction = phi;
  const Complex inv_x = Complex(1) / x;
  const Complex inv_x2 = inv_x * inv_x;
  Real err = 0;
  bool have_err = opt.strategy == EiStrategy::Dyadic;

  EiOracleOptions oracle;
  oracle.cutoff = opt.oracle_cutoff;
  for (const auto& e : approx.poles.entries) {
    const Complex p = rebase(e.pole);
    const Complex c = rebase(e.residue);
    const Complex z = p * x;
    const Real delta = reduce_angle(phi - arg(p));
    Complex g;
    if (opt.strategy == EiStrategy::Oracle) {
      g = laplace_kernel(z, delta, oracle);
    } else {
      // F(z, delta) = conj F(conj z, -delta); evaluate in the closed upper
      // half-plane, away from the dyadic cut.
      const bool flip = z.im < 0;
      const Complex zz = flip ? conj(z) : z;
      const Real dd = flip ? Real(-delta) : delta;
      if (reduce_angle(dd) == 0) fail(ErrorKind::StokesCollision, "Laplace ray through a pole");
      const int w = kernel_winding(zz, dd);
      EiDyadicOptions dopt = opt.dyadic_options;
      dopt.require_bound = false;
      const EiEvaluation ev = ei_dyadic(zz, opt.dyadic, dopt);
      g = ev.value;
      if (w != 0) g += Complex(Real(0), 2 * pi * Real(w)) * exp(-zz);
      if (flip) g = conj(g);
      if (ev.remainder_bound) err += abs(c) * *ev.remainder_bound;
      else have_err = false;
    }
    // T = -c G,  T' = c p G - c/x,  T'' = -c p^2 G + c p/x + c/x^2.
    const Complex cg = c * g;
    jet.value -= cg;
    jet.d1 += p * cg - c * inv_x;
    jet.d2 += -(p * p) * cg + c * p * inv_x + c * inv_x2;
  }

  // Polynomial part: L{p^j}(x) = j!/x^{j+1}.
  Real fact = 1;
  Complex pw = inv_x;  // x^{-(j+1)}
  for (std::size_t j = 0; j < approx.poles.polynomial_part.size(); ++j) {
    if (j > 0) fact *= Real(static_cast<int>(j));
    const Complex s = rebase(approx.poles.polynomial_part[j]) * fact;
    const Real jp1(static_cast<int>(j) + 1);
    const Real jp2(static_cast<int>(j) + 2);
    jet.value += s * pw;
    jet.d1 -= s * jp1 * pw * inv_x;
    jet.d2 += s * jp1 * jp2 * pw * inv_x2;
    pw *= inv_x;
  }
  if (have_err) jet.error_estimate = err;
  return jet;
}

Complex evaluate(const EiSumApproximant& approx, const Complex& x) {
  return evaluate_jet(approx, x).value;
}

Complex derivatives(const EiSumApproximant& approx, const Complex& x, int order) {
  if (order != 1 && order != 2) fail(ErrorKind::InvalidArgument, "derivative order must be 1 or 2");
  const auto jet = evaluate_jet(approx, x);
  return order == 1 ? jet.d1 : jet.d2;
}

Complex h_residual(const EiSumJet& jet, const Complex& x) {
  const Complex inv_x = Complex(1) / x;
  const Complex k = Complex(Real(4) / Real(25)) * inv_x * inv_x;
  const Complex& h = jet.value;
  return jet.d2 + jet.d1 * inv_x + h - k + h * h / Real(2) - k * h;
}

Complex h_residual(const EiSumApproximant& approx, const Complex& x) {
  PrecisionScope scope(static_cast<unsigned>(approx.options.precision_bits));
  const Complex xs = rebase(x);
  return h_residual(evaluate_jet(approx, xs), xs);
}

std::vector<GaussianRational> grid_points(const GridSpec& grid) {
  if (grid.step <= 0) fail(ErrorKind::InvalidArgument, "grid step must be positive");
  if (grid.nx < 1 || grid.ny < 1) fail(ErrorKind::InvalidArgument, "grid needs nx, ny >= 1");
  if (static_cast<long>(grid.nx) * grid.ny > kMaxGridPoints)
    fail(ErrorKind::InvalidArgument, "grid exceeds " + std::to_string(kMaxGridPoints) + " points");
  std::vector<GaussianRational> pts;
  pts.reserve(static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.ny));
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) {
      const Rational dx = grid.step * (grid.mirror_re ? -i : i);
      pts.push_back({grid.origin.re + dx, grid.origin.im + grid.step * j});
    }
  return pts;
}

std::vector<GridValue> residual_grid(const EiSumApproximant& approx, const GridSpec& grid) {
  std::vector<GridValue> out;
  PrecisionScope scope(static_cast<unsigned>(approx.options.precision_bits));
  for (const auto& pt : grid_points(grid)) {
    GridValue v;
    v.x = pt;
    try {
      if (pt.is_zero()) fail(ErrorKind::Domain, "x = 0");
      const Complex x = to_complex(pt);
      const Complex r = h_residual(evaluate_jet(approx, x), x);
      v.log10_residual = static_cast<double>(bmp::log10(abs(r)));
    } catch (const Error& e) {
      v.failure = to_string(e.kind());
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace eisum
