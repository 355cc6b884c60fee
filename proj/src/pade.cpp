#include "eisum/pade.hpp"

#include "eisum/error.hpp"
#include "exact_solve.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace eisum {

namespace bmp = boost::multiprecision;

namespace {

using detail::GaussianInteger;

Integer divexact(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.backend().data(), a.backend().data(), b.backend().data());
  return r;
}

Integer mul(const Integer& a, const Integer& b) { return a * b; }
GaussianInteger mul(const GaussianInteger& a, const GaussianInteger& b) {
  if (a.im == 0 && b.im == 0) return {a.re * b.re, 0};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Integer sub(const Integer& a, const Integer& b) { return a - b; }
GaussianInteger sub(const GaussianInteger& a, const GaussianInteger& b) {
  return {a.re - b.re, a.im - b.im};
}
Integer add(const Integer& a, const Integer& b) { return a + b; }
GaussianInteger add(const GaussianInteger& a, const GaussianInteger& b) {
  return {a.re + b.re, a.im + b.im};
}

// Scaling of field elements onto the ring Z or Z[i] by a common denominator.
template <class T>
struct Ring;

template <>
struct Ring<Rational> {
  using type = Integer;
  static void accumulate_lcm(Integer& l, const Rational& q) { l = bmp::lcm(l, denominator(q)); }
  static Integer scale(const Rational& q, const Integer& l) {
    return numerator(q) * divexact(l, denominator(q));
  }
  static Rational to_field(const Integer& z) { return Rational(z); }
};

template <>
struct Ring<GaussianRational> {
  using type = GaussianInteger;
  static void accumulate_lcm(Integer& l, const GaussianRational& q) {
    l = bmp::lcm(l, denominator(q.re));
    l = bmp::lcm(l, denominator(q.im));
  }
  static GaussianInteger scale(const GaussianRational& q, const Integer& l) {
    return {numerator(q.re) * divexact(l, denominator(q.re)),
            numerator(q.im) * divexact(l, denominator(q.im))};
  }
  static GaussianRational to_field(const GaussianInteger& z) {
    return {Rational(z.re), Rational(z.im)};
  }
};

// ---------------------------------------------------------------------------
// Roots.

using cd = std::complex<double>;

Complex eval(const std::vector<Complex>& c, const Complex& z) {
  Complex acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// Q(z), Q'(z) and sum |q_j||z|^j in one Horner pass.
void eval_with_derivative(const std::vector<Complex>& c, const Complex& z, Complex& q,
                          Complex& dq, Real& scale) {
  q = Complex();
  dq = Complex();
  scale = 0;
  Real az = abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dq = dq * z + q;
    q = q * z + *it;
    scale = scale * az + abs(*it);
  }
}

/// One Aberth sweep (Gauss-Seidel order). Returns max relative correction.
Real aberth_sweep(const std::vector<Complex>& c, std::vector<Complex>& z) {
  Real worst = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex q, dq;
    Real scale;
    eval_with_derivative(c, z[i], q, dq, scale);
    if (q.is_zero()) continue;
    Complex ratio = q / dq;
    Complex s;
    for (std::size_t j = 0; j < z.size(); ++j)
      if (j != i) s += Complex(1) / (z[i] - z[j]);
    Complex delta = ratio / (Complex(1) - ratio * s);
    z[i] -= delta;
    Real rel = abs(delta) / (abs(z[i]) + Real(1e-300));
    if (rel > worst) worst = rel;
  }
  return worst;
}

/// max over roots of |Q(r)| / sum |q_j||r|^j.
Real backward_error(const std::vector<Complex>& c, const std::vector<Complex>& z) {
  Real worst = 0;
  for (const auto& r : z) {
    Complex q, dq;
    Real scale;
    eval_with_derivative(c, r, q, dq, scale);
    worst = std::max(worst, Real(abs(q) / scale));
  }
  return worst;
}

}  // namespace

// ---------------------------------------------------------------------------

template <class T>
PadeApproximant<T> build_pade(const std::vector<T>& f, int n, int m,
                              const GaussianRational& base_point, const PadeOptions& options) {
  if (n < 0 || m < 0) fail(ErrorKind::InvalidArgument, "Pade orders must be non-negative");
  if (static_cast<int>(f.size()) < n + m + 1)
    fail(ErrorKind::InvalidArgument, "Pade [" + std::to_string(n) + "/" + std::to_string(m) +
                                         "] needs " + std::to_string(n + m + 1) +
                                         " coefficients, got " + std::to_string(f.size()));

  PadeApproximant<T> out;
  out.n = n;
  out.requested_m = m;
  out.base_point = base_point;

  // Work on L*f with a common denominator L so the whole solve runs in the
  // ring; P and Q are divided back at the end.
  using R = typename Ring<T>::type;
  Integer l = 1;
  for (int k = 0; k <= n + m; ++k) Ring<T>::accumulate_lcm(l, f[static_cast<std::size_t>(k)]);
  std::vector<R> big;
  for (int k = 0; k <= n + m; ++k) big.push_back(Ring<T>::scale(f[static_cast<std::size_t>(k)], l));
  auto at = [&](int k) { return k < 0 ? R{} : big[static_cast<std::size_t>(k)]; };

  for (int mm = m; mm >= 0; --mm) {
    const int reductions = m - mm;
    if (options.max_reductions && reductions > *options.max_reductions) break;

    // q_0 = 1;  sum_{j=1}^{mm} q_j f_{k-j} = -f_k  for k = n+1 .. n+mm.
    std::vector<std::vector<R>> rows;
    for (int k = n + 1; k <= n + mm; ++k) {
      std::vector<R> row;
      for (int j = 1; j <= mm; ++j) row.push_back(at(k - j));
      row.push_back(sub(R{}, at(k)));
      rows.push_back(std::move(row));
    }
    auto sol = detail::solve_exact(std::move(rows));
    if (!sol) continue;

    // y_j = det * q_j, with y_0 = det.
    std::vector<R> y{sol->det};
    y.insert(y.end(), sol->y.begin(), sol->y.end());
    const T det = Ring<T>::to_field(sol->det);
    std::vector<T> q;
    for (const auto& v : y) q.push_back(Ring<T>::to_field(v) / det);
    const T pscale = det * T(Rational(l));
    std::vector<T> p;
    for (int k = 0; k <= n; ++k) {
      R acc{};
      for (int j = 0; j <= std::min(k, mm); ++j) acc = add(acc, mul(y[static_cast<std::size_t>(j)], at(k - j)));
      p.push_back(Ring<T>::to_field(acc) / pscale);
    }
    out.numerator = Polynomial<T>(std::move(p));
    out.denominator = Polynomial<T>(std::move(q));
    out.m = mm;
    out.reductions = reductions;
    return out;
  }
  fail(ErrorKind::DegenerateTable, "Pade table degenerate: every admissible reduction of m = " +
                                       std::to_string(m) + " is singular");
}

RealPade build_pade(const RationalSeries& series, int n, int m, const PadeOptions& options) {
  if (series.kind != SeriesKind::BorelMaclaurin)
    fail(ErrorKind::InvalidArgument, "Pade construction expects a Maclaurin series");
  if (series.end_index() < n + m + 1)
    fail(ErrorKind::InvalidArgument, "series too short for Pade [" + std::to_string(n) + "/" +
                                         std::to_string(m) + "]");
  std::vector<Rational> f;
  for (int k = 0; k <= n + m; ++k) f.push_back(series.at(k));
  return build_pade<Rational>(f, n, m, GaussianRational{}, options);
}

template <class T>
std::vector<T> maclaurin(const PadeApproximant<T>& pade, int count) {
  return series_quotient(pade.numerator, pade.denominator, count);
}

int default_root_precision(int degree) { return std::max(512, 8 * degree + 128); }

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs_in, int precision_bits) {
  std::vector<Complex> c = coeffs_in;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.size() < 2) fail(ErrorKind::InvalidArgument, "root finding needs degree >= 1");

  // Roots at the origin are split off exactly.
  std::size_t zeros = 0;
  while (c[zeros].is_zero()) ++zeros;
  std::vector<Complex> roots(zeros);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
  const std::size_t d = c.size() - 1;
  if (d == 0) return roots;

  std::vector<Complex> z(d);
  {
    // Start on a circle whose radius is the geometric mean of the root moduli.
    PrecisionScope start(128);
    const double lr = (static_cast<double>(bmp::log(abs(rebase(c.front())))) -
                       static_cast<double>(bmp::log(abs(rebase(c.back()))))) /
                      static_cast<double>(d);
    const double r0 = std::exp(lr);
    for (std::size_t k = 0; k < d; ++k) {
      const double a = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(d) + 0.4;
      z[k] = from_double(std::polar(r0, a));
    }
  }
  // Coarse phases. MPFR at low precision avoids the exponent range limits of
  // doubles for high-degree inputs; clustered roots may need the second pass.
  bool settled = false;
  for (unsigned bits : {128u, 256u}) {
    PrecisionScope coarse(bits);
    std::vector<Complex> cc;
    for (const auto& v : c) cc.push_back(rebase(v));
    for (auto& r : z) r = rebase(r);
    const Real eps = bmp::ldexp(Real(1), -static_cast<int>(bits) + 24);
    for (int it = 0; it < 1000 && !settled; ++it)
      settled = aberth_sweep(cc, z) < eps || (it % 4 == 3 && backward_error(cc, z) < eps);
    if (settled) break;
  }
  if (!settled) fail(ErrorKind::RootFindingFailed, "Aberth iteration did not settle in the coarse phase");

  PrecisionScope fine(static_cast<unsigned>(precision_bits + 32));
  std::vector<Complex> cf;
  for (const auto& v : c) cf.push_back(rebase(v));
  for (auto& r : z) r = rebase(r);
  const Real tol = bmp::ldexp(Real(1), -precision_bits + 8);
  Real worst = 0;
  for (int it = 0; it < 60; ++it) {
    aberth_sweep(cf, z);
    worst = backward_error(cf, z);
    if (worst <= tol) {
      // One more sweep costs little and absorbs the guard bits.
      aberth_sweep(cf, z);
      roots.insert(roots.end(), z.begin(), z.end());
      std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        Real ma = norm(a), mb = norm(b);
        if (ma != mb) return ma < mb;
        return arg(a) < arg(b);
      });
      return roots;
    }
  }
  fail(ErrorKind::RootFindingFailed,
       "Aberth polishing stalled at relative residual " + to_decimal(worst));
}

namespace {

template <class T>
std::vector<Complex> to_complex_coeffs(const Polynomial<T>& p) {
  std::vector<Complex> out;
  for (const auto& c : p.coeffs()) out.push_back(to_complex(c));
  return out;
}

}  // namespace

template <class T>
std::vector<Complex> denominator_roots(const PadeApproximant<T>& pade, int precision_bits) {
  if (pade.denominator.degree() < 1)
    fail(ErrorKind::InvalidArgument, "denominator has no roots (degree 0)");
  PrecisionScope scope(static_cast<unsigned>(precision_bits));
  auto local = polynomial_roots(to_complex_coeffs(pade.denominator), precision_bits);
  const Complex z0 = to_complex(pade.base_point);
  std::vector<Complex> out;
  for (auto& r : local) out.push_back(rebase(r) + z0);
  return out;
}

template <class T>
PoleResidueSet partial_fractions(const PadeApproximant<T>& pade, int precision_bits) {
  PoleResidueSet set;
  set.n = pade.n;
  set.m = pade.m;
  set.precision_bits = precision_bits;
  set.base_point = pade.base_point;

  auto [quot, rem] = divmod(pade.numerator, pade.denominator);
  // A constant denominator leaves only the polynomial part.
  const auto roots = pade.denominator.degree() >= 1 ? denominator_roots(pade, precision_bits)
                                                     : std::vector<Complex>{};

  PrecisionScope scope(static_cast<unsigned>(precision_bits));
  const Complex z0 = to_complex(pade.base_point);
  const auto qc = to_complex_coeffs(pade.denominator);
  const auto dqc = to_complex_coeffs(pade.denominator.derivative());
  const auto rc = to_complex_coeffs(rem);
  for (const auto& c : quot.coeffs()) set.polynomial_part.push_back(to_complex(c));

  std::vector<Complex> local;
  for (const auto& r : roots) local.push_back(rebase(r) - z0);

  // Separation check. A double root splits by about the square root of the
  // backward error, so anything closer than 2^{-bits/3} counts as coincident.
  Real scale = 1;
  for (const auto& t : local) scale = std::max(scale, abs(t));
  const Real sep = bmp::ldexp(Real(1), -precision_bits / 3) * scale;
  for (std::size_t i = 0; i < local.size(); ++i)
    for (std::size_t j = i + 1; j < local.size(); ++j)
      if (abs(local[i] - local[j]) <= sep)
        fail(ErrorKind::NearMultiplePole,
             "denominator roots " + std::to_string(i) + " and " + std::to_string(j) +
                 " coincide at working precision");

  set.root_residual_bound = 0;
  for (std::size_t k = 0; k < local.size(); ++k) {
    const Complex residue = eval(rc, local[k]) / eval(dqc, local[k]);
    set.root_residual_bound = std::max(set.root_residual_bound, abs(eval(qc, local[k])));
    set.entries.push_back({rebase(roots[k]), residue});
  }

  // Re-expansion of S(t) + sum c_k/(t - t_k) about t = 0:
  //   coefficient of t^j is s_j - sum_k c_k t_k^{-(j+1)}.
  // The target expansion of P/Q is computed in floating point with guard
  // bits; the exact expansion is needlessly expensive for large z-plane runs.
  const int count = pade.n + pade.m + 1;
  std::vector<Complex> target_series;
  {
    PrecisionScope guard(static_cast<unsigned>(precision_bits + 64));
    target_series = series_quotient(Polynomial<Complex>(to_complex_coeffs(pade.numerator)),
                                    Polynomial<Complex>(to_complex_coeffs(pade.denominator)),
                                    count);
  }
  std::vector<Complex> inv, power;
  for (const auto& t : local) {
    inv.push_back(Complex(1) / t);
    power.push_back(Complex(1) / t);
  }
  set.reconstruction_error = 0;
  for (int j = 0; j < count; ++j) {
    Complex acc = j < static_cast<int>(set.polynomial_part.size())
                      ? set.polynomial_part[static_cast<std::size_t>(j)]
                      : Complex();
    Real mag = abs(acc);
    for (std::size_t k = 0; k < local.size(); ++k) {
      Complex term = set.entries[k].residue * power[k];
      acc -= term;
      mag += abs(term);
      power[k] *= inv[k];
    }
    const Complex target = rebase(target_series[static_cast<std::size_t>(j)]);
    mag = std::max(mag, abs(target));
    if (mag > 0) set.reconstruction_error = std::max(set.reconstruction_error, abs(acc - target) / mag);
  }
  return set;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json complex_json(const Complex& z) {
  return nlohmann::ordered_json::array({to_decimal(z.re), to_decimal(z.im)});
}

Complex complex_from_json(const nlohmann::json& j) {
  return {Real(j.at(0).get<std::string>()), Real(j.at(1).get<std::string>())};
}

}  // namespace

std::string to_json(const PoleResidueSet& set) {
  PrecisionScope scope(static_cast<unsigned>(set.precision_bits));
  nlohmann::ordered_json j;
  j["orders"] = {set.n, set.m};
  j["precision_bits"] = set.precision_bits;
  j["base_point"] = {set.base_point.re.str(), set.base_point.im.str()};
  j["root_residual_bound"] = to_decimal(set.root_residual_bound);
  j["reconstruction_error"] = to_decimal(set.reconstruction_error);
  auto poly = nlohmann::ordered_json::array();
  for (const auto& c : set.polynomial_part) poly.push_back(complex_json(c));
  j["polynomial_part"] = std::move(poly);
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : set.entries) {
    nlohmann::ordered_json item;
    item["pole"] = complex_json(e.pole);
    item["residue"] = complex_json(e.residue);
    entries.push_back(std::move(item));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

PoleResidueSet pole_set_from_json(const std::string& text) {
  PoleResidueSet set;
  try {
    const auto j = nlohmann::json::parse(text);
    set.n = j.at("orders").at(0).get<int>();
    set.m = j.at("orders").at(1).get<int>();
    set.precision_bits = j.at("precision_bits").get<int>();
    if (set.precision_bits < 16) fail(ErrorKind::Io, "precision_bits out of range");
    PrecisionScope scope(static_cast<unsigned>(set.precision_bits));
    if (j.contains("base_point"))
      set.base_point = {Rational(j["base_point"].at(0).get<std::string>()),
                        Rational(j["base_point"].at(1).get<std::string>())};
    set.root_residual_bound = Real(j.at("root_residual_bound").get<std::string>());
    set.reconstruction_error = j.contains("reconstruction_error")
                                   ? Real(j["reconstruction_error"].get<std::string>())
                                   : Real(0);
    if (j.contains("polynomial_part"))
      for (const auto& c : j["polynomial_part"]) set.polynomial_part.push_back(complex_from_json(c));
    for (const auto& e : j.at("entries"))
      set.entries.push_back({complex_from_json(e.at("pole")), complex_from_json(e.at("residue"))});
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::Io, std::string("malformed pole/residue JSON: ") + e.what());
  }
  return set;
}

template PadeApproximant<Rational> build_pade(const std::vector<Rational>&, int, int,
                                              const GaussianRational&, const PadeOptions&);
template PadeApproximant<GaussianRational> build_pade(const std::vector<GaussianRational>&, int,
                                                      int, const GaussianRational&,
                                                      const PadeOptions&);
template std::vector<Rational> maclaurin(const PadeApproximant<Rational>&, int);
template std::vector<GaussianRational> maclaurin(const PadeApproximant<GaussianRational>&, int);
template std::vector<Complex> denominator_roots(const PadeApproximant<Rational>&, int);
template std::vector<Complex> denominator_roots(const PadeApproximant<GaussianRational>&, int);
template PoleResidueSet partial_fractions(const PadeApproximant<Rational>&, int);
template PoleResidueSet partial_fractions(const PadeApproximant<GaussianRational>&, int);

}  // namespace eisum
