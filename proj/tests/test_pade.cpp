#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eisum/error.hpp"
#include "eisum/exact_series.hpp"
#include "eisum/pade.hpp"

#include <cmath>
#include <random>

using namespace eisum;

namespace {

template <class T>
T coeff(const Polynomial<T>& p, int k) {
  return k < 0 ? T{} : p[static_cast<std::size_t>(k)];
}

/// Q f - P vanishes through t^{n+m}, by direct convolution.
template <class T>
bool order_condition_holds(const PadeApproximant<T>& pade, const std::vector<T>& f) {
  const int top = pade.n + pade.requested_m;
  for (int k = 0; k <= top; ++k) {
    T acc{};
    for (int j = 0; j <= k; ++j) acc = acc + coeff(pade.denominator, j) * f[static_cast<std::size_t>(k - j)];
    if (!(acc == coeff(pade.numerator, k))) return false;
  }
  return true;
}

/// Naive Gauss-Jordan elimination over a field; nullopt if singular.
template <class T>
std::optional<std::vector<T>> naive_solve(std::vector<std::vector<T>> a, std::vector<T> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == T{}) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == T{}) continue;
      const T f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] = a[r][k] - f * a[c][k];
      b[r] = b[r] - f * b[c];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] = b[r] / a[r][r];
  return b;
}

/// Denominator q_1..q_m of [n/m] from the textbook Toeplitz system.
template <class T>
std::vector<T> naive_denominator(const std::vector<T>& f, int n, int m) {
  std::vector<std::vector<T>> a;
  std::vector<T> b;
  for (int k = n + 1; k <= n + m; ++k) {
    std::vector<T> row;
    for (int j = 1; j <= m; ++j) row.push_back(k - j >= 0 ? f[static_cast<std::size_t>(k - j)] : T{});
    a.push_back(row);
    b.push_back(T{} - f[static_cast<std::size_t>(k)]);
  }
  auto q = naive_solve(a, b);
  REQUIRE(q);
  return *q;
}

std::vector<Rational> borel_coeffs(int count) {
  const auto b = borel_transform(generate_h_coefficients(count));
  std::vector<Rational> f;
  for (int k = 0; k <= count; ++k) f.push_back(b.at(k));
  return f;
}

}  // namespace

TEST_CASE("[N/N] of the Borel series satisfies the order conditions exactly, N <= 25") {
  const auto series = borel_transform(generate_h_coefficients(50));
  const auto f = borel_coeffs(50);
  for (int N = 1; N <= 25; ++N) {
    const auto pade = build_pade(series, N, N);
    CHECK(pade.denominator[0] == 1);
    CHECK(order_condition_holds(pade, f));
    const auto back = maclaurin(pade, 2 * N + 1);
    for (int k = 0; k <= 2 * N; ++k) CHECK(back[static_cast<std::size_t>(k)] == f[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("denominator matches a naive rational solve") {
  const auto f = borel_coeffs(24);
  for (int N : {3, 6, 9, 12}) {
    const auto pade = build_pade<Rational>(f, N, N);
    const auto q = naive_denominator(f, N, pade.m);
    for (int j = 1; j <= pade.m; ++j) CHECK(pade.denominator[static_cast<std::size_t>(j)] == q[static_cast<std::size_t>(j - 1)]);
  }
}

TEST_CASE("complex coefficients through the modular solver match a naive solve") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  std::vector<GaussianRational> f;
  for (int k = 0; k <= 24; ++k)
    f.push_back({Rational(d(rng), 1 + (k % 7)), Rational(d(rng), 3 + (k % 5))});
  const auto pade = build_pade<GaussianRational>(f, 12, 12);
  CHECK(pade.m == 12);
  CHECK(order_condition_holds(pade, f));
  const auto q = naive_denominator(f, 12, 12);
  for (int j = 1; j <= 12; ++j) CHECK(pade.denominator[static_cast<std::size_t>(j)] == q[static_cast<std::size_t>(j - 1)]);
}

TEST_CASE("1/(p^2+1): poles at +-i with residues -+i/2") {
  const std::vector<Rational> f{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)};
  const auto pade = build_pade<Rational>(f, 0, 2);
  CHECK(pade.denominator == Polynomial<Rational>({Rational(1), Rational(0), Rational(1)}));
  const auto set = partial_fractions(pade, 256);
  REQUIRE(set.entries.size() == 2);
  PrecisionScope scope(256);
  const Real tol("1e-70");
  for (const auto& e : set.entries) {
    const Real sign = e.pole.im > 0 ? Real(1) : Real(-1);
    CHECK(abs(e.pole - Complex(Real(0), sign)) < tol);
    CHECK(abs(e.residue - Complex(Real(0), -sign / 2)) < tol);
  }
  CHECK(set.polynomial_part.empty());
}

TEST_CASE("base point: 1/(z-5) expanded about 2") {
  std::vector<GaussianRational> f;
  Rational p = Rational(-1, 3);
  for (int k = 0; k <= 4; ++k) {
    f.push_back({p, Rational(0)});
    p /= 3;
  }
  const auto pade = build_pade<GaussianRational>(f, 1, 1, GaussianRational{Rational(2), Rational(0)});
  const auto set = partial_fractions(pade, 256);
  REQUIRE(set.entries.size() == 1);
  PrecisionScope scope(256);
  CHECK(abs(set.entries[0].pole - Complex(5)) < Real("1e-70"));
  CHECK(abs(set.entries[0].residue - Complex(1)) < Real("1e-70"));
}

TEST_CASE("singular systems reduce m; a reduction cap raises degenerate-table") {
  const std::vector<Rational> f(5, Rational(1));  // 1/(1-p)
  const auto pade = build_pade<Rational>(f, 2, 2);
  CHECK(pade.m == 1);
  CHECK(pade.reductions == 1);
  CHECK(order_condition_holds(pade, f));
  PadeOptions strict;
  strict.max_reductions = 0;
  try {
    build_pade<Rational>(f, 2, 2, {}, strict);
    FAIL("expected degenerate-table");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateTable);
  }
}

TEST_CASE("a double pole is reported as near-multiple") {
  std::vector<Rational> f;
  for (int k = 0; k <= 4; ++k) f.push_back(Rational(k + 1));  // 1/(1-p)^2
  const auto pade = build_pade<Rational>(f, 0, 2);
  try {
    partial_fractions(pade, 256);
    FAIL("expected near-multiple-pole");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NearMultiplePole);
  }
}

TEST_CASE("too few coefficients") {
  const std::vector<Rational> f(3, Rational(1));
  CHECK_THROWS_AS(build_pade<Rational>(f, 2, 2), Error);
}

TEST_CASE("[20/20] Borel denominator: 20 roots with small residuals") {
  const auto pade = build_pade(borel_transform(generate_h_coefficients(40)), 20, 20);
  const int bits = default_root_precision(20);
  const auto roots = denominator_roots(pade, bits);
  CHECK(roots.size() == 20);
  PrecisionScope scope(static_cast<unsigned>(bits));
  const Real tol = boost::multiprecision::ldexp(Real(1), -bits + 16);
  for (const auto& r : roots) {
    Complex q;
    Real scale = 0;
    for (int j = pade.denominator.degree(); j >= 0; --j) {
      const Real c = to_real(pade.denominator[static_cast<std::size_t>(j)]);
      q = q * r + Complex(c);
      scale = scale * abs(r) + abs(c);
    }
    CHECK(abs(q) / scale < tol);
  }
}

TEST_CASE("N = 25: smallest poles near +-i, poles hug the imaginary axis") {
  const auto pade = build_pade(borel_transform(generate_h_coefficients(50)), 25, 25);
  const auto set = partial_fractions(pade, 512);
  CHECK(set.entries.size() == 24);
  CHECK(set.polynomial_part.size() == 2);
  PrecisionScope scope(512);
  const auto& a = set.entries[0].pole;
  const auto& b = set.entries[1].pole;
  CHECK(abs(a - Complex(Real(0), a.im > 0 ? Real(1) : Real(-1))) < Real(0.05));
  CHECK(abs(b - Complex(Real(0), b.im > 0 ? Real(1) : Real(-1))) < Real(0.05));
  CHECK(a.im * b.im < 0);
  int near = 0;
  for (const auto& e : set.entries)
    if (abs(e.pole.re) < Real(0.2)) ++near;
  CHECK(near >= 0.8 * static_cast<double>(set.entries.size()));
  CHECK(set.reconstruction_error < Real(1e-100));
  CHECK(set.root_residual_bound < Real(1e-100));
}

TEST_CASE("pole/residue re-expansion matches the series through n+m") {
  for (int N : {5, 10, 15}) {
    const auto f = borel_coeffs(2 * N);
    const auto pade = build_pade<Rational>(f, N, N);
    const auto set = partial_fractions(pade, 512);
    PrecisionScope scope(512);
    // sum_k c_k/(p - p_k) = -sum_k c_k sum_j p^j / p_k^{j+1}
    for (int j = 0; j <= 2 * N; ++j) {
      Complex acc = j < static_cast<int>(set.polynomial_part.size()) ? set.polynomial_part[static_cast<std::size_t>(j)] : Complex();
      for (const auto& e : set.entries) {
        Complex inv = Complex(1) / e.pole;
        Complex pw = inv;
        for (int t = 0; t < j; ++t) pw *= inv;
        acc -= e.residue * pw;
      }
      const Real expected = to_real(f[static_cast<std::size_t>(j)]);
      CHECK(abs(acc - Complex(expected)) <= Real(1e-90) * (Real(1) + abs(expected)));
    }
  }
}

TEST_CASE("pole set JSON round trip is stable") {
  const auto set = partial_fractions(build_pade(borel_transform(generate_h_coefficients(20)), 10, 10), 512);
  const auto text = to_json(set);
  const auto back = pole_set_from_json(text);
  CHECK(back.entries.size() == set.entries.size());
  CHECK(back.n == 10);
  CHECK(to_json(back) == text);
}

TEST_CASE("polynomial_roots on known factors") {
  PrecisionScope scope(256);
  // (z - 1)(z - 2)(z + 3i) = z^3 + (3i - 3) z^2 + (2 - 9i) z + 6i
  const std::vector<Complex> c{Complex(Real(0), Real(6)), Complex(Real(2), Real(-9)),
                               Complex(Real(-3), Real(3)), Complex(1)};
  const auto r = polynomial_roots(c, 256);
  REQUIRE(r.size() == 3);
  CHECK(abs(r[0] - Complex(1)) < Real(1e-70));
  CHECK(abs(r[1] - Complex(2)) < Real(1e-70));
  CHECK(abs(r[2] - Complex(Real(0), Real(-3))) < Real(1e-70));
  const auto z = polynomial_roots({Complex(), Complex(), Complex(Real(-4)), Complex(1)}, 256);
  CHECK(z.size() == 3);
  CHECK(z[0].is_zero());
  CHECK(z[1].is_zero());
  CHECK(abs(z[2] - Complex(4)) < Real(1e-70));
}
