#include "exact_solve.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace eisum::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Ring helpers.

Integer divexact(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.backend().data(), a.backend().data(), b.backend().data());
  return r;
}

GaussianInteger divexact(const GaussianInteger& a, const GaussianInteger& b) {
  if (b.im == 0) return {divexact(a.re, b.re), divexact(a.im, b.re)};
  Integer d = b.re * b.re + b.im * b.im;
  return {divexact(a.re * b.re + a.im * b.im, d), divexact(a.im * b.re - a.re * b.im, d)};
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
bool is_zero(const Integer& a) { return a == 0; }
bool is_zero(const GaussianInteger& a) { return a.is_zero(); }
bool equal(const Integer& a, const Integer& b) { return a == b; }
bool equal(const GaussianInteger& a, const GaussianInteger& b) {
  return a.re == b.re && a.im == b.im;
}
Integer one(const Integer*) { return 1; }
GaussianInteger one(const GaussianInteger*) { return {1, 0}; }

template <class R>
std::optional<RingSolution<R>> bareiss(std::vector<std::vector<R>> a) {
  const std::size_t m = a.size();
  R prev = one(static_cast<R*>(nullptr));
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t p = k;
    while (p < m && is_zero(a[p][k])) ++p;
    if (p == m) return std::nullopt;
    if (p != k) std::swap(a[p], a[k]);
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j <= m; ++j)
        a[i][j] = divexact(sub(mul(a[k][k], a[i][j]), mul(a[i][k], a[k][j])), prev);
      a[i][k] = R{};
    }
    prev = a[k][k];
  }
  RingSolution<R> out;
  out.det = m == 0 ? one(static_cast<R*>(nullptr)) : a[m - 1][m - 1];
  out.y.assign(m, R{});
  for (std::size_t k = m; k-- > 0;) {
    R acc = mul(out.det, a[k][m]);
    for (std::size_t j = k + 1; j < m; ++j) acc = sub(acc, mul(a[k][j], out.y[j]));
    out.y[k] = divexact(acc, a[k][k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Word-size modular arithmetic for primes p < 2^62 with p = 1 mod 4, so that
// Z[i] maps onto Z/p through i -> s and i -> -s, s^2 = -1.

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  static const u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : small)
    if (n % q == 0) return n == q;
  for (u64 q = 41; q < 2000; q += 2)
    if (n % q == 0) return false;
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : small) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct Prime {
  u64 p;
  u64 sqrt_minus_one;
};

/// The k-th prime below 2^62 that is 1 mod 4, in decreasing order. The list
/// is shared and grown on demand.
const Prime& prime_at(std::size_t k) {
  static std::mutex mu;
  static std::vector<Prime> primes;
  std::lock_guard<std::mutex> lock(mu);
  while (primes.size() <= k) {
    u64 c = primes.empty() ? (u64{1} << 62) - 3 : primes.back().p - 4;
    while (!is_prime(c)) c -= 4;
    u64 s = 0;
    for (u64 g = 2;; ++g) {
      s = powmod(g, (c - 1) / 4, c);
      if (mulmod(s, s, c) == c - 1) break;
    }
    primes.push_back({c, s});
  }
  return primes[k];
}

/// Shoup multiplication by a fixed factor w: precompute floor(w 2^64 / p).
struct Shoup {
  u64 w, wp, p;
  Shoup(u64 w_, u64 p_) : w(w_), wp(static_cast<u64>((static_cast<u128>(w_) << 64) / p_)), p(p_) {}
  u64 operator()(u64 x) const {
    u64 q = static_cast<u64>((static_cast<u128>(x) * wp) >> 64);
    u64 r = x * w - q * p;
    return r >= p ? r - p : r;
  }
};

/// Elimination mod p. Returns false when singular mod p; otherwise fills
/// det and y = det * A^{-1} b.
bool solve_mod(std::vector<u64>& a, std::size_t m, u64 p, u64& det, std::vector<u64>& y) {
  const std::size_t w = m + 1;
  det = 1;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t piv = k;
    while (piv < m && a[piv * w + k] == 0) ++piv;
    if (piv == m) return false;
    if (piv != k) {
      for (std::size_t j = k; j < w; ++j) std::swap(a[piv * w + j], a[k * w + j]);
      det = det == 0 ? 0 : p - det;
    }
    det = mulmod(det, a[k * w + k], p);
    const u64 inv = invmod(a[k * w + k], p);
    for (std::size_t i = k + 1; i < m; ++i) {
      const u64 f = mulmod(a[i * w + k], inv, p);
      if (f == 0) continue;
      const Shoup mf(f, p);
      for (std::size_t j = k + 1; j < w; ++j) {
        const u64 t = mf(a[k * w + j]);
        u64& v = a[i * w + j];
        v = v >= t ? v - t : v + p - t;
      }
    }
  }
  y.assign(m, 0);
  for (std::size_t k = m; k-- > 0;) {
    u64 acc = a[k * w + m];
    for (std::size_t j = k + 1; j < m; ++j) {
      const u64 t = mulmod(a[k * w + j], y[j], p);
      acc = acc >= t ? acc - t : acc + p - t;
    }
    y[k] = mulmod(acc, invmod(a[k * w + k], p), p);
  }
  for (auto& v : y) v = mulmod(v, det, p);
  return true;
}

u64 residue(const Integer& z, u64 p) { return mpz_fdiv_ui(z.backend().data(), p); }

/// Incremental Chinese remaindering (Garner form) for one value.
struct Crt {
  Integer x = 0;
  void add(u64 r, u64 p, const Integer& modulus, u64 modulus_inv) {
    if (modulus == 1) {
      x = r;
      return;
    }
    const u64 xr = residue(x, p);
    const u64 diff = r >= xr ? r - xr : r + p - xr;
    const u64 t = mulmod(diff, modulus_inv, p);
    mpz_addmul_ui(x.backend().data(), modulus.backend().data(), t);
  }
  Integer symmetric(const Integer& modulus) const {
    Integer v = x;
    if (2 * v > modulus) v -= modulus;
    return v;
  }
};

std::size_t bit_length(const Integer& z) {
  return z == 0 ? 0 : mpz_sizeinbase(z.backend().data(), 2);
}
std::size_t bit_length(const GaussianInteger& z) {
  return std::max(bit_length(z.re), bit_length(z.im));
}

template <class R>
constexpr bool is_gaussian = std::is_same_v<R, GaussianInteger>;

template <class R>
std::optional<RingSolution<R>> solve_crt(const std::vector<std::vector<R>>& a) {
  const std::size_t m = a.size();
  const std::size_t w = m + 1;

  // Hadamard bound on every m x m minor of (A | b), in bits:
  // prod_i ||row_i||_2 <= prod_i 2^{maxbits_i} sqrt(2 w).
  double bound_bits = 2.0;
  for (const auto& row : a) {
    std::size_t mb = 0;
    for (const auto& v : row) mb = std::max(mb, bit_length(v));
    bound_bits += static_cast<double>(mb) + 0.5 * std::log2(2.0 * static_cast<double>(w));
  }

  std::vector<Crt> det_re(1), det_im(1);
  std::vector<Crt> y_re(m), y_im(m);
  Integer modulus = 1;
  double modulus_bits = 0;
  std::size_t singular = 0;
  std::vector<u64> work(m * w), work2;
  std::vector<u64> yy1, yy2;

  for (std::size_t k = 0; modulus_bits < bound_bits; ++k) {
    const Prime pr = prime_at(k);
    const u64 p = pr.p;
    // Image under i -> s (and i -> -s for Gaussian input).
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < w; ++j) {
        if constexpr (is_gaussian<R>) {
          work[i * w + j] =
              (residue(a[i][j].re, p) + mulmod(residue(a[i][j].im, p), pr.sqrt_minus_one, p)) % p;
        } else {
          work[i * w + j] = residue(a[i][j], p);
        }
      }
    u64 d1 = 0, d2 = 0;
    bool ok = true;
    if constexpr (is_gaussian<R>) {
      work2.resize(m * w);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < w; ++j) {
          const u64 im = residue(a[i][j].im, p);
          const u64 re = residue(a[i][j].re, p);
          const u64 t = mulmod(im, pr.sqrt_minus_one, p);
          work2[i * w + j] = re >= t ? re - t : re + p - t;
        }
      ok = solve_mod(work, m, p, d1, yy1) && solve_mod(work2, m, p, d2, yy2);
    } else {
      ok = solve_mod(work, m, p, d1, yy1);
    }
    if (!ok) {
      // Unlucky prime, or A singular. Persistent failure is settled exactly
      // by the caller.
      if (++singular >= 4 && modulus == 1) return std::nullopt;
      continue;
    }

    const u64 minv = modulus == 1 ? 0 : invmod(residue(modulus, p), p);
    if constexpr (is_gaussian<R>) {
      const u64 inv2 = invmod(2, p);
      const u64 inv2s = invmod(mulmod(2, pr.sqrt_minus_one, p), p);
      auto split = [&](u64 v1, u64 v2, u64& re, u64& im) {
        re = mulmod((v1 + v2) % p, inv2, p);
        im = mulmod(v1 >= v2 ? v1 - v2 : v1 + p - v2, inv2s, p);
      };
      u64 re, im;
      split(d1, d2, re, im);
      det_re[0].add(re, p, modulus, minv);
      det_im[0].add(im, p, modulus, minv);
      for (std::size_t j = 0; j < m; ++j) {
        split(yy1[j], yy2[j], re, im);
        y_re[j].add(re, p, modulus, minv);
        y_im[j].add(im, p, modulus, minv);
      }
    } else {
      det_re[0].add(d1, p, modulus, minv);
      for (std::size_t j = 0; j < m; ++j) y_re[j].add(yy1[j], p, modulus, minv);
    }
    mpz_mul_ui(modulus.backend().data(), modulus.backend().data(), p);
    modulus_bits += std::log2(static_cast<double>(p));
  }

  RingSolution<R> out;
  if constexpr (is_gaussian<R>) {
    out.det = {det_re[0].symmetric(modulus), det_im[0].symmetric(modulus)};
    for (std::size_t j = 0; j < m; ++j)
      out.y.push_back({y_re[j].symmetric(modulus), y_im[j].symmetric(modulus)});
  } else {
    out.det = det_re[0].symmetric(modulus);
    for (std::size_t j = 0; j < m; ++j) out.y.push_back(y_re[j].symmetric(modulus));
  }
  if (is_zero(out.det)) return std::nullopt;

  // Exact check A y = det b.
  for (std::size_t i = 0; i < m; ++i) {
    R acc{};
    for (std::size_t j = 0; j < m; ++j) acc = sub(acc, mul(a[i][j], out.y[j]));
    acc = sub(R{}, acc);
    if (!equal(acc, mul(out.det, a[i][m])))
      throw std::logic_error("modular solve failed exact verification");
  }
  return out;
}

template <class R>
std::optional<RingSolution<R>> solve(std::vector<std::vector<R>> rows) {
  if (rows.size() < 8) return bareiss(std::move(rows));
  auto sol = solve_crt(rows);
  if (sol) return sol;
  return bareiss(std::move(rows));
}

}  // namespace

std::optional<RingSolution<Integer>> solve_exact(std::vector<std::vector<Integer>> rows) {
  return solve(std::move(rows));
}

std::optional<RingSolution<GaussianInteger>> solve_exact(
    std::vector<std::vector<GaussianInteger>> rows) {
  return solve(std::move(rows));
}

std::optional<RingSolution<Integer>> solve_bareiss(std::vector<std::vector<Integer>> rows) {
  return bareiss(std::move(rows));
}

std::optional<RingSolution<GaussianInteger>> solve_bareiss(
    std::vector<std::vector<GaussianInteger>> rows) {
  return bareiss(std::move(rows));
}

}  // namespace eisum::detail
