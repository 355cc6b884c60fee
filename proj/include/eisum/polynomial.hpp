#pragma once

// Dense univariate polynomials over an exact field or over Complex.
// Coefficients are stored lowest degree first and kept trimmed so that the
// leading coefficient is nonzero (the zero polynomial has no coefficients).

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eisum {

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }

  /// Coefficient of t^k, zero beyond the stored range.
  T operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return T(0);
    return c_[static_cast<std::size_t>(k)];
  }

  template <class U>
  U operator()(const U& t) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * T(static_cast<int>(k)));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] = r[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] = r[k] + b.c_[k];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] = r[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] = r[k] - b.c_[k];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b. Requires an exact field.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  const T lead = b.coeffs().back();
  if (a.degree() < db) return {Polynomial<T>(), a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), T(0));
  for (int k = a.degree(); k >= db; --k) {
    T f = r[static_cast<std::size_t>(k)] / lead;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(k - db + j)] =
          r[static_cast<std::size_t>(k - db + j)] - f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial<T>(std::move(q)), Polynomial<T>(std::move(r))};
}

/// First `count` Maclaurin coefficients of num/den. Requires den[0] != 0.
template <class T>
std::vector<T> series_quotient(const Polynomial<T>& num, const Polynomial<T>& den, int count) {
  if (den[0] == T(0)) throw std::domain_error("series quotient with vanishing constant term");
  std::vector<T> out;
  const T d0 = den[0];
  for (int k = 0; k < count; ++k) {
    T acc = num[k];
    for (int j = 1; j <= std::min(k, den.degree()); ++j)
      acc = acc - den[j] * out[static_cast<std::size_t>(k - j)];
    out.push_back(acc / d0);
  }
  return out;
}

}  // namespace eisum
