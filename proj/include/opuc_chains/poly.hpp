#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace opuc {

/// Dense polynomial with coefficients in ascending powers of z.
///
/// Trailing zero coefficients are trimmed on construction, so the zero
/// polynomial has no coefficients and degree() == -1. Trimming only drops
/// exact zeros; a floating-point coefficient of 1e-300 is kept.
template <Scalar T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
  static Poly monomial(int degree, const T& c = T(1)) {
    std::vector<T> v(static_cast<std::size_t>(degree) + 1, T(0));
    v.back() = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  /// Coefficient of z^k; zero beyond the stored range.
  T operator[](int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return T(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

  /// Horner evaluation.
  template <class U>
  auto operator()(const U& z) const {
    using R = decltype(std::declval<T>() * std::declval<U>());
    R acc = R(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Poly& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }
  Poly& operator/=(const T& s) {
    for (auto& c : coeffs_) c /= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= T(-1); }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const T& s) { return a /= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// z * p(z)
  Poly times_z(int power = 1) const {
    if (is_zero()) return Poly();
    std::vector<T> out(static_cast<std::size_t>(power), T(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(out));
  }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<T> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * T(static_cast<int>(k));
    return Poly(std::move(out));
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, magnitude(c));
    return m;
  }

  template <Scalar U>
  Poly<U> cast() const {
    std::vector<U> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
      if constexpr (std::is_same_v<U, Complex>) {
        out.push_back(to_complex(c));
      } else if constexpr (std::is_same_v<U, double>) {
        out.push_back(to_double(c));
      } else {
        out.push_back(U(c));
      }
    }
    return Poly<U>(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_exact_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using ComplexPoly = Poly<Complex>;
using RealPoly = Poly<double>;
using RationalPoly = Poly<Rational>;

/// Horner evaluation as a free function.
template <Scalar T, class U>
auto eval_poly(const Poly<T>& p, const U& z) {
  return p(z);
}

/// z^n conj(p(1/conj(z))): coefficient k of the result is conj(coefficient n-k).
template <Scalar T>
Poly<T> reversed_star(const Poly<T>& p, int n) {
  if (p.degree() > n) throw DegreeMismatch("reversed_star: degree exceeds n");
  std::vector<T> out(static_cast<std::size_t>(n) + 1, T(0));
  for (int k = 0; k <= n; ++k) out[static_cast<std::size_t>(k)] = conj_of(p[n - k]);
  return Poly<T>(std::move(out));
}

/// Division by (z - w): returns (quotient, remainder).
template <Scalar T>
std::pair<Poly<T>, T> synthetic_divide(const Poly<T>& p, const T& w) {
  if (p.degree() < 1) return {Poly<T>(), p[0]};
  const auto& c = p.coeffs();
  std::vector<T> q(c.size() - 1, T(0));
  T carry = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    q[k] = carry;
    carry = c[k] + carry * w;
  }
  return {Poly<T>(std::move(q)), carry};
}

/// Euclidean division a = q*b + r with deg r < deg b.
template <Scalar T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw DomainError("divmod: division by the zero polynomial");
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<T>(), a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db) + 1, T(0));
  const T lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const T f = r[static_cast<std::size_t>(k)] / lead;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b[j];
    r[static_cast<std::size_t>(k)] = T(0);
  }
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

/// Monic greatest common divisor. Only meaningful on the exact backend.
template <Scalar T>
  requires is_exact_v<T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a / a.leading();
}

/// max_k |a_k - b_k|
template <Scalar T>
double max_coeff_diff(const Poly<T>& a, const Poly<T>& b) {
  double m = 0.0;
  const int d = std::max(a.degree(), b.degree());
  for (int k = 0; k <= d; ++k) m = std::max(m, magnitude(a[k] - b[k]));
  return m;
}

/// Truncated power-series product through degree K.
template <Scalar T>
std::vector<T> series_mul(const std::vector<T>& a, const std::vector<T>& b, std::size_t K) {
  std::vector<T> out(K + 1, T(0));
  for (std::size_t i = 0; i < a.size() && i <= K; ++i) {
    if (is_exact_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= K; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Coefficients 0..K of 1/a(z) as a power series; a[0] must be nonzero.
template <Scalar T>
std::vector<T> series_reciprocal(const std::vector<T>& a, std::size_t K) {
  if (a.empty() || is_exact_zero(a[0])) throw DomainError("series_reciprocal: zero constant term");
  std::vector<T> out(K + 1, T(0));
  out[0] = T(1) / a[0];
  for (std::size_t k = 1; k <= K; ++k) {
    T acc = T(0);
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * out[k - j];
    out[k] = -acc / a[0];
  }
  return out;
}

}  // namespace opuc
