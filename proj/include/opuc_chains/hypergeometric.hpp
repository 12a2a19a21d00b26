#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace opuc {

/// (x)_n = x (x+1) ... (x+n-1), (x)_0 = 1.
template <Scalar T>
T pochhammer(const T& x, int n) {
  if (n < 0) throw DomainError("pochhammer: negative n");
  T acc = T(1);
  for (int j = 0; j < n; ++j) acc *= x + T(j);
  return acc;
}

namespace detail {

template <Scalar T>
void check_lower_parameter(const T& c, int n) {
  for (int j = 0; j < n; ++j) {
    if (is_exact_zero(c + T(j))) throw PoleError("2F1: c is a non-positive integer > -" + std::to_string(n));
  }
}

}  // namespace detail

/// F(-n, b; c; x) as the finite sum of n+1 terms. Real double input is
/// summed exactly in rational arithmetic and rounded once, since the
/// alternating terms can cancel to many orders of magnitude below their size.
template <Scalar T, Scalar X>
auto hyp2f1_terminating(int n, const T& b, const T& c, const X& x) {
  using R = std::conditional_t<is_complex_v<X> || is_complex_v<T>, Complex, T>;
  if (n < 0) throw DomainError("hyp2f1_terminating: negative n");
  detail::check_lower_parameter(c, n);
  if constexpr (std::is_same_v<R, double>) {
    const Rational bb(b), cc(c), xx(x);
    Rational term(1), sum(1);
    for (int k = 0; k < n; ++k) {
      term *= Rational(k - n) * (bb + k) / ((cc + k) * (k + 1)) * xx;
      sum += term;
    }
    return to_double(sum);
  } else {
    R term = R(1);
    R sum = R(1);
    for (int k = 0; k < n; ++k) {
      const T ratio = (T(k) - T(n)) * (b + T(k)) / ((c + T(k)) * T(k + 1));
      if constexpr (std::is_same_v<R, Complex>) {
        term *= to_complex(ratio) * to_complex(x);
      } else {
        term *= ratio * x;
      }
      sum += term;
    }
    return sum;
  }
}

/// F(-n, b; c; 1 - z) expanded in powers of z. When the reflected lower
/// parameter b - c - n + 1 is admissible the expansion goes through
/// F(-n, b; c; 1 - z) = ((c-b)_n / (c)_n) F(-n, b; b - c - n + 1; z),
/// which avoids expanding powers of (1 - z).
template <RealScalar T>
Poly<T> hyp2f1_poly_one_minus_z(int n, const T& b, const T& c) {
  detail::check_lower_parameter(c, n);
  const T lower = b - c - T(n - 1);
  bool direct = true;
  for (int j = 0; j < n && direct; ++j) {
    if constexpr (is_exact_v<T>) {
      direct = !is_exact_zero(lower + T(j));
    } else {
      direct = std::abs(lower + T(j)) > 1e-8;
    }
  }
  if (direct) {
    std::vector<T> coeffs{pochhammer(c - b, n) / pochhammer(c, n)};
    for (int k = 0; k < n; ++k) {
      coeffs.push_back(coeffs.back() * (T(k) - T(n)) * (b + T(k)) / ((lower + T(k)) * T(k + 1)));
    }
    return Poly<T>(std::move(coeffs));
  }
  const Poly<T> one_minus_z{T(1), T(-1)};
  Poly<T> power{T(1)};
  Poly<T> sum{T(1)};
  T coeff = T(1);
  for (int k = 0; k < n; ++k) {
    coeff *= (T(k) - T(n)) * (b + T(k)) / ((c + T(k)) * T(k + 1));
    power = power * one_minus_z;
    sum += coeff * power;
  }
  return sum;
}

/// Monic rho_n = ((c)_n / (b)_n) F(-n, b; c; 1 - z).
template <RealScalar T>
Poly<T> varrho(const T& b, const T& c, int n) {
  const T bn = pochhammer(b, n);
  if (is_exact_zero(bn)) throw PoleError("varrho: (b)_n = 0");
  return hyp2f1_poly_one_minus_z(n, b, c) * (pochhammer(c, n) / bn);
}

/// rho_0..rho_N from the contiguous-relation recurrence
/// rho_{n+1} = (z + (c-b+n)/(b+n)) rho_n - n(c+n-1)/((b+n-1)(b+n)) z rho_{n-1},
/// with rho_0 = 1, rho_1 = z + (c-b)/b.
template <RealScalar T>
std::vector<Poly<T>> varrho_recurrence(const T& b, const T& c, int N) {
  std::vector<Poly<T>> out{Poly<T>{T(1)}};
  if (N >= 1) {
    if (is_exact_zero(b)) throw PoleError("varrho_recurrence: b = 0");
    out.push_back(Poly<T>{(c - b) / b, T(1)});
  }
  for (int n = 1; n < N; ++n) {
    const T shift = (c - b + T(n)) / (b + T(n));
    const T scale = T(n) * (c + T(n - 1)) / ((b + T(n - 1)) * (b + T(n)));
    const auto un = static_cast<std::size_t>(n);
    out.push_back(Poly<T>{shift, T(1)} * out[un] - scale * out[un - 1].times_z());
  }
  return out;
}

/// tau^(lambda) = Gamma(1+lambda)^2 4^lambda / Gamma(2 lambda + 1), via log-gamma.
inline double circular_jacobi_normalization(double lambda) {
  if (!(lambda > -0.5)) throw DomainError("circular_jacobi_normalization: lambda <= -1/2");
  return std::exp(2.0 * std::lgamma(1.0 + lambda) + lambda * std::log(4.0) - std::lgamma(2.0 * lambda + 1.0));
}

}  // namespace opuc
