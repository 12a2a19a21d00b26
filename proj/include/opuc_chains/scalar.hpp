#pragma once

// Scalar backends. Everything templated on a scalar works with double,
// std::complex<double> and the exact Rational below.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <concepts>
#include <regex>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace opuc {

/// Exact rational scalar. Expression templates are off so that `auto`
/// locals hold values, not lazy expressions.
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;
using Complex = std::complex<double>;

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

template <class T>
concept RealScalar = std::floating_point<T> || is_exact_v<T>;

template <class T>
concept Scalar = RealScalar<T> || is_complex_v<T>;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(num, den);
}

/// Parse "p/q", an integer, or a terminating decimal ("0.25") exactly.
inline Rational parse_rational(const std::string& text) {
  // Decimal digits only; cpp_int would read "025" as octal and "0x1" as hex.
  static const std::regex pattern(R"(([+-]?)(\d*)(?:\.(\d*))?(?:/(\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern) || (m[2].length() == 0 && m[3].length() == 0) ||
      (m[3].matched && m[4].matched)) {
    throw std::invalid_argument("parse_rational: not a rational number: " + text);
  }
  using boost::multiprecision::cpp_int;
  auto decimal = [](const std::string& digits) {
    cpp_int v = 0;
    for (char ch : digits) v = v * 10 + (ch - '0');
    return v;
  };
  cpp_int num = decimal(m[2].str() + m[3].str());
  cpp_int den = 1;
  for (std::size_t i = 0; i < static_cast<std::size_t>(m[3].length()); ++i) den *= 10;
  if (m[4].matched) {
    den = decimal(m[4].str());
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
  }
  if (m[1].str() == "-") num = -num;
  return Rational(num, den);
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return static_cast<double>(x); }

inline Complex to_complex(double x) { return {x, 0.0}; }
inline Complex to_complex(const Rational& x) { return {static_cast<double>(x), 0.0}; }
inline Complex to_complex(const Complex& x) { return x; }

/// Magnitude as a double, for tolerance checks on any backend.
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Rational& x) { return std::abs(static_cast<double>(x)); }
inline double magnitude(const Complex& x) { return std::abs(x); }

template <Scalar T>
T conj_of(const T& x) {
  if constexpr (is_complex_v<T>) {
    return std::conj(x);
  } else {
    return x;
  }
}

template <Scalar T>
bool is_exact_zero(const T& x) {
  return x == T(0);
}

}  // namespace opuc
