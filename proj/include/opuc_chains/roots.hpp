#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace opuc {

inline constexpr int kRootDegreeCap = 256;
inline constexpr double kRootResidualTol = 1e-10;

namespace detail {

inline std::pair<Complex, Complex> eval_with_derivative(const ComplexPoly& p, Complex z) {
  Complex val = 0.0;
  Complex der = 0.0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    der = der * z + val;
    val = val * z + *it;
  }
  return {val, der};
}

}  // namespace detail

/// All roots of p with multiplicity, by Aberth-Ehrlich simultaneous
/// iteration followed by a guarded Newton polish. Each returned root
/// satisfies |p(root)| < 1e-10 * max|coeff| unless the iteration stalls on
/// a pathologically clustered input, in which case a ConsistencyError is
/// raised rather than returning an unrefined root.
inline std::vector<Complex> poly_roots(const ComplexPoly& p) {
  if (p.is_zero()) throw UndefinedRoots("poly_roots: zero polynomial");
  if (p.degree() > kRootDegreeCap) throw DomainError("poly_roots: degree above cap");

  std::vector<Complex> roots;
  int low = 0;
  while (p[low] == Complex(0.0)) {
    roots.emplace_back(0.0);
    ++low;
  }
  std::vector<Complex> trimmed(p.coeffs().begin() + low, p.coeffs().end());
  const Complex lead = trimmed.back();
  for (auto& c : trimmed) c /= lead;
  const ComplexPoly q(trimmed);
  const int n = q.degree();
  if (n == 0) return roots;

  // Start on a circle whose radius is the geometric mean of the root moduli.
  const double radius = std::pow(std::abs(q[0]), 1.0 / n);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    z[static_cast<std::size_t>(k)] = std::polar(radius > 0 ? radius : 1.0, angle);
  }

  for (int iter = 0; iter < 1000; ++iter) {
    double max_step = 0.0;
    for (int k = 0; k < n; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      const auto [val, der] = detail::eval_with_derivative(q, z[uk]);
      if (val == Complex(0.0)) continue;
      const Complex ratio = val / der;
      Complex repulsion = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (z[uk] - z[static_cast<std::size_t>(j)]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[uk] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[uk])));
    }
    if (max_step < 1e-15) break;
  }

  const double scale = p.max_abs_coeff();
  for (auto& r : z) {
    for (int polish = 0; polish < 5; ++polish) {
      const auto [val, der] = detail::eval_with_derivative(q, r);
      if (der == Complex(0.0)) break;
      const Complex candidate = r - val / der;
      if (std::abs(p(candidate)) < std::abs(p(r))) {
        r = candidate;
      } else {
        break;
      }
    }
    if (std::abs(p(r)) >= kRootResidualTol * scale) {
      throw ConsistencyError("poly_roots: root residual above tolerance");
    }
    roots.push_back(r);
  }
  return roots;
}

}  // namespace opuc
