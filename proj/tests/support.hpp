#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "opuc_chains.hpp"

namespace opuc::testing {

inline Rational q(long long p, long long r = 1) { return make_rational(p, r); }

inline ComplexPoly cpoly(std::initializer_list<Complex> c) { return ComplexPoly(std::vector<Complex>(c)); }

template <RealScalar T>
ComplexPoly lift(const Poly<T>& p) {
  std::vector<Complex> c;
  for (const auto& v : p.coeffs()) c.push_back(to_complex(v));
  return ComplexPoly(std::move(c));
}

inline double diff(const ComplexPoly& a, const ComplexPoly& b) { return max_coeff_diff(a, b); }

inline ::testing::AssertionResult PolyNear(const ComplexPoly& a, const ComplexPoly& b, double tol) {
  const double d = diff(a, b);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max coefficient difference " << d << " exceeds " << tol;
}

}  // namespace opuc::testing
