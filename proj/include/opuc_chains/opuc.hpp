#pragma once

// Szego polynomials generated from Verblunsky coefficients, together with
// the kernel and para-orthogonal polynomials built from them.

#include <cmath>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "verblunsky.hpp"

namespace opuc {

/// Phi_0..Phi_N, Phi*_0..Phi*_N and the squared norms chi_n^{-2}.
struct SzegoPair {
  std::vector<ComplexPoly> phi;
  std::vector<ComplexPoly> phistar;
  std::vector<double> norms;

  int last() const { return static_cast<int>(phi.size()) - 1; }

  /// Orthonormal phi_n(z) = chi_n Phi_n(z), computed on demand.
  Complex orthonormal(int n, Complex z) const { return phi.at(static_cast<std::size_t>(n))(z) / std::sqrt(norms.at(static_cast<std::size_t>(n))); }
  Complex orthonormal_star(int n, Complex z) const {
    return phistar.at(static_cast<std::size_t>(n))(z) / std::sqrt(norms.at(static_cast<std::size_t>(n)));
  }

  /// Phi_n(0), i.e. -conj(alpha_{n-1}).
  Complex at_zero(int n) const { return phi.at(static_cast<std::size_t>(n))[0]; }
};

/// Phi_n = z Phi_{n-1} - conj(alpha_{n-1}) Phi*_{n-1},
/// Phi*_n = -alpha_{n-1} z Phi_{n-1} + Phi*_{n-1},
/// chi_n^{-2} = mu_0 prod_{k<=n} (1 - |alpha_{k-1}|^2).
inline SzegoPair szego_from_verblunsky(const VerblunskySequence& a, double mu0 = 1.0) {
  if (!(mu0 > 0.0)) throw DomainError("szego_from_verblunsky: mu_0 must be positive");
  SzegoPair out;
  out.phi.push_back(ComplexPoly{Complex(1.0)});
  out.phistar.push_back(ComplexPoly{Complex(1.0)});
  out.norms.push_back(mu0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Complex alpha = a[k];
    if (!(std::abs(alpha) < 1.0)) throw DomainError("szego_from_verblunsky: |alpha| >= 1");
    const ComplexPoly zphi = out.phi.back().times_z();
    ComplexPoly next = zphi - std::conj(alpha) * out.phistar.back();
    ComplexPoly next_star = out.phistar.back() - alpha * zphi;
    out.phi.push_back(std::move(next));
    out.phistar.push_back(std::move(next_star));
    out.norms.push_back(out.norms.back() * (1.0 - std::norm(alpha)));
  }
  return out;
}

/// Recover alpha_{n-1} = -conj(Phi_n(0)) for n = 1..last().
inline VerblunskySequence verblunsky_of(const SzegoPair& pair) {
  std::vector<Complex> a;
  for (int n = 1; n <= pair.last(); ++n) a.push_back(-std::conj(pair.at_zero(n)));
  return VerblunskySequence(std::move(a));
}

/// tau_n(omega) = Phi_n(omega) / Phi*_n(omega).
inline Complex tau_at(const SzegoPair& pair, Complex omega, int n) {
  const Complex den = pair.phistar.at(static_cast<std::size_t>(n))(omega);
  if (den == Complex(0.0)) throw SingularityError("tau_at: Phi*_n(omega) = 0");
  return pair.phi.at(static_cast<std::size_t>(n))(omega) / den;
}

inline constexpr double kKernelRemainderTol = 1e-12;

/// Monic kernel polynomial P_n(omega; z) = [z Phi_n - omega tau_n Phi*_n] / (z - omega).
/// The division is exact in theory; the remainder is checked, not assumed.
inline ComplexPoly kernel_poly(const SzegoPair& pair, Complex omega, int n) {
  const Complex tau = tau_at(pair, omega, n);
  const auto un = static_cast<std::size_t>(n);
  const ComplexPoly numerator = pair.phi.at(un).times_z() - (omega * tau) * pair.phistar.at(un);
  auto [quotient, remainder] = synthetic_divide(numerator, omega);
  if (std::abs(remainder) > kKernelRemainderTol * std::max(1.0, numerator.max_abs_coeff())) {
    throw ConsistencyError("kernel_poly: nonzero remainder in division by (z - omega)");
  }
  return quotient;
}

/// X_n(z, w) = Phi_n(z) + w Phi*_n(z) for unimodular w.
inline ComplexPoly para_orthogonal(const SzegoPair& pair, int n, Complex w) {
  if (std::abs(std::abs(w) - 1.0) > 1e-12) throw DomainError("para_orthogonal: |w| must be 1");
  const auto un = static_cast<std::size_t>(n);
  return pair.phi.at(un) + w * pair.phistar.at(un);
}

}  // namespace opuc
