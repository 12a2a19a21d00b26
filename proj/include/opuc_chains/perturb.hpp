#pragma once

// Verblunsky coefficients of the complementary chain sequence and the
// Aleksandrov phase rotations they realise.

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "bridge.hpp"
#include "chains.hpp"
#include "moments.hpp"
#include "poly.hpp"
#include "verblunsky.hpp"

namespace opuc {

/// beta_{n-1} = conj(tau_n) (1 - 2 k_n - i c_n) / (1 + i c_n), where k is the
/// minimal parameter sequence of the complementary chain.
template <RealScalar T>
VerblunskySequence complementary_verblunsky(const CDData& cd, const ParameterSequence<T>& k) {
  const int N = std::min(cd.size(), k.last());
  std::vector<Complex> beta;
  for (int n = 1; n <= N; ++n) beta.push_back(detail::verblunsky_from_parameter(cd, n, to_double(k[n])));
  return VerblunskySequence(std::move(beta));
}

/// alpha_k -> e^{i phase} alpha_k.
inline VerblunskySequence aleksandrov_rotate(const VerblunskySequence& a, double phase) {
  const Complex rot = std::polar(1.0, phase);
  std::vector<Complex> out;
  out.reserve(a.size());
  for (const auto& v : a.values()) out.push_back(rot * v);
  return VerblunskySequence(std::move(out));
}

/// Moments of the Aleksandrov measure whose Verblunsky coefficients are
/// e^{i phase} times those of m. Works on the Caratheodory function
/// F = mu_0 + 2 sum mu_k z^k of the normalised measure:
///   F_phase = [(1 - lb) + (1 + lb) F] / [(1 + lb) + (1 - lb) F],  lb = e^{i phase}.
/// Phase pi gives 1/F (second-kind polynomials).
inline MomentMeasure aleksandrov_moments(const MomentMeasure& m, double phase) {
  const auto K = static_cast<std::size_t>(m.order());
  const double mu0 = m[0].real();
  std::vector<Complex> F(K + 1);
  F[0] = 1.0;
  for (std::size_t k = 1; k <= K; ++k) F[k] = 2.0 * m.moments()[k] / mu0;
  const Complex lb = std::polar(1.0, phase);
  std::vector<Complex> num(K + 1), den(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    num[k] = (1.0 + lb) * F[k];
    den[k] = (1.0 - lb) * F[k];
  }
  num[0] += 1.0 - lb;
  den[0] += 1.0 + lb;
  const auto Fa = series_mul(num, series_reciprocal(den, K), K);
  std::vector<Complex> mu(K + 1);
  mu[0] = mu0 * Fa[0].real();
  for (std::size_t k = 1; k <= K; ++k) mu[k] = mu0 * Fa[k] / 2.0;
  return MomentMeasure(std::move(mu));
}

struct PerturbationReport {
  VerblunskySequence alpha;
  VerblunskySequence beta;
  std::vector<double> relation_residuals;  // |beta_{n-1} + conj(tau_n tau_{n-1} alpha_{n-1})|
  std::optional<double> mass_alpha;
  std::optional<double> mass_beta;

  double max_residual() const {
    double r = 0.0;
    for (double v : relation_residuals) r = std::max(r, v);
    return r;
  }
};

inline constexpr int kCesaroHorizon = 5000;
inline constexpr double kCesaroTol = 0.02;

/// Checks beta_{n-1} = -conj(tau_n) conj(tau_{n-1}) conj(alpha_{n-1}) termwise
/// and, when moments0 reaches the Cesaro horizon, estimates the point masses
/// at z = 1 of mu^(t) (Uvarov moments) and nu^(t) (its phase-pi Aleksandrov
/// measure).
template <RealScalar T>
PerturbationReport complement_perturbation_check(const CDData& cd, const ParameterSequence<T>& m, const ParameterSequence<T>& k,
                                   const std::optional<MomentMeasure>& moments0, double t,
                                   int cesaro_horizon = kCesaroHorizon) {
  PerturbationReport rep;
  rep.alpha = alpha_from_params(cd, m);
  rep.beta = complementary_verblunsky(cd, k);
  const std::size_t n = std::min(rep.alpha.size(), rep.beta.size());
  for (std::size_t j = 1; j <= n; ++j) {
    const Complex predicted = -std::conj(cd.tau(static_cast<int>(j))) * std::conj(cd.tau(static_cast<int>(j) - 1)) * std::conj(rep.alpha[j - 1]);
    rep.relation_residuals.push_back(std::abs(rep.beta[j - 1] - predicted));
  }
  if (moments0 && moments0->order() >= cesaro_horizon) {
    const auto mu_t = uvarov_moments(*moments0, t);
    rep.mass_alpha = point_mass_estimate(mu_t, cesaro_horizon);
    rep.mass_beta = point_mass_estimate(aleksandrov_moments(mu_t, std::numbers::pi), cesaro_horizon);
  }
  return rep;
}

}  // namespace opuc
