#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "verblunsky.hpp"

namespace opuc {

using WeightFn = std::function<double(double)>;

/// Moments mu_0..mu_K of a probability measure on the unit circle, with
/// mu_{-k} = conj(mu_k) implied. Optionally carries the density it came
/// from and the size of a point mass at z = 1.
class MomentMeasure {
 public:
  MomentMeasure() = default;
  explicit MomentMeasure(std::vector<Complex> mu, WeightFn weight = {}, double point_mass_t = 0.0)
      : mu_(std::move(mu)), weight_(std::move(weight)), point_mass_t_(point_mass_t) {
    if (mu_.empty()) throw DomainError("MomentMeasure: no moments");
    if (!(mu_[0].real() > 0.0) || std::abs(mu_[0].imag()) > 1e-12 * mu_[0].real()) {
      throw DomainError("MomentMeasure: mu_0 must be real and positive");
    }
    mu_[0] = Complex(mu_[0].real(), 0.0);
  }

  /// Highest available moment index K.
  int order() const { return static_cast<int>(mu_.size()) - 1; }
  const std::vector<Complex>& moments() const { return mu_; }
  const WeightFn& weight() const { return weight_; }
  double point_mass() const { return point_mass_t_; }

  /// mu_k for any |k| <= order().
  Complex operator[](int k) const {
    const int a = k < 0 ? -k : k;
    if (a > order()) throw RangeError("MomentMeasure: moment index beyond available order");
    const Complex v = mu_[static_cast<std::size_t>(a)];
    return k < 0 ? std::conj(v) : v;
  }

  /// Integral of z^j against the measure (z = e^{i theta}), i.e. mu_{-j}.
  Complex integral_of_power(int j) const { return (*this)[-j]; }

  /// Integral of z^shift * p(z) against the measure.
  Complex integrate(const ComplexPoly& p, int shift = 0) const {
    Complex acc = 0.0;
    for (int k = 0; k <= p.degree(); ++k) acc += p[k] * integral_of_power(k + shift);
    return acc;
  }

 private:
  std::vector<Complex> mu_;
  WeightFn weight_;
  double point_mass_t_ = 0.0;
};

/// Periodic trapezoid rule for mu_k = (1/2pi) int w(theta) e^{-ik theta} dtheta,
/// k = 0..K. The weight is supplied without the 1/(2pi) factor.
inline std::vector<Complex> trapezoid_moments(const WeightFn& weight, int K, int panels) {
  if (K < 0) throw DomainError("trapezoid_moments: negative order");
  if (panels < 4 * (K + 1)) throw UndersamplingError("trapezoid_moments: need panels >= 4(K+1)");
  std::vector<double> samples(static_cast<std::size_t>(panels));
  for (int j = 0; j < panels; ++j) {
    samples[static_cast<std::size_t>(j)] = weight(2.0 * std::numbers::pi * j / panels);
  }
  std::vector<Complex> mu(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) {
    Complex acc = 0.0;
    for (int j = 0; j < panels; ++j) {
      // Reduce k*j mod panels before forming the angle to keep it exact.
      const long long r = (static_cast<long long>(k) * j) % panels;
      acc += samples[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(r) / panels);
    }
    mu[static_cast<std::size_t>(k)] = acc / static_cast<double>(panels);
  }
  return mu;
}

inline MomentMeasure measure_from_weight(const WeightFn& weight, int K, int panels) {
  return MomentMeasure(trapezoid_moments(weight, K, panels), weight);
}

/// Delta_0..Delta_n with Delta_j = det{mu_{r-c}}_{r,c=0..j}, by Gaussian
/// elimination with partial pivoting on each section. Real parts returned.
inline std::vector<double> toeplitz_dets(const MomentMeasure& m, int n) {
  if (n > m.order()) throw RangeError("toeplitz_dets: not enough moments");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int size = 1; size <= n + 1; ++size) {
    const auto s = static_cast<std::size_t>(size);
    std::vector<Complex> a(s * s);
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) a[static_cast<std::size_t>(r) * s + static_cast<std::size_t>(c)] = m[r - c];
    }
    Complex det = 1.0;
    for (std::size_t col = 0; col < s; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < s; ++r) {
        if (std::abs(a[r * s + col]) > std::abs(a[piv * s + col])) piv = r;
      }
      if (a[piv * s + col] == Complex(0.0)) {
        det = 0.0;
        break;
      }
      if (piv != col) {
        for (std::size_t c = 0; c < s; ++c) std::swap(a[piv * s + c], a[col * s + c]);
        det = -det;
      }
      det *= a[col * s + col];
      for (std::size_t r = col + 1; r < s; ++r) {
        const Complex f = a[r * s + col] / a[col * s + col];
        for (std::size_t c = col; c < s; ++c) a[r * s + c] -= f * a[col * s + c];
      }
    }
    out.push_back(det.real());
  }
  return out;
}

/// Verblunsky coefficients alpha_0..alpha_{N-1} of the measure, by the
/// Szego recursion driven directly by the moments.
inline VerblunskySequence levinson_verblunsky(const MomentMeasure& m, int N) {
  if (N > m.order()) throw RangeError("levinson_verblunsky: need moments up to index N");
  ComplexPoly phi{Complex(1.0)};
  ComplexPoly phistar{Complex(1.0)};
  double energy = m[0].real();
  std::vector<Complex> alpha;
  alpha.reserve(static_cast<std::size_t>(N));
  for (int n = 0; n < N; ++n) {
    // <z Phi_n, 1> = conj(alpha_n) * ||Phi_n||^2
    const Complex s = m.integrate(phi, 1);
    const Complex a = std::conj(s) / energy;
    if (!(std::abs(a) < 1.0)) {
      throw DegenerateMeasure("levinson_verblunsky: |alpha_" + std::to_string(n) + "| >= 1");
    }
    alpha.push_back(a);
    ComplexPoly next = phi.times_z() - std::conj(a) * phistar;
    ComplexPoly next_star = phistar - a * phi.times_z();
    phi = std::move(next);
    phistar = std::move(next_star);
    energy *= 1.0 - std::norm(a);
  }
  return VerblunskySequence(std::move(alpha));
}

/// Cesaro mean (1/(N+1)) sum_{k<=N} Re mu_k, which tends to the mass at z = 1.
inline double point_mass_estimate(const MomentMeasure& m, int N) {
  if (N > m.order()) throw RangeError("point_mass_estimate: need moments up to index N");
  double acc = 0.0;
  for (int k = 0; k <= N; ++k) acc += m[k].real();
  return acc / (N + 1);
}

}  // namespace opuc
