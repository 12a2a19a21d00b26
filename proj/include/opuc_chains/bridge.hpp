#pragma once

// The dictionary between a real sequence {c_n} plus a positive chain
// sequence {d_n} and the Verblunsky coefficients of a measure on the
// unit circle.

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chains.hpp"
#include "errors.hpp"
#include "moments.hpp"
#include "opuc.hpp"
#include "poly.hpp"
#include "verblunsky.hpp"

namespace opuc {

/// c_1..c_N, the augmented chain d_1..d_N (with optional jump t) and the
/// derived unimodular tau_0..tau_N, tau_j = tau_{j-1}(1 - i c_j)/(1 + i c_j).
class CDData {
 public:
  CDData() = default;
  CDData(std::vector<double> c, std::vector<double> d, std::optional<double> t = std::nullopt)
      : c_(std::move(c)), d_(std::move(d)), t_(t) {
    if (c_.size() != d_.size()) throw DomainError("CDData: c and d lengths differ");
    for (std::size_t k = 0; k < d_.size(); ++k) {
      if (!(d_[k] > 0.0 && d_[k] < 1.0)) throw NotAChainSequence("CDData: d_" + std::to_string(k + 1) + " outside (0,1)");
    }
    tau_.push_back(Complex(1.0));
    for (double ck : c_) tau_.push_back(tau_.back() * Complex(1.0, -ck) / Complex(1.0, ck));
  }

  /// c == 0 and d taken from an augmented chain realised to depth N.
  template <RealScalar T>
  static CDData from_chain(const AugmentedChain<T>& chain, int N, std::vector<double> c = {}) {
    if (c.empty()) c.assign(static_cast<std::size_t>(N), 0.0);
    std::vector<double> d;
    const auto full = chain.chain();
    for (int n = 1; n <= N; ++n) d.push_back(to_double(full(n)));
    return CDData(std::move(c), std::move(d), to_double(chain.t()));
  }

  int size() const { return static_cast<int>(c_.size()); }
  double c(int n) const { return c_.at(static_cast<std::size_t>(n - 1)); }
  double d(int n) const { return d_.at(static_cast<std::size_t>(n - 1)); }
  Complex tau(int j) const { return tau_.at(static_cast<std::size_t>(j)); }
  const std::vector<double>& c_values() const { return c_; }
  const std::vector<double>& d_values() const { return d_; }
  const std::vector<Complex>& tau_values() const { return tau_; }
  std::optional<double> t() const { return t_; }

  /// prod_{k<=n} (1 + i c_k), the leading coefficient of R_n.
  Complex lead_product(int n) const {
    Complex p = 1.0;
    for (int k = 1; k <= n; ++k) p *= Complex(1.0, c(k));
    return p;
  }

 private:
  std::vector<double> c_;
  std::vector<double> d_;
  std::optional<double> t_;
  std::vector<Complex> tau_;
};

enum class RnVariant { R, Q };

/// R_0..R_N (or the numerator polynomials Q_0..Q_N) from
/// X_{n+1} = [(1 + i c_{n+1}) z + (1 - i c_{n+1})] X_n - 4 d_{n+1} z X_{n-1}.
inline std::vector<ComplexPoly> rn_sequence(const CDData& cd, int N, RnVariant variant = RnVariant::R) {
  if (N > cd.size()) throw RangeError("rn_sequence: CDData shorter than N");
  std::vector<ComplexPoly> out;
  if (variant == RnVariant::R) {
    out.push_back(ComplexPoly{Complex(1.0)});
    if (N >= 1) out.push_back(ComplexPoly{Complex(1.0, -cd.c(1)), Complex(1.0, cd.c(1))});
  } else {
    out.push_back(ComplexPoly{});
    if (N >= 1) out.push_back(ComplexPoly{Complex(1.0)});
  }
  for (int n = 1; n < N; ++n) {
    const double cn = cd.c(n + 1);
    const ComplexPoly linear{Complex(1.0, -cn), Complex(1.0, cn)};
    const auto un = static_cast<std::size_t>(n);
    out.push_back(linear * out[un] - Complex(4.0 * cd.d(n + 1)) * out[un - 1].times_z());
  }
  return out;
}

/// Same recurrence with c == 0 on any real backend; d holds d_1..d_N
/// (d_1 is not used by the recurrence).
template <RealScalar T>
std::vector<Poly<T>> rn_sequence_real(const std::vector<T>& d, int N, RnVariant variant = RnVariant::R) {
  if (N > static_cast<int>(d.size())) throw RangeError("rn_sequence_real: chain shorter than N");
  std::vector<Poly<T>> out;
  if (variant == RnVariant::R) {
    out.push_back(Poly<T>{T(1)});
    if (N >= 1) out.push_back(Poly<T>{T(1), T(1)});
  } else {
    out.push_back(Poly<T>{});
    if (N >= 1) out.push_back(Poly<T>{T(1)});
  }
  const Poly<T> linear{T(1), T(1)};
  for (int n = 1; n < N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    out.push_back(linear * out[un] - (T(4) * d[un]) * out[un - 1].times_z());
  }
  return out;
}

struct CDExtraction {
  CDData cd;
  ParameterSequence<double> g;  // g_0 = 0, g_1..g_N
};

/// c_n = -Im(tau_{n-1} alpha_{n-1}) / (1 - Re(tau_{n-1} alpha_{n-1})),
/// g_n = |1 - tau_{n-1} alpha_{n-1}|^2 / (2 (1 - Re(tau_{n-1} alpha_{n-1}))),
/// d_1 = g_1, d_{n+1} = (1 - g_n) g_{n+1}.
inline CDExtraction cd_from_verblunsky(const VerblunskySequence& a) {
  std::vector<double> c, g{0.0};
  Complex tau = 1.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Complex w = tau * a[k];
    const double denom = 1.0 - w.real();
    if (!(denom > 1e-300)) throw DegenerateMeasure("cd_from_verblunsky: tau_{n-1} alpha_{n-1} = 1");
    const double cn = -w.imag() / denom;
    c.push_back(cn);
    g.push_back(0.5 * std::norm(1.0 - w) / denom);
    tau *= Complex(1.0, -cn) / Complex(1.0, cn);
  }
  std::vector<double> d;
  for (std::size_t n = 1; n < g.size(); ++n) d.push_back((1.0 - g[n - 1]) * g[n]);
  return {CDData(std::move(c), std::move(d)), ParameterSequence<double>(std::move(g), ParamRole::Minimal)};
}

namespace detail {

inline Complex verblunsky_from_parameter(const CDData& cd, int n, double param) {
  if (!(param > 0.0 && param < 1.0)) {
    throw InconsistentParameters("parameter " + std::to_string(n) + " outside (0,1)");
  }
  const double cn = cd.c(n);
  const Complex v = std::conj(cd.tau(n)) * Complex(1.0 - 2.0 * param, -cn) / Complex(1.0, cn);
  if (!(std::abs(v) < 1.0)) throw InconsistentParameters("Verblunsky coefficient of modulus >= 1");
  return v;
}

}  // namespace detail

inline constexpr double kChainMatchTol = 1e-9;

/// alpha_{n-1} = conj(tau_n) (1 - 2 m_n - i c_n) / (1 + i c_n), n = 1..N.
/// m must be the minimal parameter sequence of cd's chain; this is checked.
template <RealScalar T>
VerblunskySequence alpha_from_params(const CDData& cd, const ParameterSequence<T>& m) {
  const int N = std::min(cd.size(), m.last());
  if (to_double(m[0]) != 0.0) throw InconsistentParameters("alpha_from_params: m_0 must be 0");
  std::vector<Complex> alpha;
  for (int n = 1; n <= N; ++n) {
    const double mn = to_double(m[n]);
    const double dn = (1.0 - to_double(m[n - 1])) * mn;
    if (std::abs(dn - cd.d(n)) > kChainMatchTol * std::max(1.0, cd.d(n))) {
      throw InconsistentParameters("alpha_from_params: parameters do not reproduce d_" + std::to_string(n));
    }
    alpha.push_back(detail::verblunsky_from_parameter(cd, n, mn));
  }
  return VerblunskySequence(std::move(alpha));
}

/// Phi_n = [R_n - 2(1 - m_n) R_{n-1}] / prod_{k<=n}(1 + i c_k), n = 1..N.
template <RealScalar T>
SzegoPair szego_from_rn(const std::vector<ComplexPoly>& R, const ParameterSequence<T>& m, const CDData& cd, double mu0 = 1.0) {
  const int N = static_cast<int>(R.size()) - 1;
  if (m.last() < N || cd.size() < N) throw RangeError("szego_from_rn: length mismatch");
  SzegoPair out;
  out.phi.push_back(ComplexPoly{Complex(1.0)});
  out.phistar.push_back(ComplexPoly{Complex(1.0)});
  out.norms.push_back(mu0);
  for (int n = 1; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const double mn = to_double(m[n]);
    ComplexPoly phi = (R[un] - Complex(2.0 * (1.0 - mn)) * R[un - 1]) / cd.lead_product(n);
    out.phistar.push_back(reversed_star(phi, n));
    out.norms.push_back(out.norms.back() * (1.0 - std::norm(phi[0])));
    out.phi.push_back(std::move(phi));
  }
  return out;
}

/// c == 0 specialisation on any real backend: Phi_n = R_n - 2(1 - m_n) R_{n-1}.
template <RealScalar T>
std::vector<Poly<T>> szego_from_rn_real(const std::vector<Poly<T>>& R, const ParameterSequence<T>& m) {
  const int N = static_cast<int>(R.size()) - 1;
  if (m.last() < N) throw RangeError("szego_from_rn_real: parameters shorter than R");
  std::vector<Poly<T>> phi{Poly<T>{T(1)}};
  for (int n = 1; n <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    phi.push_back(R[un] - (T(2) * (T(1) - m[n])) * R[un - 1]);
  }
  return phi;
}

/// Moments of mu^(t) = (1-t)/(1-eps) mu + (t-eps)/(1-eps) delta_1, where eps
/// is the point mass mu already carries at z = 1 (zero in the usual case).
inline MomentMeasure uvarov_moments(const MomentMeasure& m0, double t) {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("uvarov_moments: t outside [0,1)");
  const double eps = m0.point_mass();
  const double scale = (1.0 - t) / (1.0 - eps);
  const double shift = (t - eps) / (1.0 - eps);
  std::vector<Complex> mu;
  mu.reserve(m0.moments().size());
  for (const auto& v : m0.moments()) mu.push_back(scale * v + shift);
  WeightFn w;
  if (m0.weight()) {
    w = [inner = m0.weight(), scale](double theta) { return scale * inner(theta); };
  }
  return MomentMeasure(std::move(mu), std::move(w), t);
}

}  // namespace opuc
