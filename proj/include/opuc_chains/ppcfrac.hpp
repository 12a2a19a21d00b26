#pragma once

// Positive Perron-Caratheodory continued fractions
//
//   delta_0 - 2 delta_0/1 + 1/(conj(delta_1) z) + (1-|delta_1|^2) z/delta_1
//           + 1/(conj(delta_2) z) + (1-|delta_2|^2) z/delta_2 + ...
//
// their approximants, the Schur-like extraction of the parameters from a
// Caratheodory function, and the second-kind polynomials.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "moments.hpp"
#include "opuc.hpp"
#include "poly.hpp"
#include "verblunsky.hpp"

namespace opuc {

/// delta_0 > 0 and delta_1..delta_N strictly inside the unit disk.
/// The delta_n are the Schur parameters Phi_n(0) = -conj(alpha_{n-1}).
class PPCFraction {
 public:
  PPCFraction(double delta0, std::vector<Complex> delta) : delta0_(delta0), delta_(std::move(delta)) {
    if (!(delta0_ > 0.0)) throw DomainError("PPCFraction: delta_0 must be positive");
    for (std::size_t k = 0; k < delta_.size(); ++k) {
      if (!(std::abs(delta_[k]) < 1.0)) throw DomainError("PPCFraction: |delta_" + std::to_string(k + 1) + "| >= 1");
    }
  }

  static PPCFraction from_verblunsky(const VerblunskySequence& a, double mu0 = 1.0) {
    std::vector<Complex> d;
    for (const auto& v : a.values()) d.push_back(-std::conj(v));
    return PPCFraction(mu0, std::move(d));
  }

  double delta0() const { return delta0_; }
  /// delta_k for k >= 1.
  Complex delta(int k) const { return delta_.at(static_cast<std::size_t>(k - 1)); }
  int size() const { return static_cast<int>(delta_.size()); }

  VerblunskySequence verblunsky() const {
    std::vector<Complex> a;
    for (const auto& d : delta_) a.push_back(-std::conj(d));
    return VerblunskySequence(std::move(a));
  }

 private:
  double delta0_;
  std::vector<Complex> delta_;
};

struct Approximant {
  ComplexPoly P;  // numerator
  ComplexPoly Q;  // denominator
};

/// Approximants 0..M via A_m = b_m A_{m-1} + a_m A_{m-2} with
/// b_0 = delta_0; (a_1, b_1) = (-2 delta_0, 1); (a_{2k}, b_{2k}) = (1, conj(delta_k) z);
/// (a_{2k+1}, b_{2k+1}) = ((1 - |delta_k|^2) z, delta_k).
inline std::vector<Approximant> ppc_approximants(const PPCFraction& f, int M) {
  if (M > 2 * f.size() + 1) throw RangeError("ppc_approximants: M exceeds 2N+1");
  ComplexPoly Pm2{Complex(1.0)}, Qm2{};  // index -1
  ComplexPoly Pm1{Complex(f.delta0())}, Qm1{Complex(1.0)};
  std::vector<Approximant> out{{Pm1, Qm1}};
  for (int m = 1; m <= M; ++m) {
    ComplexPoly a, b;
    if (m == 1) {
      a = ComplexPoly{Complex(-2.0 * f.delta0())};
      b = ComplexPoly{Complex(1.0)};
    } else if (m % 2 == 0) {
      const Complex dk = f.delta(m / 2);
      a = ComplexPoly{Complex(1.0)};
      b = ComplexPoly{Complex(0.0), std::conj(dk)};
    } else {
      const Complex dk = f.delta((m - 1) / 2);
      a = ComplexPoly{Complex(0.0), Complex(1.0 - std::norm(dk))};
      b = ComplexPoly{dk};
    }
    ComplexPoly P = b * Pm1 + a * Pm2;
    ComplexPoly Q = b * Qm1 + a * Qm2;
    Pm2 = std::move(Pm1);
    Qm2 = std::move(Qm1);
    Pm1 = P;
    Qm1 = Q;
    out.push_back({std::move(P), std::move(Q)});
  }
  return out;
}

inline constexpr int kRationalDegreeCap = 64;

/// num/den kept in lowest terms with den(0) = 1 whenever den(0) != 0.
/// On the exact backend common factors are removed with a polynomial gcd;
/// on floating point only common powers of z (below tol) are cancelled.
template <Scalar T>
class RationalFn {
 public:
  RationalFn() : num_(), den_{T(1)} {}
  RationalFn(Poly<T> num, Poly<T> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("RationalFn: zero denominator");
    normalize();
  }

  const Poly<T>& num() const { return num_; }
  const Poly<T>& den() const { return den_; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  template <class U>
  auto operator()(const U& z) const {
    return num_(z) / den_(z);
  }

  T value_at_zero() const {
    if (is_exact_zero(den_[0])) throw ExtractionSingular("RationalFn: pole at 0");
    return num_[0] / den_[0];
  }

  /// (num'(0) den(0) - num(0) den'(0)) / den(0)^2
  T derivative_at_zero() const {
    if (is_exact_zero(den_[0])) throw ExtractionSingular("RationalFn: pole at 0");
    return (num_[1] * den_[0] - num_[0] * den_[1]) / (den_[0] * den_[0]);
  }

  /// Taylor coefficients 0..K about z = 0.
  std::vector<T> taylor(std::size_t K) const {
    return series_mul(num_.coeffs(), series_reciprocal(den_.coeffs(), K), K);
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly<T>{T(1)};
      return;
    }
    if constexpr (is_exact_v<T>) {
      const auto g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
    } else {
      const double tol = 1e-13 * std::max(num_.max_abs_coeff(), den_.max_abs_coeff());
      int shift = 0;
      while (shift < num_.degree() && shift < den_.degree() && magnitude(num_[shift]) <= tol && magnitude(den_[shift]) <= tol) ++shift;
      if (shift > 0) {
        num_ = Poly<T>(std::vector<T>(num_.coeffs().begin() + shift, num_.coeffs().end()));
        den_ = Poly<T>(std::vector<T>(den_.coeffs().begin() + shift, den_.coeffs().end()));
      }
    }
    const T scale = is_exact_zero(den_[0]) ? den_.leading() : den_[0];
    num_ /= scale;
    den_ /= scale;
  }

  Poly<T> num_;
  Poly<T> den_;
};

/// gamma_0 = C(0), C_1 = (gamma_0 - C)/(gamma_0 + C), and for k >= 1
/// C_{k+1} = (gamma_k z - C_k)/(gamma_k C_k - z) with gamma_k = C_k'(0).
/// Returns gamma_0..gamma_N.
template <Scalar T>
std::vector<T> schur_extract(const RationalFn<T>& C, int N, int degree_cap = kRationalDegreeCap) {
  std::vector<T> gamma;
  const T g0 = C.value_at_zero();
  if constexpr (is_complex_v<T>) {
    if (!(g0.real() > 0.0)) throw ExtractionSingular("schur_extract: C(0) must be positive");
  } else {
    if (!(g0 > T(0))) throw ExtractionSingular("schur_extract: C(0) must be positive");
  }
  gamma.push_back(g0);
  if (N == 0) return gamma;
  const auto& p0 = C.num();
  const auto& q0 = C.den();
  RationalFn<T> Ck(g0 * q0 - p0, g0 * q0 + p0);
  for (int k = 1; k <= N; ++k) {
    if (Ck.degree() > degree_cap) throw DegreeCapError("schur_extract: degree cap exceeded");
    if (is_exact_zero(Ck.den()[0])) throw ExtractionSingular("schur_extract: C_" + std::to_string(k) + " singular at 0");
    const T gk = Ck.derivative_at_zero();
    gamma.push_back(gk);
    if (k == N) break;
    const auto& p = Ck.num();
    const auto& q = Ck.den();
    Poly<T> next_den = gk * p - q.times_z();
    if (next_den.is_zero()) throw ExtractionSingular("schur_extract: C_" + std::to_string(k + 1) + " has a vanishing denominator");
    Ck = RationalFn<T>(gk * q.times_z() - p, std::move(next_den));
  }
  return gamma;
}

/// Taylor coefficients of the Caratheodory function: mu_0, 2 mu_1, ..., 2 mu_K.
inline std::vector<Complex> caratheodory_taylor(const MomentMeasure& m, int K) {
  if (K > m.order()) throw RangeError("caratheodory_taylor: not enough moments");
  std::vector<Complex> out{m[0]};
  for (int k = 1; k <= K; ++k) out.push_back(2.0 * m[k]);
  return out;
}

/// Second-kind polynomials Psi_0..Psi_N: mu_0 times the monic OPUC of -alpha.
/// Normalised so that C(z) - Psi*_n/Phi*_n = O(z^{n+1}); in terms of the PPC
/// fraction with delta_0 = mu_0 this means P_{2n} = Psi*_n and P_{2n+1} = -Psi_n.
inline std::vector<ComplexPoly> second_kind(const VerblunskySequence& a, double mu0 = 1.0) {
  std::vector<Complex> neg;
  for (const auto& v : a.values()) neg.push_back(-v);
  const auto pair = szego_from_verblunsky(VerblunskySequence(std::move(neg)), mu0);
  std::vector<ComplexPoly> out;
  for (const auto& p : pair.phi) out.push_back(Complex(mu0) * p);
  return out;
}

}  // namespace opuc
