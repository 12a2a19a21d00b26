#pragma once

// Two closed-form families: the Caratheodory family with parameter sigma
// (C(z) = (1-z)/(1+(1-2 sigma) z)) and the circular Jacobi family with
// parameter lambda, built from terminating Gauss hypergeometric sums.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "bridge.hpp"
#include "chains.hpp"
#include "errors.hpp"
#include "hypergeometric.hpp"
#include "moments.hpp"
#include "poly.hpp"
#include "ppcfrac.hpp"
#include "verblunsky.hpp"

namespace opuc {

enum class Branch { Primary, Complement };

inline const char* to_string(Branch b) { return b == Branch::Primary ? "primary" : "complement"; }

template <RealScalar T>
class CaratFamily {
 public:
  explicit CaratFamily(T sigma) : sigma_(std::move(sigma)) {
    if (!(sigma_ > T(0) && sigma_ < T(1))) throw DomainError("CaratFamily: sigma outside (0,1)");
    shift_ = sigma_ / (T(1) - sigma_);
  }

  const T& sigma() const { return sigma_; }

  /// gamma_n = 1/(n + sigma/(1-sigma)), n >= 1.
  T gamma(int n) const {
    check_index(n, "gamma");
    return T(1) / (T(n) + shift_);
  }
  /// delta_n = -gamma_n; satisfies delta_{n+1} - delta_n = delta_n delta_{n+1}.
  T delta(int n) const { return -gamma(n); }

  /// Minimal parameters of the primary chain: m_0 = 0, m_n = (1 + gamma_n)/2.
  T m(int n) const { return n == 0 ? T(0) : (T(1) + gamma(n)) / T(2); }
  /// Minimal parameters of the complementary chain: k_0 = 0, k_n = (1 - gamma_n)/2.
  T k(int n) const { return n == 0 ? T(0) : (T(1) - gamma(n)) / T(2); }

  T d(int n) const {
    check_index(n, "d");
    return (T(1) - m(n - 1)) * m(n);
  }
  /// a_1 = sigma/2, a_n = 1/4 for n >= 2.
  T a(int n) const {
    check_index(n, "a");
    return (T(1) - k(n - 1)) * k(n);
  }

  ChainSequence<T> chain() const {
    const CaratFamily self = *this;
    return ChainSequence<T>([self](int n) { return self.d(n); });
  }
  ChainSequence<T> complement_chain() const {
    const CaratFamily self = *this;
    return ChainSequence<T>([self](int n) { return self.a(n); });
  }

  ParameterSequence<T> minimal(int N, Branch branch = Branch::Primary) const {
    std::vector<T> g;
    for (int n = 0; n <= N; ++n) g.push_back(branch == Branch::Primary ? m(n) : k(n));
    return ParameterSequence<T>(std::move(g), ParamRole::Minimal);
  }

  /// With c == 0, alpha_{n-1} = 1 - 2 m_n: -gamma_n on the primary branch,
  /// +gamma_n on the complement.
  VerblunskySequence verblunsky(int N, Branch branch = Branch::Primary) const {
    std::vector<Complex> out;
    for (int n = 1; n <= N; ++n) out.push_back(to_complex(branch == Branch::Primary ? -gamma(n) : gamma(n)));
    return VerblunskySequence(std::move(out));
  }

  /// R_n = 1 + sum_{k=1}^n [1 + 2k(n-k) delta_1 delta_n] z^k.
  Poly<T> R_closed(int n) const {
    if (n < 0) throw DomainError("R_closed: negative n");
    if (n == 0) return Poly<T>{T(1)};
    const T dd = delta(1) * delta(n);
    std::vector<T> c{T(1)};
    for (int j = 1; j <= n; ++j) c.push_back(T(1) + T(2 * j * (n - j)) * dd);
    return Poly<T>(std::move(c));
  }

  /// Primary: z^n - delta_n sum_{k<n} (1 - 2k delta_1) z^k.
  /// Complement: z^n + delta_n sum_{k<n} z^k.
  Poly<T> phi_closed(int n, Branch branch) const {
    check_index(n, "phi_closed");
    std::vector<T> c;
    const T dn = delta(n);
    for (int j = 0; j < n; ++j) {
      c.push_back(branch == Branch::Primary ? -dn * (T(1) - T(2 * j) * delta(1)) : dn);
    }
    c.push_back(T(1));
    return Poly<T>(std::move(c));
  }

  /// Primary (1-z)/(1+(1-2 sigma)z); the complement is its reciprocal.
  RationalFn<T> caratheodory(Branch branch) const {
    const Poly<T> p{T(1), T(-1)};
    const Poly<T> q{T(1), T(1) - T(2) * sigma_};
    return branch == Branch::Primary ? RationalFn<T>(p, q) : RationalFn<T>(q, p);
  }

  /// mu_0 = 1; primary mu_k = (-1)^k (1-sigma)(1-2 sigma)^{k-1}, complement mu_k = 1 - sigma.
  std::vector<T> moments_exact(int K, Branch branch) const {
    if (K < 0) throw DomainError("moments: negative K");
    std::vector<T> mu{T(1)};
    T power = T(1);
    for (int j = 1; j <= K; ++j) {
      if (branch == Branch::Primary) {
        const T sign = (j % 2 == 0) ? T(1) : T(-1);
        mu.push_back(sign * (T(1) - sigma_) * power);
        power *= T(1) - T(2) * sigma_;
      } else {
        mu.push_back(T(1) - sigma_);
      }
    }
    return mu;
  }

  MomentMeasure moments(int K, Branch branch) const {
    std::vector<Complex> mu;
    for (const auto& v : moments_exact(K, branch)) mu.push_back(to_complex(v));
    return MomentMeasure(std::move(mu));
  }

  /// ||Phi_n||^2 = sigma (1 + gamma_n); equals prod_{k<=n} (1 - gamma_k^2).
  T norm(int n) const {
    check_index(n, "norm");
    return sigma_ * (T(1) + gamma(n));
  }

  /// Residuals of sum_{j<=n} delta_j delta_{j+1} = delta_{n+1} - delta_1 and
  /// delta_n = delta_{n+k}/(1 + k delta_{n+k}).
  std::pair<T, T> delta_identities(int n, int kk) const {
    check_index(n, "delta_identities");
    check_index(kk, "delta_identities");
    T sum = T(0);
    for (int j = 1; j <= n; ++j) sum += delta(j) * delta(j + 1);
    const T r1 = sum - (delta(n + 1) - delta(1));
    const T r2 = delta(n) - delta(n + kk) / (T(1) + T(kk) * delta(n + kk));
    return {r1, r2};
  }

  /// The primary chain has minimal parameters above 1/2, so it is an SPPCS;
  /// its complement is not.
  SppcsVerdict analytic_sppcs(Branch branch) const {
    return branch == Branch::Primary ? SppcsVerdict::Divergent : SppcsVerdict::Convergent;
  }

 private:
  static void check_index(int n, const char* what) {
    if (n < 1) throw DomainError(std::string(what) + ": index must be >= 1");
  }

  T sigma_;
  T shift_;
};

/// Sequences of the circular Jacobi family realised to a fixed depth.
template <RealScalar T>
struct CJObjects {
  std::vector<T> chain;           // d_1..d_N of the t = 0 augmentation
  std::vector<T> m;               // minimal parameters of {d_{n+1}}: index 0..N
  std::vector<T> M;               // maximal parameters M_1..M_{N+1} of {d_{n+1}}
  std::vector<T> a_complement;    // a_1..a_N
  VerblunskySequence alpha0;      // alpha_0..alpha_{N-1}
  std::vector<Poly<T>> phi0;      // Phi_0..Phi_N at t = 0
  WeightFn weight;                // theta -> tau sin^{2 lambda}(theta/2)
};

template <RealScalar T>
class HyperFamily {
 public:
  explicit HyperFamily(T lam) : lam_(std::move(lam)) {
    if (!(lam_ > T(-1) / T(2))) throw DomainError("HyperFamily: lambda must exceed -1/2");
  }

  const T& lambda() const { return lam_; }
  T b() const { return lam_ + T(1); }
  T c() const { return T(2) * lam_ + T(2); }

  /// d_{n+1} = n(2 lambda + n + 1) / (4 (lambda + n)(lambda + n + 1)), n >= 1.
  T base(int n) const {
    check_index(n, "base");
    return T(n) * (T(2) * lam_ + T(n + 1)) / (T(4) * (lam_ + T(n)) * (lam_ + T(n + 1)));
  }
  /// Minimal parameters of {d_{n+1}}: n / (2(lambda + n + 1)).
  T base_minimal(int n) const { return T(n) / (T(2) * (lam_ + T(n + 1))); }
  /// M_n = (2 lambda + n) / (2(lambda + n)), n >= 1; M_1 is the g_0 of the maximal sequence.
  T M(int n) const {
    check_index(n, "M");
    return (T(2) * lam_ + T(n)) / (T(2) * (lam_ + T(n)));
  }

  ChainSequence<T> base_chain() const {
    const HyperFamily self = *this;
    return ChainSequence<T>([self](int n) { return self.base(n); });
  }
  AugmentedChain<T> augmented(const T& t) const { return AugmentedChain<T>(base_chain(), M(1), t); }

  /// k_n = 1 - m_n^(0) = n/(2(lambda + n)).
  T k(int n) const { return T(n) / (T(2) * (lam_ + T(n))); }
  /// a_1 = 1/(2 lambda + 2), a_{n+1} = (n+1)(2 lambda + n) / (4(lambda + n)(lambda + n + 1)).
  T a(int n) const {
    check_index(n, "a");
    if (n == 1) return T(1) / (T(2) * lam_ + T(2));
    const int j = n - 1;
    return T(j + 1) * (T(2) * lam_ + T(j)) / (T(4) * (lam_ + T(j)) * (lam_ + T(j + 1)));
  }
  ChainSequence<T> complement_chain() const {
    const HyperFamily self = *this;
    return ChainSequence<T>([self](int n) { return self.a(n); });
  }
  ParameterSequence<T> complement_params(int N) const {
    std::vector<T> g;
    for (int n = 0; n <= N; ++n) g.push_back(k(n));
    return ParameterSequence<T>(std::move(g), ParamRole::Minimal);
  }

  /// alpha^(0)_{n-1} = -lambda/(lambda + n).
  T alpha0(int n) const {
    check_index(n, "alpha0");
    return -lam_ / (lam_ + T(n));
  }

  /// Phi^(0)_n = ((2 lambda + 1)_n / (lambda + 1)_n) F(-n, lambda + 1; 2 lambda + 1; 1 - z).
  Poly<T> phi0(int n) const { return varrho(b(), T(2) * lam_ + T(1), n); }
  /// R_n = ((c)_n / (b)_n) F(-n, b; c; 1 - z) with b = lambda + 1, c = 2 lambda + 2.
  Poly<T> R(int n) const { return varrho(b(), c(), n); }

  double normalization() const { return circular_jacobi_normalization(to_double(lam_)); }

  WeightFn weight() const {
    const double tau = normalization();
    const double lam = to_double(lam_);
    return [tau, lam](double theta) { return tau * std::pow(std::abs(std::sin(theta / 2.0)), 2.0 * lam); };
  }

  /// mu_k = (-lambda)_k / (lambda + 1)_k of the normalised weight.
  std::vector<T> moments_exact(int K) const {
    std::vector<T> mu{T(1)};
    for (int j = 1; j <= K; ++j) mu.push_back(mu.back() * (T(j - 1) - lam_) / (lam_ + T(j)));
    return mu;
  }
  MomentMeasure moments(int K) const {
    std::vector<Complex> mu;
    for (const auto& v : moments_exact(K)) mu.push_back(to_complex(v));
    return MomentMeasure(std::move(mu), weight());
  }

  CJObjects<T> objects(int N) const {
    if (N < 0) throw DomainError("cj_objects: negative N");
    CJObjects<T> out;
    const auto aug = augmented(T(0)).chain();
    std::vector<Complex> alpha;
    for (int n = 1; n <= N; ++n) {
      out.chain.push_back(aug(n));
      out.a_complement.push_back(a(n));
      alpha.push_back(to_complex(alpha0(n)));
    }
    for (int n = 0; n <= N; ++n) {
      out.m.push_back(base_minimal(n));
      out.M.push_back(M(n + 1));
      out.phi0.push_back(phi0(n));
    }
    out.alpha0 = VerblunskySequence(std::move(alpha));
    out.weight = weight();
    return out;
  }

  /// R~_n from the complementary chain against Q_{n+1} of the family with
  /// lambda - 1; returns max coefficient differences for n = 0..N.
  std::vector<double> numerator_identity_residuals(int N) const {
    if (!(lam_ > T(1) / T(2))) throw DomainError("numerator identity: needs lambda > 1/2");
    const HyperFamily shifted(lam_ - T(1));
    std::vector<T> a_vals, d_vals;
    for (int n = 1; n <= N; ++n) a_vals.push_back(a(n));
    d_vals.push_back(shifted.M(1));
    for (int n = 1; n <= N; ++n) d_vals.push_back(shifted.base(n));
    const auto Rt = rn_sequence_real(a_vals, N, RnVariant::R);
    const auto Q = rn_sequence_real(d_vals, N + 1, RnVariant::Q);
    std::vector<double> res;
    for (int n = 0; n <= N; ++n) {
      const auto un = static_cast<std::size_t>(n);
      res.push_back(max_coeff_diff(Rt[un], Q[un + 1]));
    }
    return res;
  }

  /// Minimal-parameter verdict: lambda >= 0 gives all m^(0)_n >= 1/2, so the
  /// chain is SPPCS; lambda in (-1/2, 0) gives the complementary picture.
  SppcsVerdict analytic_sppcs() const {
    return lam_ >= T(0) ? SppcsVerdict::Divergent : SppcsVerdict::Convergent;
  }

 private:
  static void check_index(int n, const char* what) {
    if (n < 1) throw DomainError(std::string(what) + ": index must be >= 1");
  }

  T lam_;
};

/// R~_n = z^n + nu (z^{n-1} + ... + z) + 1 for n >= 1, R~_0 = 1.
template <RealScalar T>
Poly<T> palindromic_R(const T& nu, int n) {
  if (n < 0) throw DomainError("palindromic_R: negative n");
  if (n == 0) return Poly<T>{T(1)};
  std::vector<T> c(static_cast<std::size_t>(n) + 1, nu);
  c.front() = T(1);
  c.back() = T(1);
  return Poly<T>(std::move(c));
}

/// Phi~_n = R~_n - 2(1 - k_n) R~_{n-1} with the palindromic R~ and the
/// complementary parameters k_n of the family.
template <RealScalar T>
Poly<T> palindromic_phi(const HyperFamily<T>& f, const T& nu, int n) {
  if (n < 1) throw DomainError("palindromic_phi: n must be >= 1");
  return palindromic_R(nu, n) - (T(2) * (T(1) - f.k(n))) * palindromic_R(nu, n - 1);
}

/// Closed forms for n >= 2:
///   lambda = 0: z^n + (nu - 1) z^{n-1};
///   lambda = 1: z^n + (nu - (n+2)/(n+1)) z^{n-1} - nu/(n+1) (z^{n-2} + ... + z) - 1/(n+1).
template <RealScalar T>
Poly<T> palindromic_phi_closed(int lambda_case, const T& nu, int n) {
  if (n < 2) throw DomainError("palindromic_phi_closed: n must be >= 2");
  std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
  c.back() = T(1);
  const auto top = static_cast<std::size_t>(n - 1);
  if (lambda_case == 0) {
    c[top] = nu - T(1);
  } else if (lambda_case == 1) {
    const T inv = T(1) / T(n + 1);
    c[top] = nu - T(n + 2) * inv;
    for (std::size_t j = 1; j < top; ++j) c[j] = -nu * inv;
    c[0] = -inv;
  } else {
    throw DomainError("palindromic_phi_closed: only lambda = 0 and lambda = 1 are pinned");
  }
  return Poly<T>(std::move(c));
}

/// Presets for the palindromic constant: nu^(0) = 1 (Phi~_n = z^n) and nu^(1) = 0.
inline constexpr int kNuPresetLambda0 = 1;
inline constexpr int kNuPresetLambda1 = 0;

}  // namespace opuc
