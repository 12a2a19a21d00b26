#pragma once

// Positive chain sequences d_n = (1 - g_{n-1}) g_n, their minimal and
// maximal parameter sequences, complementary chain sequences and the
// single-parameter (SPPCS) classification.

#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace opuc {

inline constexpr int kDefaultDepth = 200;

/// Lazily evaluated chain sequence d_1, d_2, ... with a shared, internally
/// synchronised prefix cache. Copies share the cache; the generator must
/// be a pure function of n.
template <RealScalar T>
class ChainSequence {
 public:
  using Generator = std::function<T(int)>;

  ChainSequence() = default;
  explicit ChainSequence(Generator gen, std::optional<int> depth = std::nullopt)
      : state_(std::make_shared<State>(std::move(gen), depth)) {}

  /// Finite chain d_1..d_D backed by a list.
  static ChainSequence from_values(std::vector<T> d) {
    const int depth = static_cast<int>(d.size());
    auto values = std::make_shared<const std::vector<T>>(std::move(d));
    return ChainSequence([values](int n) { return (*values)[static_cast<std::size_t>(n - 1)]; }, depth);
  }

  static ChainSequence constant(const T& v) {
    return ChainSequence([v](int) { return v; });
  }

  /// d_n for n >= 1.
  T operator()(int n) const {
    if (n < 1) throw RangeError("chain index starts at 1");
    if (state_->depth && n > *state_->depth) {
      throw RangeError("chain realised only to depth " + std::to_string(*state_->depth));
    }
    std::lock_guard lock(state_->mutex);
    auto& cache = state_->cache;
    while (static_cast<int>(cache.size()) < n) {
      const int k = static_cast<int>(cache.size()) + 1;
      T v = state_->gen(k);
      if (!(v > T(0) && v < T(1))) {
        throw NotAChainSequence("d_" + std::to_string(k) + " outside (0,1)");
      }
      cache.push_back(std::move(v));
    }
    return cache[static_cast<std::size_t>(n - 1)];
  }

  std::vector<T> prefix(int n) const {
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) out.push_back((*this)(k));
    return out;
  }

  std::optional<int> depth() const { return state_->depth; }

  /// The shifted chain e_n = d_{n+1}.
  ChainSequence tail() const {
    ChainSequence self = *this;
    std::optional<int> depth;
    if (state_->depth) depth = *state_->depth - 1;
    return ChainSequence([self](int n) { return self(n + 1); }, depth);
  }

 private:
  struct State {
    State(Generator g, std::optional<int> d) : gen(std::move(g)), depth(d) {}
    Generator gen;
    std::optional<int> depth;
    std::mutex mutex;
    std::vector<T> cache;
  };
  std::shared_ptr<State> state_;
};

enum class ParamRole { Minimal, Maximal, Generic };

/// g_0..g_N with 0 <= g_0 < 1 and 0 < g_n <= 1.
template <RealScalar T>
class ParameterSequence {
 public:
  ParameterSequence() = default;
  ParameterSequence(std::vector<T> g, ParamRole role) : g_(std::move(g)), role_(role) {
    if (g_.empty()) throw DomainError("parameter sequence needs g_0");
    if (!(g_[0] >= T(0) && g_[0] < T(1))) throw DomainError("g_0 outside [0,1)");
    for (std::size_t n = 1; n < g_.size(); ++n) {
      if (!(g_[n] > T(0) && g_[n] <= T(1))) throw DomainError("g_" + std::to_string(n) + " outside (0,1]");
    }
  }

  int last() const { return static_cast<int>(g_.size()) - 1; }
  const T& operator[](int n) const { return g_.at(static_cast<std::size_t>(n)); }
  const std::vector<T>& values() const { return g_; }
  ParamRole role() const { return role_; }

  /// d_n = (1 - g_{n-1}) g_n for n = 1..last().
  std::vector<T> chain_values() const {
    std::vector<T> d;
    for (std::size_t n = 1; n < g_.size(); ++n) d.push_back((T(1) - g_[n - 1]) * g_[n]);
    return d;
  }

 private:
  std::vector<T> g_;
  ParamRole role_ = ParamRole::Generic;
};

/// m_0 = 0, m_n = d_n / (1 - m_{n-1}).
template <RealScalar T>
ParameterSequence<T> minimal_params(const ChainSequence<T>& d, int N) {
  if (N < 1) throw DomainError("minimal_params: N must be >= 1");
  std::vector<T> m{T(0)};
  m.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 1; n <= N; ++n) {
    T next = d(n) / (T(1) - m.back());
    if (!(next > T(0) && next < T(1))) {
      throw NotAChainSequence("minimal parameter m_" + std::to_string(n) + " outside (0,1)");
    }
    m.push_back(std::move(next));
  }
  return ParameterSequence<T>(std::move(m), ParamRole::Minimal);
}

inline constexpr double kMaximalTol = 1e-6;
inline constexpr int kMaximalHorizonCap = 1 << 20;

/// Maximal parameters M_0..M_N by the backward tail iteration
/// g_n = 1 - d_{n+1} / g_{n+1} seeded with g_H = 1, doubling the horizon H
/// until g_0 moves by less than tol. Always evaluated in double precision.
template <RealScalar T>
ParameterSequence<double> maximal_params(const ChainSequence<T>& d, int N, double tol = kMaximalTol) {
  if (N < 0) throw DomainError("maximal_params: negative N");
  auto run = [&](int horizon) {
    std::vector<double> g(static_cast<std::size_t>(horizon) + 1);
    g[static_cast<std::size_t>(horizon)] = 1.0;
    for (int n = horizon - 1; n >= 0; --n) {
      const double v = 1.0 - to_double(d(n + 1)) / g[static_cast<std::size_t>(n) + 1];
      if (!(v > 0.0 && v <= 1.0)) {
        throw NotAChainSequence("backward parameter g_" + std::to_string(n) + " left (0,1]");
      }
      g[static_cast<std::size_t>(n)] = v;
    }
    return g;
  };

  int horizon = std::max(2 * N, 64);
  if (d.depth() && *d.depth() < horizon) throw HorizonError("maximal_params: chain too short for horizon");
  std::vector<double> prev = run(horizon);
  while (true) {
    const int next_h = horizon * 2;
    if (next_h > kMaximalHorizonCap || (d.depth() && *d.depth() < next_h)) {
      throw HorizonError("maximal_params: no convergence by horizon " + std::to_string(horizon));
    }
    std::vector<double> cur = run(next_h);
    const double change = std::abs(cur[0] - prev[0]);
    horizon = next_h;
    prev = std::move(cur);
    if (change < tol) break;
  }
  prev.resize(static_cast<std::size_t>(N) + 1);
  if (prev[0] >= 1.0) throw NotAChainSequence("maximal parameter M_0 reached 1");
  return ParameterSequence<double>(std::move(prev), ParamRole::Maximal);
}

/// Complementary chain a_n = (1 - k_{n-1}) k_n with k_0 = 0, k_n = 1 - m_n.
template <RealScalar T>
std::pair<ChainSequence<T>, ParameterSequence<T>> complement(const ChainSequence<T>& d, int N) {
  const auto m = minimal_params(d, N);
  std::vector<T> k{T(0)};
  for (int n = 1; n <= N; ++n) k.push_back(T(1) - m[n]);
  ParameterSequence<T> kp(std::move(k), ParamRole::Minimal);
  return {ChainSequence<T>::from_values(kp.chain_values()), std::move(kp)};
}

enum class SppcsVerdict { Divergent, Convergent, Inconclusive };

inline const char* to_string(SppcsVerdict v) {
  switch (v) {
    case SppcsVerdict::Divergent: return "divergent";
    case SppcsVerdict::Convergent: return "convergent";
    case SppcsVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct SppcsThresholds {
  double divergence = 1e8;  // partial-sum level treated as divergence
  double margin = 0.05;     // slack for the ratio and Raabe tests
};

struct SppcsReport {
  SppcsVerdict verdict = SppcsVerdict::Inconclusive;
  double partial_sum = 0.0;
  int terms = 0;
};

/// Wall's series sum_n prod_{j<=n} m_j/(1-m_j) evaluated to depth N.
/// Divergent means SPPCS (minimal == maximal); Convergent means not.
///
/// The tail test looks at r_n = m_n/(1-m_n) over the last N/2 terms:
/// r_n <= 1-margin or n(1-r_n) >= 1+margin everywhere gives Convergent
/// (ratio / Raabe), r_n >= 1 or n(1-r_n) <= 1-margin everywhere gives
/// Divergent. Anything else is Inconclusive.
///
/// This overload takes the minimal parameters directly. Forward recursion
/// in floating point loses accuracy geometrically once m_n > 1/2, so when
/// the parameters are known in closed form they should be passed here.
template <RealScalar T>
SppcsReport sppcs_verdict(const ParameterSequence<T>& m, SppcsThresholds th = {}) {
  const int N = m.last();
  if (N < 2) throw DomainError("sppcs_verdict: need at least two parameters");
  std::vector<double> r(static_cast<std::size_t>(N) + 1, 0.0);
  SppcsReport rep;
  double prod = 1.0;
  for (int n = 1; n <= N; ++n) {
    const double mn = to_double(m[n]);
    r[static_cast<std::size_t>(n)] = mn / (1.0 - mn);
    prod *= r[static_cast<std::size_t>(n)];
    rep.partial_sum += prod;
    rep.terms = n;
    if (rep.partial_sum > th.divergence) {
      rep.verdict = SppcsVerdict::Divergent;
      return rep;
    }
  }
  bool geometric = true, raabe_conv = true, nondecreasing = true, raabe_div = true;
  for (int n = N / 2 + 1; n <= N; ++n) {
    const double rn = r[static_cast<std::size_t>(n)];
    const double raabe = n * (1.0 - rn);
    geometric = geometric && rn <= 1.0 - th.margin;
    raabe_conv = raabe_conv && raabe >= 1.0 + th.margin;
    nondecreasing = nondecreasing && rn >= 1.0;
    raabe_div = raabe_div && raabe <= 1.0 - th.margin;
  }
  if (geometric || raabe_conv) {
    rep.verdict = SppcsVerdict::Convergent;
  } else if (nondecreasing || raabe_div) {
    rep.verdict = SppcsVerdict::Divergent;
  }
  return rep;
}

template <RealScalar T>
SppcsReport sppcs_verdict(const ChainSequence<T>& d, int N = kDefaultDepth, SppcsThresholds th = {}) {
  return sppcs_verdict(minimal_params(d, N), th);
}

enum class HalfClass { ComplementIsSPPCS, SelfIsSPPCS, NoVerdict };

inline const char* to_string(HalfClass c) {
  switch (c) {
    case HalfClass::ComplementIsSPPCS: return "complement-is-sppcs";
    case HalfClass::SelfIsSPPCS: return "self-is-sppcs";
    case HalfClass::NoVerdict: return "no-verdict";
  }
  return "?";
}

/// All m_n in (0,1/2) => the complement is SPPCS; all in (1/2,1) => d is.
template <RealScalar T>
HalfClass classify_half(const ParameterSequence<T>& m) {
  bool below = true, above = true;
  const T half = T(1) / T(2);
  for (int n = 1; n <= m.last(); ++n) {
    below = below && m[n] > T(0) && m[n] < half;
    above = above && m[n] > half && m[n] < T(1);
  }
  if (m.last() < 1) return HalfClass::NoVerdict;
  if (below) return HalfClass::ComplementIsSPPCS;
  if (above) return HalfClass::SelfIsSPPCS;
  return HalfClass::NoVerdict;
}

/// {d_{n+1}} extended by d_1 = (1 - t) M_1, where M_1 is the first maximal
/// parameter of the base chain {d_{n+1}}. t is the point mass at z = 1.
template <RealScalar T>
class AugmentedChain {
 public:
  AugmentedChain(ChainSequence<T> base, T max_first, T t)
      : base_(std::move(base)), max_first_(std::move(max_first)), t_(std::move(t)) {
    if (!(t_ >= T(0) && t_ < T(1))) throw DomainError("AugmentedChain: t outside [0,1)");
    d1_ = (T(1) - t_) * max_first_;
    if (!(d1_ > T(0))) throw DomainError("AugmentedChain: d_1 must be positive");
  }

  /// M_1 computed numerically from the base chain.
  static AugmentedChain from_base(ChainSequence<T> base, T t, double tol = kMaximalTol) {
    const double m1 = maximal_params(base, 1, tol)[0];
    return AugmentedChain(std::move(base), T(m1), std::move(t));
  }

  const ChainSequence<T>& base() const { return base_; }
  const T& d1() const { return d1_; }
  const T& t() const { return t_; }
  const T& max_first() const { return max_first_; }
  T recovered_t() const { return T(1) - d1_ / max_first_; }

  /// d_1, d_2, ... with d_{n+1} taken from the base chain.
  ChainSequence<T> chain() const {
    const ChainSequence<T> b = base_;
    const T d1 = d1_;
    std::optional<int> depth;
    if (b.depth()) depth = *b.depth() + 1;
    return ChainSequence<T>([b, d1](int n) { return n == 1 ? d1 : b(n - 1); }, depth);
  }

 private:
  ChainSequence<T> base_;
  T max_first_;
  T t_;
  T d1_;
};

}  // namespace opuc
