#pragma once

// Named self-checks over every module. Each check returns a residual that
// is compared with its tolerance; randomised checks draw from a generator
// seeded by (seed, check index) so results do not depend on scheduling.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "bridge.hpp"
#include "chains.hpp"
#include "families.hpp"
#include "hypergeometric.hpp"
#include "moments.hpp"
#include "opuc.hpp"
#include "perturb.hpp"
#include "ppcfrac.hpp"
#include "roots.hpp"

namespace opuc::verify {

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }
  /// Uniform on [a, b) from the top 53 bits; identical on every platform.
  double uniform(double a = 0.0, double b = 1.0) {
    return a + (b - a) * static_cast<double>(engine_() >> 11) * 0x1p-53;
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Complex in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
  }

 private:
  std::mt19937_64 engine_;
};

struct CheckSpec {
  std::string suite;
  std::string name;
  double tolerance;
  bool uses_default_tol;  // tolerance may be overridden by --tol
  std::function<double(Rng&)> run;
};

struct CheckResult {
  std::string suite;
  std::string name;
  double residual;
  double tolerance;
  bool pass;
  std::string error;
};

inline constexpr double kDefaultTol = 1e-10;

namespace detail {

inline double poly_diff(const ComplexPoly& a, const ComplexPoly& b) { return max_coeff_diff(a, b); }

template <RealScalar T>
ComplexPoly to_cpoly(const Poly<T>& p) {
  std::vector<Complex> c;
  for (const auto& v : p.coeffs()) c.push_back(to_complex(v));
  return ComplexPoly(std::move(c));
}

inline double exact_flag(bool ok) { return ok ? 0.0 : 1.0; }

/// g_0 = 0 and g_n uniform in [lo, hi].
inline std::vector<double> random_params(Rng& rng, int N, double lo = 0.05, double hi = 0.95) {
  std::vector<double> g{0.0};
  for (int n = 1; n <= N; ++n) g.push_back(rng.uniform(lo, hi));
  return g;
}

template <RealScalar T>
std::vector<T> chain_of(const std::vector<T>& g) {
  std::vector<T> d;
  for (std::size_t n = 1; n < g.size(); ++n) d.push_back((T(1) - g[n - 1]) * g[n]);
  return d;
}

inline std::vector<Rational> random_rational_params(Rng& rng, int N) {
  std::vector<Rational> g{Rational(0)};
  for (int n = 1; n <= N; ++n) {
    const int q = rng.integer(2, 40);
    g.push_back(make_rational(rng.integer(1, q - 1), q));
  }
  return g;
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Max over roots of ||z| - 1|, or 1 if two roots coincide to 1e-8.
inline double unimodular_simple(const ComplexPoly& p) {
  const auto r = poly_roots(p);
  double worst = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    worst = std::max(worst, std::abs(std::abs(r[i]) - 1.0));
    for (std::size_t j = i + 1; j < r.size(); ++j) {
      if (std::abs(r[i] - r[j]) < 1e-8) return 1.0;
    }
  }
  return worst;
}

inline std::vector<double> carat_sigmas() { return {0.25, 0.5, 0.75}; }

}  // namespace detail

inline std::vector<CheckSpec> numkit_checks() {
  using namespace detail;
  std::vector<CheckSpec> out;
  out.push_back({"numkit", "reversed_star_involution", kDefaultTol, true, [](Rng& rng) {
                   double worst = 0.0;
                   for (int rep = 0; rep < 20; ++rep) {
                     std::vector<Complex> c;
                     const int deg = rng.integer(0, 10);
                     for (int k = 0; k <= deg; ++k) c.push_back(rng.in_disk(2.0));
                     const ComplexPoly p(c);
                     const int n = p.degree() + rng.integer(0, 3);
                     worst = std::max(worst, poly_diff(reversed_star(reversed_star(p, n), n), p));
                   }
                   return worst;
                 }});
  out.push_back({"numkit", "trapezoid_probability_mass", 1e-8, false, [](Rng&) {
                   double worst = 0.0;
                   for (double lam : {0.0, 0.5, 1.0, 2.0}) {
                     const auto mu = trapezoid_moments(HyperFamily<double>(lam).weight(), 0, 1 << 14);
                     worst = std::max(worst, std::abs(mu[0] - 1.0));
                   }
                   return worst;
                 }});
  out.push_back({"numkit", "trapezoid_panel_doubling_smooth", kDefaultTol, true, [](Rng&) {
                   double worst = 0.0;
                   for (double lam : {1.0, 2.0}) {
                     const auto w = HyperFamily<double>(lam).weight();
                     const auto a = trapezoid_moments(w, 10, 1 << 10);
                     const auto b = trapezoid_moments(w, 10, 1 << 11);
                     for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
                   }
                   return worst;
                 }});
  out.push_back({"numkit", "levinson_closed_form_moments", kDefaultTol, true, [](Rng&) {
                   double worst = 0.0;
                   for (double lam : {0.5, 1.0, 2.0}) {
                     const HyperFamily<double> f(lam);
                     const auto a = levinson_verblunsky(f.moments(20), 20);
                     for (int n = 1; n <= 20; ++n) worst = std::max(worst, std::abs(a[static_cast<std::size_t>(n - 1)] - f.alpha0(n)));
                   }
                   return worst;
                 }});
  out.push_back({"numkit", "toeplitz_positivity_matches_levinson", 0.0, false, [](Rng&) {
                   const CaratFamily<double> f(0.5);
                   const auto dets = toeplitz_dets(f.moments(8, Branch::Primary), 8);
                   bool ok = std::all_of(dets.begin(), dets.end(), [](double v) { return v > 0.0; });
                   ok = ok && levinson_verblunsky(f.moments(8, Branch::Primary), 8).size() == 8;
                   const MomentMeasure point(std::vector<Complex>(4, Complex(1.0)));
                   ok = ok && toeplitz_dets(point, 1)[1] == 0.0;
                   bool threw = false;
                   try {
                     levinson_verblunsky(point, 2);
                   } catch (const DegenerateMeasure&) {
                     threw = true;
                   }
                   return exact_flag(ok && threw);
                 }});
  out.push_back({"numkit", "root_residuals", kDefaultTol, true, [](Rng& rng) {
                   double worst = 0.0;
                   for (int rep = 0; rep < 10; ++rep) {
                     std::vector<Complex> c;
                     const int deg = rng.integer(1, 20);
                     for (int k = 0; k < deg; ++k) c.push_back(rng.in_disk(1.0));
                     c.emplace_back(1.0);
                     const ComplexPoly p(c);
                     for (const auto& z : poly_roots(p)) worst = std::max(worst, std::abs(p(z)) / p.max_abs_coeff());
                   }
                   return worst;
                 }});
  return out;
}

inline std::vector<CheckSpec> chains_checks() {
  using namespace detail;
  std::vector<CheckSpec> out;
  out.push_back({"chains", "complement_of_quarter", 0.0, false, [](Rng&) {
                   const auto [a, k] = complement(ChainSequence<Rational>::constant(make_rational(1, 4)), 40);
                   bool ok = true;
                   for (int n = 1; n <= 40; ++n) ok = ok && k[n] == make_rational(n + 2, 2 * (n + 1));
                   return exact_flag(ok);
                 }});
  out.push_back({"chains", "complement_involution_exact", 0.0, false, [](Rng& rng) {
                   bool ok = true;
                   for (int rep = 0; rep < 20; ++rep) {
                     const auto d = chain_of(random_rational_params(rng, 15));
                     const auto first = complement(ChainSequence<Rational>::from_values(d), 15).first;
                     const auto second = complement(first, 15).first;
                     ok = ok && second.prefix(15) == d;
                   }
                   return exact_flag(ok);
                 }});
  out.push_back({"chains", "difference_identities", 0.0, false, [](Rng& rng) {
                   bool ok = true;
                   for (int rep = 0; rep < 10; ++rep) {
                     const auto g = random_rational_params(rng, 12);
                     const auto d = chain_of(g);
                     const auto chain = ChainSequence<Rational>::from_values(d);
                     const auto m = minimal_params(chain, 12);
                     const auto [a, k] = complement(chain, 12);
                     ok = ok && d[0] - a(1) == Rational(2) * m[1] - Rational(1);
                     for (int n = 2; n <= 12; ++n) {
                       ok = ok && d[static_cast<std::size_t>(n - 1)] - a(n) == m[n] - m[n - 1];
                       ok = ok && m[n] - m[n - 1] == -(k[n] - k[n - 1]);
                     }
                   }
                   return exact_flag(ok);
                 }});
  out.push_back({"chains", "ratio_identity", 0.0, false, [](Rng& rng) {
                   bool ok = true;
                   for (int rep = 0; rep < 10; ++rep) {
                     const auto chain = ChainSequence<Rational>::from_values(chain_of(random_rational_params(rng, 12)));
                     const auto m = minimal_params(chain, 12);
                     const auto a = complement(chain, 12).first;
                     Rational pd(1), pa(1);
                     for (int n = 1; n <= 12; ++n) {
                       pd *= chain(n);
                       pa *= a(n);
                       ok = ok && m[n] / (Rational(1) - m[n]) == pd / pa;
                     }
                   }
                   return exact_flag(ok);
                 }});
  out.push_back({"chains", "convergent_implies_complement_divergent", 0.0, false, [](Rng& rng) {
                   std::vector<ChainSequence<double>> cases{ChainSequence<double>::constant(0.25),
                                                            CaratFamily<double>(0.5).complement_chain(),
                                                            HyperFamily<double>(-0.25).augmented(0.0).chain()};
                   bool ok = true;
                   for (const auto& d : cases) {
                     if (sppcs_verdict(d).verdict == SppcsVerdict::Convergent) {
                       ok = ok && sppcs_verdict(complement(d, kDefaultDepth).second).verdict == SppcsVerdict::Divergent;
                     }
                   }
                   // Random tails g_n = p + q/(n+1); the complement's parameters are 1 - g_n.
                   for (int rep = 0; rep < 20; ++rep) {
                     const double p = rng.uniform(0.05, 0.95);
                     const double q = rng.uniform(-0.04, 0.04);
                     std::vector<double> g{0.0}, k{0.0};
                     for (int n = 1; n <= kDefaultDepth; ++n) {
                       g.push_back(p + q / (n + 1.0));
                       k.push_back(1.0 - g.back());
                     }
                     const ParameterSequence<double> gm(g, ParamRole::Minimal), km(k, ParamRole::Minimal);
                     if (sppcs_verdict(gm).verdict == SppcsVerdict::Convergent) {
                       ok = ok && sppcs_verdict(km).verdict == SppcsVerdict::Divergent;
                     }
                   }
                   return exact_flag(ok);
                 }});
  out.push_back({"chains", "quarter_lower_bound_monotone", 0.0, false, [](Rng& rng) {
                   bool ok = true;
                   for (int rep = 0; rep < 10; ++rep) {
                     std::vector<double> d;
                     for (int n = 0; n < 40; ++n) d.push_back(0.25 + rng.uniform(0.0, 0.05) / ((n + 1.0) * (n + 1.0)));
                     try {
                       const auto m = minimal_params(ChainSequence<double>::from_values(d), 40);
                       for (int n = 1; n <= 40; ++n) ok = ok && m[n] >= m[n - 1];
                     } catch (const NotAChainSequence&) {
                       // outside the chain-sequence region: the property is vacuous
                     }
                   }
                   const auto m = minimal_params(ChainSequence<Rational>::constant(make_rational(1, 4)), 60);
                   for (int n = 1; n <= 60; ++n) ok = ok && m[n] >= m[n - 1];
                   return exact_flag(ok);
                 }});
  out.push_back({"chains", "maximal_circular_jacobi", 1e-6, false, [](Rng&) {
                   const HyperFamily<double> f(1.0);
                   const auto M = maximal_params(f.base_chain(), 10, 1e-12);
                   double worst = 0.0;
                   for (int n = 0; n <= 10; ++n) worst = std::max(worst, std::abs(M[n] - f.M(n + 1)));
                   return worst;
                 }});
  out.push_back({"chains", "augmentation_recovers_t", 1e-12, false, [](Rng&) {
                   const HyperFamily<double> f(1.0);
                   double worst = 0.0;
                   for (double t : {0.0, 0.3, 0.5, 0.7}) {
                     const auto aug = AugmentedChain<double>::from_base(f.base_chain(), t, 1e-13);
                     const auto m = minimal_params(aug.chain(), 5);
                     worst = std::max(worst, std::abs(m[1] - (1.0 - t) * aug.max_first()));
                     worst = std::max(worst, std::abs(aug.recovered_t() - t));
                   }
                   return worst;
                 }});
  return out;
}

inline std::vector<CheckSpec> opuc_checks() {
  using namespace detail;
  std::vector<CheckSpec> out;
  auto random_alpha = [](Rng& rng, int N) {
    std::vector<Complex> a;
    for (int k = 0; k < N; ++k) a.push_back(rng.in_disk(0.9));
    return VerblunskySequence(std::move(a));
  };
  out.push_back({"opuc", "three_term_recurrence", kDefaultTol, true, [random_alpha](Rng& rng) {
                   const auto pair = szego_from_verblunsky(random_alpha(rng, 20));
                   double worst = 0.0;
                   for (int n = 1; n < 20; ++n) {
                     const Complex pn = pair.at_zero(n), pn1 = pair.at_zero(n + 1);
                     const auto un = static_cast<std::size_t>(n);
                     const ComplexPoly rhs = ComplexPoly{pn1 / pn, Complex(1.0)} * pair.phi[un] -
                                             ((1.0 - std::norm(pn)) * pn1 / pn) * pair.phi[un - 1].times_z();
                     worst = std::max(worst, poly_diff(rhs, pair.phi[un + 1]));
                   }
                   return worst;
                 }});
  out.push_back({"opuc", "christoffel_darboux", kDefaultTol, true, [random_alpha](Rng& rng) {
                   const int N = 10;
                   const auto pair = szego_from_verblunsky(random_alpha(rng, N + 1));
                   double worst = 0.0;
                   for (int rep = 0; rep < 20; ++rep) {
                     const Complex z = rng.in_disk(1.5), w = rng.in_disk(1.5);
                     Complex lhs = 0.0;
                     for (int k = 0; k <= N; ++k) lhs += pair.orthonormal(k, z) * std::conj(pair.orthonormal(k, w));
                     const Complex rhs = (pair.orthonormal_star(N + 1, z) * std::conj(pair.orthonormal_star(N + 1, w)) -
                                          pair.orthonormal(N + 1, z) * std::conj(pair.orthonormal(N + 1, w))) /
                                         (1.0 - z * std::conj(w));
                     worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
                   }
                   return worst;
                 }});
  out.push_back({"opuc", "kernel_recurrence", kDefaultTol, true, [random_alpha](Rng& rng) {
                   const auto a = random_alpha(rng, 12);
                   const auto pair = szego_from_verblunsky(a);
                   const Complex w = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
                   double worst = 0.0;
                   for (int n = 1; n < 11; ++n) {
                     const Complex tn = tau_at(pair, w, n);
                     const Complex b = tau_at(pair, w, n + 1) / tn;
                     const Complex an1 = (1.0 + tn * a[static_cast<std::size_t>(n - 1)]) *
                                         (1.0 - std::conj(w * tn * a[static_cast<std::size_t>(n)])) * w;
                     const ComplexPoly lhs = kernel_poly(pair, w, n + 1);
                     const ComplexPoly rhs = ComplexPoly{b, Complex(1.0)} * kernel_poly(pair, w, n) - an1 * kernel_poly(pair, w, n - 1).times_z();
                     worst = std::max(worst, poly_diff(lhs, rhs));
                   }
                   return worst;
                 }});
  out.push_back({"opuc", "kernel_tau_invariance", kDefaultTol, true, [random_alpha](Rng& rng) {
                   const auto pair = szego_from_verblunsky(random_alpha(rng, 12));
                   double worst = 0.0;
                   for (int rep = 0; rep < 5; ++rep) {
                     const Complex w = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
                     for (int n = 0; n <= 12; ++n) {
                       const auto P = kernel_poly(pair, w, n);
                       worst = std::max(worst, poly_diff(reversed_star(P, n), std::conj(tau_at(pair, w, n)) * P));
                     }
                   }
                   return worst;
                 }});
  out.push_back({"opuc", "moment_ratio_identities", 1e-8, false, [](Rng&) {
                   const auto m = HyperFamily<double>(1.0).moments(12);
                   const auto pair = szego_from_verblunsky(levinson_verblunsky(m, 12), 1.0);
                   const auto dets = toeplitz_dets(m, 12);
                   double worst = 0.0;
                   for (int n = 1; n <= 12; ++n) {
                     const auto un = static_cast<std::size_t>(n);
                     const Complex gn = m.integrate(pair.phi[un], -n);
                     const Complex gn1 = m.integrate(pair.phi[un - 1], -(n - 1));
                     worst = std::max(worst, std::abs(1.0 - std::norm(pair.at_zero(n)) - gn / gn1));
                     worst = std::max(worst, std::abs(gn - dets[un] / dets[un - 1]));
                   }
                   return worst;
                 }});
  out.push_back({"opuc", "para_orthogonal_zeros", 1e-8, false, [](Rng&) {
                   const auto pair = szego_from_verblunsky(CaratFamily<double>(0.5).verblunsky(10));
                   double worst = 0.0;
                   for (int n = 1; n <= 10; ++n) worst = std::max(worst, unimodular_simple(para_orthogonal(pair, n, Complex(1.0))));
                   return worst;
                 }});
  return out;
}

inline std::vector<CheckSpec> bridge_checks() {
  using namespace detail;
  std::vector<CheckSpec> out;
  out.push_back({"bridge", "predictor_identity", 1e-12, false, [](Rng&) {
                   double worst = 0.0;
                   for (double t : {0.0, 0.3, 0.7}) {
                     const HyperFamily<double> f(1.0);
                     const auto aug = f.augmented(t);
                     const auto cd = CDData::from_chain(aug, 20);
                     const auto R = rn_sequence(cd, 20);
                     const auto m = minimal_params(aug.chain(), 20);
                     const auto pair = szego_from_rn(R, m, cd);
                     for (int n = 1; n <= 20; ++n) {
                       const auto un = static_cast<std::size_t>(n);
                       const ComplexPoly lhs = ComplexPoly{Complex(-1.0), Complex(1.0)} * R[un];
                       worst = std::max(worst, poly_diff(lhs, pair.phi[un].times_z() - pair.phistar[un]));
                     }
                   }
                   return worst;
                 }});
  out.push_back({"bridge", "lead_and_constant_coefficients", kDefaultTol, true, [](Rng& rng) {
                   const int N = 15;
                   std::vector<double> c;
                   for (int n = 0; n < N; ++n) c.push_back(rng.uniform(-2.0, 2.0));
                   const CDData cd(c, chain_of(random_params(rng, N)));
                   const auto R = rn_sequence(cd, N);
                   double worst = 0.0;
                   for (int n = 1; n <= N; ++n) {
                     const auto& p = R[static_cast<std::size_t>(n)];
                     worst = std::max(worst, std::abs(p.leading() - cd.lead_product(n)) / std::abs(cd.lead_product(n)));
                     worst = std::max(worst, std::abs(p[0] - std::conj(cd.lead_product(n))) / std::abs(cd.lead_product(n)));
                   }
                   return worst;
                 }});
  out.push_back({"bridge", "round_trip", kDefaultTol, true, [](Rng& rng) {
                   std::vector<Complex> a;
                   for (int k = 0; k < 30; ++k) a.push_back(rng.in_disk(0.9));
                   const VerblunskySequence alpha(a);
                   const auto ext = cd_from_verblunsky(alpha);
                   const auto back = alpha_from_params(ext.cd, ext.g);
                   const auto again = cd_from_verblunsky(back);
                   double worst = max_abs_diff(alpha, back);
                   for (int n = 1; n <= 30; ++n) {
                     worst = std::max(worst, std::abs(again.cd.c(n) - ext.cd.c(n)));
                     worst = std::max(worst, std::abs(again.cd.d(n) - ext.cd.d(n)));
                   }
                   return worst;
                 }});
  out.push_back({"bridge", "rn_zeros_unimodular_simple", 1e-8, false, [](Rng&) {
                   double worst = 0.0;
                   for (double sigma : carat_sigmas()) {
                     const CaratFamily<double> f(sigma);
                     for (int n = 1; n <= 20; ++n) worst = std::max(worst, unimodular_simple(to_cpoly(f.R_closed(n))));
                   }
                   for (double lam : {0.5, 1.0, 2.0}) {
                     const HyperFamily<double> f(lam);
                     for (int n = 1; n <= 20; ++n) worst = std::max(worst, unimodular_simple(to_cpoly(f.R(n))));
                   }
                   return worst;
                 }});
  out.push_back({"bridge", "t_independence", kDefaultTol, true, [](Rng&) {
                   const HyperFamily<double> f(1.0);
                   const int N = 15;
                   std::optional<CDExtraction> ref;
                   std::vector<ComplexPoly> ref_R;
                   double worst = 0.0;
                   for (double t : {0.0, 0.3, 0.7}) {
                     const auto aug = f.augmented(t);
                     const auto cd = CDData::from_chain(aug, N);
                     const auto alpha = alpha_from_params(cd, minimal_params(aug.chain(), N));
                     const auto ext = cd_from_verblunsky(alpha);
                     const auto R = rn_sequence(ext.cd, N);
                     if (!ref) {
                       ref = ext;
                       ref_R = R;
                       continue;
                     }
                     for (int n = 1; n <= N; ++n) {
                       worst = std::max(worst, std::abs(ext.cd.c(n) - ref->cd.c(n)));
                       if (n >= 2) worst = std::max(worst, std::abs(ext.cd.d(n) - ref->cd.d(n)));
                       worst = std::max(worst, poly_diff(R[static_cast<std::size_t>(n)], ref_R[static_cast<std::size_t>(n)]));
                     }
                   }
                   return worst;
                 }});
  out.push_back({"bridge", "szego_routes_agree", 1e-12, false, [](Rng& rng) {
                   const int N = 20;
                   std::vector<double> c;
                   for (int n = 0; n < N; ++n) c.push_back(rng.uniform(-1.0, 1.0));
                   const auto g = random_params(rng, N);
                   const CDData cd(c, chain_of(g));
                   const ParameterSequence<double> m(g, ParamRole::Minimal);
                   const auto via_rn = szego_from_rn(rn_sequence(cd, N), m, cd);
                   const auto via_alpha = szego_from_verblunsky(alpha_from_params(cd, m));
                   double worst = 0.0;
                   for (int n = 0; n <= N; ++n) {
                     const auto un = static_cast<std::size_t>(n);
                     worst = std::max(worst, poly_diff(via_rn.phi[un], via_alpha.phi[un]));
                   }
                   return worst;
                 }});
  out.push_back({"bridge", "uvarov_levinson_consistency", 1e-8, false, [](Rng&) {
                   const HyperFamily<double> f(1.0);
                   double worst = 0.0;
                   for (double t : {0.3, 0.5, 0.7}) {
                     const auto aug = f.augmented(t);
                     const auto cd = CDData::from_chain(aug, 15);
                     const auto alpha = alpha_from_params(cd, minimal_params(aug.chain(), 15));
                     const auto lev = levinson_verblunsky(uvarov_moments(f.moments(15), t), 15);
                     worst = std::max(worst, max_abs_diff(alpha, lev));
                   }
                   return worst;
                 }});
  return out;
}

inline std::vector<CheckSpec> perturb_checks() {
  using namespace detail;
  std::vector<CheckSpec> out;
  out.push_back({"perturb", "complement_relation_random", 1e-12, false, [](Rng& rng) {
                   double worst = 0.0;
                   for (int rep = 0; rep < 100; ++rep) {
                     const int N = 50;
                     std::vector<double> c;
                     for (int n = 0; n < N; ++n) c.push_back(rng.uniform(-2.0, 2.0));
                     const auto d = chain_of(random_params(rng, N));
                     const CDData cd(c, d);
                     const auto chain = ChainSequence<double>::from_values(d);
                     const auto rep_c = complement_perturbation_check(cd, minimal_params(chain, N), complement(chain, N).second, std::nullopt, 0.0);
                     worst = std::max(worst, rep_c.max_residual());
                     for (std::size_t j = 0; j < rep_c.alpha.size(); ++j) {
                       worst = std::max(worst, std::abs(std::abs(rep_c.alpha[j]) - std::abs(rep_c.beta[j])));
                     }
                   }
                   return worst;
                 }});
  out.push_back({"perturb", "alternating_c_factor", 1e-12, false, [](Rng& rng) {
                   double worst = 0.0;
                   for (double cc : {0.3, 1.0, 2.0}) {
                     const int N = 30;
                     std::vector<double> c;
                     for (int n = 1; n <= N; ++n) c.push_back(n % 2 == 0 ? cc : -cc);
                     const auto d = chain_of(random_params(rng, N));
                     const CDData cd(c, d);
                     const auto chain = ChainSequence<double>::from_values(d);
                     const auto alpha = alpha_from_params(cd, minimal_params(chain, N));
                     const auto beta = complementary_verblunsky(cd, complement(chain, N).second);
                     const Complex factor = -Complex(1.0, -cc) / Complex(1.0, cc);
                     for (std::size_t j = 0; j < alpha.size(); ++j) worst = std::max(worst, std::abs(beta[j] - factor * std::conj(alpha[j])));
                   }
                   return worst;
                 }});
  out.push_back({"perturb", "zero_c_involution", kDefaultTol, true, [](Rng& rng) {
                   const int N = 30;
                   const auto d = chain_of(random_rational_params(rng, N));
                   const auto chain = ChainSequence<Rational>::from_values(d);
                   const auto [a, k] = complement(chain, N);
                   const auto kk = complement(a, N).second;
                   auto as_double = [](const std::vector<Rational>& v) {
                     std::vector<double> out;
                     for (const auto& x : v) out.push_back(to_double(x));
                     return out;
                   };
                   const CDData cd(std::vector<double>(N, 0.0), as_double(d));
                   const CDData cda(std::vector<double>(N, 0.0), as_double(a.prefix(N)));
                   const auto alpha = alpha_from_params(cd, minimal_params(chain, N));
                   const auto twice = complementary_verblunsky(cda, kk);
                   return max_abs_diff(alpha, twice);
                 }});
  out.push_back({"perturb", "cj_complement_verblunsky", 1e-12, false, [](Rng&) {
                   const HyperFamily<double> f(1.0);
                   const auto cd = CDData::from_chain(f.augmented(0.0), 20);
                   const auto beta = complementary_verblunsky(cd, f.complement_params(20));
                   double worst = 0.0;
                   for (int n = 1; n <= 20; ++n) worst = std::max(worst, std::abs(beta[static_cast<std::size_t>(n - 1)] - 1.0 / (n + 1)));
                   return worst;
                 }});
  out.push_back({"perturb", "point_masses_cesaro", kCesaroTol, false, [](Rng&) {
                   const HyperFamily<double> f(1.0);
                   double worst = 0.0;
                   for (double t : {0.3, 0.5, 0.7}) {
                     const auto aug = f.augmented(t);
                     const auto cd = CDData::from_chain(aug, 20);
                     const auto chain = aug.chain();
                     const auto rep = complement_perturbation_check(cd, minimal_params(chain, 20), complement(chain, 20).second,
                                                                    std::optional<MomentMeasure>(f.moments(kCesaroHorizon)), t);
                     worst = std::max(worst, std::abs(*rep.mass_alpha - t));
                     worst = std::max(worst, std::abs(*rep.mass_beta));
                   }
                   return worst;
                 }});
  out.push_back({"perturb", "aleksandrov_phase_pi", 1e-9, false, [](Rng&) {
                   const HyperFamily<double> f(1.0);
                   const auto m = f.moments(15);
                   const auto a = levinson_verblunsky(m, 15);
                   const auto b = levinson_verblunsky(aleksandrov_moments(m, std::numbers::pi), 15);
                   const auto c = levinson_verblunsky(aleksandrov_moments(m, 0.7), 15);
                   return std::max(max_abs_diff(aleksandrov_rotate(a, std::numbers::pi), b), max_abs_diff(aleksandrov_rotate(a, 0.7), c));
                 }});
  return out;
}

inline std::vector<CheckSpec> ppcfrac_checks() {
  using namespace detail;
  std::vector<CheckSpec> out;
  out.push_back({"ppcfrac", "denominators_are_szego", 1e-12, false, [](Rng& rng) {
                   const int N = 20;
                   std::vector<Complex> delta;
                   for (int k = 0; k < N; ++k) delta.push_back(rng.in_disk(0.9));
                   const PPCFraction f(rng.uniform(0.5, 2.0), delta);
                   const auto ap = ppc_approximants(f, 2 * N + 1);
                   const auto pair = szego_from_verblunsky(f.verblunsky());
                   double worst = 0.0;
                   for (int n = 0; n <= N; ++n) {
                     const auto un = static_cast<std::size_t>(n);
                     worst = std::max(worst, poly_diff(ap[2 * un + 1].Q, pair.phi[un]));
                     worst = std::max(worst, poly_diff(ap[2 * un].Q, pair.phistar[un]));
                   }
                   return worst;
                 }});
  out.push_back({"ppcfrac", "equivalent_recurrences", kDefaultTol, true, [](Rng& rng) {
                   const int N = 20;
                   std::vector<Complex> delta;
                   for (int k = 0; k < N; ++k) delta.push_back(rng.in_disk(0.9));
                   const PPCFraction f(1.0, delta);
                   const auto pair = szego_from_verblunsky(f.verblunsky());
                   double worst = 0.0;
                   for (int n = 1; n <= N; ++n) {
                     const auto un = static_cast<std::size_t>(n);
                     const Complex d = f.delta(n);
                     worst = std::max(worst, poly_diff(pair.phistar[un], std::conj(d) * pair.phi[un - 1].times_z() + pair.phistar[un - 1]));
                     worst = std::max(worst, poly_diff(pair.phi[un], d * pair.phistar[un] + (1.0 - std::norm(d)) * pair.phi[un - 1].times_z()));
                   }
                   return worst;
                 }});
  out.push_back({"ppcfrac", "approximation_order", 1e-9, false, [](Rng&) {
                   double worst = 0.0;
                   for (double sigma : carat_sigmas()) {
                     const CaratFamily<double> f(sigma);
                     for (Branch br : {Branch::Primary, Branch::Complement}) {
                       const int N = 12;
                       const auto a = f.verblunsky(N, br);
                       const auto pair = szego_from_verblunsky(a);
                       const auto psi = second_kind(a);
                       const auto C = f.caratheodory(br).taylor(N + 1);
                       for (int n = 1; n <= N; ++n) {
                         const auto un = static_cast<std::size_t>(n);
                         const auto psis = reversed_star(psi[un], n);
                         const auto ratio = series_mul(psis.coeffs(), series_reciprocal(pair.phistar[un].coeffs(), un), un);
                         for (std::size_t j = 0; j <= un; ++j) worst = std::max(worst, std::abs(ratio[j] - C[j]));
                       }
                     }
                   }
                   return worst;
                 }});
  out.push_back({"ppcfrac", "second_kind_matches_numerators", kDefaultTol, true, [](Rng& rng) {
                   const int N = 12;
                   std::vector<Complex> delta;
                   for (int k = 0; k < N; ++k) delta.push_back(rng.in_disk(0.9));
                   const double mu0 = rng.uniform(0.5, 2.0);
                   const PPCFraction f(mu0, delta);
                   const auto ap = ppc_approximants(f, 2 * N + 1);
                   const auto psi = second_kind(f.verblunsky(), mu0);
                   double worst = 0.0;
                   for (int n = 0; n <= N; ++n) {
                     const auto un = static_cast<std::size_t>(n);
                     worst = std::max(worst, poly_diff(ap[2 * un + 1].P, Complex(-1.0) * psi[un]));
                     worst = std::max(worst, poly_diff(ap[2 * un].P, reversed_star(psi[un], n)));
                   }
                   return worst;
                 }});
  out.push_back({"ppcfrac", "schur_recovers_known_parameters", 1e-12, false, [](Rng& rng) {
                   const int N = 8;
                   std::vector<Complex> a;
                   for (int k = 0; k < N; ++k) a.push_back(Complex(rng.uniform(-0.8, 0.8), 0.0));
                   const VerblunskySequence alpha(a);
                   const auto pair = szego_from_verblunsky(alpha);
                   const auto psi = second_kind(alpha);
                   const auto C = RationalFn<Complex>(reversed_star(psi[N], N), pair.phistar[N]);
                   const auto g = schur_extract(C, N);
                   double worst = std::abs(g[0] - 1.0);
                   for (int n = 1; n <= N; ++n) worst = std::max(worst, std::abs(g[static_cast<std::size_t>(n)] - pair.at_zero(n)));
                   return worst;
                 }});
  out.push_back({"ppcfrac", "complement_taylor_is_reciprocal", 1e-14, false, [](Rng&) {
                   double worst = 0.0;
                   for (double sigma : carat_sigmas()) {
                     const CaratFamily<double> f(sigma);
                     const auto c = caratheodory_taylor(f.moments(20, Branch::Primary), 20);
                     const auto ct = caratheodory_taylor(f.moments(20, Branch::Complement), 20);
                     const auto prod = series_mul(c, ct, 20);
                     for (std::size_t k = 0; k <= 20; ++k) worst = std::max(worst, std::abs(prod[k] - (k == 0 ? 1.0 : 0.0)));
                   }
                   return worst;
                 }});
  return out;
}

inline std::vector<CheckSpec> families_checks() {
  using namespace detail;
  std::vector<CheckSpec> out;
  out.push_back({"families", "carat_R_closed_vs_recurrence", 0.0, false, [](Rng&) {
                   bool ok = true;
                   for (auto sigma : {make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)}) {
                     const CaratFamily<Rational> f(sigma);
                     const auto R = rn_sequence_real(f.chain().prefix(30), 30);
                     for (int n = 0; n <= 30; ++n) ok = ok && R[static_cast<std::size_t>(n)].coeffs() == f.R_closed(n).coeffs();
                   }
                   return exact_flag(ok);
                 }});
  out.push_back({"families", "carat_phi_closed_both_branches", 0.0, false, [](Rng&) {
                   bool ok = true;
                   for (auto sigma : {make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)}) {
                     const CaratFamily<Rational> f(sigma);
                     for (Branch br : {Branch::Primary, Branch::Complement}) {
                       const auto d = br == Branch::Primary ? f.chain().prefix(20) : f.complement_chain().prefix(20);
                       const auto phi = szego_from_rn_real(rn_sequence_real(d, 20), f.minimal(20, br));
                       for (int n = 1; n <= 20; ++n) ok = ok && phi[static_cast<std::size_t>(n)].coeffs() == f.phi_closed(n, br).coeffs();
                     }
                   }
                   return exact_flag(ok);
                 }});
  out.push_back({"families", "carat_schur_extract_exact", 0.0, false, [](Rng&) {
                   bool ok = true;
                   for (auto sigma : {make_rational(1, 4), make_rational(1, 2), make_rational(3, 4)}) {
                     const CaratFamily<Rational> f(sigma);
                     const auto g = schur_extract(f.caratheodory(Branch::Primary), 20);
                     ok = ok && g[0] == Rational(1);
                     for (int n = 1; n <= 20; ++n) ok = ok && g[static_cast<std::size_t>(n)] == f.gamma(n);
                     const auto gc = schur_extract(f.caratheodory(Branch::Complement), 20);
                     for (int n = 1; n <= 20; ++n) ok = ok && gc[static_cast<std::size_t>(n)] == f.delta(n);
                   }
                   return exact_flag(ok);
                 }});
  out.push_back({"families", "carat_levinson_both_branches", kDefaultTol, true, [](Rng&) {
                   double worst = 0.0;
                   for (double sigma : carat_sigmas()) {
                     const CaratFamily<double> f(sigma);
                     for (Branch br : {Branch::Primary, Branch::Complement}) {
                       worst = std::max(worst, max_abs_diff(levinson_verblunsky(f.moments(20, br), 20), f.verblunsky(20, br)));
                     }
                   }
                   return worst;
                 }});
  out.push_back({"families", "carat_norms_and_deltas", 0.0, false, [](Rng& rng) {
                   bool ok = true;
                   for (auto sigma : {make_rational(1, 4), make_rational(1, 2), make_rational(3, 4),
                                      make_rational(rng.integer(1, 20), 21)}) {
                     const CaratFamily<Rational> f(sigma);
                     Rational prod(1);
                     for (int n = 1; n <= 30; ++n) {
                       prod *= Rational(1) - f.gamma(n) * f.gamma(n);
                       ok = ok && f.norm(n) == prod;
                       ok = ok && f.delta(n + 1) - f.delta(n) == f.delta(n) * f.delta(n + 1);
                     }
                     for (int n = 1; n <= 20; ++n) {
                       for (int k = 1; k <= 20; k += 3) {
                         const auto [r1, r2] = f.delta_identities(n, k);
                         ok = ok && r1 == 0 && r2 == 0;
                       }
                     }
                   }
                   return exact_flag(ok);
                 }});
  out.push_back({"families", "carat_limit_to_monomial", 0.0, false, [](Rng&) {
                   // Pointwise at fixed z inside the disk for both branches; the
                   // complement also tends to z^n coefficientwise.
                   bool ok = true;
                   const std::array<Complex, 3> points{Complex(0.5, 0.0), Complex(0.0, 0.6), Complex(-0.7, 0.2)};
                   for (double sigma : carat_sigmas()) {
                     const CaratFamily<double> f(sigma);
                     for (Branch br : {Branch::Primary, Branch::Complement}) {
                       double prev = std::numeric_limits<double>::infinity();
                       double prev_coeff = prev;
                       for (int n : {5, 20, 80, 320, 1280}) {
                         const auto p = to_cpoly(f.phi_closed(n, br));
                         double gap = 0.0;
                         for (const auto& z : points) gap = std::max(gap, std::abs(p(z) - std::pow(z, n)));
                         ok = ok && gap < prev;
                         prev = gap;
                         if (br == Branch::Complement) {
                           double lower = 0.0;
                           for (int k = 0; k < n; ++k) lower = std::max(lower, std::abs(p[k]));
                           ok = ok && lower < prev_coeff;
                           prev_coeff = lower;
                         }
                       }
                       ok = ok && prev < 0.01;
                       if (br == Branch::Complement) ok = ok && prev_coeff < 0.01;
                     }
                   }
                   return exact_flag(ok);
                 }});
  out.push_back({"families", "sigma_lambda_bridge", 0.0, false, [](Rng&) {
                   bool ok = true;
                   for (auto lam : {make_rational(1, 2), make_rational(1), make_rational(2), make_rational(7, 3)}) {
                     const CaratFamily<Rational> f(lam / (Rational(1) + lam));
                     const HyperFamily<Rational> h(lam);
                     for (int n = 1; n <= 20; ++n) ok = ok && lam * f.delta(n) == h.alpha0(n);
                   }
                   return exact_flag(ok);
                 }});
  out.push_back({"families", "cj_levinson_trapezoid", 1e-8, false, [](Rng&) {
                   double worst = 0.0;
                   for (double lam : {0.5, 1.0, 2.0}) {
                     const HyperFamily<double> f(lam);
                     const auto a = levinson_verblunsky(measure_from_weight(f.weight(), 15, 1 << 14), 15);
                     for (int n = 1; n <= 15; ++n) worst = std::max(worst, std::abs(a[static_cast<std::size_t>(n - 1)] - f.alpha0(n)));
                   }
                   return worst;
                 }});
  out.push_back({"families", "cj_complement_chains", 0.0, false, [](Rng&) {
                   const HyperFamily<Rational> one(make_rational(1)), zero(make_rational(0));
                   const auto a1 = complement(one.augmented(Rational(0)).chain(), 20).first;
                   const auto a0 = complement(zero.augmented(Rational(0)).chain(), 20).first;
                   bool ok = a0(1) == make_rational(1, 2);
                   for (int n = 1; n <= 20; ++n) {
                     ok = ok && a1(n) == make_rational(1, 4) && one.a(n) == a1(n);
                     if (n >= 2) ok = ok && a0(n) == make_rational(1, 4);
                   }
                   return exact_flag(ok);
                 }});
  out.push_back({"families", "chu_vandermonde", 1e-12, false, [](Rng& rng) {
                   double worst = 0.0;
                   for (int rep = 0; rep < 50; ++rep) {
                     const int n = rng.integer(0, 20);
                     const double b = rng.uniform(-3.0, 3.0);
                     const double c = rng.uniform(0.1, 5.0);
                     const double lhs = hyp2f1_terminating(n, b, c, 1.0);
                     const double rhs = pochhammer(c - b, n) / pochhammer(c, n);
                     worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
                   }
                   return worst;
                 }});
  out.push_back({"families", "varrho_recurrence_consistency", 0.0, false, [](Rng&) {
                   bool ok = true;
                   for (auto lam : {make_rational(0), make_rational(1, 2), make_rational(1), make_rational(2)}) {
                     const HyperFamily<Rational> f(lam);
                     for (const auto& c : {f.c(), Rational(2) * lam + Rational(1)}) {
                       const auto rec = varrho_recurrence(f.b(), c, 20);
                       for (int n = 0; n <= 20; ++n) ok = ok && rec[static_cast<std::size_t>(n)].coeffs() == varrho(f.b(), c, n).coeffs();
                     }
                     const auto R = rn_sequence_real(f.augmented(Rational(0)).chain().prefix(20), 20);
                     for (int n = 0; n <= 20; ++n) ok = ok && R[static_cast<std::size_t>(n)].coeffs() == f.R(n).coeffs();
                     const auto phi = szego_from_rn_real(R, minimal_params(f.augmented(Rational(0)).chain(), 20));
                     for (int n = 0; n <= 20; ++n) ok = ok && phi[static_cast<std::size_t>(n)].coeffs() == f.phi0(n).coeffs();
                   }
                   return exact_flag(ok);
                 }});
  out.push_back({"families", "numerator_identity", 1e-12, false, [](Rng&) {
                   double worst = 0.0;
                   for (double lam : {1.0, 2.0}) worst = std::max(worst, max_abs(HyperFamily<double>(lam).numerator_identity_residuals(15)));
                   return worst;
                 }});
  out.push_back({"families", "palindromic_cases", 0.0, false, [](Rng&) {
                   bool ok = true;
                   const HyperFamily<Rational> zero(make_rational(0)), one(make_rational(1));
                   for (auto nu : {make_rational(0), make_rational(1), make_rational(-3, 7), make_rational(5, 2)}) {
                     for (int n = 2; n <= 15; ++n) {
                       ok = ok && palindromic_phi(zero, nu, n).coeffs() == palindromic_phi_closed(0, nu, n).coeffs();
                       ok = ok && palindromic_phi(one, nu, n).coeffs() == palindromic_phi_closed(1, nu, n).coeffs();
                       ok = ok && palindromic_phi(one, nu, n)[0] == -make_rational(1, n + 1);
                     }
                   }
                   for (int n = 1; n <= 15; ++n) ok = ok && palindromic_phi(zero, Rational(kNuPresetLambda0), n) == Poly<Rational>::monomial(n);
                   return exact_flag(ok);
                 }});
  return out;
}

inline std::vector<std::string> suite_names() { return {"numkit", "chains", "opuc", "bridge", "perturb", "ppcfrac", "families"}; }

/// Every check in canonical order, or only those of one suite.
inline std::vector<CheckSpec> checks_for(const std::string& suite) {
  std::vector<CheckSpec> all;
  for (auto part : {numkit_checks(), chains_checks(), opuc_checks(), bridge_checks(), perturb_checks(), ppcfrac_checks(), families_checks()}) {
    for (auto& c : part) all.push_back(std::move(c));
  }
  if (suite == "all") return all;
  std::vector<CheckSpec> out;
  for (auto& c : all) {
    if (c.suite == suite) out.push_back(std::move(c));
  }
  if (out.empty()) throw DomainError("unknown verification suite: " + suite);
  return out;
}

inline CheckResult run_one(const CheckSpec& spec, std::uint64_t seed, std::size_t index, std::optional<double> tol_override) {
  CheckResult r{spec.suite, spec.name, std::numeric_limits<double>::infinity(), spec.tolerance, false, {}};
  if (spec.uses_default_tol && tol_override) r.tolerance = *tol_override;
  try {
    Rng rng(seed, index);
    r.residual = spec.run(rng);
    r.pass = std::isfinite(r.residual) && r.residual <= r.tolerance;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

/// Runs the checks on `workers` threads; results come back in input order.
inline std::vector<CheckResult> run_checks(const std::vector<CheckSpec>& specs, std::uint64_t seed, std::optional<double> tol_override,
                                           unsigned workers = 1) {
  std::vector<std::optional<CheckResult>> slots(specs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) slots[i] = run_one(specs[i], seed, i, tol_override);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(specs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<CheckResult> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace opuc::verify
