#include <random>

#include "support.hpp"

using namespace opuc;
using namespace opuc::testing;

namespace {

const Complex I(0.0, 1.0);

CDData carat_cd(double sigma, int N) {
  const CaratFamily<double> f(sigma);
  std::vector<double> d;
  for (int n = 1; n <= N; ++n) d.push_back(f.d(n));
  return CDData(std::vector<double>(static_cast<std::size_t>(N), 0.0), d);
}

ParameterSequence<double> params(std::vector<double> v) { return ParameterSequence<double>(std::move(v), ParamRole::Minimal); }

}  // namespace

TEST(CDData, TauProduct) {  // [TRIVIAL]
  const CDData cd({1.0, -0.5}, {0.5, 0.3});
  EXPECT_NEAR(std::abs(cd.tau(1) - Complex(0.0, -1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(cd.tau(2) - cd.tau(1) * Complex(1.0, 0.5) / Complex(1.0, -0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(cd.lead_product(2) - Complex(1.0, 1.0) * Complex(1.0, -0.5)), 0.0, 1e-15);
}

TEST(CDData, Validation) {
  EXPECT_THROW(CDData({0.0}, {0.2, 0.3}), DomainError);
  EXPECT_THROW(CDData({0.0}, {1.0}), NotAChainSequence);
  EXPECT_THROW(CDData({0.0}, {0.0}), NotAChainSequence);
}

TEST(Rn, QuarterChainGivesGeometricSums) {  // [DERIVED]
  const CDData cd(std::vector<double>(6, 0.0), std::vector<double>(6, 0.25));
  const auto R = rn_sequence(cd, 6);
  for (int n = 0; n <= 6; ++n) {
    ComplexPoly expect;
    for (int k = 0; k <= n; ++k) expect = expect + ComplexPoly::monomial(k);
    EXPECT_TRUE(PolyNear(R[static_cast<std::size_t>(n)], expect, 1e-15)) << n;
  }
}

TEST(Rn, SigmaHalfDegreeTwo) {  // [DERIVED]
  const auto R = rn_sequence(carat_cd(0.5, 3), 2);
  EXPECT_TRUE(PolyNear(R[2], cpoly({1.0, 4.0 / 3.0, 1.0}), 1e-15));
  const auto Q = rn_sequence(carat_cd(0.5, 3), 2, RnVariant::Q);
  EXPECT_TRUE(PolyNear(Q[2], cpoly({1.0, 1.0}), 1e-15));
  EXPECT_TRUE(PolyNear(Q[0], ComplexPoly{}, 0.0));
}

TEST(Rn, ExactRealBackendAgrees) {
  const CaratFamily<Rational> f(q(1, 2));
  std::vector<Rational> d;
  for (int n = 1; n <= 8; ++n) d.push_back(f.d(n));
  const auto exact = rn_sequence_real(d, 8);
  const auto approx = rn_sequence(carat_cd(0.5, 8), 8);
  for (int n = 0; n <= 8; ++n) EXPECT_TRUE(PolyNear(lift(exact[static_cast<std::size_t>(n)]), approx[static_cast<std::size_t>(n)], 1e-13));
  EXPECT_EQ(exact[2], (Poly<Rational>{q(1), q(4, 3), q(1)}));
}

TEST(Rn, SelfReciprocalWhenCZero) {
  const auto R = rn_sequence(carat_cd(0.3, 10), 10);
  for (int n = 0; n <= 10; ++n) EXPECT_TRUE(PolyNear(reversed_star(R[static_cast<std::size_t>(n)], n), R[static_cast<std::size_t>(n)], 1e-12));
}

TEST(Rn, TooShortThrows) {
  EXPECT_THROW(rn_sequence(carat_cd(0.5, 3), 4), RangeError);
  EXPECT_THROW(rn_sequence_real(std::vector<double>{0.5}, 2), RangeError);
}

TEST(Extraction, FreeCase) {  // [DERIVED]
  const auto ex = cd_from_verblunsky(VerblunskySequence(std::vector<Complex>(5, 0.0)));
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(ex.cd.c(n), 0.0);
    EXPECT_NEAR(ex.g[n], 0.5, 1e-15);
  }
  EXPECT_NEAR(ex.cd.d(1), 0.5, 1e-15);
  EXPECT_NEAR(ex.cd.d(2), 0.25, 1e-15);
}

TEST(Extraction, ImaginaryFirstCoefficient) {  // [DERIVED]
  const auto ex = cd_from_verblunsky(VerblunskySequence({0.5 * I}));
  EXPECT_NEAR(ex.cd.c(1), -0.5, 1e-15);
  EXPECT_NEAR(ex.g[1], 0.625, 1e-15);
}

TEST(Extraction, RoundTrip) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  std::vector<Complex> a;
  for (int k = 0; k < 12; ++k) a.emplace_back(u(gen), u(gen));
  const VerblunskySequence alpha(a);
  const auto ex = cd_from_verblunsky(alpha);
  EXPECT_LT(max_abs_diff(alpha_from_params(ex.cd, ex.g), alpha), 1e-13);
}

TEST(Extraction, UnitCoefficientRejected) {
  EXPECT_THROW(cd_from_verblunsky(VerblunskySequence({Complex(1.0, 0.0)})), DomainError);
}

TEST(AlphaFromParams, RealCase) {  // [DERIVED]
  const auto a = alpha_from_params(CDData({0.0}, {0.75}), params({0.0, 0.75}));
  EXPECT_NEAR(std::abs(a[0] + 0.5), 0.0, 1e-15);
}

TEST(AlphaFromParams, ComplexCase) {  // [DERIVED]
  const CDData cd({1.0}, {0.5});
  const auto a = alpha_from_params(cd, params({0.0, 0.5}));
  EXPECT_NEAR(std::abs(a[0]), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(a[0] - std::conj(cd.tau(1)) * (-I) / (1.0 + I)), 0.0, 1e-15);
}

TEST(AlphaFromParams, MismatchThrows) {
  EXPECT_THROW(alpha_from_params(CDData({0.0}, {0.75}), params({0.0, 0.5})), InconsistentParameters);
  EXPECT_THROW(alpha_from_params(CDData({0.0}, {0.75}), params({0.1, 0.75})), InconsistentParameters);
}

TEST(AlphaFromParams, CaratMatchesFamily) {  // [PAPER]
  const CaratFamily<double> f(0.35);
  const auto cd = carat_cd(0.35, 30);
  EXPECT_LT(max_abs_diff(alpha_from_params(cd, f.minimal(30)), f.verblunsky(30)), 1e-13);
}

TEST(SzegoFromRn, SigmaHalfPrimary) {  // [DERIVED]
  const CaratFamily<double> f(0.5);
  const auto cd = carat_cd(0.5, 4);
  const auto pair = szego_from_rn(rn_sequence(cd, 4), f.minimal(4), cd);
  EXPECT_TRUE(PolyNear(pair.phi[2], cpoly({1.0 / 3.0, 2.0 / 3.0, 1.0}), 1e-14));
  const auto direct = szego_from_verblunsky(f.verblunsky(4));
  for (int n = 0; n <= 4; ++n) EXPECT_TRUE(PolyNear(pair.phi[n], direct.phi[n], 1e-13));
}

TEST(SzegoFromRn, SigmaHalfComplement) {  // [DERIVED]
  const CaratFamily<Rational> f(q(1, 2));
  const int N = 3;
  std::vector<Rational> a, k{q(0)};
  for (int n = 1; n <= N; ++n) {
    a.push_back(f.complement_chain()(n));
    k.push_back(f.k(n));
  }
  const auto phi = szego_from_rn_real(rn_sequence_real(a, N), ParameterSequence<Rational>(k, ParamRole::Minimal));
  EXPECT_EQ(phi[2], (Poly<Rational>{q(-1, 3), q(-1, 3), q(1)}));
}

TEST(SzegoFromRn, ComplexRoundTrip) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::vector<Complex> a;
  for (int k = 0; k < 8; ++k) a.emplace_back(u(gen), u(gen));
  const VerblunskySequence alpha(a);
  const auto ex = cd_from_verblunsky(alpha);
  const auto pair = szego_from_rn(rn_sequence(ex.cd, 8), ex.g, ex.cd);
  const auto direct = szego_from_verblunsky(alpha);
  for (int n = 0; n <= 8; ++n) EXPECT_TRUE(PolyNear(pair.phi[n], direct.phi[n], 1e-12)) << n;
}

TEST(SzegoFromRn, LengthMismatch) {
  const auto cd = carat_cd(0.5, 4);
  EXPECT_THROW(szego_from_rn(rn_sequence(cd, 4), params({0.0, 0.5}), cd), RangeError);
}

TEST(Uvarov, MixesPointMass) {  // [DERIVED]
  const MomentMeasure m0({1.0, -0.5});
  const auto m = uvarov_moments(m0, 0.5);
  EXPECT_NEAR(std::abs(m[1] - 0.25), 0.0, 1e-15);
  EXPECT_NEAR(m[0].real(), 1.0, 1e-15);
  EXPECT_EQ(m.point_mass(), 0.5);
}

TEST(Uvarov, ZeroIsIdentity) {  // [TRIVIAL]
  const MomentMeasure m0({1.0, Complex(0.2, 0.1), -0.3});
  const auto m = uvarov_moments(m0, 0.0);
  for (int k = 0; k <= 2; ++k) EXPECT_EQ(m[k], m0[k]);
}

TEST(Uvarov, RejectsT) {
  const MomentMeasure m0({1.0, -0.5});
  EXPECT_THROW(uvarov_moments(m0, 1.0), DomainError);
  EXPECT_THROW(uvarov_moments(m0, -0.1), DomainError);
}

TEST(Uvarov, AugmentedChainMatchesMoments) {  // [PAPER]
  // Adding mass t at z = 1 to the circular Jacobi measure changes only d_1.
  const HyperFamily<double> h(1.0);
  const double t = 0.3;
  const auto mu = uvarov_moments(h.moments(24), t);
  const auto ex = cd_from_verblunsky(levinson_verblunsky(mu, 24));
  const auto chain = h.augmented(t).chain();
  for (int n = 1; n <= 10; ++n) {
    EXPECT_NEAR(ex.cd.c(n), 0.0, 1e-9);
    EXPECT_NEAR(ex.cd.d(n), chain(n), 1e-9) << n;
  }
}
