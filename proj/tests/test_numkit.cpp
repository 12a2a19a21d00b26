#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace opuc;
using namespace opuc::testing;

TEST(EvalPoly, ConstantIsConstant) {  // [TRIVIAL]
  EXPECT_EQ(cpoly({1.0})(Complex(3.0, -2.0)), Complex(1.0));
}

TEST(EvalPoly, OnePlusZAtOne) {  // [TRIVIAL]
  EXPECT_EQ(cpoly({1.0, 1.0})(Complex(1.0)), Complex(2.0));
}

TEST(EvalPoly, SigmaHalfRTwoAtMinusOne) {  // [DERIVED]
  const Poly<Rational> p{q(1), q(4, 3), q(1)};
  EXPECT_EQ(p(q(-1)), q(2, 3));
}

TEST(ReversedStar, RealCoefficientsReverse) {  // [TRIVIAL]
  EXPECT_EQ(reversed_star(cpoly({0.5, 1.0}), 1), cpoly({1.0, 0.5}));
}

TEST(ReversedStar, MonomialGoesToOne) {  // [TRIVIAL]
  EXPECT_EQ(reversed_star(ComplexPoly::monomial(5), 5), cpoly({1.0}));
}

TEST(ReversedStar, ConjugatesCoefficients) {  // [DERIVED]
  const Complex i(0.0, 1.0);
  EXPECT_EQ(reversed_star(cpoly({i, 1.0}), 1), cpoly({1.0, -i}));
}

TEST(ReversedStar, PadsWhenDegreeBelowN) {  // [DERIVED]
  EXPECT_EQ(reversed_star(cpoly({2.0}), 2), cpoly({0.0, 0.0, 2.0}));
}

TEST(ReversedStar, DegreeAboveNThrows) {
  EXPECT_THROW(reversed_star(cpoly({1.0, 1.0, 1.0}), 1), DegreeMismatch);
}

TEST(ReversedStar, IsAnInvolution) {
  const Complex i(0.0, 1.0);
  const auto p = cpoly({1.0 + i, -2.0, 0.5 * i});
  EXPECT_EQ(reversed_star(reversed_star(p, 4), 4), p);
}

namespace {
bool contains_root(const std::vector<Complex>& roots, Complex z, double tol = 1e-10) {
  for (const auto& r : roots) {
    if (std::abs(r - z) < tol) return true;
  }
  return false;
}
}  // namespace

TEST(PolyRoots, DifferenceOfSquares) {  // [TRIVIAL]
  const auto r = poly_roots(cpoly({-1.0, 0.0, 1.0}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(contains_root(r, 1.0));
  EXPECT_TRUE(contains_root(r, -1.0));
}

TEST(PolyRoots, LinearNonMonic) {  // [TRIVIAL]
  const auto r = poly_roots(cpoly({0.5, 0.5}));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(std::abs(r[0] + 1.0), 0.0, 1e-14);
}

TEST(PolyRoots, CubeRootsOfUnity) {  // [DERIVED]
  const auto r = poly_roots(cpoly({1.0, 1.0, 1.0}));
  ASSERT_EQ(r.size(), 2u);
  for (const auto& z : r) {
    EXPECT_NEAR(std::abs(z), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(z * z * z - 1.0), 0.0, 1e-12);
  }
}

TEST(PolyRoots, RootsAtZeroAreKept) {
  const auto r = poly_roots(cpoly({0.0, 0.0, -4.0, 1.0}));
  ASSERT_EQ(r.size(), 3u);
  EXPECT_TRUE(contains_root(r, 0.0));
  EXPECT_TRUE(contains_root(r, 4.0));
}

TEST(PolyRoots, ResidualContractOnUnitCircleFamily) {
  // z^20 - 1: every root is a 20th root of unity.
  std::vector<Complex> c(21, 0.0);
  c[0] = -1.0;
  c[20] = 1.0;
  const ComplexPoly p(c);
  for (const auto& z : poly_roots(p)) EXPECT_LT(std::abs(p(z)), kRootResidualTol * p.max_abs_coeff());
}

TEST(PolyRoots, ZeroPolynomialThrows) {
  EXPECT_THROW(poly_roots(ComplexPoly{}), UndefinedRoots);
}

TEST(PolyRoots, DegreeCapEnforced) {
  EXPECT_THROW(poly_roots(ComplexPoly::monomial(kRootDegreeCap + 1)), DomainError);
}

TEST(TrapezoidMoments, LebesgueMeasure) {  // [TRIVIAL]
  const auto mu = trapezoid_moments([](double) { return 1.0; }, 2, 64);
  EXPECT_NEAR(std::abs(mu[0] - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(mu[1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(mu[2]), 0.0, 1e-15);
}

TEST(TrapezoidMoments, CircularJacobiLambdaOneFirstMoment) {  // [DERIVED]
  const auto mu = trapezoid_moments([](double t) { return 2.0 * std::pow(std::sin(t / 2.0), 2); }, 1, 64);
  EXPECT_NEAR(mu[1].real(), -0.5, 1e-14);
  EXPECT_NEAR(mu[1].imag(), 0.0, 1e-14);
}

TEST(TrapezoidMoments, CircularJacobiWeightsAreProbabilities) {  // [PAPER]
  for (double lam : {0.0, 0.5, 1.0, 2.0, 3.5}) {
    const auto mu = trapezoid_moments(HyperFamily<double>(lam).weight(), 0, 1 << 14);
    EXPECT_NEAR(mu[0].real(), 1.0, 1e-8) << "lambda " << lam;
  }
}

TEST(TrapezoidMoments, SmoothWeightIsSpectrallyAccurate) {
  const auto w = [](double t) { return std::exp(std::cos(t)); };
  const auto a = trapezoid_moments(w, 5, 64);
  const auto b = trapezoid_moments(w, 5, 128);
  for (int k = 0; k <= 5; ++k) EXPECT_LT(std::abs(a[k] - b[k]), 1e-10);
}

TEST(TrapezoidMoments, UndersamplingThrows) {
  EXPECT_THROW(trapezoid_moments([](double) { return 1.0; }, 4, 19), UndersamplingError);
  EXPECT_NO_THROW(trapezoid_moments([](double) { return 1.0; }, 4, 20));
}

TEST(ToeplitzDets, IdentityMoments) {  // [TRIVIAL]
  const MomentMeasure m({1.0, 0.0, 0.0, 0.0});
  for (double d : toeplitz_dets(m, 3)) EXPECT_NEAR(d, 1.0, 1e-15);
}

TEST(ToeplitzDets, SigmaHalfMoments) {  // [DERIVED]
  const MomentMeasure m({1.0, -0.5, 0.0});
  EXPECT_NEAR(toeplitz_dets(m, 1)[1], 0.75, 1e-15);
}

TEST(ToeplitzDets, UnitPointMassIsSingular) {  // [TRIVIAL]
  const MomentMeasure m({1.0, 1.0, 1.0});
  EXPECT_NEAR(toeplitz_dets(m, 1)[1], 0.0, 1e-15);
}

TEST(ToeplitzDets, InsufficientMomentsThrow) {
  EXPECT_THROW(toeplitz_dets(MomentMeasure({1.0, 0.0}), 2), RangeError);
}

TEST(Levinson, FreeCase) {  // [TRIVIAL]
  const auto a = levinson_verblunsky(MomentMeasure({1.0, 0.0, 0.0, 0.0}), 3);
  for (const auto& v : a.values()) EXPECT_EQ(v, Complex(0.0));
}

TEST(Levinson, SigmaHalfFirstCoefficient) {  // [DERIVED]
  const auto a = levinson_verblunsky(MomentMeasure({1.0, -0.5, 0.0, 0.0}), 1);
  EXPECT_NEAR(std::abs(a[0] - (-0.5)), 0.0, 1e-15);
}

TEST(Levinson, CircularJacobiLambdaOne) {  // [PAPER]
  const auto a = levinson_verblunsky(HyperFamily<double>(1.0).moments(12), 12);
  for (int n = 1; n <= 12; ++n) EXPECT_NEAR(a[n - 1].real(), -1.0 / (n + 1), 1e-12) << "n " << n;
}

TEST(Levinson, PositivityMatchesDeterminants) {
  const auto m = HyperFamily<double>(2.0).moments(8);
  for (double d : toeplitz_dets(m, 8)) EXPECT_GT(d, 0.0);
  EXPECT_NO_THROW(levinson_verblunsky(m, 8));
}

TEST(Levinson, PointMassIsDegenerate) {
  EXPECT_THROW(levinson_verblunsky(MomentMeasure({1.0, 1.0, 1.0}), 2), DegenerateMeasure);
}

TEST(Levinson, NeedsEnoughMoments) {
  EXPECT_THROW(levinson_verblunsky(MomentMeasure({1.0, 0.0}), 2), RangeError);
}

TEST(PointMass, UnitMassAtOne) {  // [TRIVIAL]
  EXPECT_DOUBLE_EQ(point_mass_estimate(MomentMeasure(std::vector<Complex>(11, 1.0)), 10), 1.0);
}

TEST(PointMass, FiniteTailDecays) {  // [DERIVED]
  std::vector<Complex> mu(1001, 0.0);
  mu[0] = 1.0;
  mu[1] = -0.5;
  const double est = point_mass_estimate(MomentMeasure(mu), 1000);
  EXPECT_LE(std::abs(est), 2.0 / 1000);
}

TEST(PointMass, UvarovHalfOnCircularJacobi) {  // [DERIVED]
  const auto mt = uvarov_moments(HyperFamily<double>(1.0).moments(5000), 0.5);
  EXPECT_NEAR(point_mass_estimate(mt, 5000), 0.5, 0.02);
}

TEST(MomentMeasure, NegativeIndexIsConjugate) {
  const MomentMeasure m({1.0, Complex(0.25, 0.5)});
  EXPECT_EQ(m[-1], Complex(0.25, -0.5));
  EXPECT_THROW(m[2], RangeError);
}

TEST(Normalization, ClosedFormValues) {
  EXPECT_NEAR(circular_jacobi_normalization(0.0), 1.0, 1e-14);
  EXPECT_NEAR(circular_jacobi_normalization(1.0), 2.0, 1e-13);
  EXPECT_NEAR(circular_jacobi_normalization(0.5), std::numbers::pi / 2.0, 1e-13);
  EXPECT_THROW(circular_jacobi_normalization(-0.5), DomainError);
}
