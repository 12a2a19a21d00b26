#include <random>

#include "support.hpp"

using namespace opuc;
using namespace opuc::testing;

namespace {

std::vector<Complex> random_delta(unsigned seed, int N) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  std::vector<Complex> d;
  for (int k = 0; k < N; ++k) d.emplace_back(u(gen), u(gen));
  return d;
}

}  // namespace

TEST(PPCFraction, Validation) {
  EXPECT_THROW(PPCFraction(0.0, {}), DomainError);
  EXPECT_THROW(PPCFraction(1.0, {Complex(0.6, 0.8)}), DomainError);
  EXPECT_NO_THROW(PPCFraction(1.0, {Complex(0.6, 0.7)}));
}

TEST(PPCFraction, VerblunskyAdapter) {  // [TRIVIAL]
  const auto f = PPCFraction::from_verblunsky(VerblunskySequence({Complex(0.2, 0.3)}), 2.0);
  EXPECT_EQ(f.delta0(), 2.0);
  EXPECT_EQ(f.delta(1), Complex(-0.2, 0.3));
  EXPECT_EQ(f.verblunsky()[0], Complex(0.2, 0.3));
}

TEST(Approximants, FirstTwo) {  // [DERIVED]
  const auto ap = ppc_approximants(PPCFraction(3.0, {0.5}), 1);
  EXPECT_EQ(ap[0].P, cpoly({3.0}));
  EXPECT_EQ(ap[0].Q, cpoly({1.0}));
  EXPECT_EQ(ap[1].P, cpoly({-3.0}));
  EXPECT_EQ(ap[1].Q, cpoly({1.0}));
}

TEST(Approximants, DeltaHalf) {  // [DERIVED]
  const auto ap = ppc_approximants(PPCFraction(1.0, {0.5}), 3);
  EXPECT_TRUE(PolyNear(ap[2].Q, cpoly({1.0, 0.5}), 1e-15));
  EXPECT_TRUE(PolyNear(ap[3].Q, cpoly({0.5, 1.0}), 1e-15));
  EXPECT_TRUE(PolyNear(ap[2].P, cpoly({1.0, -0.5}), 1e-15));
}

TEST(Approximants, DenominatorsAreSzego) {  // [PAPER]
  const PPCFraction f(1.7, random_delta(21, 20));
  const auto ap = ppc_approximants(f, 41);
  const auto pair = szego_from_verblunsky(f.verblunsky());
  for (std::size_t n = 0; n <= 20; ++n) {
    EXPECT_TRUE(PolyNear(ap[2 * n + 1].Q, pair.phi[n], 1e-12)) << n;
    EXPECT_TRUE(PolyNear(ap[2 * n].Q, pair.phistar[n], 1e-12)) << n;
  }
}

TEST(Approximants, EquivalentRecurrences) {  // [PAPER]
  const PPCFraction f(1.0, random_delta(8, 15));
  const auto pair = szego_from_verblunsky(f.verblunsky());
  for (int n = 1; n <= 15; ++n) {
    const Complex d = f.delta(n);
    EXPECT_TRUE(PolyNear(pair.phistar[n], std::conj(d) * pair.phi[n - 1].times_z() + pair.phistar[n - 1], 1e-13));
    EXPECT_TRUE(PolyNear(pair.phi[n], d * pair.phistar[n] + (1.0 - std::norm(d)) * pair.phi[n - 1].times_z(), 1e-13));
  }
}

TEST(Approximants, TooManyThrows) {
  EXPECT_THROW(ppc_approximants(PPCFraction(1.0, {0.1, 0.2}), 6), RangeError);
  EXPECT_NO_THROW(ppc_approximants(PPCFraction(1.0, {0.1, 0.2}), 5));
}

TEST(SecondKind, NumeratorsMatch) {  // [DERIVED]
  const double mu0 = 1.3;
  const PPCFraction f(mu0, random_delta(2, 10));
  const auto ap = ppc_approximants(f, 21);
  const auto psi = second_kind(f.verblunsky(), mu0);
  for (int n = 0; n <= 10; ++n) {
    const auto un = static_cast<std::size_t>(n);
    EXPECT_TRUE(PolyNear(ap[2 * un + 1].P, Complex(-1.0) * psi[un], 1e-10)) << n;
    EXPECT_TRUE(PolyNear(ap[2 * un].P, reversed_star(psi[un], n), 1e-10)) << n;
  }
}

TEST(SecondKind, FreeCase) {  // [TRIVIAL]
  const auto psi = second_kind(VerblunskySequence(std::vector<Complex>(3, 0.0)));
  EXPECT_EQ(psi[0], cpoly({1.0}));
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(psi[static_cast<std::size_t>(n)], ComplexPoly::monomial(n));
}

TEST(SecondKind, BaseCaseIsMass) {  // [TRIVIAL]
  EXPECT_EQ(second_kind(VerblunskySequence({0.3}), 2.5)[0], cpoly({2.5}));
}

TEST(SecondKind, ApproximationOrderSigmaHalf) {  // [PAPER]
  const CaratFamily<double> f(0.5);
  const auto a = f.verblunsky(6);
  const auto pair = szego_from_verblunsky(a);
  const auto psi = second_kind(a);
  const auto C = f.caratheodory(Branch::Primary).taylor(7);
  for (int n = 1; n <= 6; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const auto approx = series_mul(reversed_star(psi[un], n).coeffs(), series_reciprocal(pair.phistar[un].coeffs(), un), un);
    for (std::size_t j = 0; j <= un; ++j) EXPECT_NEAR(std::abs(approx[j] - C[j]), 0.0, 1e-12) << n << " " << j;
  }
}

TEST(RationalFn, NormalizesExact) {  // [TRIVIAL]
  const RationalFn<Rational> r(Poly<Rational>{q(2), q(2)}, Poly<Rational>{q(4), q(0), q(-4)});
  // (2 + 2z)/(4 - 4z^2) = 1/(2(1 - z))
  EXPECT_EQ(r.num(), Poly<Rational>{q(1, 2)});
  EXPECT_EQ(r.den(), (Poly<Rational>{q(1), q(-1)}));
  EXPECT_EQ(r.value_at_zero(), q(1, 2));
  EXPECT_EQ(r.derivative_at_zero(), q(1, 2));
}

TEST(RationalFn, Taylor) {
  const RationalFn<double> r(Poly<double>{1.0}, Poly<double>{1.0, -0.5});
  const auto t = r.taylor(4);
  for (std::size_t k = 0; k <= 4; ++k) EXPECT_NEAR(t[k], std::pow(0.5, static_cast<double>(k)), 1e-15);
}

TEST(RationalFn, ZeroDenominatorThrows) {
  EXPECT_THROW(RationalFn<double>(Poly<double>{1.0}, Poly<double>{}), DomainError);
  EXPECT_THROW(RationalFn<double>(Poly<double>{1.0}, Poly<double>{0.0, 1.0}).value_at_zero(), ExtractionSingular);
}

TEST(Schur, SigmaHalf) {  // [DERIVED]
  const RationalFn<Rational> C(Poly<Rational>{q(1), q(-1)}, Poly<Rational>{q(1)});
  const auto g = schur_extract(C, 1);
  EXPECT_EQ(g[0], q(1));
  EXPECT_EQ(g[1], q(1, 2));
}

TEST(Schur, CaratGeneralSigma) {  // [PAPER]
  for (const Rational& sigma : {q(1, 3), q(1, 2), q(3, 4)}) {
    const RationalFn<Rational> C(Poly<Rational>{q(1), q(-1)}, Poly<Rational>{q(1), q(1) - q(2) * sigma});
    const auto g = schur_extract(C, 20);
    EXPECT_EQ(g[0], q(1));
    for (int n = 1; n <= 20; ++n) EXPECT_EQ(g[static_cast<std::size_t>(n)], q(1) / (Rational(n) + sigma / (q(1) - sigma))) << n;
  }
}

TEST(Schur, Lebesgue) {  // [TRIVIAL]
  const auto g = schur_extract(RationalFn<Rational>(Poly<Rational>{q(1)}, Poly<Rational>{q(1)}), 5);
  EXPECT_EQ(g[0], q(1));
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(g[static_cast<std::size_t>(k)], q(0));
}

TEST(Schur, RecoversKnownParameters) {
  const VerblunskySequence alpha({0.3, -0.5, 0.2, 0.6, -0.1, 0.4});
  const auto pair = szego_from_verblunsky(alpha);
  const auto psi = second_kind(alpha);
  const auto g = schur_extract(RationalFn<Complex>(reversed_star(psi[6], 6), pair.phistar[6]), 6);
  EXPECT_NEAR(std::abs(g[0] - 1.0), 0.0, 1e-12);
  for (int n = 1; n <= 6; ++n) EXPECT_NEAR(std::abs(g[static_cast<std::size_t>(n)] - pair.at_zero(n)), 0.0, 1e-12) << n;
}

TEST(Schur, Errors) {
  EXPECT_THROW(schur_extract(RationalFn<Rational>(Poly<Rational>{q(-1)}, Poly<Rational>{q(1)}), 2), ExtractionSingular);
  // Point mass at z = 1: gamma_1 = -1 and the next iterate is 0/0.
  EXPECT_THROW(schur_extract(RationalFn<Rational>(Poly<Rational>{q(1), q(1)}, Poly<Rational>{q(1), q(-1)}), 3), ExtractionSingular);
}

TEST(Schur, DegreeCap) {
  const RationalFn<Rational> C(Poly<Rational>{q(1), q(-1)}, Poly<Rational>{q(1), q(1, 3)});
  EXPECT_THROW(schur_extract(C, 5, 0), DegreeCapError);
}

TEST(CaratheodoryTaylor, Values) {  // [TRIVIAL]
  const auto t = caratheodory_taylor(MomentMeasure({1.0, 0.0, 0.0}), 2);
  EXPECT_EQ(t, (std::vector<Complex>{1.0, 0.0, 0.0}));
  const auto c = caratheodory_taylor(CaratFamily<double>(0.5).moments(4, Branch::Primary), 4);
  EXPECT_NEAR(std::abs(c[0] - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(c[1] + 1.0), 0.0, 1e-15);
  for (std::size_t k = 2; k <= 4; ++k) EXPECT_NEAR(std::abs(c[k]), 0.0, 1e-15);
  EXPECT_THROW(caratheodory_taylor(MomentMeasure({1.0}), 1), RangeError);
}

TEST(CaratheodoryTaylor, ComplementIsReciprocal) {  // [PAPER]
  const CaratFamily<double> f(0.3);
  const auto c = caratheodory_taylor(f.moments(15, Branch::Primary), 15);
  const auto ct = caratheodory_taylor(f.moments(15, Branch::Complement), 15);
  const auto prod = series_mul(c, ct, 15);
  for (std::size_t k = 0; k <= 15; ++k) EXPECT_NEAR(std::abs(prod[k] - (k == 0 ? 1.0 : 0.0)), 0.0, 1e-14);
}
