#include "support.hpp"

using namespace opuc;
using namespace opuc::testing;

namespace {

ChainSequence<Rational> quarter() { return ChainSequence<Rational>::constant(q(1, 4)); }

std::vector<Rational> chain_from(const std::vector<Rational>& g) {
  return ParameterSequence<Rational>(g, ParamRole::Generic).chain_values();
}

}  // namespace

TEST(MinimalParams, QuarterChain) {  // [PAPER]
  const auto m = minimal_params(quarter(), 30);
  EXPECT_EQ(m[0], q(0));
  for (int n = 1; n <= 30; ++n) EXPECT_EQ(m[n], q(n, 2 * (n + 1))) << "n " << n;
}

TEST(MinimalParams, CircularJacobiMinimalEqualsMaximal) {  // [DERIVED]
  const HyperFamily<Rational> f(q(1));
  const auto m = minimal_params(f.augmented(q(0)).chain(), 20);
  for (int n = 1; n <= 20; ++n) EXPECT_EQ(m[n], f.M(n)) << "n " << n;
}

TEST(MinimalParams, RejectsNonChain) {  // [DERIVED]
  const auto d = ChainSequence<double>::from_values({0.9, 0.9});
  EXPECT_THROW(minimal_params(d, 2), NotAChainSequence);
}

TEST(MinimalParams, RejectsBadDepth) {
  EXPECT_THROW(minimal_params(quarter(), 0), DomainError);
}

TEST(MinimalParams, FiniteChainRunsOut) {
  const auto d = ChainSequence<Rational>::from_values({q(1, 4), q(1, 4)});
  EXPECT_THROW(minimal_params(d, 3), RangeError);
}

TEST(MaximalParams, QuarterChainIsOneHalf) {  // [DERIVED]
  const auto M = maximal_params(ChainSequence<double>::constant(0.25), 10);
  for (int n = 0; n <= 10; ++n) EXPECT_NEAR(M[n], 0.5, 2e-6);
}

TEST(MaximalParams, CircularJacobiClosedForm) {  // [PAPER]
  const HyperFamily<double> f(1.0);
  const auto M = maximal_params(f.base_chain(), 10, 1e-12);
  for (int n = 0; n <= 10; ++n) EXPECT_NEAR(M[n], (n + 3.0) / (2.0 * (n + 2.0)), 1e-6);
}

TEST(MaximalParams, CaratChainIsSingleParameter) {  // [PAPER]
  const CaratFamily<double> f(0.5);
  const auto m = minimal_params(f.chain(), 10);
  const auto M = maximal_params(f.chain(), 10, 1e-10);
  for (int n = 0; n <= 10; ++n) EXPECT_NEAR(M[n], m[n], 1e-6);
}

TEST(MaximalParams, ReproducesChain) {
  const auto d = ChainSequence<double>::constant(0.2);
  const auto M = maximal_params(d, 15, 1e-12);
  for (int n = 1; n <= 15; ++n) EXPECT_NEAR((1.0 - M[n - 1]) * M[n], 0.2, 1e-12);
}

TEST(MaximalParams, RejectsNonChain) {
  EXPECT_THROW(maximal_params(ChainSequence<double>::constant(0.3), 5), NotAChainSequence);
}

TEST(Complement, QuarterChain) {  // [PAPER]
  const auto [a, k] = complement(quarter(), 10);
  EXPECT_EQ(a(1), q(3, 4));
  EXPECT_EQ(a(2), q(1, 6));
  EXPECT_EQ(a(3), q(5, 24));
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(k[n], q(n + 2, 2 * (n + 1)));
}

TEST(Complement, CircularJacobiLambdaOne) {  // [PAPER]
  const auto a = complement(HyperFamily<Rational>(q(1)).augmented(q(0)).chain(), 15).first;
  for (int n = 1; n <= 15; ++n) EXPECT_EQ(a(n), q(1, 4));
}

TEST(Complement, CircularJacobiLambdaZero) {  // [PAPER]
  const auto a = complement(HyperFamily<Rational>(q(0)).augmented(q(0)).chain(), 15).first;
  EXPECT_EQ(a(1), q(1, 2));
  for (int n = 2; n <= 15; ++n) EXPECT_EQ(a(n), q(1, 4));
}

TEST(Complement, InvolutionExact) {
  const std::vector<Rational> g{q(0), q(1, 3), q(2, 5), q(5, 7), q(1, 9), q(3, 4), q(1, 2)};
  const auto d = chain_from(g);
  const auto first = complement(ChainSequence<Rational>::from_values(d), 6).first;
  EXPECT_EQ(complement(first, 6).first.prefix(6), d);
}

TEST(Complement, InvolutionFloat) {
  const std::vector<double> d{0.3, 0.2, 0.25, 0.1, 0.22};
  const auto first = complement(ChainSequence<double>::from_values(d), 5).first;
  const auto back = complement(first, 5).first.prefix(5);
  for (int n = 0; n < 5; ++n) EXPECT_NEAR(back[n], d[n], 1e-14);
}

TEST(Complement, DifferenceAndRatioIdentities) {
  const std::vector<Rational> g{q(0), q(2, 7), q(3, 5), q(1, 6), q(4, 9), q(7, 8)};
  const auto d = ChainSequence<Rational>::from_values(chain_from(g));
  const auto m = minimal_params(d, 5);
  const auto [a, k] = complement(d, 5);
  EXPECT_EQ(d(1) - a(1), q(2) * m[1] - q(1));
  Rational num(1), den(1);
  for (int n = 1; n <= 5; ++n) {
    if (n >= 2) {
      EXPECT_EQ(d(n) - a(n), m[n] - m[n - 1]);
      EXPECT_EQ(m[n] - m[n - 1], -(k[n] - k[n - 1]));
    }
    num *= d(n);
    den *= a(n);
    EXPECT_EQ(m[n] / (q(1) - m[n]), num / den);
  }
}

TEST(Sppcs, QuarterIsConvergent) {  // [DERIVED]
  const auto rep = sppcs_verdict(ChainSequence<double>::constant(0.25));
  EXPECT_EQ(rep.verdict, SppcsVerdict::Convergent);
  EXPECT_LT(rep.partial_sum, 1.0);
  EXPECT_GT(rep.partial_sum, 0.98);
}

TEST(Sppcs, ComplementOfQuarterIsDivergent) {  // [PAPER]
  const auto [a, k] = complement(ChainSequence<double>::constant(0.25), kDefaultDepth);
  EXPECT_EQ(sppcs_verdict(k).verdict, SppcsVerdict::Divergent);
  EXPECT_EQ(sppcs_verdict(a).verdict, SppcsVerdict::Divergent);
}

TEST(Sppcs, OscillationNearHalfIsInconclusive) {  // [TRIVIAL]
  std::vector<double> g{0.0};
  for (int n = 1; n <= kDefaultDepth; ++n) g.push_back(n % 2 == 0 ? 0.6 : 0.4);
  EXPECT_EQ(sppcs_verdict(ParameterSequence<double>(g, ParamRole::Minimal)).verdict, SppcsVerdict::Inconclusive);
}

TEST(Sppcs, ThresholdsAreConfigurable) {
  SppcsThresholds th;
  th.divergence = 10.0;
  const auto rep = sppcs_verdict(CaratFamily<double>(0.5).chain(), 50, th);
  EXPECT_EQ(rep.verdict, SppcsVerdict::Divergent);
  EXPECT_LT(rep.terms, 50);
}

TEST(ClassifyHalf, BelowHalf) {  // [PAPER]
  EXPECT_EQ(classify_half(minimal_params(quarter(), 20)), HalfClass::ComplementIsSPPCS);
}

TEST(ClassifyHalf, AboveHalf) {  // [DERIVED]
  EXPECT_EQ(classify_half(CaratFamily<Rational>(q(1, 3)).minimal(20)), HalfClass::SelfIsSPPCS);
}

TEST(ClassifyHalf, Mixed) {  // [TRIVIAL]
  EXPECT_EQ(classify_half(ParameterSequence<double>({0.0, 0.3, 0.7}, ParamRole::Minimal)), HalfClass::NoVerdict);
}

TEST(QuarterBound, MinimalNonDecreasing) {
  std::vector<Rational> d;
  for (int n = 1; n <= 25; ++n) d.push_back(q(1, 4) + q(1, 100 * n * n));
  const auto m = minimal_params(ChainSequence<Rational>::from_values(d), 25);
  for (int n = 1; n <= 25; ++n) EXPECT_GE(m[n], m[n - 1]);
}

TEST(Augmented, RecoversT) {
  const HyperFamily<Rational> f(q(1));
  for (const auto& t : {q(0), q(3, 10), q(7, 10)}) {
    const auto aug = f.augmented(t);
    EXPECT_EQ(aug.recovered_t(), t);
    EXPECT_EQ(minimal_params(aug.chain(), 1)[1], (q(1) - t) * f.M(1));
  }
}

TEST(Augmented, NumericMaximalFirstParameter) {
  const auto aug = AugmentedChain<double>::from_base(HyperFamily<double>(1.0).base_chain(), 0.3, 1e-12);
  EXPECT_NEAR(aug.recovered_t(), 0.3, 1e-12);
  EXPECT_NEAR(aug.max_first(), 0.75, 1e-6);
}

TEST(Augmented, RejectsBadT) {
  EXPECT_THROW(HyperFamily<Rational>(q(1)).augmented(q(1)), DomainError);
  EXPECT_THROW(HyperFamily<Rational>(q(1)).augmented(q(-1, 2)), DomainError);
}

TEST(ParameterSequence, ValidatesRange) {
  EXPECT_THROW(ParameterSequence<double>({}, ParamRole::Generic), DomainError);
  EXPECT_THROW(ParameterSequence<double>({1.0}, ParamRole::Generic), DomainError);
  EXPECT_THROW(ParameterSequence<double>({0.0, 0.0}, ParamRole::Generic), DomainError);
}

TEST(ChainSequence, IndexStartsAtOne) {
  EXPECT_THROW(quarter()(0), RangeError);
}
