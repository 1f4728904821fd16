#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "hmclass/classes.hpp"
#include "hmclass/random.hpp"
#include "hmclass/verify.hpp"
#include "test_support.hpp"

using namespace hmclass;
using hmclass::testing::rel_err;

namespace {
const ClassParams kHalf{0.5, 0.0, 0.0, 0.0};
}

TEST(ClassParams, Validation) {
  EXPECT_NO_THROW(ClassParams(0.0, 0.0, 0.0, 0.0));
  EXPECT_NO_THROW(ClassParams(0.999, 5.0, 1.0, 0.999));
  EXPECT_THROW(ClassParams(1.0, 0.0, 0.0, 0.0), DomainError);
  EXPECT_THROW(ClassParams(-0.1, 0.0, 0.0, 0.0), DomainError);
  EXPECT_THROW(ClassParams(0.5, -1.0, 0.0, 0.0), DomainError);
  EXPECT_THROW(ClassParams(0.5, 0.0, 1.5, 0.0), DomainError);
  EXPECT_THROW(ClassParams(0.5, 0.0, 0.5, 1.0), DomainError);
}

TEST(Phi, HandValues) {
  EXPECT_EQ(phi(2, {0.5, 0.0, 0.3, 0.0}), 1.0);
  EXPECT_NEAR(phi(2, {0.5, 1.0, 1.0, 0.0}), 4.0, 1e-15);
  EXPECT_NEAR(phi(2, {0.5, 0.5, 0.0, 0.5}), 2.0, 1e-14);
  EXPECT_THROW(phi(1, kHalf), DomainError);
}

TEST(Psi, HandValues) {
  for (double nu : {0.0, 0.3, 0.8}) EXPECT_NEAR(psi(1, {0.5, 0.0, 0.6, nu}), 1.0, 1e-15);
  EXPECT_NEAR(psi(2, {0.5, 1.0, 0.0, 0.0}), -2.0, 1e-15);
  for (double nu : {0.0, 0.3, 0.8}) EXPECT_EQ(psi(1, {0.5, 0.5, 0.0, nu}), 0.0);
  EXPECT_THROW(psi(0, kHalf), DomainError);
}

TEST(Phi, PositiveAndNondecreasingInLambda) {
  for (double k : {0.0, 0.4, 1.0}) {
    for (double nu : {0.0, 0.5, 0.9}) {
      for (int n = 2; n <= 30; ++n) {
        double previous = 0.0;
        for (double lambda = 0.0; lambda <= 5.0; lambda += 0.25) {
          const double v = phi(n, {0.1, lambda, k, nu});
          EXPECT_GT(v, 0.0);
          EXPECT_GE(v, previous);
          previous = v;
        }
      }
    }
  }
}

TEST(Deficiency, HandValues) {
  for (double beta : {0.0, 0.3, 0.9}) {
    EXPECT_EQ(coefficient_deficiency(HarmonicFunction{}, {beta, 1.0, 0.5, 0.5}), 1.0 - beta);
  }
  const NegativeCoefficientForm member({{2, 0.2}}, {{1, 0.2}});
  EXPECT_NEAR(coefficient_deficiency(member, kHalf), 0.1, 1e-15);
  EXPECT_NEAR(coefficient_deficiency(member.to_harmonic(), kHalf), 0.1, 1e-15);
  EXPECT_NEAR(coefficient_deficiency(NegativeCoefficientForm({{2, 0.8}}, {}), kHalf), -0.3, 1e-15);
}

TEST(Deficiency, UsesModuliOfComplexCoefficients) {
  const HarmonicFunction f({{2, std::complex<double>(0.12, -0.16)}}, {{1, std::complex<double>(0, 0.2)}});
  EXPECT_NEAR(coefficient_deficiency(f, kHalf), 0.1, 1e-15);
}

TEST(Sufficient, Verdicts) {
  const HarmonicFunction member({{2, -0.2}}, {{1, 0.2}});
  EXPECT_EQ(is_member_sufficient(member, kHalf).verdict, Verdict::member_sufficient);
  for (std::uint64_t s = 0; s < 20; ++s) {
    EXPECT_EQ(is_member_sufficient(HarmonicFunction{}, random_params(s)).verdict,
              Verdict::member_sufficient);
  }
  const MembershipReport r = is_member_sufficient(HarmonicFunction({{2, -0.8}}, {}), kHalf);
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
  EXPECT_FALSE(r.certified());
  EXPECT_NE(r.verdict, Verdict::non_member);
  EXPECT_THROW(is_member_sufficient(HarmonicFunction({}, {{1, 1.0}}), kHalf), DomainError);
}

TEST(NegativeClass, Verdicts) {
  EXPECT_EQ(is_member_negative_class(NegativeCoefficientForm({{2, 0.2}}, {{1, 0.2}}), kHalf).verdict,
            Verdict::member_iff);
  EXPECT_EQ(is_member_negative_class(NegativeCoefficientForm({{2, 0.8}}, {}), kHalf).verdict,
            Verdict::non_member);
  EXPECT_EQ(is_member_negative_class(NegativeCoefficientForm({{2, 0.5}}, {}), kHalf).verdict,
            Verdict::boundary);
  EXPECT_THROW(is_member_negative_class(NegativeCoefficientForm({}, {{1, 1.2}}), kHalf),
               DomainError);
}

TEST(NegativeClass, ContributionsSumToUsedBudget) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const ClassParams p = random_params(s);
    const NegativeCoefficientForm f = random_member(p, mix_seed(s, 3), 12);
    const MembershipReport r = is_member_negative_class(f, p);
    double sum = 0.0;
    for (const auto& t : r.per_term) sum += t.contribution;
    EXPECT_NEAR(sum, p.budget() - r.deficiency, 1e-12);
    EXPECT_EQ(r.verdict, Verdict::member_iff);
  }
}

TEST(NegativeClass, FlagsUnconstrainedIndices) {
  // psi(1) = 1 - 2 lambda (1 - k) vanishes at lambda = 0.5, k = 0.
  const ClassParams p{0.5, 0.5, 0.0, 0.0};
  const MembershipReport r = is_member_negative_class(NegativeCoefficientForm({}, {{1, 0.9}}), p);
  ASSERT_EQ(r.per_term.size(), 1u);
  EXPECT_TRUE(r.per_term[0].unconstrained);
  EXPECT_EQ(r.per_term[0].contribution, 0.0);
  EXPECT_EQ(r.verdict, Verdict::member_iff);
}

TEST(SpecializedWeights, HandValues) {
  const WeightPair l0 = specialized_weights(Specialization::lambda0, 2, {0.5, 0.0, 0.3, 0.0});
  EXPECT_NEAR(l0.phi, 1.0, 1e-15);
  EXPECT_NEAR(l0.psi_signed, 1.0, 1e-15);

  const WeightPair k1 = specialized_weights(Specialization::k1, 2, {0.5, 1.0, 1.0, 0.0});
  EXPECT_NEAR(k1.phi, 4.0, 1e-14);
  EXPECT_NEAR(k1.phi, phi(2, {0.5, 1.0, 1.0, 0.0}), 1e-14);

  const ClassParams k0p{0.5, 1.0, 0.0, 0.0};
  const WeightPair k0 = specialized_weights(Specialization::k0, 1, k0p);
  EXPECT_NEAR(std::abs(k0.psi_signed), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(k0.psi_signed), std::abs(psi(1, k0p)), 1e-15);
}

TEST(SpecializedWeights, MismatchedParameters) {
  EXPECT_THROW(specialized_weights(Specialization::lambda0, 2, {0.5, 0.1, 0.0, 0.0}),
               MismatchError);
  EXPECT_THROW(specialized_weights(Specialization::lambda1, 2, {0.5, 0.5, 0.0, 0.0}),
               MismatchError);
  EXPECT_THROW(specialized_weights(Specialization::k1, 2, {0.5, 0.5, 0.9, 0.0}), MismatchError);
  EXPECT_THROW(specialized_weights(Specialization::k0, 2, {0.5, 0.5, 0.1, 0.0}), MismatchError);
}

TEST(SpecializedWeights, EqualGeneralWeightsAtPinnedParameters) {
  struct Case {
    Specialization variant;
    double lambda;
    double k;
  };
  const Case cases[] = {
      {Specialization::lambda0, 0.0, 0.0}, {Specialization::lambda0, 0.0, 0.6},
      {Specialization::lambda1, 1.0, 0.0}, {Specialization::lambda1, 1.0, 0.35},
      {Specialization::lambda1, 1.0, 1.0}, {Specialization::k1, 0.0, 1.0},
      {Specialization::k1, 0.7, 1.0},      {Specialization::k1, 2.5, 1.0},
      {Specialization::k0, 0.0, 0.0},      {Specialization::k0, 0.3, 0.0},
      {Specialization::k0, 1.8, 0.0},
  };
  for (const auto& c : cases) {
    for (double nu : {0.0, 0.25, 0.5, 0.75}) {
      const ClassParams p{0.2, c.lambda, c.k, nu};
      for (int n = 1; n <= 20; ++n) {
        const WeightPair s = specialized_weights(c.variant, n, p);
        if (n >= 2) {
          EXPECT_LE(rel_err(s.phi, phi(n, p)), 1e-12);
        }
        const double general = psi(n, p);
        if (general == 0.0) {
          EXPECT_LE(std::abs(s.psi_signed), 1e-15);
        } else {
          EXPECT_LE(rel_err(s.psi_signed, general), 1e-12)
              << to_string(c.variant) << " n=" << n << " nu=" << nu;
        }
      }
    }
  }
}

TEST(SharpFunction, HandValues) {
  const HarmonicFunction f = sharp_function(kHalf, {{2, 0.5}}, {});
  EXPECT_EQ(f, HarmonicFunction({{2, 0.5}}, {}));
  const HarmonicFunction g = sharp_function(kHalf, {}, {{1, 0.5}});
  EXPECT_EQ(g, HarmonicFunction({}, {{1, 0.5}}));
  EXPECT_THROW(sharp_function(kHalf, {}, {}), WeightSumError);
  EXPECT_THROW(sharp_function({0.5, 0.5, 0.0, 0.0}, {}, {{1, 0.5}}), DegenerateWeightError);
}

TEST(SharpFunction, AttainsTheBoundary) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const ClassParams p = random_params(s);
    Rng rng(mix_seed(s, 8));
    std::map<int, Complex> gamma;
    std::map<int, Complex> delta;
    std::vector<double> raw;
    for (int n = 2; n <= 8; ++n) raw.push_back(rng.exponential());
    for (int n = 1; n <= 8; ++n) raw.push_back(psi_degenerate(n, p) ? 0.0 : rng.exponential());
    double total = 0.0;
    for (double v : raw) total += v;
    std::size_t i = 0;
    for (int n = 2; n <= 8; ++n, ++i) {
      gamma[n] = std::polar(p.budget() * raw[i] / total, rng.uniform(0.0, 6.28));
    }
    for (int n = 1; n <= 8; ++n, ++i) {
      if (raw[i] > 0.0) delta[n] = std::polar(p.budget() * raw[i] / total, rng.uniform(0.0, 6.28));
    }
    const HarmonicFunction f = sharp_function(p, gamma, delta);
    EXPECT_NEAR(weighted_coefficient_sum(f, p), p.budget(), 1e-12);
  }
}
