#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "hmclass/random.hpp"
#include "hmclass/structure.hpp"
#include "hmclass/verify.hpp"

using namespace hmclass;

namespace {

const ClassParams kHalf{0.5, 0.0, 0.0, 0.0};

void expect_same(const NegativeCoefficientForm& got, const NegativeCoefficientForm& want,
                 double tol) {
  for (int n = 1; n <= 64; ++n) {
    if (n >= 2) {
      EXPECT_NEAR(got.a_abs(n), want.a_abs(n), tol) << "a_" << n;
    }
    EXPECT_NEAR(got.b_abs(n), want.b_abs(n), tol) << "b_" << n;
  }
}

}  // namespace

TEST(ExtremePointF, HandValues) {
  EXPECT_EQ(extreme_point_f(2, kHalf), NegativeCoefficientForm({{2, 0.5}}, {}));
  EXPECT_NEAR(extreme_point_f(2, {0.5, 1.0, 1.0, 0.0}).a_abs(2), 0.125, 1e-16);
  EXPECT_EQ(extreme_point_f(3, kHalf), NegativeCoefficientForm({{3, 0.5}}, {}));
  EXPECT_THROW(extreme_point_f(1, kHalf), DomainError);
}

TEST(ExtremePointG, HandValues) {
  EXPECT_EQ(extreme_point_g(1, kHalf), NegativeCoefficientForm({}, {{1, 0.5}}));
  EXPECT_NEAR(extreme_point_g(2, {0.5, 1.0, 0.0, 0.0}).b_abs(2), 0.25, 1e-16);
  EXPECT_THROW(extreme_point_g(1, {0.5, 0.5, 0.0, 0.0}), DegenerateWeightError);
  EXPECT_THROW(extreme_point_g(0, kHalf), DomainError);
}

TEST(ExtremePointG, FirstIndexMayLeaveTheUnivalenceRange) {
  const NegativeCoefficientForm g = extreme_point_g(1, {0.0, 0.0, 0.0, 0.0});
  EXPECT_EQ(g.b_abs(1), 1.0);
  EXPECT_FALSE(g.univalence_candidate());
}

TEST(ExtremePoints, SitOnTheBoundary) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const ClassParams p = random_params(s);
    for (int n = 1; n <= 12; ++n) {
      if (n >= 2) {
        EXPECT_NEAR(coefficient_deficiency(extreme_point_f(n, p), p), 0.0, 1e-15);
      }
      if (!psi_degenerate(n, p)) {
        EXPECT_NEAR(coefficient_deficiency(extreme_point_g(n, p), p), 0.0, 1e-15);
      }
    }
  }
}

TEST(Decompose, HandValues) {
  const WeightDecomposition w = decompose(NegativeCoefficientForm({{2, 0.2}}, {}), kHalf);
  EXPECT_NEAR(w.t1, 0.6, 1e-15);
  ASSERT_EQ(w.t.size(), 1u);
  EXPECT_NEAR(w.t.at(2), 0.4, 1e-15);
  EXPECT_TRUE(w.s.empty());

  EXPECT_EQ(decompose(NegativeCoefficientForm{}, random_params(4)).t1, 1.0);

  const WeightDecomposition e = decompose(NegativeCoefficientForm({{2, 0.5}}, {}), kHalf);
  EXPECT_EQ(e.t1, 0.0);
  EXPECT_EQ(e.t.at(2), 1.0);
}

TEST(Decompose, Errors) {
  EXPECT_THROW(decompose(NegativeCoefficientForm({{2, 0.6}}, {}), kHalf), MembershipError);
  EXPECT_THROW(decompose(NegativeCoefficientForm({}, {{1, 0.3}}), {0.5, 0.5, 0.0, 0.0}),
               DegenerateWeightError);
}

TEST(Reconstruct, HandValues) {
  WeightDecomposition w;
  w.t1 = 0.6;
  w.t = {{2, 0.4}};
  expect_same(reconstruct(w, kHalf), NegativeCoefficientForm({{2, 0.2}}, {}), 1e-16);

  EXPECT_EQ(reconstruct(WeightDecomposition{}, kHalf), NegativeCoefficientForm{});

  WeightDecomposition pure;
  pure.t1 = 0.0;
  pure.t = {{2, 1.0}};
  EXPECT_EQ(reconstruct(pure, kHalf), NegativeCoefficientForm({{2, 0.5}}, {}));

  WeightDecomposition bad;
  bad.t1 = 0.5;
  bad.t = {{2, 0.6}};
  EXPECT_THROW(reconstruct(bad, kHalf), WeightSumError);
}

TEST(Decompose, RoundTrips) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    const ClassParams p = random_params(s);
    const NegativeCoefficientForm f = random_member(p, mix_seed(s, 1), 10);
    const WeightDecomposition w = decompose(f, p);
    EXPECT_NEAR(w.total(), 1.0, 1e-12);
    EXPECT_GE(w.t1, -1e-15);
    expect_same(reconstruct(w, p), f, 1e-12);
  }
}

TEST(Convolve, HandValues) {
  const NegativeCoefficientForm a({{2, 0.2}}, {});
  const NegativeCoefficientForm b({{2, 0.5}}, {});
  expect_same(convolve(a, b), NegativeCoefficientForm({{2, 0.1}}, {}), 1e-17);
  EXPECT_EQ(convolve(NegativeCoefficientForm({{2, 0.3}, {4, 0.1}}, {{1, 0.4}}),
                     NegativeCoefficientForm{}),
            NegativeCoefficientForm{});
  expect_same(convolve(NegativeCoefficientForm({}, {{1, 0.3}}), NegativeCoefficientForm({}, {{1, 0.5}})),
              NegativeCoefficientForm({}, {{1, 0.15}}), 1e-17);
}

TEST(Convolve, CommutativeAndAssociative) {
  const ClassParams p{0.1, 0.4, 0.5, 0.2};
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto f = random_member(p, mix_seed(s, 1));
    const auto g = random_member(p, mix_seed(s, 2));
    const auto h = random_member(p, mix_seed(s, 3));
    EXPECT_EQ(convolve(f, g), convolve(g, f));
    expect_same(convolve(convolve(f, g), h), convolve(f, convolve(g, h)), 1e-16);
  }
}

TEST(ConvolutionClosure, HandCases) {
  const NegativeCoefficientForm f({{2, 0.2}}, {});
  const ClassParams shape{0.0, 0.0, 0.0, 0.0};
  const ConvolutionReport r = check_convolution_closure(f, f, 0.7, 0.5, shape);
  ASSERT_TRUE(r.hypothesis_ok);
  EXPECT_NEAR(r.factor1_deficiency, 0.1, 1e-15);
  EXPECT_NEAR(r.factor2_deficiency, 0.1, 1e-15);
  EXPECT_NEAR(r.product->a_abs(2), 0.04, 1e-16);
  EXPECT_NEAR(r.product_deficiency_alpha, 0.26, 1e-15);
  EXPECT_TRUE(r.closure_holds());

  const ConvolutionReport id =
      check_convolution_closure(NegativeCoefficientForm{}, f, 0.7, 0.0, shape);
  ASSERT_TRUE(id.hypothesis_ok);
  EXPECT_EQ(*id.product, NegativeCoefficientForm{});

  const ConvolutionReport bad = check_convolution_closure(
      NegativeCoefficientForm({{2, 0.25}}, {}), NegativeCoefficientForm({{2, 0.9}}, {}), 0.8, 0.5,
      shape);
  EXPECT_FALSE(bad.hypothesis_ok);
  EXPECT_FALSE(bad.product.has_value());
  EXPECT_FALSE(bad.closure_holds());

  EXPECT_THROW(check_convolution_closure(f, f, 0.5, 0.5, shape), DomainError);
}

TEST(ConvolutionClosure, MagnitudeHypothesisOnSecondFactor) {
  const ClassParams shape{0.0, 1.0, 0.0, 0.0};  // |psi(1)| = 1, |psi(2)| = 2
  const NegativeCoefficientForm small({}, {{1, 0.05}});
  const NegativeCoefficientForm large_b({}, {{3, 1.5}});
  EXPECT_EQ(check_convolution_closure(small, large_b, 0.5, 0.0, shape).violation,
            "second factor has a coefficient magnitude >= 1");
  const NegativeCoefficientForm f1({}, {{1, 0.05}});
  EXPECT_TRUE(check_convolution_closure(f1, small, 0.5, 0.0, shape, /*strict=*/true).hypothesis_ok);
}

TEST(ConvexCombine, HandValues) {
  const std::vector<NegativeCoefficientForm> pair = {NegativeCoefficientForm({{2, 0.2}}, {}),
                                                     NegativeCoefficientForm({{2, 0.5}}, {})};
  const std::vector<double> halves = {0.5, 0.5};
  expect_same(convex_combine(pair, halves), NegativeCoefficientForm({{2, 0.35}}, {}), 1e-16);

  const std::vector<NegativeCoefficientForm> single = {NegativeCoefficientForm({{3, 0.1}}, {{2, 0.2}})};
  const std::vector<double> one = {1.0};
  EXPECT_EQ(convex_combine(single, one), single[0]);

  const std::vector<NegativeCoefficientForm> mixed = {NegativeCoefficientForm({{2, 0.4}}, {}),
                                                      NegativeCoefficientForm({}, {{1, 0.2}})};
  const std::vector<double> w = {0.25, 0.75};
  expect_same(convex_combine(mixed, w), NegativeCoefficientForm({{2, 0.1}}, {{1, 0.15}}), 1e-16);
}

TEST(ConvexCombine, WeightErrors) {
  const std::vector<NegativeCoefficientForm> pair(2);
  const std::vector<double> short_sum = {0.5, 0.4};
  const std::vector<double> negative = {1.5, -0.5};
  const std::vector<double> wrong_size = {1.0};
  EXPECT_THROW(convex_combine(pair, short_sum), WeightSumError);
  EXPECT_THROW(convex_combine(pair, negative), WeightSumError);
  EXPECT_THROW(convex_combine(pair, wrong_size), WeightSumError);
}

TEST(ConvexCombine, StaysInClass) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const ClassParams p = random_params(s);
    Rng rng(mix_seed(s, 5));
    const int members = rng.integer(1, 5);
    std::vector<NegativeCoefficientForm> fs;
    std::vector<double> ts;
    double total = 0.0;
    for (int i = 0; i < members; ++i) {
      fs.push_back(random_member(p, mix_seed(s, 100 + i)));
      ts.push_back(rng.exponential());
      total += ts.back();
    }
    for (double& t : ts) t /= total;
    EXPECT_GT(coefficient_deficiency(convex_combine(fs, ts), p), 0.0);
  }
}
