#include <gtest/gtest.h>

#include "hmclass/coefficient_file.hpp"
#include "hmclass/random.hpp"
#include "hmclass/verify.hpp"

using namespace hmclass;

TEST(CoefficientFile, ParsesGeneralForm) {
  const auto f = parse_coefficient_file(
      R"({"kind":"general","a":[[2,0.5,-0.25],[7,0.0,1.0]],"b":[[1,0.3,0.0]]})");
  const auto* g = std::get_if<HarmonicFunction>(&f);
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(g->a(2), Complex(0.5, -0.25));
  EXPECT_EQ(g->a(7), Complex(0.0, 1.0));
  EXPECT_EQ(g->b(1), Complex(0.3, 0.0));
}

TEST(CoefficientFile, ParsesNegativeForm) {
  const auto f = parse_coefficient_file(R"({"kind":"negative_form","a_abs":[[2,0.2]],"b_abs":[[1,0.2],[4,0.01]]})");
  const auto* g = std::get_if<NegativeCoefficientForm>(&f);
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(*g, NegativeCoefficientForm({{2, 0.2}}, {{1, 0.2}, {4, 0.01}}));
  EXPECT_EQ(as_harmonic(f).a(2), Complex(-0.2));
}

TEST(CoefficientFile, MissingArraysAreEmpty) {
  const auto f = parse_coefficient_file(R"({"kind":"general"})");
  EXPECT_EQ(std::get<HarmonicFunction>(f), HarmonicFunction{});
}

TEST(CoefficientFile, RejectsMalformedDocuments) {
  const char* bad[] = {
      R"({"kind":"general","a":[[2,0.1,0],[2,0.2,0]]})",         // duplicate
      R"({"kind":"general","a":[[3,0.1,0],[2,0.2,0]]})",         // decreasing
      R"({"kind":"general","a":[[1,0.1,0]]})",                   // a starts at 2
      R"({"kind":"general","b":[[0,0.1,0]]})",                   // b starts at 1
      R"({"kind":"general","a":[[2,0.1]]})",                     // arity
      R"({"kind":"general","a":[[2.5,0.1,0]]})",                 // non-integer index
      R"({"kind":"general","a":[[2,"x",0]]})",                   // non-numeric
      R"({"kind":"general","a":{"2":0.1}})",                     // not an array
      R"({"kind":"negative_form","a_abs":[[2,-0.1]]})",          // negative magnitude
      R"({"kind":"negative_form","b_abs":[[1,0.1,0.0]]})",       // arity
      R"({"kind":"polynomial"})",                                // kind
      R"({"a":[]})",                                             // no kind
      R"([1,2,3])",                                              // not an object
      R"({"kind":"general","a":[[2,0.1,0]])",                    // truncated JSON
  };
  for (const char* text : bad) {
    EXPECT_THROW(parse_coefficient_file(text), ParseError) << text;
  }
}

TEST(CoefficientFile, SerializationRoundTrips) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const ClassParams p = random_params(s);
    const NegativeCoefficientForm neg = random_member(p, s, 12);
    const HarmonicFunction gen = randomize_phases(neg, s);
    EXPECT_EQ(std::get<NegativeCoefficientForm>(parse_coefficient_file(to_json(neg).dump())), neg);
    EXPECT_EQ(std::get<HarmonicFunction>(parse_coefficient_file(to_json(gen).dump())), gen);
  }
}
