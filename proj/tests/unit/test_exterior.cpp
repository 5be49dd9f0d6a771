#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "natsu2/exterior.hpp"

using namespace natsu2;

namespace {

KForm e(std::initializer_list<int> idx, const Scalar& c = 1) { return KForm::basis(5, idx, c); }

KForm random_form(std::mt19937_64& rng, int dim, int grade, bool integer_coeffs) {
  std::uniform_int_distribution<int> coin(0, 2), num(-5, 5), den(1, 4);
  KForm::Terms terms;
  for (unsigned m = 0; m < (1u << dim); ++m) {
    if (std::popcount(m) != grade || coin(rng) == 0) continue;
    terms[MultiIndex::from_mask(static_cast<std::uint8_t>(m))] =
        integer_coeffs ? Scalar(num(rng)) : Scalar::fraction(num(rng), den(rng));
  }
  return KForm(dim, grade, terms);
}

FrameVector random_vector(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  FrameVector v{std::vector<Scalar>(static_cast<std::size_t>(dim))};
  for (auto& c : v.components) c = Scalar::fraction(num(rng), den(rng));
  return v;
}

}  // namespace

TEST(MultiIndex, RejectsRepeatedIndices) { EXPECT_THROW((MultiIndex{1, 1}), Error); }

TEST(MultiIndex, RejectsUnsortedIndices) { EXPECT_THROW((MultiIndex{3, 1}), ShapeMismatch); }

TEST(MultiIndex, CountsGrade) {
  MultiIndex m{1, 3};
  EXPECT_EQ(m.grade(), 2);
  EXPECT_EQ(m.indices(), (std::vector<int>{1, 3}));
}

TEST(KForm, RejectsUnsupportedDimension) { EXPECT_THROW(KForm(4, 1), ShapeMismatch); }

TEST(LinearCombine, DropsZeroCoefficient) {
  std::vector<Scalar> c{1, 0};
  std::vector<KForm> f{e({1, 2}), e({3, 4})};
  EXPECT_TRUE(equals(linear_combine(c, f), e({1, 2}), 0.0));
}

TEST(LinearCombine, CancelsToEmptyTermMap) {
  std::vector<Scalar> c{1, -1};
  std::vector<KForm> f{e({1, 2}), e({1, 2})};
  EXPECT_TRUE(linear_combine(c, f).is_zero());
}

TEST(LinearCombine, BuildsAlpha1) {
  std::vector<Scalar> c{1, -1};
  std::vector<KForm> f{e({1, 4}), e({2, 3})};
  auto a1 = linear_combine(c, f);
  EXPECT_EQ(a1.coefficient(MultiIndex{1, 4}), Scalar(1));
  EXPECT_EQ(a1.coefficient(MultiIndex{2, 3}), Scalar(-1));
  EXPECT_EQ(a1.terms().size(), 2u);
}

TEST(LinearCombine, RejectsGradeMismatch) {
  std::vector<Scalar> c{1, 1};
  std::vector<KForm> f{e({1, 2}), e({1})};
  EXPECT_THROW(linear_combine(c, f), ShapeMismatch);
}

TEST(Wedge, BasisOneForms) { EXPECT_TRUE(equals(wedge(e({1}), e({2})), e({1, 2}), 0.0)); }

TEST(Wedge, Alpha1Squared) {
  KForm a1 = e({1, 4}) - e({2, 3});
  EXPECT_TRUE(equals(wedge(a1, a1), e({1, 2, 3, 4}, -2), 0.0));
  EXPECT_TRUE(equals(wedge(e({1, 2}), e({3, 4})), e({1, 2, 3, 4}), 0.0));
}

TEST(Wedge, DthetaAgainstAlpha0Vanishes) {
  KForm dtheta = e({1, 3}, -1) - e({2, 4});
  EXPECT_TRUE(wedge(dtheta, e({1, 2})).is_zero());
}

TEST(Wedge, OverfullGradeGivesZero) { EXPECT_TRUE(wedge(e({0, 1, 2}), e({1, 3, 4})).is_zero()); }

TEST(Wedge, RejectsDimensionMismatch) {
  EXPECT_THROW(wedge(e({1}), KForm::basis(6, {2})), ShapeMismatch);
}

TEST(Contract, BasisExamples) {
  EXPECT_TRUE(equals(contract(FrameVector::basis(5, 1), e({1, 2})), e({2}), 0.0));
  KForm dtheta = e({1, 3}, -1) - e({2, 4});
  EXPECT_TRUE(equals(contract(FrameVector::basis(5, 3), dtheta), e({1}), 0.0));
  EXPECT_TRUE(contract(FrameVector::basis(5, 0), e({1, 2})).is_zero());
}

TEST(Contract, RejectsZeroForm) {
  EXPECT_THROW(contract(FrameVector::basis(5, 0), KForm::constant(5, 2)), ShapeMismatch);
}

TEST(Equals, ToleranceAndMismatch) {
  EXPECT_TRUE(equals(e({1, 2}), e({1, 2})));
  EXPECT_TRUE(equals(e({1, 2}), e({1, 2}) + e({3, 4}, Scalar::real(1e-12)), 1e-9));
  EXPECT_FALSE(equals(e({1, 2}), e({3, 4})));
}

TEST(Evaluate, DeterminantConvention) {
  std::vector<FrameVector> v{FrameVector::basis(5, 1), FrameVector::basis(5, 2)};
  EXPECT_EQ(evaluate(e({1, 2}), v), Scalar(1));
  std::swap(v[0], v[1]);
  EXPECT_EQ(evaluate(e({1, 2}), v), Scalar(-1));
}

TEST(ExteriorProperties, WedgeIsAssociative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 5 + trial % 2;
    std::uniform_int_distribution<int> g(0, 2);
    const int ga = g(rng), gb = g(rng), gc = std::min(g(rng), dim - ga - gb);
    auto a = random_form(rng, dim, ga, false), b = random_form(rng, dim, gb, false),
         c = random_form(rng, dim, std::max(gc, 0), false);
    EXPECT_TRUE(equals(wedge(wedge(a, b), c), wedge(a, wedge(b, c)), 0.0));
  }
}

TEST(ExteriorProperties, WedgeIsGradedAnticommutative) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> g(0, 3);
    const int ga = g(rng), gb = std::min(g(rng), 5 - ga);
    auto a = random_form(rng, 5, ga, false), b = random_form(rng, 5, gb, false);
    const Scalar sign = (ga * gb) % 2 ? -1 : 1;
    EXPECT_TRUE(equals(wedge(a, b), sign * wedge(b, a), 0.0));
  }
}

TEST(ExteriorProperties, ContractionIsAnAntiderivation) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 5 + trial % 2;
    std::uniform_int_distribution<int> g(1, 3);
    const int ga = g(rng), gb = std::min(g(rng), dim - ga);
    auto a = random_form(rng, dim, ga, false), b = random_form(rng, dim, gb, false);
    auto x = random_vector(rng, dim);
    const Scalar sign = ga % 2 ? -1 : 1;
    KForm lhs = contract(x, wedge(a, b));
    KForm rhs = wedge(contract(x, a), b) + sign * wedge(a, contract(x, b));
    EXPECT_TRUE(equals(lhs, rhs, 0.0));
  }
}

TEST(ExteriorProperties, DoubleContractionVanishes) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 5 + trial % 2;
    auto w = random_form(rng, dim, 2 + trial % (dim - 1), false);
    auto x = random_vector(rng, dim);
    EXPECT_TRUE(contract(x, contract(x, w)).is_zero());
  }
}

TEST(ExteriorProperties, ExactAndFloatPathsAgree) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_form(rng, 5, 2, false), b = random_form(rng, 5, 2, false);
    auto x = random_vector(rng, 5);
    KForm exact = contract(x, wedge(a, b));
    KForm fl = contract(x, wedge(a.to_float(), b.to_float()));
    EXPECT_TRUE(equals(exact, fl, 1e-12));
  }
}

TEST(ExteriorProperties, RepeatedOneFormsAlternate) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_form(rng, 6, 1, true), b = random_form(rng, 6, 2, true);
    EXPECT_TRUE(wedge(a, wedge(b, a)).is_zero());
  }
}
