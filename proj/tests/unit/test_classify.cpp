#include <gtest/gtest.h>

#include "natsu2/classify.hpp"
#include "natsu2/families.hpp"
#include "support/generators.hpp"

using namespace natsu2;

namespace {

GeometryParams geom(const Scalar& K, const Scalar& s2) { return GeometryParams::from_radius_squared(K, s2); }

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST(Classify, MainExampleIsHypoForEveryCurvature) {
  for (int K = -4; K <= 6; ++K) {
    auto f = classify(main_example(geom(K, Scalar::fraction(1, 2))));
    EXPECT_TRUE(f.su2_valid);
    EXPECT_TRUE(f.hypo) << K;
    EXPECT_TRUE(f.contact_hypo) << K;
    EXPECT_FALSE(f.sasaki_einstein) << K;
  }
}

TEST(Classify, MainExampleIsSasakiEinsteinOnlyAtTheSpecialRadius) {
  EXPECT_TRUE(classify(main_example(geom(3, Scalar::fraction(1, 3)))).sasaki_einstein);
  EXPECT_FALSE(classify(main_example(geom(3, Scalar::fraction(1, 2)))).sasaki_einstein);
  EXPECT_FALSE(classify(main_example(geom(2, Scalar::fraction(1, 3)))).sasaki_einstein);
}

TEST(Classify, FlatDoubleHypoExample) {
  auto ns = type1_nearly_hypo(1, 2, 3, geom(0, Scalar::fraction(1, 6)));
  auto f = classify(ns);
  EXPECT_TRUE(f.hypo);
  EXPECT_TRUE(f.nearly_hypo);
  EXPECT_TRUE(f.double_hypo);
  EXPECT_FALSE(f.sasaki_einstein);
  EXPECT_EQ(f.residuals.at("d(omega2)=3theta~^omega3"), 0.0);
}

TEST(Classify, TypeIIExample) {
  auto sol = type2_double_hypo({2, 1, 2, 1, Scalar::real(-std::sqrt(2.0)), 1});
  auto f = classify(sol.ns);
  EXPECT_TRUE(f.double_hypo);
  EXPECT_FALSE(f.contact_hypo);
  EXPECT_TRUE(f.omega3_dual);
  EXPECT_FALSE(f.sasaki_einstein);
}

TEST(Classify, ResidualsAreReportedPerEquation) {
  auto f = classify(main_example(geom(1, 1)));
  for (const char* label : {"d(omega1)=0", "d(theta~^omega2)=0", "d(theta~^omega3)=0", "d(omega2)=3theta~^omega3",
                            "d(theta~^omega1)=-2omega1^omega1", "d(theta~)=-2omega1", "d(omega3)=-3theta~^omega2"})
    EXPECT_TRUE(f.residuals.count(label)) << label;
}

TEST(Classify, ClassInclusionsOnRandomStructures) {
  testkit::Generator gen(201);
  int hypo = 0;
  for (int i = 0; i < 300; ++i) {
    // a third of the samples come from the type I hypo family
    auto ns = i % 3 ? gen.valid_structure()
                    : type1_from_parameters(gen.type1_surface_point(), geom(gen.rational(-3, 3, 4), gen.nonzero_rational(0, 2, 4)));
    auto f = classify(ns);
    hypo += f.hypo;
    if (f.sasaki_einstein) {
      EXPECT_TRUE(f.double_hypo && f.contact_hypo);
    }
    if (f.contact_hypo) {
      EXPECT_TRUE(f.hypo);
    }
    EXPECT_EQ(f.double_hypo, f.hypo && f.nearly_hypo);
  }
  EXPECT_GT(hypo, 0);
}

TEST(Classify, SasakiEinsteinFamilyMembersAreEverything) {
  for (int k = -3; k <= 3; ++k) {
    const Scalar m = Scalar::fraction(k, 4);
    auto ns = sasaki_einstein_family(Scalar::fraction(1, 3), Scalar(2) * m / (Scalar(1) + m * m), k < 0 ? -1 : 1);
    auto f = classify(ns);
    EXPECT_TRUE(f.sasaki_einstein && f.double_hypo && f.contact_hypo && f.omega3_dual) << k;
  }
}

TEST(CurvatureGuards, ShapeNotes) {
  EXPECT_TRUE(contains(curvature_guards(main_example(geom(1, 1))), "type I shape: omega1=a3*dtheta"));
  auto sol = type2_double_hypo({2, 1, 2, 1, Scalar::real(-std::sqrt(2.0)), 1});
  EXPECT_TRUE(contains(curvature_guards(sol.ns), "type II shape, K=a0/(a2*s^2) consistent"));
  auto ns = main_example(geom(1, 1));
  ns.a = {0, 1, 0, 0};
  EXPECT_TRUE(contains(curvature_guards(ns), "d(omega1)!=0 for all K (a1!=0)"));
  ns = main_example(geom(1, 1));
  ns.b = {0, 0, 0, 1};
  EXPECT_TRUE(contains(curvature_guards(ns), "b3!=0: d(theta^omega2)!=0"));
}

TEST(CurvatureGuards, NonzeroA1NeverClosesOmega1) {
  testkit::Generator gen(202);
  for (int i = 0; i < 200; ++i) {
    auto ns = gen.valid_structure();
    if (ns.a[1].is_zero(0.0)) continue;
    EXPECT_GT(classify(ns).residuals.at("d(omega1)=0"), 0.0);
  }
}
