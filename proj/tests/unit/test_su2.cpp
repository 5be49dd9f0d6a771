#include <gtest/gtest.h>

#include "natsu2/families.hpp"
#include "natsu2/su2.hpp"
#include "support/generators.hpp"

using namespace natsu2;

namespace {

GeometryParams geom(const Scalar& K, const Scalar& s2) { return GeometryParams::from_radius_squared(K, s2); }

bool has_violation(const SU2Check& c, const std::string& label) {
  return std::find(c.violations.begin(), c.violations.end(), label) != c.violations.end();
}

}  // namespace

TEST(Su2Check, MainExampleIsValid) {
  auto c = check_su2(main_example(geom(3, Scalar::fraction(1, 3))));
  EXPECT_TRUE(c.valid);
  EXPECT_EQ(c.nu, Scalar(1));
}

TEST(Su2Check, ReportsEachViolatedEquation) {
  auto ns = main_example(geom(1, 1));
  ns.p = 0;
  EXPECT_TRUE(has_violation(check_su2(ns), "p!=0"));
  ns = main_example(geom(1, 1));
  ns.b = {0, 0, 0, 1};
  auto c = check_su2(ns);
  EXPECT_FALSE(c.valid);
  EXPECT_TRUE(has_violation(c, "a0b2+a2b0-2a1b1-2a3b3=0"));
  ns = main_example(geom(1, 1));
  ns.c = {0, -1, 0, 0};
  EXPECT_TRUE(has_violation(check_su2(ns), "g11>0"));
  ns = main_example(geom(1, 1));
  ns.a = {0, 0, 0, 0};
  EXPECT_TRUE(has_violation(check_su2(ns), "a1^2+a3^2-a0a2!=0"));
}

TEST(Metric, MainExampleIsIdentity) {
  auto m = metric_closed_form(main_example(geom(-2, 5)));
  EXPECT_TRUE(mat::equals(m.matrix(), mat::identity(), 0.0));
  EXPECT_TRUE(m.pd);
  EXPECT_TRUE(m.g_natural);
  EXPECT_EQ(m.g00, Scalar(20));
}

TEST(Metric, FlatDoubleHypoExample) {
  auto ns = type1_nearly_hypo(1, 2, 3, geom(0, Scalar::fraction(1, 6)));
  auto m = metric_closed_form(ns);
  EXPECT_EQ(m.g11, Scalar(1));
  EXPECT_EQ(m.g33, Scalar(5));
  EXPECT_EQ(m.g13, Scalar(2));
  EXPECT_EQ(m.g23, Scalar(0));
  EXPECT_EQ(m.det, Scalar(1));
}

TEST(Metric, TypeIIExample) {
  const double r2 = std::sqrt(2.0);
  auto sol = type2_double_hypo({2, 1, 2, 1, Scalar::real(-r2), 1});
  auto m = metric_closed_form(sol.ns);
  EXPECT_NEAR(m.g11.to_double(), 4 * r2, 1e-9);
  EXPECT_NEAR(m.g33.to_double(), 2 * r2, 1e-9);
  EXPECT_NEAR(m.g13.to_double(), 0, 1e-9);
  EXPECT_NEAR(m.g23.to_double(), -2 * r2, 1e-9);
  EXPECT_FALSE(m.g_natural);
}

TEST(Metric, ContractionMatchesClosedFormOnRandomStructures) {
  testkit::Generator gen(101);
  for (int i = 0; i < 300; ++i) {
    auto ns = gen.valid_structure();
    auto m = metric_closed_form(ns);
    EXPECT_TRUE(mat::equals(mat::scale(m.nu, contraction_matrix(ns)), m.matrix(), 0.0)) << i;
    auto nf = testkit::to_float(ns);
    auto mf = metric_closed_form(nf);
    EXPECT_LT(mat::max_abs_diff(mat::scale(mf.nu, contraction_matrix(nf)), mf.matrix()), 1e-9);
  }
}

TEST(Metric, ClosedFormDeterminantIsSquareOfReducedDeterminant) {
  testkit::Generator gen(102);
  for (int i = 0; i < 200; ++i) {
    auto ns = gen.valid_structure();
    auto m = metric_closed_form(ns);
    EXPECT_EQ(mat::det(m.matrix()), m.det);
    // entries are cubic in the coefficients, so homogeneity gives nu^6
    EXPECT_EQ(m.det, m.nu * m.nu * m.nu * m.nu * m.nu * m.nu);
  }
}

TEST(Metric, TypeIDeterminantIsOne) {
  testkit::Generator gen(103);
  const auto g = geom(2, 3);
  for (int i = 0; i < 300; ++i) {
    auto ns = type1_from_parameters(gen.type1_surface_point(), g);
    EXPECT_EQ(mat::det(metric_closed_form(ns).matrix()), Scalar(1));
  }
}

TEST(Metric, TypeIPositivityMatchesOrientationSign) {
  testkit::Generator gen(104);
  for (int i = 0; i < 300; ++i) {
    const auto tp = gen.type1_surface_point();
    const auto [X, Y, A, B] = tp;
    NaturalStructure ns{1, {0, 0, 0, 1}, {}, {}, geom(1, 1)};
    const Scalar B2 = B * B, one_a2 = Scalar(1) + A * A, one_m_a2 = Scalar(1) - A * A;
    ns.b = {one_m_a2 * B2 * X + 2 * A * B2 * Y, one_a2 * B * (Y - A * X), -one_a2 * one_a2 * X, 0};
    ns.c = {one_m_a2 * B2 * Y - 2 * A * B2 * X, -one_a2 * B * (X + A * Y), -one_a2 * one_a2 * Y, 0};
    for (int flip = 0; flip < 2; ++flip) {
      const Scalar orient = ns.b[1] * ns.c[0] - ns.b[0] * ns.c[1];
      EXPECT_EQ(metric_closed_form(ns).pd, orient.sign() > 0);
      for (auto& v : ns.c) v = -v;
    }
  }
}

TEST(Phi, QuaternionicRelationsOnRandomStructures) {
  testkit::Generator gen(105);
  for (int i = 0; i < 100; ++i) {
    auto ns = gen.valid_structure();
    auto phi = phi_matrices(ns);
    const Mat4 g = metric_closed_form(ns).normalized();
    const Mat4 minus_id = mat::scale(-1, mat::identity());
    for (int k = 0; k < 3; ++k) {
      const Mat4& P = phi[static_cast<std::size_t>(k)];
      EXPECT_TRUE(mat::equals(mat::mul(P, P), minus_id, 0.0));
      // g(Phi x, Phi y) = g(x, y)
      EXPECT_TRUE(mat::equals(mat::mul(mat::transpose(P), mat::mul(g, P)), g, 0.0));
      // omega_k(x, Phi_k y) = g(x, y)
      EXPECT_TRUE(mat::equals(mat::mul(omega_matrix(ns.coefficients(k + 1)), P), g, 0.0));
    }
  }
}

TEST(Phi, RejectsNonDefiniteMetric) {
  auto ns = main_example(geom(1, 1));
  ns.c = {0, -1, 0, 0};
  EXPECT_THROW(phi_matrices(ns), ConstraintViolation);
}

// omega2 = e34 - e12 keeps both planes; dtheta and alpha1 pair a horizontal
// direction with a vertical one.
TEST(Preservation, MainExampleOnlySecondPreservesBothSubspaces) {
  auto f = preservation_flags(main_example(geom(1, 1)));
  EXPECT_TRUE(f.fibres[1] && f.horizontals[1]);
  EXPECT_FALSE(f.fibres[0] || f.horizontals[0]);
  EXPECT_FALSE(f.fibres[2] || f.horizontals[2]);
}

TEST(Preservation, TypeIIExamplePreservesNothing) {
  auto sol = type2_double_hypo({2, 1, 2, 1, Scalar::real(-std::sqrt(2.0)), 1});
  auto f = preservation_flags(sol.ns);
  for (int i = 0; i < 3; ++i) {
    EXPECT_FALSE(f.fibres[static_cast<std::size_t>(i)]);
    EXPECT_FALSE(f.horizontals[static_cast<std::size_t>(i)]);
  }
}

TEST(Preservation, FlagsMatchMatrixAction) {
  testkit::Generator gen(106);
  for (int i = 0; i < 100; ++i) {
    auto ns = gen.valid_structure();
    auto phi = phi_matrices(ns);
    auto f = preservation_flags(ns);
    for (std::size_t k = 0; k < 3; ++k) {
      // V0 = span(e3, e4): rows 0,1 of columns 2,3 vanish; H0 likewise.
      const Mat4& P = phi[k];
      const bool v0 = P[0][2].is_zero(0.0) && P[0][3].is_zero(0.0) && P[1][2].is_zero(0.0) && P[1][3].is_zero(0.0);
      const bool h0 = P[2][0].is_zero(0.0) && P[2][1].is_zero(0.0) && P[3][0].is_zero(0.0) && P[3][1].is_zero(0.0);
      EXPECT_EQ(f.fibres[k], v0);
      EXPECT_EQ(f.horizontals[k], h0);
    }
  }
}
