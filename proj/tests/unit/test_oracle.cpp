#include <gtest/gtest.h>

#include "natsu2/oracle.hpp"

using namespace natsu2;
using namespace natsu2::oracle;

namespace {

ChartPoint sample_point(std::uint64_t seed, bool with_t) { return Sampler(seed).next(with_t); }

}  // namespace

TEST(Dual, ProductAndQuotientRules) {
  Dual<double> x{3.0, 1.0};
  auto y = x * x / (1.0 + x);
  EXPECT_DOUBLE_EQ(y.v, 9.0 / 4.0);
  EXPECT_DOUBLE_EQ(y.d, (2 * 3.0 * 4.0 - 9.0) / 16.0);
}

TEST(Dual, NestedDualsCarrySecondDerivatives) {
  using DD = Dual<Dual<double>>;
  DD x{Dual<double>{2.0, 1.0}, Dual<double>{1.0, 0.0}};
  auto y = x * x * x;
  EXPECT_DOUBLE_EQ(y.d.d, 12.0);
}

TEST(Chart, OtherChartIsAnInvolutionOnTheSphere) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto pt = sample_point(s, false);
    auto q = other_chart(pt);
    auto u = sphere_point(pt), v = sphere_point(q);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(u[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)], 1e-12);
    auto back = other_chart(q);
    EXPECT_NEAR(back.xi, pt.xi, 1e-12);
    EXPECT_EQ(back.pole, pt.pole);
  }
}

TEST(Chart, RejectsPointsNearTheExcludedPole) {
  ChartPoint pt;
  pt.xi = 1e4;
  EXPECT_THROW(check_chart(pt), ShapeMismatch);
  const std::vector<std::array<double, 6>> x1 = {{1, 0, 0, 0, 0, 0}};
  EXPECT_THROW(eval_form("theta", pt, x1), ShapeMismatch);
  ChartPoint centre;
  EXPECT_THROW(other_chart(centre), ShapeMismatch);
}

TEST(Chart, RejectsNonPositiveTime) {
  ChartPoint pt;
  pt.t = -1.0;
  const std::vector<std::array<double, 6>> dt = {{0, 0, 0, 0, 0, 1}};
  EXPECT_THROW(eval_form("dt", pt, dt), ShapeMismatch);
}

TEST(Forms, ThetaIsTheTautologicalOneForm) {
  // theta(v) = <u, dx(v)> at a point with unit vector u.
  ChartPoint pt;
  pt.xi = 0.3;
  pt.eta = -0.4;
  auto u = sphere_point(pt);
  for (int i = 0; i < 3; ++i) {
    std::array<double, 6> v{};
    v[static_cast<std::size_t>(i)] = 1.0;
    EXPECT_NEAR(eval_form("theta", pt, {v}), u[static_cast<std::size_t>(i)], 1e-14);
  }
  const std::vector<std::array<double, 6>> vertical = {{0, 0, 0, 1, 0, 0}};
  EXPECT_NEAR(eval_form("theta", pt, vertical), 0.0, 1e-14);
}

TEST(Forms, DthetaIsTheDerivativeOfTheta) {
  auto pt = sample_point(5, false);
  for (const auto& tuple : basis_tuples(5, 2))
    EXPECT_NEAR(numeric_d(named_form("theta"), pt, tuple), eval_form("dtheta", pt, tuple), 1e-12);
}

TEST(Forms, WedgeIsAlternating) {
  auto pt = sample_point(6, true);
  FormSpec aa = {{1.0, {Factor::alpha1, Factor::theta, Factor::theta}}};
  for (const auto& tuple : basis_tuples(6, 4)) EXPECT_NEAR(eval_form(aa, pt, tuple), 0.0, 1e-13);
  FormSpec ab = {{1.0, {Factor::theta, Factor::alpha0}}}, ba = {{1.0, {Factor::alpha0, Factor::theta}}};
  for (const auto& tuple : basis_tuples(5, 3)) EXPECT_NEAR(eval_form(ab, pt, tuple), eval_form(ba, pt, tuple), 1e-13);
}

TEST(Forms, UnknownNameIsRejected) { EXPECT_THROW(named_form("omega"), Error); }

TEST(Identities, FalseIdentityIsDetected) {
  std::vector<Identity> wrong = {{"d(alpha0)=0", {{1, {Factor::alpha0}}}, {}, 3}};
  auto r = identity_residuals(wrong, sample_point(7, false));
  EXPECT_GT(r.residual.at("d(alpha0)=0"), 1e-3);
}

TEST(Identities, AutomaticAndFiniteDifferenceAgree) {
  auto pt = sample_point(8, true);
  for (const auto& id : flat_su3_identities())
    for (const auto& tuple : basis_tuples(6, id.grade))
      EXPECT_NEAR(numeric_d(id.differentiated, pt, tuple), numeric_d_fd(id.differentiated, pt, tuple), 1e-6);
}

TEST(Verify, FlatSystemHolds) {
  auto rep = verify_flat_system(20, 3);
  EXPECT_EQ(rep.residuals.size(), flat_system_identities().size());
  EXPECT_LT(rep.max_residual, 1e-8);
  EXPECT_LT(rep.ad_fd_gap, 1e-6);
  EXPECT_LT(rep.chart_gap, 1e-8);
}

TEST(Verify, FlatSu3Holds) {
  auto rep = verify_flat_su3(10, 4);
  EXPECT_LT(rep.max_residual, 1e-8);
  EXPECT_LT(rep.ad_fd_gap, 1e-6);
  EXPECT_LT(rep.chart_gap, 1e-8);
}

TEST(Verify, ReportsAreDeterministicForASeed) {
  auto a = verify_flat_system(5, 42), b = verify_flat_system(5, 42);
  EXPECT_EQ(a.residuals, b.residuals);
  EXPECT_EQ(a.ad_fd_gap, b.ad_fd_gap);
  EXPECT_EQ(a.chart_gap, b.chart_gap);
}

TEST(Sampler, AlternatesPolesAndAvoidsThem) {
  Sampler s(9);
  for (int i = 0; i < 50; ++i) {
    auto pt = s.next(true);
    EXPECT_EQ(pt.pole, i % 2 ? Pole::north : Pole::south);
    ASSERT_TRUE(pt.t.has_value());
    EXPECT_GT(*pt.t, 0.0);
    auto u = sphere_point(pt);
    EXPECT_GE(std::hypot(u[0], u[1], std::abs(u[2]) - 1.0), Sampler::kRejectRadius);
  }
}
