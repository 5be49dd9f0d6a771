#include <gtest/gtest.h>

#include <sstream>

#include "natsu2/evolution.hpp"
#include "natsu2/families.hpp"
#include "support/generators.hpp"
#include "support/hyperbolic_oracle.hpp"

using namespace natsu2;

namespace {

const Scalar kHalf = Scalar::fraction(1, 2);

EvolutionState reference_flat() { return flat_solution({kHalf, 0, -1, 0, 0, 0, 0, 0}, 1); }

// Flat initial data with c0 = 0, b0 = sign * 4 p^2 s^2; the remaining
// constraints then fix c4, b5, c5 from (a4, b4).
FlatInit flat_init(const Scalar& p, const Scalar& s2, const Scalar& a4, const Scalar& b4, int sign) {
  const Scalar b0 = Scalar(sign) * Scalar(4) * p * p * s2;
  const Scalar c4 = -Scalar(sign) * a4;
  const Scalar b5 = (b4 * b4 - a4 * a4) / b0;
  const Scalar c5 = Scalar(2) * b4 * c4 / b0;
  return {p, a4, b0, 0, b4, c4, b5, c5};
}

}  // namespace

TEST(FlatSolution, ReferenceComponents) {
  const auto st = reference_flat();
  const Poly t = Poly::t();
  EXPECT_EQ(st.omega1(), t * inv::dtheta());
  EXPECT_EQ(st.omega2(), t * t * inv::alpha2() - inv::alpha0());
  EXPECT_EQ(st.omega3(), t * inv::alpha1());
  EXPECT_EQ(st.A3.to_string(), "1*t");
}

TEST(FlatSolution, ReferenceResidualsVanish) {
  const auto st = reference_flat();
  for (const auto& r : evolution_residuals(st, GeometryParams::from_radius(0, 1))) EXPECT_TRUE(r.is_zero());
  for (const auto& r : constraint_residuals(st)) EXPECT_TRUE(r.is_zero());
}

TEST(FlatSolution, ReferenceLiftIsIntegrable) {
  const auto su3 = build_su3(reference_flat());
  const Poly t = Poly::t();
  EXPECT_EQ(su3.F, t * inv::dtheta() - wedge(inv::theta(), inv::dt()));
  auto rep = check_integrable(su3, GeometryParams::from_radius(0, 1));
  EXPECT_TRUE(rep.exact_zero);
  EXPECT_EQ(rep.max(), 0.0);
}

TEST(FlatSolution, RejectsInconsistentInitialData) {
  try {
    flat_solution({kHalf, 0, 1, 1, 0, 0, 0, 0}, 1);
    FAIL();
  } catch (const ConstraintViolation& e) {
    EXPECT_EQ(e.label(), "b0^2+c0^2=16p^4s^4");
  }
  EXPECT_THROW(flat_solution({0, 0, 0, 0, 0, 0, 0, 0}, 1), ConstraintViolation);
}

// The evolution equations are the integrability conditions of the lift, so
// the exact symbolic solution must give closed F and Psi.
TEST(FlatSolution, RandomInitialDataSolveTheSystemAndIntegrate) {
  testkit::Generator gen(401);
  for (int i = 0; i < 100; ++i) {
    const Scalar p = gen.nonzero_rational(-2, 2, 3), s2 = gen.nonzero_rational(0, 2, 3);
    const auto fi = flat_init(p, s2, gen.rational(-2, 2, 3), gen.rational(-2, 2, 3), i % 2 ? 1 : -1);
    const auto st = flat_solution(fi, s2);
    const auto geom = GeometryParams::from_radius_squared(0, s2);
    for (const auto& r : evolution_residuals(st, geom)) EXPECT_TRUE(r.is_zero()) << i;
    for (const auto& r : constraint_residuals(st)) EXPECT_TRUE(r.is_zero()) << i;
    EXPECT_TRUE(check_integrable(build_su3(st), geom).exact_zero) << i;
    const auto alg = su3_algebra(build_su3(st));
    EXPECT_TRUE(alg.F_cubed_nonzero);
    EXPECT_EQ(alg.psi_plus_F, 0.0);
    EXPECT_EQ(alg.psi_minus_F, 0.0);
  }
}

TEST(FlatSolution, PerturbedStateFailsBothChecks) {
  auto st = reference_flat();
  st.B1 = st.B1 + Poly::t();
  const auto geom = GeometryParams::from_radius(0, 1);
  bool any = false;
  for (const auto& r : evolution_residuals(st, geom)) any = any || !r.is_zero();
  EXPECT_TRUE(any);
  EXPECT_FALSE(check_integrable(build_su3(st), geom).exact_zero);
}

TEST(Conical, LiftOverSasakiEinsteinIsIntegrable) {
  const auto ns = main_example(GeometryParams::from_radius_squared(3, Scalar::fraction(1, 3)));
  auto rep = check_integrable(build_su3_conical(ns), ns.geom);
  EXPECT_TRUE(rep.exact_zero);
}

TEST(Conical, RefusesOtherCurvatures) {
  const auto ns = main_example(GeometryParams::from_radius_squared(2, Scalar::fraction(1, 3)));
  try {
    build_su3_conical(ns);
    FAIL();
  } catch (const ConstraintViolation& e) {
    EXPECT_EQ(e.label(), "K=9s^2");
  }
}

TEST(Conical, UncheckedLiftOverFlatDoubleHypoIsNotIntegrable) {
  const auto ns = type1_nearly_hypo(1, 2, 3, GeometryParams::from_radius_squared(0, Scalar::fraction(1, 6)));
  auto rep = check_integrable(conical_lift(ns), ns.geom);
  EXPECT_FALSE(rep.exact_zero);
  EXPECT_GT(rep.max(), 1.0);
}

TEST(Numeric, FlatTrajectoryMatchesClosedForm) {
  const auto st = reference_flat();
  auto tr = integrate_numeric(numeric_state_at(st, 0), TimeFunction::constant(0.5),
                              GeometryParams::from_radius(0, 1), 1.0, 1e-3);
  ASSERT_FALSE(tr.halted);
  EXPECT_EQ(tr.samples.size(), 1001u);
  double err = 0.0;
  for (const auto& s : tr.samples) {
    auto exact = numeric_state_at(st, s.t);
    for (std::size_t i = 0; i < exact.size(); ++i) err = std::max(err, std::abs(s.y[i] - exact[i]));
  }
  EXPECT_LT(err, 1e-8);
  EXPECT_LT(tr.max_drift, 1e-10);
}

TEST(Numeric, PolynomialPMatchesConstantP) {
  const auto st = reference_flat();
  const auto geom = GeometryParams::from_radius(0, 1);
  auto a = integrate_numeric(numeric_state_at(st, 0), TimeFunction::constant(0.5), geom, 1.0, 1e-2);
  auto b = integrate_numeric(numeric_state_at(st, 0), TimeFunction::from_poly(Poly(kHalf)), geom, 1.0, 1e-2);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t k = 0; k < a.samples.size(); ++k) EXPECT_EQ(a.samples[k].y, b.samples[k].y);
}

TEST(Numeric, PositiveCurvatureMatchesHyperbolicOracle) {
  const auto geom = GeometryParams::from_radius_squared(3, Scalar::fraction(1, 3));
  const auto ns = type1_from_parameters({Scalar::fraction(3, 5), Scalar::fraction(4, 5), 0, 1}, geom);
  const auto y0 = numeric_state_of(ns);
  const testkit::HyperbolicOracle ref{3.0, 1.0 / 3, 1.0, y0};
  auto tr = integrate_numeric(y0, TimeFunction::constant(1.0), geom, 1.0, 1e-3);
  double err = 0.0;
  for (const auto& s : tr.samples) {
    auto want = ref.at(s.t);
    for (std::size_t i = 0; i < want.size(); ++i) err = std::max(err, std::abs(s.y[i] - want[i]));
  }
  EXPECT_LT(err, 1e-7);
}

TEST(Numeric, HaltsWhenTheStructureDegenerates) {
  const Scalar p = -kHalf;
  const auto st = flat_solution({p, 1, -1, 0, 0, 1, 1, 0}, 1);
  auto tr = integrate_numeric(numeric_state_at(st, 0), TimeFunction::constant(-0.5),
                              GeometryParams::from_radius(0, 1), 2.0, 1e-3);
  EXPECT_TRUE(tr.halted);
  EXPECT_NEAR(tr.samples.back().t, 1.0, 2e-3);
  EXPECT_NE(tr.diagnostic.find("A3>0"), std::string::npos);
}

TEST(Numeric, RejectsNonPositiveStep) {
  EXPECT_THROW(integrate_numeric({1, 0, 0, 0, 0, 0, 0}, TimeFunction::constant(1), GeometryParams::from_radius(0, 1),
                                 1.0, 0.0),
               Error);
}

TEST(Numeric, CsvHasOneRowPerSample) {
  auto tr = integrate_numeric(numeric_state_at(reference_flat(), 0), TimeFunction::constant(0.5),
                              GeometryParams::from_radius(0, 1), 0.1, 0.05);
  std::ostringstream os;
  write_csv(os, tr);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "t,P,A3,B0,B1,B2,C0,C1,C2,res_B,res_C,res_BC");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 3);
}
