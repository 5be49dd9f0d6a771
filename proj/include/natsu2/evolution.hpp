#pragma once

// Evolution of type I hypo families omega1 = A3 dtheta, omega2 = B . alpha,
// omega3 = C . alpha, theta~ = -2P theta, and the induced SU(3)-structure on
// the product with the t-line.

#include <array>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "natsu2/frames.hpp"
#include "natsu2/su2.hpp"

namespace natsu2 {

struct EvolutionState {
  Poly P, A3, B0, B1, B2, C0, C1, C2;

  Quad omega_coefficients(int i) const {
    switch (i) {
      case 1: return {0, 0, 0, A3.constant_term()};
      case 2: return {B0.constant_term(), B1.constant_term(), B2.constant_term(), 0};
      case 3: return {C0.constant_term(), C1.constant_term(), C2.constant_term(), 0};
    }
    throw Error("omega index must be 1, 2 or 3");
  }
  InvariantForm omega1() const { return A3 * inv::dtheta(); }
  InvariantForm omega2() const { return B0 * inv::alpha0() + B1 * inv::alpha1() + B2 * inv::alpha2(); }
  InvariantForm omega3() const { return C0 * inv::alpha0() + C1 * inv::alpha1() + C2 * inv::alpha2(); }
  InvariantForm theta_tilde() const { return Poly(-2) * P * inv::theta(); }
};

/// Right-hand sides of the evolution system, in the order
/// (A3, P C0, P C1, P C2, P B0, P B1, P B2).
struct EvolutionRhs {
  static constexpr std::array<const char*, 7> kLabels = {
      "d/dt A3=2P",
      "d/dt(P C0)=K B1",
      "d/dt(P C1)=(s^2K B2-B0)/(2s^2)",
      "d/dt(P C2)=-B1/s^2",
      "d/dt(P B0)=-K C1",
      "d/dt(P B1)=-(s^2K C2-C0)/(2s^2)",
      "d/dt(P B2)=C1/s^2"};
  std::array<Poly, 7> values;
};

inline EvolutionRhs evolution_rhs(const EvolutionState& st, const GeometryParams& geom) {
  const Poly K(geom.K());
  const Poly s2(geom.s2());
  const Poly inv_s2(Scalar(1) / geom.s2());
  const Poly half_inv_s2(Scalar::fraction(1, 2) / geom.s2());
  EvolutionRhs r;
  r.values = {Poly(2) * st.P,
              K * st.B1,
              half_inv_s2 * (s2 * K * st.B2 - st.B0),
              -(inv_s2 * st.B1),
              -(K * st.C1),
              -(half_inv_s2 * (s2 * K * st.C2 - st.C0)),
              inv_s2 * st.C1};
  return r;
}

/// lhs - rhs of each evolution equation as a polynomial in t.
inline std::array<Poly, 7> evolution_residuals(const EvolutionState& st, const GeometryParams& geom) {
  auto rhs = evolution_rhs(st, geom);
  const std::array<Poly, 7> lhs = {st.A3.derivative(),
                                   (st.P * st.C0).derivative(),
                                   (st.P * st.C1).derivative(),
                                   (st.P * st.C2).derivative(),
                                   (st.P * st.B0).derivative(),
                                   (st.P * st.B1).derivative(),
                                   (st.P * st.B2).derivative()};
  std::array<Poly, 7> out;
  for (std::size_t i = 0; i < 7; ++i) out[i] = lhs[i] - rhs.values[i];
  return out;
}

/// Constraint-manifold residuals: (B1^2-B0B2-A3^2, C1^2-C0C2-A3^2, B0C2+B2C0-2B1C1).
inline std::array<Poly, 3> constraint_residuals(const EvolutionState& st) {
  const Poly a2 = st.A3 * st.A3;
  return {st.B1 * st.B1 - st.B0 * st.B2 - a2, st.C1 * st.C1 - st.C0 * st.C2 - a2,
          st.B0 * st.C2 + st.B2 * st.C0 - Poly(2) * st.B1 * st.C1};
}

struct FlatInit {
  Scalar p, a4, b0, c0, b4, c4, b5, c5;
};

/// Closed-form solution over a flat base (K = 0) on the radius-s bundle.
inline EvolutionState flat_solution(const FlatInit& in, const Scalar& s2,
                                    double tol = kDefaultTolerance) {
  const auto& [p, a4, b0, c0, b4, c4, b5, c5] = in;
  if (p.is_zero(tol)) throw ConstraintViolation("p!=0", "p = 0");
  if (!is_positive(s2, 0.0)) throw ConstraintViolation("s>0", "radius must be positive");
  auto require = [tol](const Scalar& lhs, const Scalar& rhs, const char* label, const char* what) {
    if (!approx_equal(lhs, rhs, tol))
      throw ConstraintViolation(label, std::string(what) + ": lhs = " + lhs.to_string() +
                                           ", rhs = " + rhs.to_string());
  };
  const Scalar p2 = p * p, s4 = s2 * s2;
  require(b0 * b0 + c0 * c0, Scalar(16) * p2 * p2 * s4, "b0^2+c0^2=16p^4s^4", "norm constraint");
  require(b4 * c0 - b0 * c4, Scalar(4) * p2 * s2 * a4, "b4c0-b0c4=4p^2s^2a4", "orientation constraint");
  require(b4 * b4 - b0 * b5, a4 * a4, "b4^2-b0b5=a4^2", "omega2 norm");
  require(c4 * c4 - c0 * c5, a4 * a4, "c4^2-c0c5=a4^2", "omega3 norm");
  require(b0 * c5 + b5 * c0 - Scalar(2) * b4 * c4, 0, "b0c5+b5c0-2b4c4=0", "orthogonality");
  const Scalar k1 = Scalar(1) / (p * s2);             // 1/(p s^2)
  const Scalar k2 = Scalar(1) / (Scalar(4) * p2 * s4);  // 1/(4 p^2 s^4)
  const Scalar half_k1 = Scalar::fraction(1, 2) * k1;
  EvolutionState st;
  st.P = Poly(p);
  st.A3 = Poly{a4, Scalar(2) * p};
  st.B0 = Poly(b0);
  st.C0 = Poly(c0);
  st.B1 = Poly{b4, c0 * half_k1};
  st.C1 = Poly{c4, -b0 * half_k1};
  st.B2 = Poly{b5, c4 * k1, -b0 * k2};
  st.C2 = Poly{c5, -b4 * k1, -c0 * k2};
  return st;
}

struct SU3Structure {
  InvariantForm F, psi_plus, psi_minus;
};

/// F = omega1 + theta~ ^ dt, Psi = (omega2 + i omega3) ^ (theta~ + i dt).
inline SU3Structure build_su3(const EvolutionState& st) {
  const auto tt = st.theta_tilde(), dt = inv::dt();
  const auto w2 = st.omega2(), w3 = st.omega3();
  return {st.omega1() + wedge(tt, dt), wedge(w2, tt) - wedge(w3, dt), wedge(w3, tt) + wedge(w2, dt)};
}

/// Cone lift t^2 omega1 + t theta~ ^ dt, t^2 (omega2 + i omega3) ^ (t theta~ + i dt),
/// without any check on the geometry.
inline SU3Structure conical_lift(const NaturalStructure& ns) {
  const Poly t = Poly::t(), t2 = t * t, t3 = t2 * t;
  const auto tt = ns.theta_tilde(), dt = inv::dt();
  const auto w1 = ns.omega(1), w2 = ns.omega(2), w3 = ns.omega(3);
  return {t2 * w1 + t * wedge(tt, dt), t3 * wedge(w2, tt) - t2 * wedge(w3, dt),
          t3 * wedge(w3, tt) + t2 * wedge(w2, dt)};
}

/// Cone over a Sasaki-Einstein structure; the base curvature must be K = 9 s^2.
inline SU3Structure build_su3_conical(const NaturalStructure& ns, double tol = kDefaultTolerance) {
  const Scalar target = Scalar(9) * ns.geom.s2();
  if (!approx_equal(ns.geom.K(), target, tol))
    throw ConstraintViolation("K=9s^2", "K = " + ns.geom.K().to_string() + ", 9s^2 = " +
                                            target.to_string());
  return conical_lift(ns);
}

struct IntegrabilityReport {
  double dF = 0.0, dPsiPlus = 0.0, dPsiMinus = 0.0;
  bool exact_zero = false;

  double max() const { return std::max({dF, dPsiPlus, dPsiMinus}); }
  bool integrable(double tol = kDefaultTolerance) const { return max() <= tol; }
};

inline IntegrabilityReport check_integrable(const SU3Structure& su3, const GeometryParams& geom) {
  auto dF = d_extended(su3.F, geom);
  auto dP = d_extended(su3.psi_plus, geom);
  auto dM = d_extended(su3.psi_minus, geom);
  return {dF.max_abs(), dP.max_abs(), dM.max_abs(), dF.is_zero() && dP.is_zero() && dM.is_zero()};
}

/// Algebraic compatibility: F^3 != 0 and Psi_+- ^ F = 0.
struct SU3AlgebraReport {
  bool F_cubed_nonzero = false;
  double psi_plus_F = 0.0, psi_minus_F = 0.0;
};

inline SU3AlgebraReport su3_algebra(const SU3Structure& su3) {
  auto f3 = wedge(su3.F, wedge(su3.F, su3.F));
  return {!f3.is_zero(), wedge(su3.psi_plus, su3.F).max_abs(), wedge(su3.psi_minus, su3.F).max_abs()};
}

// ---------------------------------------------------------------------------
// Numeric integration

/// Real function of t with its derivative.
struct TimeFunction {
  std::function<double(double)> value;
  std::function<double(double)> derivative;

  static TimeFunction constant(double p) {
    return {[p](double) { return p; }, [](double) { return 0.0; }};
  }
  static TimeFunction from_poly(const Poly& q) {
    Poly dq = q.derivative();
    return {[q](double t) { return q(t); }, [dq](double t) { return dq(t); }};
  }
};

/// (A3, B0, B1, B2, C0, C1, C2)
using NumericState = std::array<double, 7>;

inline NumericState numeric_state_at(const EvolutionState& st, double t) {
  return {st.A3(t), st.B0(t), st.B1(t), st.B2(t), st.C0(t), st.C1(t), st.C2(t)};
}

inline NumericState numeric_state_of(const NaturalStructure& ns) {
  return {ns.a[3].to_double(), ns.b[0].to_double(), ns.b[1].to_double(), ns.b[2].to_double(),
          ns.c[0].to_double(), ns.c[1].to_double(), ns.c[2].to_double()};
}

struct TrajectorySample {
  double t = 0.0;
  double P = 0.0;
  NumericState y{};
  std::array<double, 3> constraints{};
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double max_drift = 0.0;
  bool halted = false;
  std::string diagnostic;
};

namespace detail {

inline std::array<double, 3> numeric_constraints(const NumericState& y) {
  const auto& [A3, B0, B1, B2, C0, C1, C2] = y;
  return {B1 * B1 - B0 * B2 - A3 * A3, C1 * C1 - C0 * C2 - A3 * A3, B0 * C2 + B2 * C0 - 2 * B1 * C1};
}

inline NumericState numeric_rhs(double t, const NumericState& y, const TimeFunction& P, double K,
                                double s2) {
  const auto& [A3, B0, B1, B2, C0, C1, C2] = y;
  const double p = P.value(t), dp = P.derivative(t);
  if (p == 0.0) throw ConstraintViolation("P!=0", "P vanishes at t = " + std::to_string(t));
  // d/dt(P X) = R  =>  X' = (R - P' X) / P
  auto rate = [&](double rhs, double x) { return (rhs - dp * x) / p; };
  return {2 * p,
          rate(-K * C1, B0),
          rate(-(s2 * K * C2 - C0) / (2 * s2), B1),
          rate(C1 / s2, B2),
          rate(K * B1, C0),
          rate((s2 * K * B2 - B0) / (2 * s2), C1),
          rate(-B1 / s2, C2)};
}

}  // namespace detail

/// Classical fixed-step RK4. Stops early if A3 reaches 0.
inline Trajectory integrate_numeric(const NumericState& init, const TimeFunction& P,
                                    const GeometryParams& geom, double t_end, double step,
                                    double t0 = 0.0) {
  if (!(step > 0.0)) throw Error("integration step must be positive");
  const double K = geom.K().to_double(), s2 = geom.s2().to_double();
  Trajectory tr;
  auto record = [&](double t, const NumericState& y) {
    TrajectorySample s{t, P.value(t), y, detail::numeric_constraints(y)};
    for (double c : s.constraints) tr.max_drift = std::max(tr.max_drift, std::abs(c));
    tr.samples.push_back(s);
  };
  NumericState y = init;
  record(t0, y);
  const double span = t_end - t0;
  if (span <= 0.0) return tr;
  const long n = std::max(1L, std::lround(span / step));
  const double h = span / static_cast<double>(n);
  auto axpy = [](const NumericState& a, double c, const NumericState& b) {
    NumericState r;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + c * b[i];
    return r;
  };
  for (long k = 0; k < n; ++k) {
    const double t = t0 + h * static_cast<double>(k);
    auto k1 = detail::numeric_rhs(t, y, P, K, s2);
    auto k2 = detail::numeric_rhs(t + h / 2, axpy(y, h / 2, k1), P, K, s2);
    auto k3 = detail::numeric_rhs(t + h / 2, axpy(y, h / 2, k2), P, K, s2);
    auto k4 = detail::numeric_rhs(t + h, axpy(y, h, k3), P, K, s2);
    for (std::size_t i = 0; i < y.size(); ++i)
      y[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    const double tn = t0 + h * static_cast<double>(k + 1);
    record(tn, y);
    if (y[0] <= 0.0) {
      tr.halted = true;
      tr.diagnostic = "A3>0 violated at t = " + std::to_string(tn) + " (structure degenerates)";
      break;
    }
  }
  return tr;
}

inline void write_csv(std::ostream& os, const Trajectory& tr) {
  os << "t,P,A3,B0,B1,B2,C0,C1,C2,res_B,res_C,res_BC\n";
  char buf[32];
  auto put = [&](double v, bool last) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf << (last ? '\n' : ',');
  };
  for (const auto& s : tr.samples) {
    put(s.t, false);
    put(s.P, false);
    for (double v : s.y) put(v, false);
    put(s.constraints[0], false);
    put(s.constraints[1], false);
    put(s.constraints[2], true);
  }
}

}  // namespace natsu2
