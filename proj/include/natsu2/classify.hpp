#pragma once

#include <map>
#include <string>
#include <vector>

#include "natsu2/frames.hpp"
#include "natsu2/su2.hpp"

namespace natsu2 {

/// Class equations are evaluated with the 1-form theta~ = -2p theta.
struct ClassificationFlags {
  bool su2_valid = false;
  bool hypo = false;
  bool contact_hypo = false;
  bool nearly_hypo = false;
  bool double_hypo = false;
  bool sasaki_einstein = false;
  bool omega3_dual = false;
  bool g_natural = false;
  /// Equation label -> max coefficient residual (lhs - rhs).
  std::map<std::string, double> residuals;
};

namespace detail {

struct ClassEquations {
  InvariantForm d_omega1, d_tt_omega2, d_tt_omega3;  // hypo
  InvariantForm d_omega2_nh, d_tt_omega1_nh;          // nearly-hypo
  InvariantForm d_tt_contact;                         // d theta~ = -2 omega1
  InvariantForm d_omega3_dual;                        // d omega3 = -3 theta~ ^ omega2
};

inline ClassEquations class_equations(const NaturalStructure& ns) {
  const auto& g = ns.geom;
  const InvariantForm tt = ns.theta_tilde();
  const InvariantForm w1 = ns.omega(1), w2 = ns.omega(2), w3 = ns.omega(3);
  ClassEquations e;
  e.d_omega1 = d_invariant(w1, g);
  e.d_tt_omega2 = d_invariant(wedge(tt, w2), g);
  e.d_tt_omega3 = d_invariant(wedge(tt, w3), g);
  e.d_omega2_nh = d_invariant(w2, g) - Scalar(3) * wedge(tt, w3);
  e.d_tt_omega1_nh = d_invariant(wedge(tt, w1), g) + Scalar(2) * wedge(w1, w1);
  e.d_tt_contact = d_invariant(tt, g) + Scalar(2) * w1;
  e.d_omega3_dual = d_invariant(w3, g) + Scalar(3) * wedge(tt, w2);
  return e;
}

}  // namespace detail

inline ClassificationFlags classify(const NaturalStructure& ns, double tol = kDefaultTolerance) {
  ClassificationFlags f;
  auto e = detail::class_equations(ns);
  auto check = [&](const std::string& label, const InvariantForm& residual) {
    f.residuals[label] = residual.max_abs();
    return residual.is_zero(tol);
  };
  const bool closed1 = check("d(omega1)=0", e.d_omega1);
  const bool closed2 = check("d(theta~^omega2)=0", e.d_tt_omega2);
  const bool closed3 = check("d(theta~^omega3)=0", e.d_tt_omega3);
  const bool nh2 = check("d(omega2)=3theta~^omega3", e.d_omega2_nh);
  const bool nh1 = check("d(theta~^omega1)=-2omega1^omega1", e.d_tt_omega1_nh);
  const bool contact = check("d(theta~)=-2omega1", e.d_tt_contact);
  const bool dual = check("d(omega3)=-3theta~^omega2", e.d_omega3_dual);

  f.su2_valid = check_su2(ns, tol).valid;
  f.g_natural = metric_closed_form(ns, tol).g_natural;
  f.omega3_dual = dual;
  f.hypo = closed1 && closed2 && closed3;
  f.nearly_hypo = nh2 && nh1;
  f.double_hypo = f.hypo && f.nearly_hypo;
  f.contact_hypo = contact && closed2 && closed3 && f.hypo;
  f.sasaki_einstein = contact && nh2 && dual && f.double_hypo && f.contact_hypo;
  return f;
}

/// Necessary coefficient patterns for closed omega1 and closed theta^omega_i.
inline std::vector<std::string> curvature_guards(const NaturalStructure& ns,
                                                 double tol = kDefaultTolerance) {
  std::vector<std::string> notes;
  const auto& [a0, a1, a2, a3] = ns.a;
  const Scalar Ks2 = ns.geom.K() * ns.geom.s2();
  if (!a1.is_zero(tol)) {
    notes.push_back("d(omega1)!=0 for all K (a1!=0)");
  } else if (a0.is_zero(tol) && a2.is_zero(tol)) {
    notes.push_back("type I shape: omega1=a3*dtheta");
  } else if (!a2.is_zero(tol)) {
    if (approx_equal(a0, Ks2 * a2, tol))
      notes.push_back("type II shape, K=a0/(a2*s^2) consistent");
    else
      notes.push_back("type II shape, K!=a0/(a2*s^2): d(omega1)!=0");
  } else {
    notes.push_back("d(omega1)!=0: a0!=K*a2*s^2 with a2=0");
  }
  if (!ns.b[3].is_zero(tol)) notes.push_back("b3!=0: d(theta^omega2)!=0");
  if (!ns.c[3].is_zero(tol)) notes.push_back("c3!=0: d(theta^omega3)!=0");
  return notes;
}

}  // namespace natsu2
