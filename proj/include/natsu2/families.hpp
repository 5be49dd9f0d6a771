#pragma once

// Solution families of natural SU(2)-structures: the type I parametrisation,
// type I nearly-hypo (hence double-hypo) structures, the Sasaki-Einstein
// family, type II double-hypo structures, and residual checks for the
// general nearly-hypo and type II hypo systems.

#include <optional>
#include <string>
#include <vector>

#include "natsu2/classify.hpp"
#include "natsu2/su2.hpp"

namespace natsu2 {

struct TypeIParams {
  Scalar X, Y, A, B;
};

inline NaturalStructure type1_from_parameters(const TypeIParams& tp, const GeometryParams& geom,
                                              double tol = kDefaultTolerance) {
  const auto& [X, Y, A, B] = tp;
  if (!is_positive(B, tol)) throw ConstraintViolation("B>0", "B = " + B.to_string());
  const Scalar one_a2 = Scalar(1) + A * A;
  const Scalar surface = B * B * one_a2 * one_a2 * (X * X + Y * Y);
  if (!approx_equal(surface, 1, tol))
    throw ConstraintViolation("B^2(1+A^2)^2(X^2+Y^2)=1", "lhs = " + surface.to_string());
  const Scalar B2 = B * B;
  const Scalar one_m_a2 = Scalar(1) - A * A;
  NaturalStructure ns{1,
                      {0, 0, 0, 1},
                      {one_m_a2 * B2 * X + Scalar(2) * A * B2 * Y, one_a2 * B * (Y - A * X),
                       -one_a2 * one_a2 * X, 0},
                      {one_m_a2 * B2 * Y - Scalar(2) * A * B2 * X, -one_a2 * B * (X + A * Y),
                       -one_a2 * one_a2 * Y, 0},
                      geom};
  const Scalar orient = ns.b[1] * ns.c[0] - ns.b[0] * ns.c[1];
  if (!is_positive(orient, tol))
    throw ConstraintViolation("b1c0-b0c1>0", "b1c0-b0c1 = " + orient.to_string());
  return ns;
}

/// Type I structure with omega1 = dtheta, theta~ = -2 theta and omega3 fixed
/// by the nearly-hypo equation d(omega2) = 3 theta~ ^ omega3.
inline NaturalStructure type1_nearly_hypo(const Scalar& b0, const Scalar& b1, const Scalar& b2,
                                          const GeometryParams& geom,
                                          double tol = kDefaultTolerance) {
  const Scalar& K = geom.K();
  const Scalar& s2 = geom.s2();
  const Scalar norm = b1 * b1 - b0 * b2;
  if (!approx_equal(norm, 1, tol))
    throw ConstraintViolation("b1^2-b0b2=1", "lhs = " + norm.to_string());
  const Scalar lhs = square(b0 + s2 * K * b2) + Scalar(4) * s2 * K;
  const Scalar rhs = Scalar(36) * s2 * s2;
  if (!approx_equal(lhs, rhs, tol))
    throw ConstraintViolation("(b0+s^2Kb2)^2+4s^2K=36s^4",
                              "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string());
  const Scalar bound = -(b0 * b0) / (s2 * (Scalar(1) + b1 * b1));
  if (!(K > bound) || approx_equal(K, bound, tol))
    throw ConstraintViolation("K>-b0^2/(s^2(1+b1^2))", "K = " + K.to_string());
  return {1,
          {0, 0, 0, 1},
          {b0, b1, b2, 0},
          {K * b1 / Scalar(3), (s2 * K * b2 - b0) / (Scalar(6) * s2), -b1 / (Scalar(3) * s2), 0},
          geom};
}

/// Sasaki-Einstein structures over the curvature K = 9 s^2 base.
inline NaturalStructure sasaki_einstein_family(const Scalar& s2, const Scalar& b2, int sign_q,
                                               double tol = kDefaultTolerance) {
  if (!is_positive(s2, 0.0)) throw ConstraintViolation("s>0", "radius must be positive");
  if (sign_q != 1 && sign_q != -1) throw Error("sign of Q must be +1 or -1");
  const Scalar s4 = s2 * s2;
  const Scalar disc = Scalar(1) - Scalar(9) * s4 * b2 * b2;
  if (disc.sign() < 0 && !disc.is_zero(tol))
    throw ConstraintViolation("|b2|<=1/(3s^2)", "1-9s^4b2^2 = " + disc.to_string());
  const Scalar Q = disc.sign() <= 0 ? Scalar(0) : Scalar(sign_q) * sqrt(disc);
  auto geom = GeometryParams::from_radius_squared(Scalar(9) * s2, s2);
  const Scalar three_s2 = Scalar(3) * s2;
  return {1,
          {0, 0, 0, 1},
          {-Scalar(9) * s4 * b2, Q, b2, 0},
          {three_s2 * Q, three_s2 * b2, -Q / three_s2, 0},
          geom};
}

struct TypeIIParams {
  Scalar a0, a2, a3, p, b0;
  int sign_b1 = 1;
};

struct TypeIISolution {
  NaturalStructure ns;
  Scalar s4;
};

/// Type II double-hypo structure. The radius is derived from the data; a
/// supplied radius is cross-checked.
inline TypeIISolution type2_double_hypo(const TypeIIParams& tp,
                                        const std::optional<Scalar>& s2_given = std::nullopt,
                                        double tol = kDefaultTolerance) {
  const auto& [a0, a2, a3, p, b0, sign] = tp;
  if (sign != 1 && sign != -1) throw Error("sign of b1 must be +1 or -1");
  if (a2.is_zero(tol)) throw ConstraintViolation("a2!=0", "a2 = 0");
  if (p.is_zero(tol)) throw ConstraintViolation("p!=0", "p = 0");
  if (a0.is_zero(tol))
    throw ConstraintViolation("K=0: no type II hypo solutions",
                              "a0 = 0 forces K = a0/(a2 s^2) = 0");
  if (!is_positive(a0 * a2, tol)) throw ConstraintViolation("a0*a2>0", "a0*a2 <= 0");
  if (!is_positive(a3 * p, tol)) throw ConstraintViolation("a3*p>0", "a3p must be positive");
  const Scalar lhs = a3 * a3 - a0 * a2;
  if (!approx_equal(lhs, a3 * p, tol))
    throw ConstraintViolation("a3^2-a0a2=a3p",
                              "lhs = " + lhs.to_string() + ", a3p = " + (a3 * p).to_string());
  const Scalar s4 = a0 / (Scalar(9) * a2 * p * p);
  if (!is_positive(s4, tol)) throw ConstraintViolation("s^4=a0/(9a2p^2)>0", "s^4 <= 0");
  const Scalar s2 = sqrt(s4);
  if (s2_given && !approx_equal(*s2_given, s2, tol))
    throw ConstraintViolation("s^4=a0/(9a2p^2)",
                              "given s^2 = " + s2_given->to_string() + ", derived " + s2.to_string());
  const Scalar K = a0 / (a2 * s2);
  if (!is_positive(K, tol)) throw ConstraintViolation("K=9s^2p^2>0", "K = " + K.to_string());
  const Scalar b1sq = a3 * p - a2 * b0 * b0 / a0;
  if (b1sq.sign() < 0 && !b1sq.is_zero(tol))
    throw ConstraintViolation("b1^2=a3p-a2b0^2/a0>=0", "b1^2 = " + b1sq.to_string());
  const Scalar b1 = b1sq.sign() <= 0 ? Scalar(0) : Scalar(sign) * sqrt(b1sq);
  const Scalar b2 = -a2 * b0 / a0;
  auto geom = GeometryParams::from_radius_squared(K, s2);
  NaturalStructure ns{p,
                      {a0, 0, a2, a3},
                      {b0, b1, b2, 0},
                      {K * b1 / (Scalar(3) * p), (s2 * K * b2 - b0) / (Scalar(6) * s2 * p),
                       -b1 / (Scalar(3) * s2 * p), 0},
                      geom};
  return {ns, s4};
}

struct EquationResidual {
  std::string label;
  double residual = 0.0;
  bool holds = false;
};

struct NamedSystemsReport {
  std::vector<EquationResidual> general_nearly_hypo;
  std::vector<EquationResidual> type2_hypo;
  bool general_holds = false;
  bool type2_hypo_holds = false;
  /// omega2 ^ omega3 = 0; implied by the five nearly-hypo equations.
  EquationResidual omega2_omega3;
};

namespace detail {

inline EquationResidual residual_of(std::string label, const Scalar& r, double tol) {
  return {std::move(label), std::abs(r.to_double()), r.is_zero(tol)};
}

inline bool all_hold(const std::vector<EquationResidual>& v) {
  for (const auto& e : v)
    if (!e.holds) return false;
  return true;
}

}  // namespace detail

inline NamedSystemsReport verify_named_systems(const NaturalStructure& ns,
                                               double tol = kDefaultTolerance) {
  const auto& [a0, a1, a2, a3] = ns.a;
  const auto& [b0, b1, b2, b3] = ns.b;
  const auto& [c0, c1, c2, c3] = ns.c;
  const Scalar& K = ns.geom.K();
  const Scalar& s2 = ns.geom.s2();
  const Scalar& p = ns.p;
  const Scalar a3p = a3 * p;
  NamedSystemsReport r;
  auto& g = r.general_nearly_hypo;
  g.push_back(detail::residual_of("a1^2+a3^2-a0a2=a3p", nu_of(ns.a) - a3p, tol));
  g.push_back(detail::residual_of("b1^2+b3^2-b0b2=a3p", nu_of(ns.b) - a3p, tol));
  g.push_back(detail::residual_of(
      "b0^2-2s^2Kb0b2+s^4K^2b2^2+4s^2Kb1^2=36s^4a3p^3",
      b0 * b0 - Scalar(2) * s2 * K * b0 * b2 + s2 * s2 * K * K * b2 * b2 +
          Scalar(4) * s2 * K * b1 * b1 - Scalar(36) * s2 * s2 * a3p * p * p,
      tol));
  g.push_back(detail::residual_of("a0b2+a2b0-2a1b1-2a3b3=0", wedge_pairing(ns.a, ns.b), tol));
  g.push_back(detail::residual_of("a0b1-s^2Ka2b1+s^2Ka1b2-a1b0=0",
                                  a0 * b1 - s2 * K * a2 * b1 + s2 * K * a1 * b2 - a1 * b0, tol));
  r.general_holds = detail::all_hold(g);

  auto& h = r.type2_hypo;
  const Scalar nu_a = a3 * a3 - a0 * a2;
  h.push_back(detail::residual_of("b1^2-b0b2=a3^2-a0a2", b1 * b1 - b0 * b2 - nu_a, tol));
  h.push_back(detail::residual_of("c1^2-c0c2=a3^2-a0a2", c1 * c1 - c0 * c2 - nu_a, tol));
  h.push_back({"a3^2-a0a2!=0", std::abs(nu_a.to_double()), !nu_a.is_zero(tol)});
  h.push_back(detail::residual_of("b0a2+b2a0=0", b0 * a2 + b2 * a0, tol));
  h.push_back(detail::residual_of("c0a2+c2a0=0", c0 * a2 + c2 * a0, tol));
  h.push_back(detail::residual_of("b0c2+b2c0-2b1c1=0", b0 * c2 + b2 * c0 - Scalar(2) * b1 * c1, tol));
  r.type2_hypo_holds = detail::all_hold(h);

  const KForm w23 = wedge(expand_invariant(ns.omega(2), ns.geom), expand_invariant(ns.omega(3), ns.geom));
  r.omega2_omega3 = {"omega2^omega3=0", w23.max_abs(), w23.is_zero() || w23.max_abs() <= tol};
  return r;
}

}  // namespace natsu2
