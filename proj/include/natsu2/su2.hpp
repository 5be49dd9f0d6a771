#pragma once

// Natural SU(2)-structures: omega_i = q0 alpha0 + q1 alpha1 + q2 alpha2 + q3 dtheta
// with 1-form theta~ = -2p theta. Validity, the induced metric on ker theta
// (closed form and triple-wedge contraction) and the endomorphisms Phi_i.

#include <array>
#include <string>
#include <vector>

#include "natsu2/exterior.hpp"
#include "natsu2/frames.hpp"
#include "natsu2/linalg.hpp"

namespace natsu2 {

using Quad = std::array<Scalar, 4>;

struct NaturalStructure {
  Scalar p;
  Quad a;
  Quad b;
  Quad c;
  GeometryParams geom;

  const Quad& coefficients(int i) const {
    switch (i) {
      case 1: return a;
      case 2: return b;
      case 3: return c;
    }
    throw Error("omega index must be 1, 2 or 3");
  }
  InvariantForm omega(int i) const { return inv::two_form(coefficients(i)); }
  InvariantForm theta_tilde() const { return Scalar(-2) * p * inv::theta(); }
};

/// The main example: theta~ = -2 theta, omega = (dtheta, alpha2 - alpha0, alpha1).
inline NaturalStructure main_example(const GeometryParams& geom) {
  return {1, {0, 0, 0, 1}, {-1, 0, 1, 0}, {0, 1, 0, 0}, geom};
}

/// q1^2 + q3^2 - q0 q2, so that 1/2 omega ^ omega = -nu e^1234.
inline Scalar nu_of(const Quad& q) { return q[1] * q[1] + q[3] * q[3] - q[0] * q[2]; }

/// Polarisation of nu: omega ^ omega' = (q0 r2 + q2 r0 - 2 q1 r1 - 2 q3 r3) e^1234.
inline Scalar wedge_pairing(const Quad& q, const Quad& r) {
  return q[0] * r[2] + q[2] * r[0] - Scalar(2) * q[1] * r[1] - Scalar(2) * q[3] * r[3];
}

struct MetricReport {
  Scalar g11, g13, g23, g33, g00;
  Scalar det;
  Scalar nu;
  bool pd = false;
  bool g_natural = false;

  Scalar reduced_det() const { return g11 * g33 - g13 * g13 - g23 * g23; }

  Mat4 matrix() const {
    return {{{g11, 0, g13, -g23}, {0, g11, g23, g13}, {g13, g23, g33, 0}, {-g23, g13, 0, g33}}};
  }
  /// The metric with the volume normalisation 1/2 omega1^omega1 = -e^1234.
  Mat4 normalized() const { return mat::scale(Scalar(1) / nu, matrix()); }
};

inline MetricReport metric_closed_form(const NaturalStructure& ns, double tol = kDefaultTolerance) {
  const auto& [a0, a1, a2, a3] = ns.a;
  const auto& [b0, b1, b2, b3] = ns.b;
  const auto& [c0, c1, c2, c3] = ns.c;
  const Scalar half = Scalar::fraction(1, 2);
  MetricReport r;
  r.g11 = (a1 * b0 - a0 * b1) * c3 + (a0 * b3 - a3 * b0) * c1 + (a3 * b1 - a1 * b3) * c0;
  r.g33 = (a2 * b1 - a1 * b2) * c3 + (a1 * b3 - a3 * b1) * c2 + (a3 * b2 - a2 * b3) * c1;
  r.g13 = half * (a3 * (b2 * c0 - b0 * c2) + b3 * (a0 * c2 - a2 * c0) + c3 * (a2 * b0 - a0 * b2));
  r.g23 = -half * (a1 * (b0 * c2 - b2 * c0) + b1 * (a2 * c0 - a0 * c2) + c1 * (a0 * b2 - a2 * b0));
  r.g00 = Scalar(4) * ns.p * ns.p * ns.geom.s2();
  Scalar red = r.reduced_det();
  r.det = red * red;
  r.nu = nu_of(ns.a);
  r.pd = is_positive(r.g11, tol) && is_positive(red, tol);
  r.g_natural = r.g23.is_zero(tol);
  return r;
}

struct SU2Check {
  bool valid = false;
  Scalar nu;
  std::vector<std::string> violations;
};

inline SU2Check check_su2(const NaturalStructure& ns, double tol = kDefaultTolerance) {
  SU2Check out;
  out.nu = nu_of(ns.a);
  auto fail = [&](std::string label) { out.violations.push_back(std::move(label)); };
  if (ns.p.is_zero(tol)) fail("p!=0");
  if (out.nu.is_zero(tol)) fail("a1^2+a3^2-a0a2!=0");
  if (!approx_equal(nu_of(ns.b), out.nu, tol)) fail("b1^2+b3^2-b0b2=a1^2+a3^2-a0a2");
  if (!approx_equal(nu_of(ns.c), out.nu, tol)) fail("c1^2+c3^2-c0c2=a1^2+a3^2-a0a2");
  if (!wedge_pairing(ns.a, ns.b).is_zero(tol)) fail("a0b2+a2b0-2a1b1-2a3b3=0");
  if (!wedge_pairing(ns.a, ns.c).is_zero(tol)) fail("a0c2+a2c0-2a1c1-2a3c3=0");
  if (!wedge_pairing(ns.b, ns.c).is_zero(tol)) fail("b0c2+b2c0-2b1c1-2b3c3=0");
  auto m = metric_closed_form(ns, tol);
  if (!is_positive(m.g11, tol)) fail("g11>0");
  if (!is_positive(m.reduced_det(), tol)) fail("g11*g33-g13^2-g23^2>0");
  out.valid = out.violations.empty();
  return out;
}

/// [(x _| omega1) ^ (y _| omega2) ^ omega3] / v with v = 1/2 omega1 ^ omega1,
/// for x, y in ker theta.
inline Scalar metric_contraction(const NaturalStructure& ns, const FrameVector& x,
                                 const FrameVector& y) {
  if (x.dim() != 5 || y.dim() != 5) throw ShapeMismatch("metric_contraction: vectors must be 5-dim");
  if (!x[0].is_zero(0.0) || !y[0].is_zero(0.0))
    throw ShapeMismatch("metric_contraction: vectors must lie in ker theta");
  const KForm w1 = expand_invariant(ns.omega(1), ns.geom);
  const KForm w2 = expand_invariant(ns.omega(2), ns.geom);
  const KForm w3 = expand_invariant(ns.omega(3), ns.geom);
  const MultiIndex top{1, 2, 3, 4};
  const Scalar v = Scalar::fraction(1, 2) * wedge(w1, w1).coefficient(top);
  if (v.is_zero(0.0)) throw ConstraintViolation("a1^2+a3^2-a0a2!=0", "degenerate omega1");
  return wedge(wedge(contract(x, w1), contract(y, w2)), w3).coefficient(top) / v;
}

/// Symmetrised contraction metric on (e1..e4).
inline Mat4 contraction_matrix(const NaturalStructure& ns) {
  Mat4 g{};
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      auto x = FrameVector::basis(5, i + 1), y = FrameVector::basis(5, j + 1);
      Scalar v = Scalar::fraction(1, 2) * (metric_contraction(ns, x, y) + metric_contraction(ns, y, x));
      g[i][j] = v;
      g[j][i] = v;
    }
  }
  return g;
}

/// hat(omega) for a coefficient quadruple; satisfies hat(omega) * Omega = nu Id
/// where Omega_{ij} = omega(e_i, e_j).
inline Mat4 omega_hat(const Quad& q) {
  const auto& [q0, q1, q2, q3] = q;
  return {{{0, q2, q3, -q1}, {-q2, 0, q1, q3}, {-q3, -q1, 0, q0}, {q1, -q3, -q0, 0}}};
}

/// Omega_{ij} = omega(e_i, e_j).
inline Mat4 omega_matrix(const Quad& q) {
  const auto& [q0, q1, q2, q3] = q;
  return {{{0, q0, -q3, q1}, {-q0, 0, -q1, -q3}, {q3, q1, 0, q2}, {-q1, q3, -q2, 0}}};
}

using PhiTriple = std::array<Mat4, 3>;

inline PhiTriple phi_matrices(const NaturalStructure& ns, double tol = kDefaultTolerance) {
  auto m = metric_closed_form(ns, tol);
  if (m.nu.is_zero(tol)) throw ConstraintViolation("a1^2+a3^2-a0a2!=0", "nu vanishes");
  if (!m.pd) throw ConstraintViolation("g11>0", "metric is not positive definite");
  const Mat4 g = m.normalized();
  const Scalar inv_nu = Scalar(1) / m.nu;
  PhiTriple out;
  for (int i = 0; i < 3; ++i) {
    out[static_cast<std::size_t>(i)] = mat::scale(inv_nu, mat::mul(omega_hat(ns.coefficients(i + 1)), g));
    const Mat4& phi = out[static_cast<std::size_t>(i)];
    if (!mat::equals(mat::mul(phi, phi), mat::scale(-1, mat::identity()), std::max(tol, 1e-9)))
      throw Error("Phi_" + std::to_string(i + 1) + " does not square to -Id");
  }
  return out;
}

struct PreservationFlags {
  std::array<bool, 3> fibres{};       ///< Phi_i preserves V0 = span(e3, e4)
  std::array<bool, 3> horizontals{};  ///< Phi_i preserves H0 = span(e1, e2)
};

inline PreservationFlags preservation_flags(const NaturalStructure& ns,
                                            double tol = kDefaultTolerance) {
  auto m = metric_closed_form(ns, tol);
  PreservationFlags f;
  for (int i = 0; i < 3; ++i) {
    const auto& q = ns.coefficients(i + 1);
    f.fibres[static_cast<std::size_t>(i)] =
        (q[2] * m.g23 + q[3] * m.g33).is_zero(tol) && (q[2] * m.g13 - q[1] * m.g33).is_zero(tol);
    f.horizontals[static_cast<std::size_t>(i)] =
        (q[0] * m.g23 + q[3] * m.g11).is_zero(tol) && (q[0] * m.g13 - q[1] * m.g11).is_zero(tol);
  }
  return f;
}

}  // namespace natsu2
