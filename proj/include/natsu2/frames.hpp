#pragma once

// Invariant-form calculus on the radius-s tangent sphere bundle of a
// constant-curvature 3-manifold, and on its product with the t-line.
//
// Adapted coframe: theta = s e^0, e^1, e^2 horizontal, e^3, e^4 their
// vertical mirrors, and e^5 = dt in six dimensions. The invariant
// generators are
//
//   alpha0 = e^12,  alpha1 = e^14 - e^23,  alpha2 = e^34,  dtheta = e^31 + e^42
//
// and their exterior derivatives follow from the structure equations
//
//   d alpha0 = (1/s^2) theta ^ alpha1
//   d alpha1 = (2/s^2) theta ^ alpha2 - 2K theta ^ alpha0
//   d alpha2 = -K theta ^ alpha1

#include <array>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "natsu2/exterior.hpp"
#include "natsu2/poly.hpp"

namespace natsu2 {

/// Sectional curvature K of the base and radius s of the sphere bundle.
/// The radius is stored through s^2 so rational s^2 keeps the exact path.
class GeometryParams {
 public:
  static GeometryParams from_radius(const Scalar& K, const Scalar& s) {
    if (!is_positive(s, 0.0)) throw ConstraintViolation("s>0", "radius must be positive");
    return GeometryParams(K, s * s);
  }
  static GeometryParams from_radius_squared(const Scalar& K, const Scalar& s2) {
    if (!is_positive(s2, 0.0)) throw ConstraintViolation("s>0", "radius must be positive");
    return GeometryParams(K, s2);
  }

  const Scalar& K() const { return K_; }
  const Scalar& s2() const { return s2_; }
  Scalar s() const { return natsu2::sqrt(s2_); }
  /// Ric(u,u)/s^2 for constant curvature.
  Scalar r() const { return Scalar(2) * K_; }

 private:
  GeometryParams(Scalar K, Scalar s2) : K_(std::move(K)), s2_(std::move(s2)) {}
  Scalar K_;
  Scalar s2_;
};

enum class Generator { theta, alpha0, alpha1, alpha2, dtheta, psi1, psi2, vol4, vol5 };

inline Generator generator_from_name(std::string_view name) {
  static constexpr std::pair<std::string_view, Generator> kNames[] = {
      {"theta", Generator::theta},   {"alpha0", Generator::alpha0}, {"alpha1", Generator::alpha1},
      {"alpha2", Generator::alpha2}, {"dtheta", Generator::dtheta}, {"psi1", Generator::psi1},
      {"psi2", Generator::psi2},     {"vol4", Generator::vol4},     {"vol5", Generator::vol5}};
  for (const auto& [n, g] : kNames)
    if (n == name) return g;
  throw Error("unknown generator '" + std::string(name) + "'");
}

/// The named generator as a KForm in the e-basis of the given dimension.
inline KForm generator(Generator g, const GeometryParams& geom, int dim = 5) {
  switch (g) {
    case Generator::theta: return KForm::basis(dim, {0}, geom.s());
    case Generator::alpha0: return KForm::basis(dim, {1, 2});
    case Generator::alpha1: return KForm::basis(dim, {1, 4}) - KForm::basis(dim, {2, 3});
    case Generator::alpha2: return KForm::basis(dim, {3, 4});
    case Generator::dtheta: return KForm::basis(dim, {1, 3}, -1) - KForm::basis(dim, {2, 4});
    case Generator::psi1: return KForm::basis(dim, {1, 4}) + KForm::basis(dim, {2, 3});
    case Generator::psi2: return KForm::basis(dim, {1, 3}, -1) + KForm::basis(dim, {2, 4});
    case Generator::vol4: return KForm::basis(dim, {1, 2, 3, 4});
    case Generator::vol5: return KForm::basis(dim, {0, 1, 2, 3, 4});
  }
  throw Error("unknown generator");
}

inline KForm generator(std::string_view name, const GeometryParams& geom, int dim = 5) {
  return generator(generator_from_name(name), geom, dim);
}

/// Basis monomials of the invariant subalgebra on the 5-manifold.
enum class Monomial : int {
  one,
  theta,
  alpha0,
  alpha1,
  alpha2,
  dtheta,
  theta_alpha0,
  theta_alpha1,
  theta_alpha2,
  theta_dtheta,
  vol4,
  theta_vol4,
};

inline constexpr int kMonomialCount = 12;
inline constexpr int kComponentCount = 2 * kMonomialCount;

inline constexpr std::array<int, kMonomialCount> kMonomialGrade = {0, 1, 2, 2, 2, 2,
                                                                    3, 3, 3, 3, 4, 5};

inline constexpr std::array<std::string_view, kMonomialCount> kMonomialName = {
    "1",          "theta",        "alpha0",       "alpha1",     "alpha2", "dtheta",
    "theta^alpha0", "theta^alpha1", "theta^alpha2", "theta^dtheta", "e^1234", "theta^e^1234"};

inline int grade_of(Monomial m) { return kMonomialGrade[static_cast<std::size_t>(m)]; }

/// Element of the algebra generated by theta, alpha0..2, dtheta (and dt),
/// with polynomial-in-t coefficients. Component (m, with_dt) stands for
/// coefficient * m ^ dt when with_dt is set, coefficient * m otherwise.
class InvariantForm {
 public:
  InvariantForm() = default;

  static InvariantForm monomial(Monomial m, bool with_dt = false, const Poly& coeff = Poly(1)) {
    InvariantForm f;
    f.at(m, with_dt) = coeff;
    return f;
  }

  const Poly& coeff(Monomial m, bool with_dt = false) const {
    return c_[index(m, with_dt)];
  }
  Poly& at(Monomial m, bool with_dt = false) { return c_[index(m, with_dt)]; }

  bool has_dt() const {
    for (int i = kMonomialCount; i < kComponentCount; ++i)
      if (!c_[static_cast<std::size_t>(i)].is_zero()) return true;
    return false;
  }
  bool is_time_independent() const {
    if (has_dt()) return false;
    for (const auto& p : c_)
      if (!p.is_constant()) return false;
    return true;
  }

  /// Grades carrying a nonzero component.
  std::vector<int> grades() const {
    std::vector<int> out;
    for (int g = 0; g <= 6; ++g) {
      for (int i = 0; i < kComponentCount; ++i) {
        auto [m, dt] = component(i);
        if (grade_of(m) + (dt ? 1 : 0) == g && !c_[static_cast<std::size_t>(i)].is_zero()) {
          out.push_back(g);
          break;
        }
      }
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& p : c_)
      if (!p.is_zero()) return false;
    return true;
  }
  bool is_zero(double tol) const {
    for (const auto& p : c_)
      if (!p.is_zero(tol)) return false;
    return true;
  }
  double max_abs() const {
    double m = 0.0;
    for (const auto& p : c_) m = std::max(m, p.max_abs());
    return m;
  }

  InvariantForm operator-() const {
    InvariantForm out;
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
  }
  friend InvariantForm operator+(const InvariantForm& a, const InvariantForm& b) {
    InvariantForm out;
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
  }
  friend InvariantForm operator-(const InvariantForm& a, const InvariantForm& b) {
    return a + (-b);
  }
  friend InvariantForm operator*(const Poly& s, const InvariantForm& f) {
    InvariantForm out;
    for (std::size_t i = 0; i < f.c_.size(); ++i) out.c_[i] = s * f.c_[i];
    return out;
  }
  friend InvariantForm operator*(const Scalar& s, const InvariantForm& f) { return Poly(s) * f; }
  friend InvariantForm operator*(int s, const InvariantForm& f) { return Poly(s) * f; }

  friend bool operator==(const InvariantForm& a, const InvariantForm& b) { return a.c_ == b.c_; }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < kComponentCount; ++i) {
      auto [m, dt] = component(i);
      const Poly& p = c_[static_cast<std::size_t>(i)];
      if (p.is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + p.to_string() + ")" + std::string(kMonomialName[static_cast<std::size_t>(m)]);
      if (dt) s += "^dt";
    }
    return s.empty() ? "0" : s;
  }

  static std::pair<Monomial, bool> component(int i) {
    return {static_cast<Monomial>(i % kMonomialCount), i >= kMonomialCount};
  }

 private:
  std::array<Poly, kComponentCount> c_;

  static std::size_t index(Monomial m, bool with_dt) {
    return static_cast<std::size_t>(static_cast<int>(m) + (with_dt ? kMonomialCount : 0));
  }
};

namespace inv {

inline InvariantForm one() { return InvariantForm::monomial(Monomial::one); }
inline InvariantForm theta() { return InvariantForm::monomial(Monomial::theta); }
inline InvariantForm alpha0() { return InvariantForm::monomial(Monomial::alpha0); }
inline InvariantForm alpha1() { return InvariantForm::monomial(Monomial::alpha1); }
inline InvariantForm alpha2() { return InvariantForm::monomial(Monomial::alpha2); }
inline InvariantForm dtheta() { return InvariantForm::monomial(Monomial::dtheta); }
inline InvariantForm vol4() { return InvariantForm::monomial(Monomial::vol4); }
inline InvariantForm dt() { return InvariantForm::monomial(Monomial::one, true); }

/// q0 alpha0 + q1 alpha1 + q2 alpha2 + q3 dtheta.
inline InvariantForm two_form(const std::array<Scalar, 4>& q) {
  return q[0] * alpha0() + q[1] * alpha1() + q[2] * alpha2() + q[3] * dtheta();
}

}  // namespace inv

namespace detail {

// Expansion of a basis monomial (without dt) in the e-basis.
inline KForm expand_monomial(Monomial m, const Scalar& s, int dim) {
  auto theta = KForm::basis(dim, {0}, s);
  auto a0 = KForm::basis(dim, {1, 2});
  auto a1 = KForm::basis(dim, {1, 4}) - KForm::basis(dim, {2, 3});
  auto a2 = KForm::basis(dim, {3, 4});
  auto dth = KForm::basis(dim, {1, 3}, -1) - KForm::basis(dim, {2, 4});
  switch (m) {
    case Monomial::one: return KForm::constant(dim, 1);
    case Monomial::theta: return theta;
    case Monomial::alpha0: return a0;
    case Monomial::alpha1: return a1;
    case Monomial::alpha2: return a2;
    case Monomial::dtheta: return dth;
    case Monomial::theta_alpha0: return wedge(theta, a0);
    case Monomial::theta_alpha1: return wedge(theta, a1);
    case Monomial::theta_alpha2: return wedge(theta, a2);
    case Monomial::theta_dtheta: return wedge(theta, dth);
    case Monomial::vol4: return wedge(a0, a2);
    case Monomial::theta_vol4: return wedge(theta, wedge(a0, a2));
  }
  throw Error("bad monomial");
}

inline KForm expand_component(Monomial m, bool with_dt, const Scalar& s, int dim) {
  KForm f = expand_monomial(m, s, dim);
  return with_dt ? wedge(f, KForm::basis(dim, {5})) : f;
}

inline Scalar dot(const KForm& a, const KForm& b) {
  Scalar acc = 0;
  for (const auto& [idx, c] : a.terms()) acc += c * b.coefficient(idx);
  return acc;
}

// Products of basis monomials: m1 ^ m2 = coeff * m3. Computed once from the
// e-basis expansions at s = 1 (the table does not depend on s because each
// theta-monomial carries exactly one theta).
struct ProductEntry {
  int coeff = 0;
  Monomial result = Monomial::one;
};

inline const std::array<std::array<ProductEntry, kMonomialCount>, kMonomialCount>&
product_table() {
  static const auto table = [] {
    std::array<std::array<ProductEntry, kMonomialCount>, kMonomialCount> t{};
    std::array<KForm, kMonomialCount> basis{
        KForm(5, 0), KForm(5, 0), KForm(5, 0), KForm(5, 0), KForm(5, 0), KForm(5, 0),
        KForm(5, 0), KForm(5, 0), KForm(5, 0), KForm(5, 0), KForm(5, 0), KForm(5, 0)};
    for (int i = 0; i < kMonomialCount; ++i)
      basis[static_cast<std::size_t>(i)] = expand_monomial(static_cast<Monomial>(i), 1, 5);
    for (int i = 0; i < kMonomialCount; ++i) {
      for (int j = 0; j < kMonomialCount; ++j) {
        KForm prod = wedge(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
        if (prod.is_zero()) continue;
        bool found = false;
        for (int k = 0; k < kMonomialCount && !found; ++k) {
          const KForm& b = basis[static_cast<std::size_t>(k)];
          if (b.grade() != prod.grade()) continue;
          Scalar num = dot(prod, b);
          if (num.is_zero(0.0)) continue;
          Scalar c = num / dot(b, b);
          if (!equals(prod, c * b, 0.0)) throw Error("invariant span not closed under wedge");
          t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = {
              static_cast<int>(c.rational().convert_to<long long>()), static_cast<Monomial>(k)};
          found = true;
        }
        if (!found) throw Error("invariant span not closed under wedge");
      }
    }
    return t;
  }();
  return table;
}

}  // namespace detail

inline InvariantForm wedge(const InvariantForm& a, const InvariantForm& b) {
  const auto& table = detail::product_table();
  InvariantForm out;
  for (int i = 0; i < kComponentCount; ++i) {
    auto [ma, dta] = InvariantForm::component(i);
    const Poly& ca = a.coeff(ma, dta);
    if (ca.is_zero()) continue;
    for (int j = 0; j < kComponentCount; ++j) {
      auto [mb, dtb] = InvariantForm::component(j);
      const Poly& cb = b.coeff(mb, dtb);
      if (cb.is_zero() || (dta && dtb)) continue;
      const auto& e = table[static_cast<std::size_t>(ma)][static_cast<std::size_t>(mb)];
      if (e.coeff == 0) continue;
      int sign = e.coeff;
      // (ma ^ dt) ^ mb = (-1)^{|mb|} ma ^ mb ^ dt
      if (dta && (grade_of(mb) & 1)) sign = -sign;
      out.at(e.result, dta || dtb) += Poly(Scalar(sign)) * ca * cb;
    }
  }
  return out;
}

namespace detail {

// Generator factors whose wedge product is the given monomial.
inline std::vector<InvariantForm> factors(Monomial m) {
  switch (m) {
    case Monomial::one: return {};
    case Monomial::theta: return {inv::theta()};
    case Monomial::alpha0: return {inv::alpha0()};
    case Monomial::alpha1: return {inv::alpha1()};
    case Monomial::alpha2: return {inv::alpha2()};
    case Monomial::dtheta: return {inv::dtheta()};
    case Monomial::theta_alpha0: return {inv::theta(), inv::alpha0()};
    case Monomial::theta_alpha1: return {inv::theta(), inv::alpha1()};
    case Monomial::theta_alpha2: return {inv::theta(), inv::alpha2()};
    case Monomial::theta_dtheta: return {inv::theta(), inv::dtheta()};
    case Monomial::vol4: return {inv::alpha0(), inv::alpha2()};
    case Monomial::theta_vol4: return {inv::theta(), inv::alpha0(), inv::alpha2()};
  }
  throw Error("bad monomial");
}

inline InvariantForm d_generator(const InvariantForm& g, const GeometryParams& geom) {
  const Scalar inv_s2 = Scalar(1) / geom.s2();
  const Scalar& K = geom.K();
  if (g == inv::theta()) return inv::dtheta();
  if (g == inv::alpha0()) return inv_s2 * wedge(inv::theta(), inv::alpha1());
  if (g == inv::alpha1())
    return Scalar(2) * inv_s2 * wedge(inv::theta(), inv::alpha2()) -
           geom.r() * wedge(inv::theta(), inv::alpha0());
  if (g == inv::alpha2()) return -K * wedge(inv::theta(), inv::alpha1());
  if (g == inv::dtheta()) return InvariantForm();
  throw Error("not a generator");
}

// Leibniz rule over the generator factorisation of a monomial.
inline InvariantForm d_monomial(Monomial m, const GeometryParams& geom) {
  auto fs = factors(m);
  InvariantForm total;
  int prefix_grade = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    InvariantForm term = inv::one();
    for (std::size_t j = 0; j < fs.size(); ++j)
      term = wedge(term, j == i ? d_generator(fs[j], geom) : fs[j]);
    total = total + ((prefix_grade & 1) ? -term : term);
    prefix_grade += fs[i].grades().front();
  }
  return total;
}

}  // namespace detail

/// Exterior derivative on the 5-manifold via the structure equations.
inline InvariantForm d_invariant(const InvariantForm& w, const GeometryParams& geom) {
  if (!w.is_time_independent())
    throw ShapeMismatch("d_invariant needs a time-independent form without dt");
  InvariantForm out;
  for (int i = 0; i < kMonomialCount; ++i) {
    auto m = static_cast<Monomial>(i);
    const Poly& c = w.coeff(m);
    if (c.is_zero()) continue;
    out = out + c * detail::d_monomial(m, geom);
  }
  return out;
}

/// Exterior derivative on the product with the t-line: d = d_S + dt ^ d/dt.
inline InvariantForm d_extended(const InvariantForm& w, const GeometryParams& geom) {
  InvariantForm out;
  for (int i = 0; i < kComponentCount; ++i) {
    auto [m, dt] = InvariantForm::component(i);
    const Poly& c = w.coeff(m, dt);
    if (c.is_zero()) continue;
    InvariantForm dm = detail::d_monomial(m, geom);
    if (dt) {
      out = out + c * wedge(dm, inv::dt());
    } else {
      // d(f m) = f' dt ^ m + f dm, and dt ^ m = (-1)^{|m|} m ^ dt
      Poly fp = c.derivative();
      if (grade_of(m) & 1) fp = -fp;
      out = out + InvariantForm::monomial(m, true, fp) + c * dm;
    }
  }
  return out;
}

/// KForm in the e-basis; the form must be homogeneous. Polynomial
/// coefficients are evaluated at t (only constant ones are allowed when t is
/// not given).
inline KForm expand_invariant_at(const InvariantForm& w, const GeometryParams& geom,
                                 const Scalar& t) {
  auto gs = w.grades();
  if (gs.size() > 1) throw ShapeMismatch("expand_invariant: form is not homogeneous");
  const int dim = w.has_dt() ? 6 : 5;
  KForm out(dim, gs.empty() ? 0 : gs.front());
  const Scalar s = geom.s();
  for (int i = 0; i < kComponentCount; ++i) {
    auto [m, dt] = InvariantForm::component(i);
    const Poly& c = w.coeff(m, dt);
    if (c.is_zero()) continue;
    out = out + c(t) * detail::expand_component(m, dt, s, dim);
  }
  return out;
}

inline KForm expand_invariant(const InvariantForm& w, const GeometryParams& geom) {
  for (int i = 0; i < kComponentCount; ++i) {
    auto [m, dt] = InvariantForm::component(i);
    if (!w.coeff(m, dt).is_constant())
      throw ShapeMismatch("expand_invariant: coefficients depend on t; use expand_invariant_at");
  }
  return expand_invariant_at(w, geom, 0);
}

/// Inverse of expand_invariant on the invariant span. Throws OutsideSpan with
/// the Euclidean norm of the leftover coefficients when f is not in the span.
inline InvariantForm project_invariant(const KForm& f, const GeometryParams& geom,
                                       double tol = kDefaultTolerance) {
  const Scalar s = geom.s();
  InvariantForm out;
  KForm rest = f;
  for (int i = 0; i < kComponentCount; ++i) {
    auto [m, dt] = InvariantForm::component(i);
    if (dt && f.dim() < 6) continue;
    if (grade_of(m) + (dt ? 1 : 0) != f.grade()) continue;
    KForm b = detail::expand_component(m, dt, s, f.dim());
    Scalar c = detail::dot(f, b) / detail::dot(b, b);
    if (c.is_zero(0.0)) continue;
    out.at(m, dt) = Poly(c);
    rest = rest - c * b;
  }
  double norm2 = 0.0;
  for (const auto& [idx, c] : rest.terms()) norm2 += c.to_double() * c.to_double();
  const double residual = std::sqrt(norm2);
  if (residual > tol) throw OutsideSpan(residual);
  return out;
}

}  // namespace natsu2
