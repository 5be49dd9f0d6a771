#pragma once

// Brute-force coordinate model of the flat case: R^3 x S^2 (K = 0, s = 1),
// optionally times the t-line, with stereographic charts on the sphere.
//
//   theta  = sum u^i dx^i
//   alpha0 = sum_cyc u^1 dx^2 ^ dx^3
//   alpha1 = sum_cyc u^1 (dx^2 ^ du^3 - dx^3 ^ du^2)
//   alpha2 = sum_cyc u^1 du^2 ^ du^3
//   dtheta = sum du^i ^ dx^i
//
// Forms are evaluated pointwise in the chart basis (dx^1, dx^2, dx^3, dxi,
// deta[, dt]) with their own dense storage; exterior derivatives are taken
// by the coordinate formula with forward-mode dual numbers, and central
// differences as a cross-check. Nothing here uses the symbolic engine.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "natsu2/errors.hpp"

namespace natsu2::oracle {

// ---------------------------------------------------------------------------
// Dual numbers

template <class T>
struct Dual {
  T v{};
  T d{};

  Dual() = default;
  Dual(double c) : v(c), d() {}  // NOLINT(implicit)
  Dual(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}
};

template <class T>
Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) { return {a.v + b.v, a.d + b.d}; }
template <class T>
Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) { return {a.v - b.v, a.d - b.d}; }
template <class T>
Dual<T> operator-(const Dual<T>& a) { return {-a.v, -a.d}; }
template <class T>
Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
template <class T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
  return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}
template <class T>
Dual<T> operator*(double c, const Dual<T>& a) { return {c * a.v, c * a.d}; }
template <class T>
Dual<T> operator+(double c, const Dual<T>& a) { return {c + a.v, a.d}; }
template <class T>
Dual<T> operator-(const Dual<T>& a, double c) { return {a.v - c, a.d}; }
template <class T>
Dual<T> operator-(double c, const Dual<T>& a) { return {c - a.v, -a.d}; }

template <class T>
struct ScalarTraits {
  static double value(const T& x) { return x; }
};
template <class T>
struct ScalarTraits<Dual<T>> {
  static double value(const Dual<T>& x) { return ScalarTraits<T>::value(x.v); }
};

template <class T>
Dual<T> constant_dual(const T& x) { return Dual<T>(x, T{}); }

// ---------------------------------------------------------------------------
// Charts

enum class Pole { north, south };

inline const char* pole_name(Pole p) { return p == Pole::north ? "north" : "south"; }

/// Chart coordinates (x1, x2, x3, xi, eta[, t]). The north chart is the
/// stereographic projection from (0,0,1) and excludes it; the south chart
/// excludes (0,0,-1).
struct ChartPoint {
  std::array<double, 3> x{};
  double xi = 0.0, eta = 0.0;
  Pole pole = Pole::south;
  std::optional<double> t;

  int dim() const { return t ? 6 : 5; }
  std::array<double, 6> coords() const { return {x[0], x[1], x[2], xi, eta, t.value_or(0.0)}; }
};

inline constexpr double kPoleGuard = 1e-6;

template <class T>
std::array<T, 3> sphere_point(const T& xi, const T& eta, Pole pole) {
  T r2 = xi * xi + eta * eta;
  T den = 1.0 + r2;
  if (pole == Pole::north) return {(2.0 * xi) / den, (2.0 * eta) / den, (r2 - 1.0) / den};
  return {(2.0 * xi) / den, (2.0 * eta) / den, (1.0 - r2) / den};
}

inline std::array<double, 3> sphere_point(const ChartPoint& pt) {
  return sphere_point(pt.xi, pt.eta, pt.pole);
}

inline void check_chart(const ChartPoint& pt) {
  if (1.0 / (1.0 + pt.xi * pt.xi + pt.eta * pt.eta) < kPoleGuard)
    throw ShapeMismatch(std::string("point too close to the excluded pole of the ") +
                        pole_name(pt.pole) + " chart");
}

/// The same point of the sphere in the other chart (inversion xi -> xi / |.|^2).
inline ChartPoint other_chart(const ChartPoint& pt) {
  const double r2 = pt.xi * pt.xi + pt.eta * pt.eta;
  if (r2 < kPoleGuard) throw ShapeMismatch("point is the excluded pole of the other chart");
  ChartPoint q = pt;
  q.xi = pt.xi / r2;
  q.eta = pt.eta / r2;
  q.pole = pt.pole == Pole::north ? Pole::south : Pole::north;
  return q;
}

// ---------------------------------------------------------------------------
// Pointwise forms in the chart basis

inline int bit_count(unsigned m) {
  int c = 0;
  for (; m; m &= m - 1) ++c;
  return c;
}

/// Sign of dc^A ^ dc^B relative to dc^{A u B} by counting inversions.
inline int merge_sign(unsigned a, unsigned b) {
  int inv = 0;
  for (int i = 0; i < 6; ++i)
    if ((a >> i) & 1u)
      for (int j = 0; j < i; ++j)
        if ((b >> j) & 1u) ++inv;
  return (inv % 2) ? -1 : 1;
}

template <class T>
struct PointForm {
  int grade = 0;
  std::array<T, 64> c{};  // coefficient of dc^{mask}

  static PointForm scalar(const T& v) {
    PointForm f;
    f.c[0] = v;
    return f;
  }
  static PointForm one_form(const std::array<T, 6>& comps) {
    PointForm f;
    f.grade = 1;
    for (int i = 0; i < 6; ++i) f.c[1u << i] = comps[static_cast<std::size_t>(i)];
    return f;
  }
};

template <class T>
PointForm<T> wedge(const PointForm<T>& a, const PointForm<T>& b) {
  PointForm<T> out;
  out.grade = a.grade + b.grade;
  for (unsigned ma = 0; ma < 64; ++ma) {
    if (bit_count(ma) != a.grade) continue;
    for (unsigned mb = 0; mb < 64; ++mb) {
      if (bit_count(mb) != b.grade || (ma & mb)) continue;
      T prod = a.c[ma] * b.c[mb];
      out.c[ma | mb] = merge_sign(ma, mb) > 0 ? out.c[ma | mb] + prod : out.c[ma | mb] - prod;
    }
  }
  return out;
}

template <class T>
PointForm<T> add(const PointForm<T>& a, const PointForm<T>& b, double scale_b = 1.0) {
  PointForm<T> out = a;
  if (a.grade != b.grade) {
    bool a_zero = true;
    for (const auto& v : a.c)
      if (ScalarTraits<T>::value(v) != 0.0) a_zero = false;
    if (!a_zero) throw ShapeMismatch("oracle: adding forms of different grade");
    out.grade = b.grade;
  }
  for (std::size_t i = 0; i < 64; ++i) out.c[i] = out.c[i] + T(scale_b) * b.c[i];
  return out;
}

/// Determinant of the k x k matrix m[i][j] = vectors[j][rows[i]] (Leibniz).
inline double minor_det(const std::vector<int>& rows, const std::vector<std::array<double, 6>>& vectors) {
  const std::size_t k = rows.size();
  std::vector<int> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
  double total = 0.0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inv;
    double prod = 1.0;
    for (std::size_t i = 0; i < k; ++i)
      prod *= vectors[static_cast<std::size_t>(perm[i])][static_cast<std::size_t>(rows[i])];
    total += (inv % 2) ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <class T>
T evaluate(const PointForm<T>& f, const std::vector<std::array<double, 6>>& vectors) {
  if (static_cast<int>(vectors.size()) != f.grade) throw ShapeMismatch("oracle: arity mismatch");
  T total{};
  for (unsigned m = 0; m < 64; ++m) {
    if (bit_count(m) != f.grade) continue;
    std::vector<int> rows;
    for (int i = 0; i < 6; ++i)
      if ((m >> i) & 1u) rows.push_back(i);
    double det = minor_det(rows, vectors);
    if (det != 0.0) total = total + T(det) * f.c[m];
  }
  return total;
}

// ---------------------------------------------------------------------------
// Named forms and form expressions

enum class Factor { t, theta, alpha0, alpha1, alpha2, dtheta, dt };

struct Term {
  double coeff = 1.0;
  std::vector<Factor> factors;
};

/// A sum of coefficient * (wedge product of factors).
using FormSpec = std::vector<Term>;

inline FormSpec named_form(const std::string& name) {
  static const std::map<std::string, Factor> kNames = {
      {"theta", Factor::theta},   {"alpha0", Factor::alpha0}, {"alpha1", Factor::alpha1},
      {"alpha2", Factor::alpha2}, {"dtheta", Factor::dtheta}, {"dt", Factor::dt}};
  auto it = kNames.find(name);
  if (it == kNames.end()) throw Error("oracle: unknown form '" + name + "'");
  return {{1.0, {it->second}}};
}

namespace detail {

// Generic coordinate tuple; T is double or a dual type.
template <class T>
struct Frame {
  std::array<T, 3> u;
  std::array<std::array<T, 6>, 3> du;  // du^i in the chart basis
  T t;
};

template <class T>
Frame<T> frame_at(const std::array<T, 6>& c, Pole pole) {
  using D = Dual<T>;
  Frame<T> fr;
  fr.u = sphere_point(c[3], c[4], pole);
  auto ux = sphere_point(D{c[3], T(1.0)}, constant_dual(c[4]), pole);
  auto uy = sphere_point(constant_dual(c[3]), D{c[4], T(1.0)}, pole);
  for (int i = 0; i < 3; ++i) {
    fr.du[static_cast<std::size_t>(i)] = {};
    fr.du[static_cast<std::size_t>(i)][3] = ux[static_cast<std::size_t>(i)].d;
    fr.du[static_cast<std::size_t>(i)][4] = uy[static_cast<std::size_t>(i)].d;
  }
  fr.t = c[5];
  return fr;
}

template <class T>
PointForm<T> dx(int i) {
  std::array<T, 6> comps{};
  comps[static_cast<std::size_t>(i)] = T(1.0);
  return PointForm<T>::one_form(comps);
}

template <class T>
PointForm<T> factor_form(Factor f, const Frame<T>& fr) {
  auto du = [&](int i) { return PointForm<T>::one_form(fr.du[static_cast<std::size_t>(i)]); };
  auto scal = [&](const T& v) { return PointForm<T>::scalar(v); };
  const auto& u = fr.u;
  switch (f) {
    case Factor::t: return scal(fr.t);
    case Factor::dt: return dx<T>(5);
    case Factor::theta: {
      PointForm<T> out;
      for (int i = 0; i < 3; ++i) out = add(out, wedge(scal(u[static_cast<std::size_t>(i)]), dx<T>(i)));
      return out;
    }
    case Factor::dtheta: {
      PointForm<T> out;
      for (int i = 0; i < 3; ++i) out = add(out, wedge(du(i), dx<T>(i)));
      return out;
    }
    case Factor::alpha0:
    case Factor::alpha1:
    case Factor::alpha2: {
      PointForm<T> out;
      for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        PointForm<T> piece;
        if (f == Factor::alpha0) piece = wedge(dx<T>(j), dx<T>(k));
        if (f == Factor::alpha1) piece = add(wedge(dx<T>(j), du(k)), wedge(dx<T>(k), du(j)), -1.0);
        if (f == Factor::alpha2) piece = wedge(du(j), du(k));
        out = add(out, wedge(scal(u[static_cast<std::size_t>(i)]), piece));
      }
      return out;
    }
  }
  throw Error("oracle: bad factor");
}

template <class T>
PointForm<T> build(const FormSpec& fs, const std::array<T, 6>& coords, Pole pole) {
  const Frame<T> fr = frame_at(coords, pole);
  PointForm<T> out;
  bool first = true;
  for (const auto& term : fs) {
    PointForm<T> prod = PointForm<T>::scalar(T(term.coeff));
    for (Factor f : term.factors) prod = wedge(prod, factor_form(f, fr));
    if (first) {
      out = prod;
      first = false;
    } else {
      out = add(out, prod);
    }
  }
  return out;
}

inline std::vector<std::array<double, 6>> drop(const std::vector<std::array<double, 6>>& v, std::size_t j) {
  std::vector<std::array<double, 6>> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != j) out.push_back(v[i]);
  return out;
}

}  // namespace detail

/// The form value on chart vectors (components over d/dx1..d/dx3, d/dxi, d/deta[, d/dt]).
inline double eval_form(const FormSpec& fs, const ChartPoint& pt,
                        const std::vector<std::array<double, 6>>& vectors) {
  check_chart(pt);
  if (pt.t && *pt.t <= 0.0) throw ShapeMismatch("oracle: t must be positive");
  auto f = detail::build<double>(fs, pt.coords(), pt.pole);
  return evaluate(f, vectors);
}

inline double eval_form(const std::string& name, const ChartPoint& pt,
                        const std::vector<std::array<double, 6>>& vectors) {
  return eval_form(named_form(name), pt, vectors);
}

/// d(fs)(v0..vk) = sum_j (-1)^j v_j[fs(v0..^vj..vk)] for constant chart vectors.
inline double numeric_d(const FormSpec& fs, const ChartPoint& pt,
                        const std::vector<std::array<double, 6>>& vectors) {
  check_chart(pt);
  if (pt.t && *pt.t <= 0.0) throw ShapeMismatch("oracle: t must be positive");
  using D = Dual<double>;
  const auto c = pt.coords();
  double total = 0.0;
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    std::array<D, 6> cd;
    for (std::size_t i = 0; i < 6; ++i) cd[i] = {c[i], vectors[j][i]};
    auto f = detail::build<D>(fs, cd, pt.pole);
    double deriv = evaluate(f, detail::drop(vectors, j)).d;
    total += (j % 2) ? -deriv : deriv;
  }
  return total;
}

inline constexpr double kFiniteDifferenceStep = 1e-5;

/// Same as numeric_d with central finite differences.
inline double numeric_d_fd(const FormSpec& fs, const ChartPoint& pt,
                           const std::vector<std::array<double, 6>>& vectors,
                           double h = kFiniteDifferenceStep) {
  check_chart(pt);
  const auto c = pt.coords();
  double total = 0.0;
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    std::array<double, 6> cp = c, cm = c;
    for (std::size_t i = 0; i < 6; ++i) {
      cp[i] += h * vectors[j][i];
      cm[i] -= h * vectors[j][i];
    }
    auto rest = detail::drop(vectors, j);
    double fp = evaluate(detail::build<double>(fs, cp, pt.pole), rest);
    double fm = evaluate(detail::build<double>(fs, cm, pt.pole), rest);
    double deriv = (fp - fm) / (2 * h);
    total += (j % 2) ? -deriv : deriv;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Verification drivers

/// d(differentiated) - plain, evaluated on all increasing chart-basis tuples.
struct Identity {
  std::string label;
  FormSpec differentiated;
  FormSpec plain;
  int grade = 0;
};

inline std::vector<Identity> flat_system_identities() {
  using F = Factor;
  return {
      {"d(theta)=dtheta", {{1, {F::theta}}}, {{1, {F::dtheta}}}, 2},
      {"d(alpha0)=theta^alpha1", {{1, {F::alpha0}}}, {{1, {F::theta, F::alpha1}}}, 3},
      {"d(alpha1)=2theta^alpha2", {{1, {F::alpha1}}}, {{2, {F::theta, F::alpha2}}}, 3},
      {"d(alpha2)=0", {{1, {F::alpha2}}}, {}, 3},
      {"d(dtheta)=0", {{1, {F::dtheta}}}, {}, 3},
      {"alpha0^alpha2=-1/2alpha1^alpha1", {}, {{1, {F::alpha0, F::alpha2}}, {0.5, {F::alpha1, F::alpha1}}}, 4},
      {"alpha0^alpha2=-1/2dtheta^dtheta", {}, {{1, {F::alpha0, F::alpha2}}, {0.5, {F::dtheta, F::dtheta}}}, 4},
      {"alpha0^dtheta=0", {}, {{1, {F::alpha0, F::dtheta}}}, 4},
      {"alpha1^dtheta=0", {}, {{1, {F::alpha1, F::dtheta}}}, 4},
      {"alpha2^dtheta=0", {}, {{1, {F::alpha2, F::dtheta}}}, 4},
      {"alpha0^alpha1=0", {}, {{1, {F::alpha0, F::alpha1}}}, 4},
      {"alpha2^alpha1=0", {}, {{1, {F::alpha2, F::alpha1}}}, 4},
  };
}

/// F = t dtheta - theta ^ dt and Psi_+-; all closed.
inline std::vector<Identity> flat_su3_identities() {
  using F = Factor;
  return {
      {"dF=0", {{1, {F::t, F::dtheta}}, {-1, {F::theta, F::dt}}}, {}, 3},
      {"dPsi+=0",
       {{1, {F::theta, F::alpha0}}, {-1, {F::t, F::t, F::theta, F::alpha2}}, {-1, {F::t, F::alpha1, F::dt}}},
       {},
       4},
      {"dPsi-=0",
       {{-1, {F::t, F::theta, F::alpha1}}, {1, {F::t, F::t, F::alpha2, F::dt}}, {-1, {F::alpha0, F::dt}}},
       {},
       4},
  };
}

inline std::vector<std::vector<std::array<double, 6>>> basis_tuples(int dim, int k) {
  std::vector<std::vector<std::array<double, 6>>> out;
  for (unsigned m = 0; m < (1u << dim); ++m) {
    if (bit_count(m) != k) continue;
    std::vector<std::array<double, 6>> tuple;
    for (int i = 0; i < dim; ++i) {
      if (!((m >> i) & 1u)) continue;
      std::array<double, 6> v{};
      v[static_cast<std::size_t>(i)] = 1.0;
      tuple.push_back(v);
    }
    out.push_back(tuple);
  }
  return out;
}

struct IdentityResiduals {
  std::map<std::string, double> residual;  // max |d(lhs) - rhs|
  double ad_fd_gap = 0.0;                  // max |AD - FD| over the d terms
};

inline IdentityResiduals identity_residuals(const std::vector<Identity>& ids, const ChartPoint& pt,
                                            bool with_fd = true) {
  IdentityResiduals out;
  for (const auto& id : ids) {
    double worst = 0.0;
    for (const auto& tuple : basis_tuples(pt.dim(), id.grade)) {
      double lhs = 0.0;
      if (!id.differentiated.empty()) {
        lhs = numeric_d(id.differentiated, pt, tuple);
        if (with_fd)
          out.ad_fd_gap = std::max(out.ad_fd_gap, std::abs(lhs - numeric_d_fd(id.differentiated, pt, tuple)));
      }
      double rhs = id.plain.empty() ? 0.0 : eval_form(id.plain, pt, tuple);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    out.residual[id.label] = worst;
  }
  return out;
}

/// Random chart points, alternating poles, at least 1e-2 away from both poles.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  ChartPoint next(bool with_t) {
    std::uniform_real_distribution<double> xs(-2.0, 2.0), cs(-1.5, 1.5), ts(0.1, 10.0);
    for (;;) {
      ChartPoint pt;
      pt.pole = (count_ % 2) ? Pole::north : Pole::south;
      for (auto& v : pt.x) v = xs(rng_);
      pt.xi = cs(rng_);
      pt.eta = cs(rng_);
      if (with_t) pt.t = ts(rng_);
      auto u = sphere_point(pt);
      if (std::hypot(u[0], u[1], u[2] - 1.0) < kRejectRadius) continue;
      if (std::hypot(u[0], u[1], u[2] + 1.0) < kRejectRadius) continue;
      ++count_;
      return pt;
    }
  }

  static constexpr double kRejectRadius = 1e-2;

 private:
  std::mt19937_64 rng_;
  long count_ = 0;
};

struct OracleReport {
  std::string name;
  int samples = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> residuals;
  double max_residual = 0.0;
  double ad_fd_gap = 0.0;
  double chart_gap = 0.0;
};

namespace detail {

// Chart-basis vectors at q representing the same tangent vectors as the
// basis vectors at pt (only the sphere part changes, through the transition).
inline std::vector<std::array<double, 6>> transported_basis(const ChartPoint& pt) {
  using D = Dual<double>;
  const double xi = pt.xi, eta = pt.eta;
  auto inv = [](D a, D b) {
    D r2 = a * a + b * b;
    return std::array<D, 2>{a / r2, b / r2};
  };
  auto jx = inv(D{xi, 1.0}, D{eta, 0.0});
  auto jy = inv(D{xi, 0.0}, D{eta, 1.0});
  std::vector<std::array<double, 6>> out;
  for (int i = 0; i < pt.dim(); ++i) {
    std::array<double, 6> v{};
    if (i == 3) {
      v[3] = jx[0].d;
      v[4] = jx[1].d;
    } else if (i == 4) {
      v[3] = jy[0].d;
      v[4] = jy[1].d;
    } else {
      v[static_cast<std::size_t>(i)] = 1.0;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// Max difference between the named forms evaluated in the two charts on
/// the same tangent vectors, plus the residual difference between charts.
inline double chart_gap(const std::vector<Identity>& ids, const ChartPoint& pt) {
  const ChartPoint q = other_chart(pt);
  const auto moved = detail::transported_basis(pt);
  double gap = 0.0;
  const std::vector<std::string> names = {"theta", "alpha0", "alpha1", "alpha2", "dtheta"};
  for (const auto& name : names) {
    const auto fs = named_form(name);
    const int k = name == "theta" ? 1 : 2;
    for (unsigned m = 0; m < (1u << pt.dim()); ++m) {
      if (bit_count(m) != k) continue;
      std::vector<std::array<double, 6>> here, there;
      for (int i = 0; i < pt.dim(); ++i) {
        if (!((m >> i) & 1u)) continue;
        std::array<double, 6> e{};
        e[static_cast<std::size_t>(i)] = 1.0;
        here.push_back(e);
        there.push_back(moved[static_cast<std::size_t>(i)]);
      }
      gap = std::max(gap, std::abs(eval_form(fs, pt, here) - eval_form(fs, q, there)));
    }
  }
  auto ra = identity_residuals(ids, pt, false), rb = identity_residuals(ids, q, false);
  for (const auto& [label, v] : ra.residual) gap = std::max(gap, std::abs(v - rb.residual[label]));
  return gap;
}

inline OracleReport run_identities(const std::string& name, const std::vector<Identity>& ids,
                                   int n_samples, std::uint64_t seed, bool with_t) {
  OracleReport rep;
  rep.name = name;
  rep.samples = n_samples;
  rep.seed = seed;
  Sampler sampler(seed);
  for (int i = 0; i < n_samples; ++i) {
    const ChartPoint pt = sampler.next(with_t);
    auto r = identity_residuals(ids, pt);
    for (const auto& [label, v] : r.residual) {
      rep.residuals[label] = std::max(rep.residuals[label], v);
      rep.max_residual = std::max(rep.max_residual, v);
    }
    rep.ad_fd_gap = std::max(rep.ad_fd_gap, r.ad_fd_gap);
    rep.chart_gap = std::max(rep.chart_gap, chart_gap(ids, pt));
  }
  return rep;
}

inline OracleReport verify_flat_system(int n_samples, std::uint64_t seed) {
  return run_identities("flat_system", flat_system_identities(), n_samples, seed, false);
}

inline OracleReport verify_flat_su3(int n_samples, std::uint64_t seed) {
  return run_identities("flat_su3", flat_su3_identities(), n_samples, seed, true);
}

}  // namespace natsu2::oracle
