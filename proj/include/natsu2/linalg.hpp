#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "natsu2/scalar.hpp"

namespace natsu2 {

/// 4x4 matrix of Scalars acting on column vectors over (e1, e2, e3, e4).
using Mat4 = std::array<std::array<Scalar, 4>, 4>;

namespace mat {

inline Mat4 zero() { return Mat4{}; }

inline Mat4 identity() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  return m;
}

inline Mat4 transpose(const Mat4& a) {
  Mat4 t{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[i][j] = a[j][i];
  return t;
}

inline Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Mat4 scale(const Scalar& s, const Mat4& a) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = s * a[i][j];
  return c;
}

inline Mat4 add(const Mat4& a, const Mat4& b) {
  Mat4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = a[i][j] + b[i][j];
  return c;
}

inline Scalar bilinear(const std::array<Scalar, 4>& x, const Mat4& g,
                       const std::array<Scalar, 4>& y) {
  Scalar acc = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += x[i] * g[i][j] * y[j];
  return acc;
}

// Cofactor expansion; exact for rational entries.
inline Scalar det(const Mat4& a) {
  const auto& m = a;
  Scalar total = 0;
  for (int col = 0; col < 4; ++col) {
    std::array<int, 3> cols{};
    for (int j = 0, k = 0; j < 4; ++j)
      if (j != col) cols[k++] = j;
    Scalar minor = m[1][cols[0]] * (m[2][cols[1]] * m[3][cols[2]] - m[2][cols[2]] * m[3][cols[1]]) -
                   m[1][cols[1]] * (m[2][cols[0]] * m[3][cols[2]] - m[2][cols[2]] * m[3][cols[0]]) +
                   m[1][cols[2]] * (m[2][cols[0]] * m[3][cols[1]] - m[2][cols[1]] * m[3][cols[0]]);
    Scalar term = a[0][col] * minor;
    total = (col & 1) ? total - term : total + term;
  }
  return total;
}

inline double max_abs_diff(const Mat4& a, const Mat4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs((a[i][j] - b[i][j]).to_double()));
  return m;
}

/// Entrywise equality: exact when every entry involved is rational.
inline bool equals(const Mat4& a, const Mat4& b, double tol = kDefaultTolerance) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!approx_equal(a[i][j], b[i][j], tol)) return false;
  return true;
}

inline std::string to_string(const Mat4& a) {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < 4; ++j) s += (j ? ", " : "") + a[i][j].to_string();
  }
  return s + "]";
}

}  // namespace mat
}  // namespace natsu2
