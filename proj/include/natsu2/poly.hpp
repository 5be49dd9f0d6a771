#pragma once

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "natsu2/scalar.hpp"

namespace natsu2 {

/// Dense polynomial in t with Scalar coefficients, lowest power first.
class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Poly() = default;
  Poly(const Scalar& c) : coeffs_{c} { trim(); }  // NOLINT(implicit)
  Poly(int c) : Poly(Scalar(c)) {}               // NOLINT(implicit)
  Poly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// The monomial c * t^k.
  static Poly monomial(const Scalar& c, int k) {
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
  }
  static Poly t() { return monomial(1, 1); }

  int degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  Scalar coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
  }
  Scalar constant_term() const { return coefficient(0); }

  Scalar operator()(const Scalar& t) const {
    Scalar acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
  double operator()(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->to_double();
    return acc;
  }

  Poly derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      d.push_back(coeffs_[k] * Scalar(static_cast<long long>(k)));
    return Poly(std::move(d));
  }

  /// All coefficients zero: exactly for rationals, within tol for doubles.
  bool is_zero(double tol) const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [tol](const Scalar& c) { return c.is_zero(tol); });
  }
  double max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c.to_double()));
    return m;
  }

  Poly operator-() const {
    std::vector<Scalar> v;
    for (const auto& c : coeffs_) v.push_back(-c);
    return Poly(std::move(v));
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < v.size(); ++k)
      v[k] = a.coefficient(static_cast<int>(k)) + b.coefficient(static_cast<int>(k));
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(v));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
    return true;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero(0.0)) continue;
      if (!s.empty()) s += " + ";
      s += coeffs_[k].to_string();
      if (k >= 1) s += "*t";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
  }

 private:
  std::vector<Scalar> coeffs_;

  // Only exact zeros (and float 0.0) are trimmed.
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero(0.0)) coeffs_.pop_back();
  }
};

}  // namespace natsu2
