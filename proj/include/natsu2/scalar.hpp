#pragma once

// Real scalars with an exact-rational fast path.
//
// A Scalar is either an exact rational (arbitrary precision) or a double.
// Arithmetic between two exact values stays exact; as soon as one operand is
// a double the result is a double. Square roots stay exact when the argument
// is the square of a rational.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <variant>

#include "natsu2/errors.hpp"

namespace natsu2 {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Absolute tolerance used for float comparisons unless overridden.
inline constexpr double kDefaultTolerance = 1e-9;

class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}              // NOLINT(implicit)
  Scalar(long v) : value_(Rational(v)) {}             // NOLINT(implicit)
  Scalar(long long v) : value_(Rational(v)) {}        // NOLINT(implicit)
  Scalar(Rational v) : value_(std::move(v)) {}        // NOLINT(implicit)

  static Scalar real(double v) {
    Scalar s;
    s.value_ = v;
    return s;
  }
  static Scalar fraction(long long num, long long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return Scalar(Rational(num, den));
  }

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }

  const Rational& rational() const {
    if (!is_exact()) throw Error("scalar is not exact");
    return std::get<Rational>(value_);
  }

  double to_double() const {
    if (is_exact()) return std::get<Rational>(value_).convert_to<double>();
    return std::get<double>(value_);
  }

  /// Same numeric value forced onto the float path.
  Scalar to_float() const { return real(to_double()); }

  /// Exact zero for rationals; |v| <= tol for doubles.
  bool is_zero(double tol = kDefaultTolerance) const {
    if (is_exact()) return std::get<Rational>(value_) == 0;
    return std::abs(std::get<double>(value_)) <= tol;
  }

  int sign() const {
    if (is_exact()) {
      const auto& r = std::get<Rational>(value_);
      return r > 0 ? 1 : (r < 0 ? -1 : 0);
    }
    double d = std::get<double>(value_);
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
  }

  Scalar operator-() const {
    if (is_exact()) return Scalar(Rational(-std::get<Rational>(value_)));
    return real(-std::get<double>(value_));
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact())
      return Scalar(Rational(a.rational() + b.rational()));
    return real(a.to_double() + b.to_double());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact())
      return Scalar(Rational(a.rational() - b.rational()));
    return real(a.to_double() - b.to_double());
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact())
      return Scalar(Rational(a.rational() * b.rational()));
    return real(a.to_double() * b.to_double());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_exact() ? b.rational() == 0 : b.to_double() == 0.0)
      throw std::domain_error("division by zero scalar");
    if (a.is_exact() && b.is_exact())
      return Scalar(Rational(a.rational() / b.rational()));
    return real(a.to_double() / b.to_double());
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Value equality: rational equality when both are exact, otherwise the
  /// doubles are compared bit-for-bit. Use approx_equal for tolerances.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
    return a.to_double() == b.to_double();
  }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return a.rational() < b.rational();
    return a.to_double() < b.to_double();
  }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  std::string to_string() const {
    if (is_exact()) return std::get<Rational>(value_).str();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value_));
    return buf;
  }

 private:
  std::variant<Rational, double> value_;
};

inline Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

inline Scalar square(const Scalar& x) { return x * x; }

inline bool approx_equal(const Scalar& a, const Scalar& b,
                         double tol = kDefaultTolerance) {
  return (a - b).is_zero(tol);
}

/// Strict positivity; float values must clear the tolerance.
inline bool is_positive(const Scalar& x, double tol = kDefaultTolerance) {
  if (x.is_exact()) return x.sign() > 0;
  return x.to_double() > tol;
}

namespace detail {

inline bool exact_isqrt(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

}  // namespace detail

/// Square root; exact when the argument is the square of a rational.
inline Scalar sqrt(const Scalar& x) {
  if (x.sign() < 0) throw std::domain_error("square root of negative scalar");
  if (x.is_exact()) {
    const Rational& r = x.rational();
    BigInt num_root, den_root;
    if (detail::exact_isqrt(boost::multiprecision::numerator(r), num_root) &&
        detail::exact_isqrt(boost::multiprecision::denominator(r), den_root))
      return Scalar(Rational(num_root, den_root));
  }
  return Scalar::real(std::sqrt(x.to_double()));
}

namespace detail {

// Recursive-descent parser for scalar literals such as "1/3", "-0.25",
// "3*sqrt(5)/5" or "sqrt(2/9)". Decimal literals are read exactly.
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error("cannot parse scalar '" + std::string(text_) + "': " + why);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (eat('*')) v = v * factor();
      else if (eat('/')) v = v / factor();
      else return v;
    }
  }
  Scalar factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    skip_ws();
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      Scalar v = expr();
      if (!eat(')')) fail("missing ')'");
      return natsu2::sqrt(v);
    }
    return number();
  }
  Scalar number() {
    skip_ws();
    std::size_t start = pos_;
    BigInt mantissa = 0;
    int scale = 0;
    bool digits = false, dot = false;
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        mantissa = mantissa * 10 + (ch - '0');
        if (dot) --scale;
        digits = true;
      } else if (ch == '.' && !dot) {
        dot = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (!digits) fail("expected a number at offset " + std::to_string(start));
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      int sign = 1;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
        sign = text_[pos_++] == '-' ? -1 : 1;
      int e = 0;
      bool edigits = false;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_++] - '0');
        edigits = true;
      }
      if (!edigits) fail("bad exponent");
      scale += sign * e;
    }
    Rational r(mantissa);
    BigInt ten = 10;
    if (scale > 0) r *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(scale)));
    if (scale < 0) r /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-scale)));
    return Scalar(r);
  }
};

}  // namespace detail

inline Scalar parse_scalar(std::string_view text) {
  return detail::ScalarParser(text).parse();
}

}  // namespace natsu2
