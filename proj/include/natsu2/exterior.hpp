#pragma once

// Sparse exterior algebra over an ordered coframe e^0..e^{dim-1}, dim in {5,6}.
// In six dimensions e^5 plays the role of dt.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "natsu2/errors.hpp"
#include "natsu2/scalar.hpp"

namespace natsu2 {

inline constexpr int kMaxDim = 6;

/// Strictly increasing tuple of coframe indices, stored as a bit mask.
class MultiIndex {
 public:
  MultiIndex() = default;

  MultiIndex(std::initializer_list<int> indices) {
    int last = -1;
    for (int i : indices) {
      if (i < 0 || i >= kMaxDim) throw ShapeMismatch("coframe index out of range");
      if (i <= last) throw ShapeMismatch("multi-index must be strictly increasing");
      mask_ |= static_cast<std::uint8_t>(1u << i);
      last = i;
    }
  }

  static MultiIndex from_mask(std::uint8_t mask) {
    MultiIndex m;
    m.mask_ = mask;
    return m;
  }

  std::uint8_t mask() const { return mask_; }
  int grade() const { return std::popcount(static_cast<unsigned>(mask_)); }
  bool contains(int i) const { return (mask_ >> i) & 1u; }
  int max_index() const { return mask_ == 0 ? -1 : 7 - std::countl_zero(mask_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < kMaxDim; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  /// Lexicographic order on the index tuples.
  friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
    auto ia = a.indices(), ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
  }
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.mask_ == b.mask_;
  }

  std::string to_string() const {
    std::string s = "e^";
    if (mask_ == 0) return "1";
    for (int i : indices()) s += static_cast<char>('0' + i);
    return s;
  }

 private:
  std::uint8_t mask_ = 0;
};

/// Sign of e^a ^ e^b relative to e^{a|b}; zero when the masks overlap.
inline int wedge_sign(std::uint8_t a, std::uint8_t b) {
  if (a & b) return 0;
  int swaps = 0;
  for (int i = 0; i < kMaxDim; ++i) {
    if (!((a >> i) & 1u)) continue;
    // count indices of b below i
    swaps += std::popcount(static_cast<unsigned>(b & ((1u << i) - 1u)));
  }
  return (swaps & 1) ? -1 : 1;
}

/// Tangent vector in the dual frame e_0..e_{dim-1}.
struct FrameVector {
  std::vector<Scalar> components;

  int dim() const { return static_cast<int>(components.size()); }
  const Scalar& operator[](int i) const { return components[static_cast<std::size_t>(i)]; }

  static FrameVector basis(int dim, int i) {
    FrameVector v{std::vector<Scalar>(static_cast<std::size_t>(dim))};
    v.components[static_cast<std::size_t>(i)] = 1;
    return v;
  }
};

class KForm {
 public:
  using Terms = std::map<MultiIndex, Scalar>;

  KForm(int dim, int grade) : dim_(dim), grade_(grade) { check_shape(); }

  /// Builds the canonical form: zero coefficients (|c| <= prune for floats)
  /// are dropped.
  KForm(int dim, int grade, const Terms& terms, double prune = kDefaultTolerance)
      : dim_(dim), grade_(grade) {
    check_shape();
    for (const auto& [idx, c] : terms) add_term(idx, c, prune);
  }

  static KForm basis(int dim, std::initializer_list<int> indices, const Scalar& c = 1) {
    MultiIndex m(indices);
    KForm f(dim, m.grade());
    f.add_term(m, c, 0.0);
    return f;
  }
  static KForm constant(int dim, const Scalar& c) {
    KForm f(dim, 0);
    f.add_term(MultiIndex{}, c, 0.0);
    return f;
  }

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& [idx, c] : terms_) m = std::max(m, std::abs(c.to_double()));
    return m;
  }

  /// Every coefficient moved to the float path.
  KForm to_float() const {
    KForm out(dim_, grade_);
    for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, c.to_float());
    return out;
  }

  KForm operator-() const { return *this * Scalar(-1); }

  friend KForm operator*(const KForm& f, const Scalar& s) {
    KForm out(f.dim_, f.grade_);
    for (const auto& [idx, c] : f.terms_) out.add_term(idx, c * s, kDefaultTolerance);
    return out;
  }
  friend KForm operator*(const Scalar& s, const KForm& f) { return f * s; }

  friend KForm operator+(const KForm& a, const KForm& b) {
    a.require_compatible(b);
    KForm out(a.dim_, std::max(a.grade_, b.grade_));
    if (a.is_zero()) out.grade_ = b.grade_;
    if (b.is_zero()) out.grade_ = a.grade_;
    out.terms_ = a.terms_;
    for (const auto& [idx, c] : b.terms_) out.add_term(idx, c, kDefaultTolerance);
    return out;
  }
  friend KForm operator-(const KForm& a, const KForm& b) { return a + (-b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [idx, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")" + idx.to_string();
    }
    return s;
  }

 private:
  int dim_;
  int grade_;
  Terms terms_;

  void check_shape() const {
    if (dim_ != 5 && dim_ != 6) throw ShapeMismatch("coframe dimension must be 5 or 6");
    if (grade_ < 0 || grade_ > dim_) throw ShapeMismatch("grade out of range");
  }

  void add_term(const MultiIndex& idx, const Scalar& c, double prune) {
    if (idx.grade() != grade_ || idx.max_index() >= dim_)
      throw ShapeMismatch("term " + idx.to_string() + " does not fit grade/dim");
    auto it = terms_.find(idx);
    Scalar sum = it == terms_.end() ? c : it->second + c;
    bool zero = sum.is_exact() ? sum.sign() == 0 : std::abs(sum.to_double()) <= prune;
    if (zero) {
      if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
      terms_.emplace(idx, sum);
    } else {
      it->second = sum;
    }
  }

  // Zero forms are accepted at any grade.
  void require_compatible(const KForm& o) const {
    if (dim_ != o.dim_) throw ShapeMismatch("dimension mismatch");
    if (grade_ != o.grade_ && !is_zero() && !o.is_zero())
      throw ShapeMismatch("grade mismatch");
  }

  friend KForm wedge(const KForm& a, const KForm& b);
  friend KForm contract(const FrameVector& x, const KForm& w);
};

inline KForm linear_combine(std::span<const Scalar> coeffs, std::span<const KForm> forms) {
  if (coeffs.size() != forms.size()) throw ShapeMismatch("coefficient/form count mismatch");
  if (forms.empty()) throw ShapeMismatch("empty linear combination");
  KForm out(forms[0].dim(), forms[0].grade());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].dim() != out.dim() || forms[i].grade() != out.grade())
      throw ShapeMismatch("linear_combine: grade/dim mismatch");
    out = out + coeffs[i] * forms[i];
  }
  return out;
}

inline KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim_ != b.dim_) throw ShapeMismatch("wedge: dimension mismatch");
  int grade = a.grade_ + b.grade_;
  if (grade > a.dim_) return KForm(a.dim_, a.dim_);
  KForm out(a.dim_, grade);
  for (const auto& [ia, ca] : a.terms_) {
    for (const auto& [ib, cb] : b.terms_) {
      int sign = wedge_sign(ia.mask(), ib.mask());
      if (sign == 0) continue;
      auto m = MultiIndex::from_mask(static_cast<std::uint8_t>(ia.mask() | ib.mask()));
      out.add_term(m, sign > 0 ? ca * cb : -(ca * cb), kDefaultTolerance);
    }
  }
  return out;
}

/// Interior product x _| w.
inline KForm contract(const FrameVector& x, const KForm& w) {
  if (x.dim() != w.dim_) throw ShapeMismatch("contract: dimension mismatch");
  if (w.grade_ == 0) throw ShapeMismatch("contract: cannot contract a 0-form");
  KForm out(w.dim_, w.grade_ - 1);
  for (const auto& [idx, c] : w.terms_) {
    int position = 0;
    for (int k : idx.indices()) {
      if (!x[k].is_zero(0.0)) {
        auto rest = MultiIndex::from_mask(static_cast<std::uint8_t>(idx.mask() & ~(1u << k)));
        Scalar term = c * x[k];
        out.add_term(rest, (position & 1) ? -term : term, kDefaultTolerance);
      }
      ++position;
    }
  }
  return out;
}

/// Max coefficient difference <= tol; exact equality when all coefficients
/// involved are rational.
inline bool equals(const KForm& a, const KForm& b, double tol = kDefaultTolerance) {
  if (a.dim() != b.dim()) throw ShapeMismatch("equals: dimension mismatch");
  if (a.grade() != b.grade() && !a.is_zero() && !b.is_zero()) return false;
  std::map<MultiIndex, Scalar> diff = a.terms();
  for (const auto& [idx, c] : b.terms()) diff[idx] = diff[idx] - c;
  for (const auto& [idx, c] : diff)
    if (!c.is_zero(tol)) return false;
  return true;
}

/// w(v_1, ..., v_k) with the determinant convention e^{ij}(e_i, e_j) = 1.
inline Scalar evaluate(const KForm& w, std::span<const FrameVector> vectors) {
  if (static_cast<int>(vectors.size()) != w.grade()) throw ShapeMismatch("evaluate: arity");
  // Contract from the left: w(v1..vk) = (v1 _| w)(v2..vk).
  KForm cur = w;
  for (const auto& v : vectors) cur = contract(v, cur);
  return cur.coefficient(MultiIndex{});
}

}  // namespace natsu2
