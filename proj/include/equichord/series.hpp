#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "equichord/errors.hpp"

namespace equichord {

/// Power series in x modulo x^(order+1).
///
/// C is any exact field type (BigRat, RationalFunction). No operation ever
/// reads or writes a coefficient above `order`.
template <class C>
class TruncatedSeries {
 public:
  using coeff_type = C;

  explicit TruncatedSeries(int order = 0) : c_(check_order(order) + 1, C(0)) {}
  TruncatedSeries(int order, std::vector<C> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(check_order(order)) + 1, C(0));
  }

  static TruncatedSeries constant(int order, const C& v) {
    TruncatedSeries s(order);
    s.c_[0] = v;
    return s;
  }
  /// The series x (or 0 at order 0).
  static TruncatedSeries x(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = C(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const C& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  C& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<C>& coeffs() const { return c_; }

  /// Same series cut at a lower order.
  TruncatedSeries truncate(int order) const {
    if (order > this->order()) throw UsageError("truncate: cannot raise the order");
    return TruncatedSeries(order, std::vector<C>(c_.begin(), c_.begin() + order + 1));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_order(o, "addition");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_order(o, "subtraction");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  TruncatedSeries& operator*=(const C& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const C& s) { return a *= s; }
  friend TruncatedSeries operator*(const C& s, TruncatedSeries a) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  /// Multiplication by x^k, dropping what falls past the order.
  TruncatedSeries shifted(int k) const {
    TruncatedSeries r(order());
    for (int i = order(); i >= k; --i) r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i - k)];
    return r;
  }

  bool is_zero_through(int k) const {
    for (int i = 0; i <= k && i <= order(); ++i)
      if (!is_zero(c_[static_cast<std::size_t>(i)])) return false;
    return true;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool any = false;
    for (int k = 0; k <= order(); ++k) {
      if (is_zero(c_[static_cast<std::size_t>(k)])) continue;
      os << (any ? " + " : "") << '(' << c_[static_cast<std::size_t>(k)] << ")*x^" << k;
      any = true;
    }
    if (!any) os << '0';
    os << " + O(x^" << order() + 1 << ')';
    return os.str();
  }

  // Kernel operations need the raw storage.
  template <class D>
  friend TruncatedSeries<D> series_mul(const TruncatedSeries<D>&, const TruncatedSeries<D>&);

 private:
  static int check_order(int order) {
    if (order < 0) throw UsageError("series order must be non-negative");
    return order;
  }
  void require_same_order(const TruncatedSeries& o, const char* what) const {
    if (o.order() != order()) throw UsageError(std::string("series ") + what + ": order mismatch");
  }

  std::vector<C> c_;
};

/// Cauchy product truncated at the common order.
template <class C>
TruncatedSeries<C> series_mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
  if (a.order() != b.order()) throw UsageError("series_mul: order mismatch");
  const int n = a.order();
  TruncatedSeries<C> r(n);
  for (int i = 0; i <= n; ++i) {
    const C& ai = a.c_[static_cast<std::size_t>(i)];
    if (is_zero(ai)) continue;
    for (int j = 0; i + j <= n; ++j) {
      const C& bj = b.c_[static_cast<std::size_t>(j)];
      if (is_zero(bj)) continue;
      r.c_[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return r;
}

/// Multiplicative inverse through the order; needs a nonzero constant term.
template <class C>
TruncatedSeries<C> series_recip(const TruncatedSeries<C>& a) {
  if (is_zero(a[0])) throw SingularSeriesError("series_recip: zero constant term");
  const int n = a.order();
  TruncatedSeries<C> r(n);
  const C inv0 = C(1) / a[0];
  r[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    C acc(0);
    for (int i = 1; i <= k; ++i) {
      if (is_zero(a[i]) || is_zero(r[k - i])) continue;
      acc += a[i] * r[k - i];
    }
    r[k] = -(acc * inv0);
  }
  return r;
}

/// Square root on the branch with constant term root0.
template <class C>
TruncatedSeries<C> series_sqrt(const TruncatedSeries<C>& a, const C& root0) {
  if (!(root0 * root0 == a[0])) throw BranchError("series_sqrt: root0^2 differs from the constant term");
  const int n = a.order();
  TruncatedSeries<C> s(n);
  s[0] = root0;
  if (n == 0) return s;
  if (is_zero(root0)) {
    // Only the zero series has a square root with zero constant term that
    // this recurrence can determine.
    if (a.is_zero_through(n)) return s;
    throw BranchError("series_sqrt: zero branch for a series that is not identically zero");
  }
  const C half_inv = C(1) / (C(2) * root0);
  for (int k = 1; k <= n; ++k) {
    C acc = a[k];
    for (int i = 1; i < k; ++i) {
      if (is_zero(s[i]) || is_zero(s[k - i])) continue;
      acc -= s[i] * s[k - i];
    }
    s[k] = acc * half_inv;
  }
  return s;
}

/// outer(inner(x)) by Horner evaluation in the series ring.
template <class C>
TruncatedSeries<C> series_compose(const TruncatedSeries<C>& outer, const TruncatedSeries<C>& inner) {
  if (outer.order() != inner.order()) throw UsageError("series_compose: order mismatch");
  if (!is_zero(inner[0])) throw CompositionDomainError("series_compose: inner series has a nonzero constant term");
  const int n = outer.order();
  TruncatedSeries<C> acc(n);
  for (int k = n; k >= 0; --k) {
    acc = series_mul(acc, inner);
    acc[0] += outer[k];
  }
  return acc;
}

}  // namespace equichord
