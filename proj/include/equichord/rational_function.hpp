#pragma once

#include <cassert>
#include <ostream>
#include <string>
#include <utility>

#include "equichord/bigrat.hpp"
#include "equichord/poly.hpp"
#include "equichord/poly_gcd.hpp"

namespace equichord {

/// Element of Q(c) kept in canonical form.
///
/// Canonical form: numerator and denominator have integer coefficients with
/// no common polynomial factor, the two share no common integer content, and
/// the denominator's leading coefficient is positive. Zero is 0/1. With this
/// normalization equal functions have identical representations, so
/// equality is structural.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(ZPoly::constant(1)) {}
  RationalFunction(long v) : num_(ZPoly::constant(BigInt(v))), den_(ZPoly::constant(1)) {}  // NOLINT
  RationalFunction(int v) : RationalFunction(static_cast<long>(v)) {}  // NOLINT
  RationalFunction(const BigRat& q)  // NOLINT(google-explicit-constructor)
      : num_(ZPoly::constant(q.num())), den_(ZPoly::constant(q.den())) {}
  explicit RationalFunction(ZPoly num) : num_(std::move(num)), den_(ZPoly::constant(1)) {
    normalize_content();
  }
  RationalFunction(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PoleError("rational function with zero denominator");
    ZPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
    normalize_content();
  }
  /// From polynomials over Q.
  RationalFunction(const QPoly& num, const QPoly& den) {
    auto [zn, sn] = clear_denominators(num);
    auto [zd, sd] = clear_denominators(den);
    *this = RationalFunction(zn * sd, zd * sn);
  }

  /// The indeterminate c.
  static RationalFunction variable() { return RationalFunction(ZPoly::variable()); }

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  QPoly num_q() const { return to_qpoly(num_); }
  QPoly den_q() const { return to_qpoly(den_); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// The value when is_constant().
  BigRat constant_value() const {
    if (!is_constant()) throw UsageError("rational function is not a constant");
    return num_.is_zero() ? BigRat(0) : BigRat(num_.lc(), den_.lc());
  }

  BigRat evaluate(const BigRat& c) const {
    BigRat d = den_.evaluate(c);
    if (d.is_zero()) throw PoleError("rational function evaluated at a pole");
    return num_.evaluate(c) / d;
  }

  /// r(1 - c).
  RationalFunction reflect() const { return RationalFunction(equichord::reflect(num_), equichord::reflect(den_)); }

  /// Canonicality check used by tests and debug assertions.
  bool is_canonical() const {
    if (den_.is_zero() || den_.lc() <= 0) return false;
    if (num_.is_zero()) return den_.is_one();
    if (gcd(num_, den_).degree() > 0) return false;
    BigInt g = content(num_);
    BigInt gd = content(den_);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gd.get_mpz_t());
    return g == 1;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return reduced_by(a.num_ + b.num_, a.den_, a.den_);
    if (a.is_polynomial() && b.is_polynomial())
      return RationalFunction::raw(a.num_ * b.den_.lc() + b.num_ * a.den_.lc(),
                                   ZPoly::constant(a.den_.lc() * b.den_.lc()));
    ZPoly g = gcd(a.den_, b.den_);
    if (g.degree() == 0)
      return RationalFunction::raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    ZPoly ad = divide_exact(a.den_, g);
    ZPoly bd = divide_exact(b.den_, g);
    ZPoly n = a.num_ * bd + b.num_ * ad;
    // Any common factor of n with the denominator divides g.
    return reduced_by(std::move(n), ad * b.den_, g);
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    if (a.is_constant()) return scale(b, a);
    if (b.is_constant()) return scale(a, b);
    ZPoly g1 = gcd(a.num_, b.den_);
    ZPoly g2 = gcd(b.num_, a.den_);
    ZPoly an = g1.degree() > 0 ? divide_exact(a.num_, g1) : a.num_;
    ZPoly bd = g1.degree() > 0 ? divide_exact(b.den_, g1) : b.den_;
    ZPoly bn = g2.degree() > 0 ? divide_exact(b.num_, g2) : b.num_;
    ZPoly ad = g2.degree() > 0 ? divide_exact(a.den_, g2) : a.den_;
    return RationalFunction::raw(an * bn, ad * bd);
  }

  RationalFunction inverse() const {
    if (is_zero()) throw PoleError("inverse of the zero rational function");
    return RationalFunction::raw(den_, num_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Cross-multiplication equality against an arbitrary (possibly
  /// unreduced) fraction p/q over Q.
  bool equals_fraction(const QPoly& p, const QPoly& q) const {
    if (q.is_zero()) throw PoleError("equals_fraction: zero denominator");
    return num_q() * q == den_q() * p;
  }

  /// "num/den" with both in conventional form.
  std::string pretty(const std::string& var = "c") const {
    if (den_.is_one()) return num_.pretty(var);
    return "(" + num_.pretty(var) + ")/(" + den_.pretty(var) + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.pretty(); }

 private:
  struct RawTag {};
  RationalFunction(RawTag, ZPoly n, ZPoly d) : num_(std::move(n)), den_(std::move(d)) {}

  /// Numerator and denominator already coprime over Q[c]; only content and
  /// sign still need normalizing.
  static RationalFunction raw(ZPoly n, ZPoly d) {
    RationalFunction r(RawTag{}, std::move(n), std::move(d));
    r.normalize_content();
    return r;
  }

  /// n/d where every common factor of n and d divides `suspect`.
  static RationalFunction reduced_by(ZPoly n, ZPoly d, const ZPoly& suspect) {
    if (n.is_zero()) return RationalFunction();
    if (suspect.degree() > 0) {
      ZPoly h = gcd(n, suspect);
      if (h.degree() > 0) {
        n = divide_exact(n, h);
        d = divide_exact(d, h);
      }
    }
    return raw(std::move(n), std::move(d));
  }

  static RationalFunction scale(const RationalFunction& r, const RationalFunction& k) {
    // k is a nonzero constant n/d; r is canonical so only content changes.
    return raw(r.num_ * k.num_.lc(), r.den_ * k.den_.lc());
  }

  void normalize_content() {
    if (num_.is_zero()) {
      den_ = ZPoly::constant(1);
      return;
    }
    BigInt g = content(num_);
    BigInt gd = content(den_);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gd.get_mpz_t());
    if (den_.lc() < 0) g = -g;
    if (g != 1) {
      num_ = div_exact(num_, g);
      den_ = div_exact(den_, g);
    }
  }

  ZPoly num_;
  ZPoly den_;
};

inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }

}  // namespace equichord
