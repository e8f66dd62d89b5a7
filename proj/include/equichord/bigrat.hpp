#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>

#include "equichord/errors.hpp"

namespace equichord {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over mpq_class so that generic code never sees GMP
/// expression templates.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigRat(int v) : v_(static_cast<long>(v)) {}  // NOLINT
  BigRat(const BigInt& n) : v_(n) {}  // NOLINT
  BigRat(const BigInt& n, const BigInt& d) {
    if (d == 0) throw PoleError("BigRat: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit BigRat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "p/q" or a plain decimal such as "0.7" exactly.
  static BigRat parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw UsageError("empty rational literal");
    auto dot = s.find('.');
    if (dot != std::string::npos && s.find('/') == std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t frac = s.size() - dot - 1;
      BigInt num;
      if (digits.empty() || digits == "-" || num.set_str(digits, 10) != 0)
        throw UsageError("malformed decimal: " + s);
      BigInt den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
      return BigRat(num, den);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw UsageError("malformed rational: " + s);
    if (q.get_den() == 0) throw UsageError("zero denominator: " + s);
    return BigRat(q);
  }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  /// Correctly rounded when numerator and denominator are exact doubles
  /// (one IEEE division); mpq_get_d truncates otherwise.
  double to_double() const {
    const mpz_class& n = v_.get_num();
    const mpz_class& d = v_.get_den();
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 53 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 53) return n.get_d() / d.get_d();
    return v_.get_d();
  }
  std::string to_string() const { return v_.get_str(10); }

  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o) {
    if (o.is_zero()) throw PoleError("BigRat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
  friend BigRat operator-(const BigRat& a) {
    BigRat r;
    r.v_ = -a.v_;
    return r;
  }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const BigRat& q) {
    return os << q.to_string();
  }

 private:
  mpq_class v_;
};

inline bool is_zero(const BigRat& q) { return q.is_zero(); }
inline bool is_zero(const BigInt& z) { return sgn(z) == 0; }

inline BigRat abs(const BigRat& q) { return q.sign() < 0 ? -q : q; }

inline BigRat pow(const BigRat& base, unsigned e) {
  BigRat r(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace equichord
