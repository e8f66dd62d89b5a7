#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equichord/bigrat.hpp"
#include "equichord/errors.hpp"
#include "equichord/poly.hpp"

namespace equichord {

/// A rational number or one of the two infinities.
class ExtendedRat {
 public:
  static ExtendedRat neg_inf() { return ExtendedRat(-1); }
  static ExtendedRat pos_inf() { return ExtendedRat(1); }
  ExtendedRat(const BigRat& v) : inf_(0), v_(v) {}  // NOLINT(google-explicit-constructor)
  ExtendedRat(long v) : inf_(0), v_(v) {}  // NOLINT

  bool is_finite() const { return inf_ == 0; }
  int infinity_sign() const { return inf_; }
  const BigRat& value() const {
    if (inf_ != 0) throw UsageError("infinite endpoint has no value");
    return v_;
  }
  std::string to_string() const { return inf_ < 0 ? "-inf" : (inf_ > 0 ? "+inf" : v_.to_string()); }

  friend bool operator<(const ExtendedRat& a, const ExtendedRat& b) {
    if (a.inf_ < 0) return b.inf_ >= 0;
    if (a.inf_ > 0) return false;
    if (b.inf_ != 0) return b.inf_ > 0;
    return a.v_ < b.v_;
  }

 private:
  explicit ExtendedRat(int inf) : inf_(inf) {}
  int inf_;
  BigRat v_;
};

/// p, p', then negated remainders until the last nonzero one.
inline std::vector<QPoly> sturm_sequence(const QPoly& p) {
  if (p.is_zero()) throw UsageError("sturm_sequence: zero polynomial");
  std::vector<QPoly> seq{p};
  QPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  for (;;) {
    QPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

namespace detail {

inline int sign_at(const QPoly& p, const ExtendedRat& x) {
  if (p.is_zero()) return 0;
  if (x.is_finite()) return p.evaluate(x.value()).sign();
  int s = p.lc().sign();
  if (x.infinity_sign() < 0 && p.degree() % 2 == 1) s = -s;
  return s;
}

inline int sign_variations(const std::vector<QPoly>& seq, const ExtendedRat& x) {
  int changes = 0;
  int prev = 0;
  for (const auto& q : seq) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace detail

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Endpoints must not be roots.
inline int count_real_roots(const QPoly& p, const ExtendedRat& lo, const ExtendedRat& hi) {
  if (p.is_zero()) throw UsageError("count_real_roots: zero polynomial");
  if (!(lo < hi)) throw UsageError("count_real_roots: need lo < hi, got " + lo.to_string() + ", " + hi.to_string());
  if (lo.is_finite() && p.evaluate(lo.value()).is_zero())
    throw UsageError("count_real_roots: lower endpoint " + lo.to_string() + " is a root");
  if (hi.is_finite() && p.evaluate(hi.value()).is_zero())
    throw UsageError("count_real_roots: upper endpoint " + hi.to_string() + " is a root");
  const auto seq = sturm_sequence(p);
  return detail::sign_variations(seq, lo) - detail::sign_variations(seq, hi);
}

/// Lower and upper rational bounds of an irrational endpoint.
struct RationalBracket {
  BigRat lo;
  BigRat hi;
};

/// Brackets of both endpoints of an interval whose ends are irrational,
/// tightened as `level` grows.
using EndpointBrackets = std::function<std::pair<RationalBracket, RationalBracket>(int level)>;

struct StableRootCount {
  int count = 0;
  bool stabilized = false;
  int level = 0;
  int inner_count = 0;
  int outer_count = 0;
  RationalBracket inner;  // (left.hi, right.lo)
  RationalBracket outer;  // (left.lo, right.hi)
};

/// Counts roots in an interval with irrational ends by comparing the counts
/// on an inner and an outer rational interval; the true count lies between
/// them, so agreement pins it. Levels where a bracket end hits a root are
/// skipped.
inline StableRootCount count_real_roots_stable(const QPoly& p, const EndpointBrackets& brackets, int max_level = 64) {
  StableRootCount out;
  for (int level = 1; level <= max_level; ++level) {
    auto [left, right] = brackets(level);
    try {
      out.inner_count = count_real_roots(p, left.hi, right.lo);
      out.outer_count = count_real_roots(p, left.lo, right.hi);
    } catch (const UsageError&) {
      continue;
    }
    out.level = level;
    out.inner = {left.hi, right.lo};
    out.outer = {left.lo, right.hi};
    if (out.inner_count == out.outer_count) {
      out.count = out.inner_count;
      out.stabilized = true;
      return out;
    }
  }
  out.count = out.outer_count;
  return out;
}

/// Rational bracket of sqrt(n) of width at most 2^-bits, by bisection.
inline RationalBracket sqrt_bracket(const BigRat& n, int bits) {
  if (n.sign() < 0) throw UsageError("sqrt_bracket: negative radicand");
  BigRat lo(0);
  BigRat hi = n > BigRat(1) ? n : BigRat(1);
  BigInt w = 1;
  mpz_mul_2exp(w.get_mpz_t(), w.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  const BigRat width(BigInt(1), w);
  while (hi - lo > width) {
    BigRat mid = (lo + hi) / BigRat(2);
    if (mid * mid <= n)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

/// Divides out every factor (c - r).
inline QPoly deflate(QPoly p, const BigRat& r) {
  const QPoly lin({-r, BigRat(1)});
  while (!p.is_zero() && p.degree() > 0 && p.evaluate(r).is_zero()) p = divmod(p, lin).first;
  return p;
}

}  // namespace equichord
