#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "equichord/bigrat.hpp"
#include "equichord/errors.hpp"

namespace equichord {

/// Dense univariate polynomial; coefficient i multiplies c^i.
///
/// The zero polynomial has no coefficients and degree -1. Every other value
/// keeps a nonzero leading coefficient.
template <class C>
class Poly {
 public:
  using coeff_type = C;

  Poly() = default;
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const C& v) { return Poly(std::vector<C>{v}); }
  static Poly monomial(const C& v, int deg) {
    std::vector<C> cs(static_cast<std::size_t>(deg) + 1, C(0));
    cs.back() = v;
    return Poly(std::move(cs));
  }
  /// The indeterminate itself.
  static Poly variable() { return monomial(C(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == C(1); }
  const C& lc() const { return c_.back(); }
  const std::vector<C>& coeffs() const { return c_; }

  C operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : C(0);
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const C& s) {
    if (::equichord::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Poly operator*(Poly a, const C& s) { return a *= s; }
  friend Poly operator*(const C& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (::equichord::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if constexpr (std::is_same_v<C, BigInt>) {
          mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        } else {
          r[i + j] += a.c_[i] * b.c_[j];
        }
      }
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<C> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * C(static_cast<long>(i));
    return Poly(std::move(r));
  }

  /// Horner evaluation in any ring that accepts the coefficients.
  template <class T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  /// p(q(c)) by Horner in the polynomial ring.
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly::constant(*it);
    return acc;
  }

  /// Coefficients lowest degree first, e.g. "[1, -2, 2]".
  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i];
    os << ']';
    return os.str();
  }

  /// Conventional rendering in the given variable, highest degree first.
  std::string pretty(const std::string& var = "c") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const C& v = c_[static_cast<std::size_t>(i)];
      if (::equichord::is_zero(v)) continue;
      bool neg = v < C(0);
      C mag = neg ? C(-v) : v;
      if (first) {
        if (neg) os << '-';
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool unit = mag == C(1);
      if (!unit || i == 0) os << mag;
      if (i >= 1) os << (unit ? "" : "*") << var;
      if (i >= 2) os << '^' << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && ::equichord::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

using ZPoly = Poly<BigInt>;
using QPoly = Poly<BigRat>;

// ---------------------------------------------------------------------------
// Integer-coefficient helpers

/// Non-negative gcd of all coefficients; 0 for the zero polynomial.
inline BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& v : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divides every coefficient by an exact divisor.
inline ZPoly div_exact(const ZPoly& p, const BigInt& d) {
  std::vector<BigInt> r(p.coeffs().begin(), p.coeffs().end());
  for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return ZPoly(std::move(r));
}

/// Primitive part with positive leading coefficient.
inline ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.lc() < 0) g = -g;
  return g == 1 ? p : div_exact(p, g);
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
inline ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw UsageError("pseudo_remainder: zero divisor");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  const auto& bc = b.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.lc();
  int e = a.degree() - db + 1;
  BigInt q;
  for (int i = a.degree(); i >= db; --i) {
    q = r[static_cast<std::size_t>(i)];
    r[static_cast<std::size_t>(i)] = 0;
    for (int k = 0; k < i; ++k) r[static_cast<std::size_t>(k)] *= lb;
    for (int j = 0; j < db; ++j)
      mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), q.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
    --e;
  }
  // Remaining multiplier keeps the classical normalization.
  BigInt f;
  mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
  r.resize(static_cast<std::size_t>(db));
  for (auto& v : r) v *= f;
  return ZPoly(std::move(r));
}

/// Exact quotient a / b over Z[c], or nothing when b does not divide a.
inline std::optional<ZPoly> try_divide(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw UsageError("try_divide: zero divisor");
  if (a.is_zero()) return ZPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1));
  BigInt rem;
  for (int i = a.degree(); i >= db; --i) {
    auto& top = r[static_cast<std::size_t>(i)];
    if (sgn(top) == 0) continue;
    auto& qi = q[static_cast<std::size_t>(i - db)];
    mpz_tdiv_qr(qi.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
    if (sgn(rem) != 0) return std::nullopt;
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<std::size_t>(i - db + j)].get_mpz_t(), qi.get_mpz_t(),
                 bc[static_cast<std::size_t>(j)].get_mpz_t());
  }
  for (int i = 0; i < db; ++i)
    if (sgn(r[static_cast<std::size_t>(i)]) != 0) return std::nullopt;
  return ZPoly(std::move(q));
}

inline ZPoly divide_exact(const ZPoly& a, const ZPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw ConsistencyError("divide_exact: divisor does not divide dividend");
  return *std::move(q);
}

inline QPoly to_qpoly(const ZPoly& p) {
  std::vector<BigRat> r;
  r.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) r.emplace_back(v);
  return QPoly(std::move(r));
}

/// Writes p = zp / scale with zp integral and scale > 0 minimal.
inline std::pair<ZPoly, BigInt> clear_denominators(const QPoly& p) {
  BigInt l = 1;
  for (const auto& v : p.coeffs()) {
    BigInt d = v.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> r;
  r.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    BigInt n = v.num();
    BigInt d = v.den();
    BigInt m = l / d;
    r.emplace_back(n * m);
  }
  return {ZPoly(std::move(r)), l};
}

// ---------------------------------------------------------------------------
// Field-coefficient helpers

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw UsageError("divmod: zero divisor");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<BigRat> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<BigRat> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    BigRat f = r[static_cast<std::size_t>(i)] / b.lc();
    q[static_cast<std::size_t>(i - db)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

/// Substitutes c -> 1 - c.
template <class C>
Poly<C> reflect(const Poly<C>& p) {
  return p.compose(Poly<C>({C(1), C(-1)}));
}

}  // namespace equichord
