#pragma once

#include <utility>

#include "equichord/rational_function.hpp"

namespace equichord {

/// Element even(z) + w * odd(z) of Q(z)[w] / (w^2 - z).
struct QuadExt {
  RationalFunction even;
  RationalFunction odd;

  bool is_rational_in_z() const { return odd.is_zero(); }
  friend bool operator==(const QuadExt&, const QuadExt&) = default;
};

/// Marker for the substitution target c = 1 - c.
struct Reflection {};
/// Marker for the substitution target c = (1 + w)/2 with w^2 = z.
struct HalfPlusHalfRoot {};

namespace detail {

/// 2^deg(p) * p((1 + w)/2) as (even, odd) integer polynomials in z.
inline std::pair<ZPoly, ZPoly> scaled_at_half_plus_half_root(const ZPoly& p) {
  if (p.is_zero()) return {ZPoly(), ZPoly()};
  const ZPoly z = ZPoly::variable();
  ZPoly e = ZPoly::constant(p.lc());
  ZPoly o;
  BigInt two_pow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    // (e + w o)(1 + w) = (e + z o) + w (e + o)
    ZPoly ne = e + z * o;
    ZPoly no = e + o;
    two_pow *= 2;
    ne += ZPoly::constant(p[i] * two_pow);
    e = std::move(ne);
    o = std::move(no);
  }
  return {e, o};
}

}  // namespace detail

inline RationalFunction substitute(const RationalFunction& r, Reflection) { return r.reflect(); }

/// r((1 + w)/2) rationalized: multiply through by the conjugate of the
/// denominator so the result is even(z) + w odd(z).
inline QuadExt substitute(const RationalFunction& r, HalfPlusHalfRoot) {
  if (r.is_zero()) return {};
  auto [en, on] = detail::scaled_at_half_plus_half_root(r.num());
  auto [ed, od] = detail::scaled_at_half_plus_half_root(r.den());
  const ZPoly z = ZPoly::variable();
  ZPoly norm = ed * ed - z * od * od;
  if (norm.is_zero()) throw PoleError("substitution c = (1+w)/2 makes the denominator vanish");
  // Undo the 2^deg scalings: r = 2^(dd - dn) * (en + w on)/(ed + w od).
  int shift = r.den().degree() - r.num().degree();
  BigInt up = 1;
  mpz_mul_2exp(up.get_mpz_t(), up.get_mpz_t(), static_cast<mp_bitcnt_t>(shift > 0 ? shift : -shift));
  ZPoly even_num = en * ed - z * on * od;
  ZPoly odd_num = on * ed - en * od;
  ZPoly den = norm;
  if (shift > 0) {
    even_num *= up;
    odd_num *= up;
  } else if (shift < 0) {
    den *= up;
  }
  QuadExt out;
  out.even = even_num.is_zero() ? RationalFunction() : RationalFunction(even_num, den);
  out.odd = odd_num.is_zero() ? RationalFunction() : RationalFunction(odd_num, den);
  return out;
}

}  // namespace equichord
