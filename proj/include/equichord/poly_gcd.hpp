#pragma once

#include <optional>
#include <utility>

#include "equichord/poly.hpp"

namespace equichord {

/// Polynomial gcd over Z[c] by the subresultant remainder sequence.
///
/// The result is primitive with positive leading coefficient, i.e. the gcd
/// over Q[c] up to the usual normalization. gcd(0, 0) = 0.
inline ZPoly gcd_subresultant(ZPoly a, ZPoly b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (b.degree() > a.degree()) std::swap(a, b);
  a = primitive_part(a);
  b = primitive_part(b);
  if (b.degree() == 0) return ZPoly::constant(1);

  BigInt g = 1;
  BigInt h = 1;
  BigInt t;
  for (;;) {
    const int delta = a.degree() - b.degree();
    ZPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return primitive_part(b);
    if (r.degree() == 0) return ZPoly::constant(1);
    a = std::move(b);
    mpz_pow_ui(t.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    t *= g;
    b = div_exact(r, t);
    g = a.lc();
    if (g < 0) g = -g;
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      BigInt num;
      BigInt den;
      mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

namespace detail {

inline BigInt max_norm(const ZPoly& p) {
  BigInt m = 0;
  for (const auto& v : p.coeffs()) {
    if (mpz_cmpabs(v.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(v);
  }
  return m;
}

inline BigInt eval_at(const ZPoly& p, const BigInt& x) {
  BigInt acc = 0;
  const auto& cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

/// Reads the balanced base-x digits of an integer back as a polynomial.
inline ZPoly interpolate_digits(BigInt h, const BigInt& x) {
  std::vector<BigInt> cs;
  BigInt half = x / 2;
  BigInt d;
  while (sgn(h) != 0) {
    mpz_fdiv_r(d.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (d > half) d -= x;
    cs.push_back(d);
    h -= d;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
  }
  return ZPoly(std::move(cs));
}

}  // namespace detail

/// Heuristic gcd: evaluate at a large integer, take the integer gcd and read
/// the digits back. The evaluation point exceeds 2*min(|a|,|b|) + 1, so an
/// interpolant that divides both inputs is the gcd. Returns nothing when the
/// attempts run out.
inline std::optional<ZPoly> gcd_heuristic(const ZPoly& a0, const ZPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return std::nullopt;
  ZPoly a = primitive_part(a0);
  ZPoly b = primitive_part(b0);
  if (a.degree() == 0 || b.degree() == 0) return ZPoly::constant(1);

  BigInt na = detail::max_norm(a);
  BigInt nb = detail::max_norm(b);
  BigInt x = 2 * (na < nb ? na : nb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    BigInt fa = detail::eval_at(a, x);
    BigInt fb = detail::eval_at(b, x);
    if (sgn(fa) != 0 && sgn(fb) != 0) {
      BigInt h;
      mpz_gcd(h.get_mpz_t(), fa.get_mpz_t(), fb.get_mpz_t());
      ZPoly cand = primitive_part(detail::interpolate_digits(h, x));
      if (!cand.is_zero() && cand.degree() <= a.degree() && cand.degree() <= b.degree() &&
          try_divide(a, cand) && try_divide(b, cand))
        return cand;
    }
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
    x = 73794 * x * r / 27011;
  }
  return std::nullopt;
}

/// gcd over Q[c], normalized as primitive with positive leading coefficient.
inline ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.degree() == 0 || b.degree() == 0) return ZPoly::constant(1);
  if (auto g = gcd_heuristic(a, b)) return *std::move(g);
  return gcd_subresultant(a, b);
}

/// p = unit * prod f_i^i with each f_i primitive, squarefree, lc > 0 and
/// pairwise coprime (Yun). `unit` carries the content and sign of p.
struct SquareFreeDecomposition {
  BigInt unit;
  std::vector<std::pair<ZPoly, int>> factors;  // nonconstant f_i only
};

inline SquareFreeDecomposition square_free(const ZPoly& p) {
  if (p.is_zero()) throw UsageError("square_free: zero polynomial");
  SquareFreeDecomposition out;
  out.unit = content(p);
  if (sgn(p.lc()) < 0) out.unit = -out.unit;
  if (p.degree() == 0) return out;
  const ZPoly f = primitive_part(p);
  const ZPoly df = f.derivative();
  const ZPoly a0 = gcd(f, df);
  ZPoly b = divide_exact(f, a0);
  ZPoly d = divide_exact(df, a0) - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    ZPoly a = gcd(b, d);
    if (a.degree() > 0) out.factors.emplace_back(a, i);
    b = divide_exact(b, a);
    d = divide_exact(d, a) - b.derivative();
  }
  return out;
}

}  // namespace equichord
