#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "equichord/bigrat.hpp"
#include "equichord/poly.hpp"
#include "equichord/rational_function.hpp"

namespace equichord::testing {

/// Deterministic generators for property tests; every suite seeds its own.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  BigRat rational(long bound = 50) {
    long d = integer(1, bound);
    return BigRat(BigInt(integer(-bound, bound)), BigInt(d));
  }

  /// p/q in (0, 1) other than 1/2.
  BigRat unit_rational(long max_den = 97) {
    for (;;) {
      long q = integer(2, max_den);
      long p = integer(1, q - 1);
      const BigRat r{BigInt(p), BigInt(q)};
      if (!(r == BigRat{BigInt(1), BigInt(2)})) return r;
    }
  }

  ZPoly zpoly(int max_degree, long bound = 20) {
    std::vector<BigInt> cs;
    const int d = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= d; ++i) cs.emplace_back(integer(-bound, bound));
    return ZPoly(std::move(cs));
  }

  ZPoly nonzero_zpoly(int max_degree, long bound = 20) {
    for (;;) {
      ZPoly p = zpoly(max_degree, bound);
      if (!p.is_zero()) return p;
    }
  }

  RationalFunction rational_function(int max_degree = 3, long bound = 9) {
    return RationalFunction(zpoly(max_degree, bound), nonzero_zpoly(max_degree, bound));
  }

 private:
  std::mt19937_64 rng_;
};

inline BigRat q(long n, long d = 1) { return BigRat(BigInt(n), BigInt(d)); }

inline QPoly qpoly(std::initializer_list<long> cs) {
  std::vector<BigRat> v;
  for (long c : cs) v.emplace_back(c);
  return QPoly(std::move(v));
}

}  // namespace equichord::testing
