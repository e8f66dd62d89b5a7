#pragma once

#include <string>
#include <utility>
#include <vector>

#include "equichord/errors.hpp"
#include "equichord/poly.hpp"
#include "equichord/rational_function.hpp"
#include "equichord/series_solver.hpp"
#include "equichord/sturm.hpp"
#include "equichord/symmetry.hpp"

namespace equichord {

/// The degree-9 polynomial Helfenstein (1956) stated to be equivalent to
/// a_6(c) = a_6(1 - c). Historical data, transcribed verbatim.
inline QPoly helfenstein_poly() {
  // 144c^9 - 648c^8 + 1176c^7 - 1092c^6 + 168c^5 + 798c^4 - 846c^3 + 357c^2 - 59c + 1
  return QPoly({1, -59, 357, -846, 798, 168, -1092, 1176, -648, 144});
}

/// r(c) - r(1 - c).
inline RationalFunction reflection_defect(const RationalFunction& r) { return r - reflect_c(r); }

/// a_n(c) - a_n(1 - c) for a symbolic table.
inline RationalFunction delta_an(int n, const CoefficientTable& table) {
  if (!table.mode.is_symbolic()) throw UsageError("delta_an needs a symbolic table");
  if (n < 0 || n > table.max_order)
    throw UsageError("delta_an: order " + std::to_string(n) + " outside 0.." + std::to_string(table.max_order));
  return reflection_defect(table[n]);
}

/// Brackets of ((2 - sqrt 3)/4, (2 + sqrt 3)/4), the range of c outside of
/// which no curve with two equichordal points can exist.
inline std::pair<RationalBracket, RationalBracket> classical_c_range_brackets(int level) {
  RationalBracket s = sqrt_bracket(BigRat(3), 4 * level);
  const BigRat two(2);
  const BigRat four(4);
  RationalBracket left{(two - s.hi) / four, (two - s.lo) / four};
  RationalBracket right{(two + s.lo) / four, (two + s.hi) / four};
  return {left, right};
}

struct RefutationVerdict {
  bool delta_a6_is_zero = false;
  QPoly helfenstein_poly;
  /// Distinct real roots in the classical c-range, as measured.
  int roots_in_interval = 0;
  /// Same count once every factor (c - 1/2) is divided out.
  int roots_in_interval_excluding_half = 0;
  bool half_is_root = false;
  bool count_stabilized = false;
  int max_order = 0;
  InvarianceReport invariance;
  std::vector<std::string> narrative;

  /// The refutation only stands on an exactly vanishing a_6 defect.
  bool paper_refuted() const { return delta_a6_is_zero && !helfenstein_poly.is_zero(); }
};

inline RefutationVerdict refutation_report(const CoefficientTable& table) {
  if (!table.mode.is_symbolic() || table.max_order < 6)
    throw UsageError("refutation_report needs a symbolic table through order >= 6");
  RefutationVerdict v;
  v.max_order = table.max_order;
  v.delta_a6_is_zero = delta_an(6, table).is_zero();
  v.helfenstein_poly = helfenstein_poly();

  StableRootCount all = count_real_roots_stable(v.helfenstein_poly, classical_c_range_brackets);
  v.count_stabilized = all.stabilized;
  v.roots_in_interval = all.count;
  const BigRat half(BigInt(1), BigInt(2));
  v.half_is_root = v.helfenstein_poly.evaluate(half).is_zero();
  QPoly deflated = deflate(v.helfenstein_poly, half);
  StableRootCount rest = count_real_roots_stable(deflated, classical_c_range_brackets);
  v.count_stabilized = v.count_stabilized && rest.stabilized;
  v.roots_in_interval_excluding_half = rest.count;

  v.invariance = check_invariance(table);

  auto& out = v.narrative;
  out.push_back(std::string("a6(c) - a6(1-c) ") +
                (v.delta_a6_is_zero ? "is identically zero: a6 is symmetric under c -> 1-c."
                                    : "is NOT identically zero."));
  out.push_back("Helfenstein's degree-" + std::to_string(v.helfenstein_poly.degree()) +
                " polynomial is nonzero, so it cannot be equivalent to the identity a6(c) = a6(1-c), "
                "which holds for every c.");
  out.push_back("Sturm count of its distinct real roots in ((2-sqrt3)/4, (2+sqrt3)/4): " +
                std::to_string(v.roots_in_interval) + (v.count_stabilized ? " (stabilized)" : " (NOT stabilized)") +
                "; c = 1/2 " + (v.half_is_root ? "is" : "is not") + " a root; roots other than c = 1/2: " +
                std::to_string(v.roots_in_interval_excluding_half) + ".");
  int invariant = 0;
  for (const auto& e : v.invariance.entries) invariant += e.invariant ? 1 : 0;
  out.push_back("Invariance under c -> 1-c holds for " + std::to_string(invariant) + " of " +
                std::to_string(v.invariance.entries.size()) + " even orders n <= " + std::to_string(table.max_order) +
                " (direct reflection and rationality of b_n agree).");
  if (v.paper_refuted())
    out.push_back("Conclusion: the degree-9 polynomial and the conclusions drawn from it stem from a calculation "
                  "error; six-fold differentiability does not rule out a curve with two equichordal points.");
  return v;
}

}  // namespace equichord
