#pragma once

#include <string>
#include <variant>
#include <vector>

#include "equichord/errors.hpp"
#include "equichord/quadratic_extension.hpp"
#include "equichord/rational_function.hpp"
#include "equichord/series_solver.hpp"

namespace equichord {

/// r(1 - c) in canonical form.
inline RationalFunction reflect_c(const RationalFunction& r) { return r.reflect(); }

/// b(z) = r(1/2 + sqrt(z)/2) when that is rational in z.
struct BForm {
  RationalFunction b;
};
/// Coefficient of w in r((1 + w)/2); nonzero exactly when r is not
/// symmetric under c -> 1 - c.
struct OddWitness {
  RationalFunction odd;
};
using ToBResult = std::variant<BForm, OddWitness>;

inline ToBResult to_b(const RationalFunction& r) {
  QuadExt e = substitute(r, HalfPlusHalfRoot{});
  if (e.is_rational_in_z()) return BForm{e.even};
  return OddWitness{e.odd};
}

struct InvarianceEntry {
  int n = 0;
  bool invariant = false;
  ToBResult b_or_witness;
};

struct InvarianceReport {
  std::vector<InvarianceEntry> entries;

  bool all_invariant() const {
    for (const auto& e : entries)
      if (!e.invariant) return false;
    return true;
  }
};

/// Runs both symmetry tests on every even order >= 2 of a symbolic table:
/// the direct comparison a_n = a_n(1 - c), and rationality of b_n in z.
/// They must agree.
inline InvarianceReport check_invariance(const CoefficientTable& table) {
  if (!table.mode.is_symbolic()) throw UsageError("check_invariance needs a symbolic table");
  InvarianceReport report;
  for (int n = 2; n <= table.max_order; n += 2) {
    const RationalFunction& an = table[n];
    const bool direct = (an - reflect_c(an)).is_zero();
    ToBResult b = to_b(an);
    const bool via_b = std::holds_alternative<BForm>(b);
    if (direct != via_b)
      throw ConsistencyError("a_" + std::to_string(n) + ": reflection test and b_n test disagree");
    report.entries.push_back({n, direct, std::move(b)});
  }
  return report;
}

}  // namespace equichord
