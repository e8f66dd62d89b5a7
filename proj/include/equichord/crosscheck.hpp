#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "equichord/dynamics.hpp"
#include "equichord/series_solver.hpp"

namespace equichord {

struct CrosscheckRow {
  double x = 0.0;
  double fiber = 0.0;   ///< F(x, 0, c) from the dynamics
  double taylor = 0.0;  ///< truncated series at x
  double diff = 0.0;
  double k = 0.0;       ///< diff / |x|^power
};

struct CrosscheckReport {
  int order = 0;
  /// First omitted power: the truncation error is O(x^power). Odd
  /// coefficients vanish, so for even N this is N + 2.
  int power = 0;
  double k_fit = 0.0;  ///< max over rows of diff / |x|^power
  double k_bound = 1e3;
  std::vector<CrosscheckRow> rows;
  bool passed() const { return k_fit <= k_bound; }
};

/// Compares the series table (fixed or symbolic) at the rational c against
/// the dynamically computed fiber over (0, 0).
inline CrosscheckReport crosscheck(const CoefficientTable& table, const BigRat& c, const std::vector<double>& xs,
                                   double tol = 1e-13, double k_bound = 1e3) {
  const MapParams p(c.to_double());
  CrosscheckReport rep;
  rep.order = table.max_order;
  rep.power = table.max_order % 2 == 0 ? table.max_order + 2 : table.max_order + 1;
  rep.k_bound = k_bound;
  for (double x : xs) {
    if (x == 0.0) throw UsageError("crosscheck: x = 0 carries no information");
    CrosscheckRow r;
    r.x = x;
    r.fiber = fiber_point(x, 0.0, p, tol).F_value;
    r.taylor = taylor_eval(table, c, x);
    r.diff = std::abs(r.fiber - r.taylor);
    r.k = r.diff / std::pow(std::abs(x), rep.power);
    rep.k_fit = std::max(rep.k_fit, r.k);
    rep.rows.push_back(r);
  }
  return rep;
}

}  // namespace equichord
