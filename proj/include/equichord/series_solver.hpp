#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equichord/bigrat.hpp"
#include "equichord/errors.hpp"
#include "equichord/rational_function.hpp"
#include "equichord/series.hpp"

namespace equichord {

/// Bumped whenever a change could alter solved coefficients; cache files
/// carrying another stamp are ignored.
inline constexpr const char* kSolverVersion = "equichord-solver/1";

/// Symbolic (coefficients in Q(c)) or fixed at an exact rational c.
class CoefficientMode {
 public:
  static CoefficientMode symbolic() { return CoefficientMode(); }
  static CoefficientMode fixed(const BigRat& c) {
    if (c <= BigRat(0) || c >= BigRat(1)) throw UsageError("fixed c must lie in (0, 1), got " + c.to_string());
    CoefficientMode m;
    m.value_ = c;
    return m;
  }

  bool is_symbolic() const { return !value_.has_value(); }
  const BigRat& value() const {
    if (!value_) throw UsageError("symbolic mode has no fixed value of c");
    return *value_;
  }
  std::string to_string() const { return value_ ? value_->to_string() : std::string("symbolic"); }

  friend bool operator==(const CoefficientMode&, const CoefficientMode&) = default;

 private:
  std::optional<BigRat> value_;
};

/// Taylor coefficients a_n of the solution f, for 0 <= n <= max_order.
/// In fixed mode every entry is a constant rational function.
struct CoefficientTable {
  CoefficientMode mode = CoefficientMode::symbolic();
  int max_order = 0;
  std::vector<RationalFunction> a;

  const RationalFunction& operator[](int n) const {
    if (n < 0 || n > max_order) throw UsageError("coefficient index " + std::to_string(n) + " out of range");
    return a[static_cast<std::size_t>(n)];
  }
  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

/// LHS - RHS of the functional equation as a truncated series.
struct ResidualSeries {
  TruncatedSeries<RationalFunction> series;
};

template <class C>
struct XiEta {
  TruncatedSeries<C> xi;
  TruncatedSeries<C> eta;
};

/// The chord-map components along the graph y = f(x):
///   xi  = x / sqrt(x^2 + (c - f)^2) - x
///   eta = -(c - f) / sqrt(x^2 + (c - f)^2) + (1 - f)
/// on the branch where the radical starts at +c.
template <class C>
XiEta<C> xi_eta_series(const TruncatedSeries<C>& f, const C& c) {
  if (!is_zero(f[0])) throw UsageError("xi_eta_series: f must vanish at x = 0");
  const int n = f.order();
  using S = TruncatedSeries<C>;
  const S x = S::x(n);
  const S d = S::constant(n, c) - f;
  const S radical = series_sqrt(x * x + d * d, c);
  const S inv = series_recip(radical);
  S xi = x * inv - x;
  S eta = S::constant(n, C(1)) - d * inv - f;
  return {std::move(xi), std::move(eta)};
}

namespace detail {

/// f o xi - eta through the order of f, via the solver's expansion route.
template <class C>
TruncatedSeries<C> equation_residual(const TruncatedSeries<C>& f, const C& c) {
  XiEta<C> parts = xi_eta_series(f, c);
  return series_compose(f, parts.xi) - parts.eta;
}

/// a^(-1/2) with constant term inv_root0 = a[0]^(-1/2), by the power
/// recurrence k a0 g_k = sum_i ((alpha + 1) i - k) a_i g_(k-i).
template <class C>
TruncatedSeries<C> series_inv_sqrt(const TruncatedSeries<C>& a, const C& inv_root0) {
  const int n = a.order();
  TruncatedSeries<C> g(n);
  g[0] = inv_root0;
  const C inv_a0 = C(1) / a[0];
  for (int k = 1; k <= n; ++k) {
    C acc(0);
    for (int i = 1; i <= k; ++i) {
      if (is_zero(a[i]) || is_zero(g[k - i])) continue;
      // (alpha + 1) i - k with alpha = -1/2, doubled to stay integral.
      C weight = C(static_cast<long>(i - 2 * k));
      acc += weight * a[i] * g[k - i];
    }
    g[k] = acc * inv_a0 / C(static_cast<long>(2 * k));
  }
  return g;
}

/// Independent route for the same residual: inverse square root by the power
/// recurrence and composition by summing explicit powers of xi.
template <class C>
TruncatedSeries<C> equation_residual_independent(const TruncatedSeries<C>& f, const C& c) {
  const int n = f.order();
  using S = TruncatedSeries<C>;
  const S x = S::x(n);
  S d = S::constant(n, c) - f;
  S sum_sq = x * x + d * d;
  S inv = series_inv_sqrt(sum_sq, C(1) / c);
  S xi = x * inv - x;
  S eta = S::constant(n, C(1)) - d * inv - f;
  S lhs = S::constant(n, f[0]);
  S power = S::constant(n, C(1));
  for (int k = 1; k <= n; ++k) {
    power = power * xi;
    if (!is_zero(f[k])) lhs += power * f[k];
  }
  return lhs - eta;
}

template <class C>
std::vector<C> solve_orders(int max_order, const C& c, std::vector<C> known,
                            const std::function<void(int)>& progress) {
  std::vector<C> a(static_cast<std::size_t>(max_order) + 1, C(0));
  int start = 1;
  for (std::size_t k = 0; k < known.size() && static_cast<int>(k) <= max_order; ++k) {
    a[k] = std::move(known[k]);
    start = static_cast<int>(k) + 1;
  }
  for (int n = start; n <= max_order; ++n) {
    auto residual_at = [&](const C& trial) {
      std::vector<C> cs(a.begin(), a.begin() + n + 1);
      cs[static_cast<std::size_t>(n)] = trial;
      return equation_residual(TruncatedSeries<C>(n, std::move(cs)), c)[n];
    };
    const C r0 = residual_at(C(0));
    const C r1 = residual_at(C(1));
    const C rm = residual_at(C(-1));
    if (!(r1 + rm == r0 + r0))
      throw SolverDegeneracyError(n, "residual is not affine in the unknown coefficient");
    const C slope = r1 - r0;
    if (is_zero(slope)) throw SolverDegeneracyError(n, "multiplier of the unknown coefficient vanishes");
    a[static_cast<std::size_t>(n)] = -(r0 / slope);
    if (n % 2 == 1 && !is_zero(a[static_cast<std::size_t>(n)]))
      throw ConsistencyError("odd coefficient a_" + std::to_string(n) + " solved to a nonzero value");
    if (progress) progress(n);
  }
  return a;
}

}  // namespace detail

/// Solves the functional equation for a_0..a_N by undetermined coefficients.
///
/// At each order the x^n coefficient of the residual is evaluated at three
/// trial values of a_n; it must be affine with a nonzero slope, and the root
/// of that affine function is a_n. a_0 = 0 comes from the curve passing
/// through B. Odd coefficients are solved like the rest and then checked.
/// `seed`, when given, supplies already-known low orders (from a cache).
inline CoefficientTable solve_coefficients(int max_order, const CoefficientMode& mode,
                                           const CoefficientTable* seed = nullptr,
                                           const std::function<void(int)>& progress = {}) {
  if (max_order < 2) throw UsageError("solve_coefficients: order must be at least 2");
  CoefficientTable table;
  table.mode = mode;
  table.max_order = max_order;
  if (mode.is_symbolic()) {
    std::vector<RationalFunction> known{RationalFunction(0)};
    if (seed && seed->mode == mode)
      known.assign(seed->a.begin(), seed->a.begin() + std::min(seed->max_order, max_order) + 1);
    table.a = detail::solve_orders(max_order, RationalFunction::variable(), std::move(known), progress);
  } else {
    std::vector<BigRat> known{BigRat(0)};
    if (seed && seed->mode == mode) {
      known.clear();
      for (int k = 0; k <= std::min(seed->max_order, max_order); ++k) known.push_back(seed->a[static_cast<std::size_t>(k)].constant_value());
    }
    auto a = detail::solve_orders(max_order, mode.value(), std::move(known), progress);
    table.a.reserve(a.size());
    for (const auto& v : a) table.a.emplace_back(v);
  }
  return table;
}

/// Residual of the functional equation for the table's truncated f, computed
/// along an expansion route different from the solver's.
inline ResidualSeries residual(const CoefficientTable& table) {
  const int n = table.max_order;
  if (static_cast<int>(table.a.size()) != n + 1) throw UsageError("residual: incomplete table");
  if (table.mode.is_symbolic()) {
    TruncatedSeries<RationalFunction> f(n, table.a);
    return {detail::equation_residual_independent(f, RationalFunction::variable())};
  }
  std::vector<BigRat> cs;
  for (const auto& v : table.a) cs.push_back(v.constant_value());
  auto r = detail::equation_residual_independent(TruncatedSeries<BigRat>(n, std::move(cs)), table.mode.value());
  std::vector<RationalFunction> lifted;
  for (const auto& v : r.coeffs()) lifted.emplace_back(v);
  return {TruncatedSeries<RationalFunction>(n, std::move(lifted))};
}

/// Exact a_n(c) values of a table at a rational c.
inline std::vector<BigRat> coefficients_at(const CoefficientTable& table, const BigRat& c) {
  if (!table.mode.is_symbolic() && !(table.mode.value() == c))
    throw UsageError("table was solved at c = " + table.mode.to_string() + ", not " + c.to_string());
  std::vector<BigRat> out;
  out.reserve(table.a.size());
  for (const auto& v : table.a) out.push_back(table.mode.is_symbolic() ? v.evaluate(c) : v.constant_value());
  return out;
}

/// Truncated Taylor polynomial sum a_n(c) x^n in double precision.
inline double taylor_eval(const CoefficientTable& table, const BigRat& c, double x) {
  std::vector<BigRat> a = coefficients_at(table, c);
  double acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

}  // namespace equichord
