#pragma once

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "equichord/errors.hpp"

namespace equichord {

/// Point in the frame centered at B: S sits at (0, c), A at (0, 1).
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// The distance c = |BS|, 0 < c < 1.
class MapParams {
 public:
  explicit MapParams(double c) : c_(c) {
    if (!(c > 0.0 && c < 1.0)) throw ParameterError("c must lie in (0, 1)");
  }
  double c() const { return c_; }
  /// min(c, 1 - c): half-width of the invariant axis segment.
  double axis_bound() const { return std::min(c_, 1.0 - c_); }
  bool hyperbolic() const { return c_ != 0.5; }
  /// Parameter of the inverse map G_c^-1 = G_(1-c).
  MapParams reflected() const { return MapParams(1.0 - c_); }

 private:
  double c_;
};

/// 0 < x^2 + (y - c)^2 < 1: the unit disk about S without its center.
inline bool g_domain_contains(PlanePoint q, const MapParams& p) {
  const double d = q.y - p.c();
  const double r2 = q.x * q.x + d * d;
  return r2 > 0.0 && r2 < 1.0;
}

/// G_c: walk from Q through S for a total distance 1, then through O to the
/// mirrored point. Componentwise
///   xi  = x / r - x,  eta = -(c - y)/r + 1 - y,  r = |QS|.
/// When c > y the eta formula is evaluated as x^2/(r (r + c - y)) - y, which
/// is the same quantity without the cancellation between -(c-y)/r and 1.
inline PlanePoint g_map(PlanePoint q, const MapParams& p) {
  if (!std::isfinite(q.x) || !std::isfinite(q.y))
    throw DomainError(DomainError::Kind::NonFinite, "g_map: non-finite point");
  const double d = p.c() - q.y;
  const double r2 = q.x * q.x + d * d;
  if (!(r2 > 0.0)) throw DomainError(DomainError::Kind::Puncture, "g_map: point is the puncture S");
  if (!(r2 < 1.0)) throw DomainError(DomainError::Kind::OutsideDisk, "g_map: point outside the unit disk about S");
  const double r = std::sqrt(r2);
  const double xi = q.x / r - q.x;
  const double eta = d > 0.0 ? q.x * q.x / (r * (r + d)) - q.y : -d / r + 1.0 - q.y;
  return {xi, eta};
}

/// H_c: G_c when c > 1/2 and G_c^-1 = G_(1-c) when c < 1/2, the branch that
/// contracts toward the axis.
inline PlanePoint h_map(PlanePoint q, const MapParams& p) {
  if (!p.hyperbolic()) throw ParameterError("h_map: undefined at c = 1/2");
  return p.c() > 0.5 ? g_map(q, p) : g_map(q, p.reflected());
}

/// Row-major 2x2 matrix [[dxi/dx, dxi/dy], [deta/dx, deta/dy]].
struct Jacobian2 {
  double a11 = 0, a12 = 0, a21 = 0, a22 = 0;
};

/// Central finite-difference Jacobian of G_c.
inline Jacobian2 finite_difference_jacobian(PlanePoint q, const MapParams& p, double h = 1e-6) {
  const PlanePoint xp = g_map({q.x + h, q.y}, p);
  const PlanePoint xm = g_map({q.x - h, q.y}, p);
  const PlanePoint yp = g_map({q.x, q.y + h}, p);
  const PlanePoint ym = g_map({q.x, q.y - h}, p);
  return {(xp.x - xm.x) / (2 * h), (yp.x - ym.x) / (2 * h), (xp.y - xm.y) / (2 * h), (yp.y - ym.y) / (2 * h)};
}

struct AxisEigenvalues {
  double lambda1 = 0.0;  ///< normal direction, 1/(c - y) - 1
  double lambda2 = 0.0;  ///< along the axis, always -1
  Jacobian2 numeric;     ///< finite-difference check that produced them
};

/// Eigenvalues of DG_c at the axis point (0, y), where the derivative is
/// diagonal. The analytic values are checked against a finite-difference
/// Jacobian; a non-diagonal or mismatched numeric Jacobian is an error.
inline AxisEigenvalues frechet_at_axis(double y, const MapParams& p) {
  if (!(std::abs(y) < p.axis_bound()))
    throw DomainError(DomainError::Kind::AxisRange, "frechet_at_axis: need |y| < min(c, 1-c)");
  AxisEigenvalues e;
  e.lambda1 = 1.0 / (p.c() - y) - 1.0;
  e.lambda2 = -1.0;
  e.numeric = finite_difference_jacobian({0.0, y}, p, 1e-6);
  const auto rel = [](double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); };
  if (std::abs(e.numeric.a12) >= 1e-6 || std::abs(e.numeric.a21) >= 1e-6)
    throw ConsistencyError("frechet_at_axis: numeric Jacobian is not diagonal");
  if (rel(e.numeric.a11, e.lambda1) >= 1e-5 || rel(e.numeric.a22, e.lambda2) >= 1e-5)
    throw ConsistencyError("frechet_at_axis: numeric Jacobian disagrees with the analytic eigenvalues");
  return e;
}

/// Two-step normal multiplier ((1-c)^2 - y^2)/(c^2 - y^2) at (0, y): the
/// product of lambda1 at y and at -y.
inline double multiplier(double y, const MapParams& p) {
  const double c = p.c();
  const double den = c * c - y * y;
  if (std::abs(den) < 1e-300) throw SingularityError("multiplier: c^2 = y^2");
  return ((1.0 - c) * (1.0 - c) - y * y) / den;
}

/// Heuristic radius around the axis inside which the projection is trusted.
inline double trust_radius(const MapParams& p) { return p.axis_bound() / 4.0; }

enum class ConvergenceStatus { Converged, Diverged, Inconclusive };

inline const char* to_string(ConvergenceStatus s) {
  switch (s) {
    case ConvergenceStatus::Converged: return "converged";
    case ConvergenceStatus::Diverged: return "diverged";
    case ConvergenceStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ConvergenceDiagnostics {
  std::vector<PlanePoint> iterates;  ///< q, H(q), H^2(q), ... (empty if not recorded)
  PlanePoint limit;                  ///< (0, y0) on success
  double empirical_ratio = std::numeric_limits<double>::quiet_NaN();
  double predicted_mu = std::numeric_limits<double>::quiet_NaN();
  ConvergenceStatus status = ConvergenceStatus::Inconclusive;
  long steps = 0;
  bool converged() const { return status == ConvergenceStatus::Converged; }
};

struct ProjectOptions {
  double tol = 1e-13;
  long max_iter = 1'000'000;
  bool record_iterates = true;
};

/// pi_c(q): iterates H_c until the x-component drops below tol at an even
/// step. H_c flips the sign of y on the axis, so the limit is taken along
/// even iterates; it is the point (0, y0) whose fiber contains q.
///
/// empirical_ratio is |x_k / x_(k-2)| at the last double step;
/// predicted_mu is the multiplier of the map actually iterated at y0.
inline ConvergenceDiagnostics project_pi(PlanePoint q, const MapParams& p, const ProjectOptions& opt = {}) {
  if (!p.hyperbolic()) throw ParameterError("project_pi: c = 1/2 is not hyperbolic");
  const double bound = p.axis_bound();
  const double x_limit = std::max(4.0 * std::abs(q.x), trust_radius(p));
  ConvergenceDiagnostics out;
  const MapParams contracting(std::max(p.c(), 1.0 - p.c()));
  double x_prev_even = std::numeric_limits<double>::quiet_NaN();
  PlanePoint cur = q;
  if (opt.record_iterates) out.iterates.push_back(cur);
  for (long k = 0;; ++k) {
    if (k % 2 == 0) {
      if (k >= 2 && x_prev_even != 0.0) out.empirical_ratio = std::abs(cur.x / x_prev_even);
      x_prev_even = cur.x;
      if (std::abs(cur.x) < opt.tol) {
        out.status = ConvergenceStatus::Converged;
        out.limit = {0.0, cur.y};
        out.steps = k;
        out.predicted_mu = multiplier(cur.y, contracting);
        return out;
      }
    }
    out.limit = cur;
    out.steps = k;
    if (k >= opt.max_iter) {
      out.status = ConvergenceStatus::Inconclusive;
      return out;
    }
    if (!(std::abs(cur.y) < bound) || std::abs(cur.x) > x_limit || !g_domain_contains(cur, contracting)) {
      out.status = ConvergenceStatus::Diverged;
      return out;
    }
    cur = h_map(cur, p);
    if (opt.record_iterates) out.iterates.push_back(cur);
  }
}

/// One point y = F(x, y0, c) of the invariant curve through (0, y0).
struct FiberSample {
  double x = 0.0;
  double y0 = 0.0;
  double F_value = 0.0;
  double residual = 0.0;  ///< |pi_c(x, F).y - y0|
};

/// Finds F(x, y0, c) by bisection on y using the sign of pi_c(x, y).y - y0.
/// Bisection runs until the bracket has no double strictly inside it. The
/// projected value must stay ordered across each bracket (monotone in y up
/// to rounding); violations are reported, never smoothed over.
inline FiberSample fiber_point(double x, double y0, const MapParams& p, double tol = 1e-13) {
  if (!p.hyperbolic()) throw ParameterError("fiber_point: c = 1/2 is not hyperbolic");
  const double bound = p.axis_bound();
  if (!(std::abs(y0) < bound)) throw DomainError(DomainError::Kind::AxisRange, "fiber_point: need |y0| < min(c, 1-c)");
  if (!(std::abs(x) <= trust_radius(p)))
    throw UsageError("fiber_point: |x| exceeds the trust radius min(c,1-c)/4");
  if (x == 0.0) return {x, y0, y0, 0.0};

  ProjectOptions opt;
  opt.tol = tol;
  opt.record_iterates = false;
  const auto offset = [&](double y) {
    ConvergenceDiagnostics d = project_pi({x, y}, p, opt);
    if (!d.converged()) {
      std::ostringstream os;
      os << "fiber_point: projection " << to_string(d.status) << " from (" << x << ", " << y << ")";
      throw FiberSearchError(os.str());
    }
    return d.limit.y - y0;
  };

  const double half_width = 0.5 * (bound - std::abs(y0));
  double lo = y0 - half_width;
  double hi = y0 + half_width;
  double g_lo = offset(lo);
  double g_hi = offset(hi);
  if (!(g_lo < 0.0 && g_hi > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "fiber_point: no sign change on [" << lo << ", " << hi << "] (offsets " << g_lo << ", " << g_hi << ")";
    throw FiberSearchError(os.str());
  }
  for (;;) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double g = offset(mid);
    const double slack = 256.0 * DBL_EPSILON * (std::abs(mid) + x * x);
    if (g < g_lo - slack || g > g_hi + slack) {
      std::ostringstream os;
      os.precision(17);
      os << "fiber_point: projection not monotone in y on [" << lo << ", " << hi << "]";
      throw FiberSearchError(os.str());
    }
    if (g < 0.0) {
      lo = mid;
      g_lo = g;
    } else if (g > 0.0) {
      hi = mid;
      g_hi = g;
    } else {
      lo = hi = mid;
      g_lo = g_hi = 0.0;
      break;
    }
  }
  const bool take_lo = std::abs(g_lo) <= std::abs(g_hi);
  return {x, y0, take_lo ? lo : hi, take_lo ? std::abs(g_lo) : std::abs(g_hi)};
}

/// Largest radius, halved from trust_radius(p), from which both (+r, y0)
/// and (-r, y0) project successfully.
inline double adaptive_trust_radius(const MapParams& p, double y0, double tol = 1e-13, int max_halvings = 20) {
  ProjectOptions opt;
  opt.tol = tol;
  opt.record_iterates = false;
  double r = trust_radius(p);
  for (int i = 0; i <= max_halvings; ++i, r *= 0.5) {
    if (project_pi({r, y0}, p, opt).converged() && project_pi({-r, y0}, p, opt).converged()) return r;
  }
  return 0.0;
}

struct CurveSample {
  std::optional<FiberSample> sample;
  /// pi_c of H_c(x, F): should be (0, -y0).
  double image_fiber = std::numeric_limits<double>::quiet_NaN();
  double invariance_error = std::numeric_limits<double>::quiet_NaN();
  std::string error;
  bool ok() const { return sample.has_value() && error.empty(); }
};

/// Samples of the invariant curve y = F(x, y0, c) at the given abscissae,
/// each checked to land on the fiber over -y0 after one application of H_c.
/// Failures are recorded per sample.
inline std::vector<CurveSample> trace_invariant_curve(const MapParams& p, double y0, const std::vector<double>& xs,
                                                      double tol = 1e-13, double invariance_tol = 1e-12) {
  std::vector<CurveSample> out;
  out.reserve(xs.size());
  const double radius = adaptive_trust_radius(p, y0, tol);
  ProjectOptions opt;
  opt.tol = tol;
  opt.record_iterates = false;
  for (double x : xs) {
    CurveSample s;
    try {
      if (std::abs(x) > radius) throw UsageError("outside the adaptive trust radius");
      s.sample = fiber_point(x, y0, p, tol);
      ConvergenceDiagnostics d = project_pi(h_map({x, s.sample->F_value}, p), p, opt);
      if (!d.converged()) throw FiberSearchError(std::string("image projection ") + to_string(d.status));
      s.image_fiber = d.limit.y;
      s.invariance_error = std::abs(d.limit.y + y0);
      if (!(s.invariance_error <= invariance_tol)) s.error = "image does not land on the fiber over -y0";
    } catch (const Error& e) {
      s.error = e.what();
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace equichord
