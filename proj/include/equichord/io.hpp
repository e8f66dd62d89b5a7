#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "equichord/dynamics.hpp"
#include "equichord/errors.hpp"
#include "equichord/poly_gcd.hpp"
#include "equichord/rational_function.hpp"
#include "equichord/refutation.hpp"
#include "equichord/series_solver.hpp"
#include "equichord/symmetry.hpp"

namespace equichord {

using Json = nlohmann::ordered_json;

/// %.17g: enough digits to round-trip any double.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline Json double_record(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

// ---------------------------------------------------------------- canonical form

inline std::vector<std::string> decimal_coefficients(const ZPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) out.push_back(v.get_str());
  return out;
}

/// "[num coefficients]/[den coefficients]", lowest degree first.
inline std::string canonical_text(const RationalFunction& r) {
  return r.num().to_string() + "/" + r.den().to_string();
}

inline ZPoly parse_decimal_coefficients(const Json& list) {
  if (!list.is_array()) throw UsageError("coefficient list must be an array");
  std::vector<BigInt> cs;
  for (const auto& v : list) {
    if (!v.is_string()) throw UsageError("coefficients must be decimal strings");
    BigInt z;
    if (z.set_str(v.get<std::string>(), 10) != 0) throw UsageError("bad decimal coefficient '" + v.get<std::string>() + "'");
    cs.push_back(std::move(z));
  }
  return ZPoly(std::move(cs));
}

// ---------------------------------------------------------------- TeX

/// Maxima-style TeX of an integer polynomial: 12\,c^4-24\,c^3+1.
inline std::string tex_poly(const ZPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const BigInt& v = p[i];
    if (sgn(v) == 0) continue;
    if (sgn(v) < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    BigInt mag = abs(v);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "\\,";
    os << var;
    if (i >= 10)
      os << "^{" << i << '}';
    else if (i >= 2)
      os << '^' << i;
  }
  return os.str();
}

/// Denominator as content times squarefree powers, e.g. 8\,(2c^2-2c+1)^2\,(...).
inline std::string tex_factored(const ZPoly& p, const std::string& var) {
  SquareFreeDecomposition sf = square_free(p);
  if (sf.factors.empty()) return tex_poly(p, var);
  std::stable_sort(sf.factors.begin(), sf.factors.end(),
                   [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
  std::ostringstream os;
  bool first = true;
  if (sf.unit != 1) {
    os << (sf.unit == -1 ? std::string("-") : sf.unit.get_str());
    first = sf.unit == -1;
  }
  for (const auto& [f, e] : sf.factors) {
    if (!first) os << "\\,";
    first = false;
    const bool bare = sf.factors.size() == 1 && e == 1 && sf.unit == 1;
    if (bare) {
      os << tex_poly(f, var);
    } else {
      os << "\\left(" << tex_poly(f, var) << "\\right)";
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

/// Sign pulled in front, numerator expanded; the denominator is split into
/// squarefree powers when `factor_den`.
inline std::string tex_rational(const RationalFunction& r, const std::string& var, bool factor_den = true) {
  const bool neg = sgn(r.num().lc()) < 0;
  const ZPoly num = neg ? -r.num() : r.num();
  const std::string sign = neg ? "-" : "";
  if (r.den().is_one()) return sign + tex_poly(num, var);
  return sign + "{{" + tex_poly(num, var) + "}\\over{" + (factor_den ? tex_factored(r.den(), var) : tex_poly(r.den(), var)) + "}}";
}

// ---------------------------------------------------------------- coefficient tables

/// Nonzero even coefficients in the eqnarray layout of the original table.
inline void write_table_tex(std::ostream& os, const CoefficientTable& t) {
  os << "% a_n(c), " << (t.mode.is_symbolic() ? std::string("symbolic") : "c = " + t.mode.to_string())
     << ", orders 0.." << t.max_order << "; odd orders vanish\n";
  os << "\\begin{eqnarray*}\n";
  for (int n = 2; n <= t.max_order; n += 2) {
    os << "a_{" << n << "}&=&" << tex_rational(t[n], "c") << (n + 2 <= t.max_order ? "\\\\" : "") << '\n';
  }
  os << "\\end{eqnarray*}\n";
}

inline void write_table_csv(std::ostream& os, const CoefficientTable& t) {
  if (t.mode.is_symbolic()) {
    os << "n,numerator,denominator\n";
    for (int n = 0; n <= t.max_order; ++n) os << n << ',' << t[n].num().pretty("c") << ',' << t[n].den().pretty("c") << '\n';
  } else {
    os << "n,numerator,denominator,value\n";
    for (int n = 0; n <= t.max_order; ++n) {
      const BigRat v = t[n].constant_value();
      os << n << ',' << v.num().get_str() << ',' << v.den().get_str() << ',' << format_double(v.to_double()) << '\n';
    }
  }
}

/// Machine-readable table; also the on-disk cache format.
inline Json table_record(const CoefficientTable& t) {
  Json j;
  j["solver_version"] = kSolverVersion;
  j["mode"] = t.mode.to_string();
  j["max_order"] = t.max_order;
  Json recs = Json::array();
  for (int n = 0; n <= t.max_order; ++n) {
    Json r;
    r["n"] = n;
    r["num"] = decimal_coefficients(t[n].num());
    r["den"] = decimal_coefficients(t[n].den());
    r["solver_version"] = kSolverVersion;
    recs.push_back(std::move(r));
  }
  j["coefficients"] = std::move(recs);
  return j;
}

/// Rebuilds a table from a record. Returns nothing when the record was
/// written by another solver version, for another mode, or is not in
/// canonical form; a stale or edited cache is never trusted.
inline std::optional<CoefficientTable> table_from_record(const Json& j, const CoefficientMode& mode) {
  try {
    if (j.at("solver_version").get<std::string>() != kSolverVersion) return std::nullopt;
    if (j.at("mode").get<std::string>() != mode.to_string()) return std::nullopt;
    CoefficientTable t;
    t.mode = mode;
    t.max_order = j.at("max_order").get<int>();
    const Json& recs = j.at("coefficients");
    if (t.max_order < 0 || !recs.is_array() || recs.size() != static_cast<std::size_t>(t.max_order) + 1) return std::nullopt;
    for (int n = 0; n <= t.max_order; ++n) {
      const Json& r = recs[static_cast<std::size_t>(n)];
      if (r.at("n").get<int>() != n || r.at("solver_version").get<std::string>() != kSolverVersion) return std::nullopt;
      ZPoly num = parse_decimal_coefficients(r.at("num"));
      ZPoly den = parse_decimal_coefficients(r.at("den"));
      if (den.is_zero()) return std::nullopt;
      RationalFunction v(num, den);
      if (!(v.num() == num && v.den() == den)) return std::nullopt;
      if (!mode.is_symbolic() && !v.is_constant()) return std::nullopt;
      t.a.push_back(std::move(v));
    }
    return t;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline std::optional<CoefficientTable> read_cache(const std::string& path, const CoefficientMode& mode) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return std::nullopt;
  return table_from_record(j, mode);
}

inline void write_cache(const std::string& path, const CoefficientTable& t) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw UsageError("cannot write cache file " + path);
  out << table_record(t).dump(1) << '\n';
}

// ---------------------------------------------------------------- invariance

inline std::string witness_text(const RationalFunction& odd) { return "w*(" + odd.pretty("z") + ")"; }

inline void write_invariance_csv(std::ostream& os, const InvarianceReport& r) {
  os << "n,invariant,b_or_witness\n";
  for (const auto& e : r.entries) {
    os << e.n << ',' << (e.invariant ? "true" : "false") << ',';
    if (const auto* b = std::get_if<BForm>(&e.b_or_witness))
      os << b->b.pretty("z");
    else
      os << witness_text(std::get<OddWitness>(e.b_or_witness).odd);
    os << '\n';
  }
}

inline void write_invariance_tex(std::ostream& os, const InvarianceReport& r) {
  os << "% b_n(z) = a_n(1/2 + sqrt(z)/2)\n\\begin{eqnarray*}\n";
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const auto& e = r.entries[i];
    os << "b_{" << e.n << "}&=&";
    if (const auto* b = std::get_if<BForm>(&e.b_or_witness))
      os << tex_rational(b->b, "z", false);
    else
      os << "\\mbox{not rational in } z,\\ \\mbox{odd part } w\\,\\left(" << tex_rational(std::get<OddWitness>(e.b_or_witness).odd, "z", false)
         << "\\right)";
    os << (i + 1 < r.entries.size() ? "\\\\" : "") << '\n';
  }
  os << "\\end{eqnarray*}\n";
}

inline Json invariance_record(const InvarianceReport& r) {
  Json j;
  j["all_invariant"] = r.all_invariant();
  Json es = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["n"] = e.n;
    x["invariant"] = e.invariant;
    const RationalFunction& f = std::holds_alternative<BForm>(e.b_or_witness)
                                    ? std::get<BForm>(e.b_or_witness).b
                                    : std::get<OddWitness>(e.b_or_witness).odd;
    x[e.invariant ? "b" : "witness"] = {{"num", decimal_coefficients(f.num())}, {"den", decimal_coefficients(f.den())}};
    es.push_back(std::move(x));
  }
  j["entries"] = std::move(es);
  return j;
}

// ---------------------------------------------------------------- verdict

inline Json verdict_record(const RefutationVerdict& v) {
  Json j;
  j["delta_a6_is_zero"] = v.delta_a6_is_zero;
  j["paper_refuted"] = v.paper_refuted();
  j["helfenstein_poly"] = decimal_coefficients(clear_denominators(v.helfenstein_poly).first);
  j["roots_in_interval"] = v.roots_in_interval;
  j["roots_in_interval_excluding_half"] = v.roots_in_interval_excluding_half;
  j["half_is_root"] = v.half_is_root;
  j["count_stabilized"] = v.count_stabilized;
  j["max_order"] = v.max_order;
  j["invariance"] = invariance_record(v.invariance);
  j["narrative"] = v.narrative;
  return j;
}

inline void write_verdict_text(std::ostream& os, const RefutationVerdict& v) {
  os << "Helfenstein polynomial: " << v.helfenstein_poly.pretty("c") << '\n';
  for (const auto& line : v.narrative) os << "- " << line << '\n';
}

// ---------------------------------------------------------------- dynamics

/// Blocks of iterate,x,y; the index restarts at 0 for each trajectory.
inline void write_trajectory_csv(std::ostream& os, const std::vector<ConvergenceDiagnostics>& runs) {
  os << "iterate,x,y\n";
  for (const auto& d : runs)
    for (std::size_t k = 0; k < d.iterates.size(); ++k)
      os << k << ',' << format_double(d.iterates[k].x) << ',' << format_double(d.iterates[k].y) << '\n';
}

inline void write_fiber_csv(std::ostream& os, const std::vector<FiberSample>& samples) {
  os << "x,y0,F,residual\n";
  for (const auto& s : samples)
    os << format_double(s.x) << ',' << format_double(s.y0) << ',' << format_double(s.F_value) << ','
       << format_double(s.residual) << '\n';
}

}  // namespace equichord
