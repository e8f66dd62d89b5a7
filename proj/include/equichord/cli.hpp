#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "equichord/crosscheck.hpp"
#include "equichord/dynamics.hpp"
#include "equichord/errors.hpp"
#include "equichord/io.hpp"
#include "equichord/refutation.hpp"
#include "equichord/series_solver.hpp"
#include "equichord/symmetry.hpp"

namespace equichord::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  int order = 0;
  std::string c = "symbolic";
  double tol = 1e-13;
  long max_iter = 1'000'000;
  std::string format;
  std::string out_path;
  std::string cache_path;
  std::vector<double> xs;
  double y0 = 0.0;

  bool dynamics_command() const { return command == "trace" || command == "fiber"; }

  /// Exact mode for the algebraic commands.
  CoefficientMode mode() const {
    if (c == "symbolic") return CoefficientMode::symbolic();
    return CoefficientMode::fixed(BigRat::parse(c));
  }

  /// Numeric c for the dynamics commands: a fraction, a decimal or any
  /// floating-point literal.
  double c_double() const {
    if (c == "symbolic") throw UsageError("--c must be numeric for " + command);
    try {
      return BigRat::parse(c).to_double();
    } catch (const Error&) {
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(c, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != c.size()) throw UsageError("cannot parse --c '" + c + "'");
    return v;
  }

  void validate() const {
    if (order < 2) throw UsageError("--order must be at least 2");
    if (!(tol > 0.0)) throw UsageError("--tol must be positive");
    if (max_iter < 1) throw UsageError("--max-iter must be positive");
    if (dynamics_command() || command == "crosscheck") {
      const double v = command == "crosscheck" ? mode().value().to_double() : c_double();
      if (!(v > 0.0 && v < 1.0)) throw UsageError("--c must lie in (0, 1)");
      if (v == 0.5) throw UsageError("--c = 1/2 is not hyperbolic; dynamics commands need c != 1/2");
      if (!(std::abs(y0) < std::min(v, 1.0 - v))) throw UsageError("--y0 must satisfy |y0| < min(c, 1-c)");
    } else if (c != "symbolic") {
      mode();  // throws on a malformed or out-of-range fraction
    }
    if ((command == "invariance" || command == "refute") && c != "symbolic")
      throw UsageError(command + " needs --c symbolic");
  }
};

namespace detail {

inline CoefficientTable solve_cached(const RunConfig& cfg, const CoefficientMode& mode, int order) {
  std::optional<CoefficientTable> cached;
  if (!cfg.cache_path.empty()) cached = read_cache(cfg.cache_path, mode);
  CoefficientTable t = solve_coefficients(order, mode, cached ? &*cached : nullptr);
  if (!cfg.cache_path.empty() && (!cached || cached->max_order < order)) write_cache(cfg.cache_path, t);
  return t;
}

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::trunc);
  if (!f) throw UsageError("cannot write " + cfg.out_path);
  f << text;
}

inline int cmd_series(const RunConfig& cfg, std::ostream& out) {
  const CoefficientTable t = solve_cached(cfg, cfg.mode(), cfg.order);
  std::ostringstream os;
  if (cfg.format == "csv")
    write_table_csv(os, t);
  else if (cfg.format == "tex")
    write_table_tex(os, t);
  else
    os << table_record(t).dump(2) << '\n';
  emit(cfg, os.str(), out);
  return kOk;
}

inline int cmd_invariance(const RunConfig& cfg, std::ostream& out) {
  const InvarianceReport r = check_invariance(solve_cached(cfg, CoefficientMode::symbolic(), cfg.order));
  std::ostringstream os;
  if (cfg.format == "csv")
    write_invariance_csv(os, r);
  else if (cfg.format == "tex")
    write_invariance_tex(os, r);
  else
    os << invariance_record(r).dump(2) << '\n';
  emit(cfg, os.str(), out);
  return r.all_invariant() ? kOk : kVerificationFailed;
}

inline int cmd_refute(const RunConfig& cfg, std::ostream& out) {
  const RefutationVerdict v = refutation_report(solve_cached(cfg, CoefficientMode::symbolic(), cfg.order));
  std::ostringstream os;
  if (cfg.format == "text")
    write_verdict_text(os, v);
  else
    os << verdict_record(v).dump(2) << '\n';
  emit(cfg, os.str(), out);
  return v.paper_refuted() && v.invariance.all_invariant() ? kOk : kVerificationFailed;
}

inline int cmd_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const MapParams p(cfg.c_double());
  ProjectOptions opt{cfg.tol, cfg.max_iter, true};
  std::vector<ConvergenceDiagnostics> runs;
  int code = kOk;
  for (double x : cfg.xs) {
    runs.push_back(project_pi({x, cfg.y0}, p, opt));
    const auto& d = runs.back();
    if (!d.converged()) {
      err << "trace: start (" << format_double(x) << ", " << format_double(cfg.y0) << ") " << to_string(d.status)
          << " after " << d.steps << " steps\n";
      code = kVerificationFailed;
    }
  }
  std::ostringstream os;
  write_trajectory_csv(os, runs);
  emit(cfg, os.str(), out);
  return code;
}

inline int cmd_fiber(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const MapParams p(cfg.c_double());
  const auto curve = trace_invariant_curve(p, cfg.y0, cfg.xs, cfg.tol);
  std::vector<FiberSample> ok;
  int code = kOk;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (curve[i].ok()) {
      ok.push_back(*curve[i].sample);
    } else {
      err << "fiber: x = " << format_double(cfg.xs[i]) << ": " << curve[i].error << '\n';
      code = kVerificationFailed;
    }
  }
  std::ostringstream os;
  write_fiber_csv(os, ok);
  emit(cfg, os.str(), out);
  return code;
}

inline int cmd_crosscheck(const RunConfig& cfg, std::ostream& out) {
  const CoefficientMode mode = cfg.mode();
  const CrosscheckReport rep = crosscheck(solve_cached(cfg, mode, cfg.order), mode.value(), cfg.xs, cfg.tol);
  std::ostringstream os;
  if (cfg.format == "record") {
    Json j;
    j["c"] = mode.to_string();
    j["order"] = rep.order;
    j["power"] = rep.power;
    j["k_fit"] = double_record(rep.k_fit);
    j["k_bound"] = rep.k_bound;
    j["passed"] = rep.passed();
    Json rows = Json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"x", r.x}, {"fiber", r.fiber}, {"taylor", r.taylor}, {"diff", r.diff}, {"k", double_record(r.k)}});
    j["rows"] = std::move(rows);
    os << j.dump(2) << '\n';
  } else {
    os << "x,fiber,taylor,diff,k\n";
    for (const auto& r : rep.rows)
      os << format_double(r.x) << ',' << format_double(r.fiber) << ',' << format_double(r.taylor) << ','
         << format_double(r.diff) << ',' << format_double(r.k) << '\n';
    if (cfg.format == "text")
      os << "# |F - T| <= K x^" << rep.power << ", K = " << format_double(rep.k_fit) << " (bound "
         << format_double(rep.k_bound) << "): " << (rep.passed() ? "agree" : "DISAGREE") << '\n';
  }
  emit(cfg, os.str(), out);
  return rep.passed() ? kOk : kVerificationFailed;
}

}  // namespace detail

/// Entry point behind the equichord executable. Exit codes: 0 success,
/// 1 verification failure, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Equichordal point problem: series solver, symmetry refutation and map dynamics", "equichord"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string xs_text;

  struct Spec {
    const char* name;
    const char* help;
    int order;
    const char* c;
    const char* format;
    std::vector<std::string> formats;
    const char* xs;
  };
  const std::vector<Spec> specs = {
      {"series", "Taylor coefficients a_n(c) of the local solution", 6, "symbolic", "tex", {"csv", "tex", "record"}, ""},
      {"invariance", "a_n(c) = a_n(1-c) and b_n(z) for even n", 10, "symbolic", "csv", {"csv", "tex", "record"}, ""},
      {"refute", "verdict on the degree-9 polynomial", 10, "symbolic", "record", {"text", "record"}, ""},
      {"trace", "H_c trajectories from (x, y0), x in --xs", 2, "0.7", "csv", {"csv"}, "0.05"},
      {"fiber", "invariant curve y = F(x, y0, c) at x in --xs", 2, "0.7", "csv", {"csv"}, "-0.06,-0.04,-0.02,0,0.02,0.04,0.06"},
      {"crosscheck", "series versus dynamics at a rational c", 10, "7/10", "text", {"text", "csv", "record"},
       "0.02,0.04,0.06"},
  };

  std::vector<CLI::App*> subs;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    subs.push_back(sub);
    const bool dyn = std::string(s.xs).size() > 0;
    const bool algebraic = std::string(s.name) != "trace" && std::string(s.name) != "fiber";
    if (algebraic) sub->add_option("--order", cfg.order, "truncation order N >= 2");
    sub->add_option("--c", cfg.c, std::string("c as a fraction") + (dyn && !algebraic ? " or double" : " or 'symbolic'"));
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(s.formats));
    sub->add_option("--out", cfg.out_path, "write output to PATH instead of stdout");
    if (algebraic) sub->add_option("--cache", cfg.cache_path, "coefficient cache file (JSON)");
    if (dyn) {
      sub->add_option("--xs", xs_text, "comma-separated abscissae");
      sub->add_option("--tol", cfg.tol, "convergence tolerance on |x|");
      if (!algebraic) {
        sub->add_option("--max-iter", cfg.max_iter, "iteration cap per projection");
        sub->add_option("--y0", cfg.y0, "axis point (0, y0)");
      }
    }
  }

  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "equichord: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  std::size_t which = 0;
  while (which < subs.size() && !subs[which]->parsed()) ++which;
  const Spec& s = specs[which];
  cfg.command = s.name;
  const auto given = [&](const char* name) {
    const CLI::Option* o = subs[which]->get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  if (!given("--order")) cfg.order = s.order;
  if (!given("--c")) cfg.c = s.c;
  if (cfg.format.empty()) cfg.format = s.format;
  if (!given("--xs")) xs_text = s.xs;

  try {
    cfg.xs.clear();
    if (!xs_text.empty()) {
      std::stringstream ss(xs_text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
          v = std::stod(item, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (item.empty() || used != item.size()) throw UsageError("cannot parse --xs entry '" + item + "'");
        cfg.xs.push_back(v);
      }
    }
    cfg.validate();
    if (cfg.command == "series") return detail::cmd_series(cfg, out);
    if (cfg.command == "invariance") return detail::cmd_invariance(cfg, out);
    if (cfg.command == "refute") return detail::cmd_refute(cfg, out);
    if (cfg.command == "trace") return detail::cmd_trace(cfg, out, err);
    if (cfg.command == "fiber") return detail::cmd_fiber(cfg, out, err);
    return detail::cmd_crosscheck(cfg, out);
  } catch (const UsageError& e) {
    err << "equichord " << cfg.command << ": " << e.what() << "\n\n" << subs[which]->help();
    return kUsage;
  } catch (const ParameterError& e) {
    err << "equichord " << cfg.command << ": " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "equichord " << cfg.command << ": " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace equichord::cli
