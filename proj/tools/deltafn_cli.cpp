// Command-line front end: point evaluation, verification suites, CSV tables
// and sign scans.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deltafn/delta.hpp"
#include "deltafn/errors.hpp"
#include "deltafn/report.hpp"
#include "deltafn/specfun.hpp"
#include "deltafn/suites.hpp"

namespace {

using namespace deltafn;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "AUTO" is represented by nullopt.
std::optional<Route> route_from_flag(const std::string& name) {
  std::string upper = name;
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (upper == "AUTO") return std::nullopt;
  const auto r = parse_route(name);
  if (!r) throw UsageError("unknown route: " + name);
  return r;
}

EvalResult evaluate(int m, double x, std::optional<Route> route, const QuadConfig& cfg) {
  if (!route) return delta_deriv_auto(DerivOrder(m), x, cfg);
  return delta_deriv(DerivOrder(m), x, *route, cfg);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + path);
  out << text;
  if (!out) throw UsageError("failed writing output file: " + path);
}

int emit_report(const VerificationReport& report, const std::string& json_path) {
  if (json_path == "-") {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << format_summary(report);
    if (!json_path.empty()) write_text(json_path, to_json(report).dump(2) + "\n");
  }
  return report.all_pass() ? kExitOk : kExitFail;
}

struct EvalArgs {
  std::string fn = "deriv";
  int m = 1;
  double x = 0.0;
  std::string route = "AUTO";
  double rel_tol = QuadConfig{}.rel_tol;
};

int run_eval(const EvalArgs& a) {
  QuadConfig cfg;
  cfg.rel_tol = a.rel_tol;
  cfg.validate();
  const auto route = route_from_flag(a.route);
  EvalResult r;
  if (a.fn == "delta") {
    if (route) throw UsageError("--route applies to --fn deriv only");
    r.value = delta(a.x);
    r.abs_err_est = 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(r.value);
    r.route = std::fabs(a.x) < kSeriesThreshold ? Route::kSeries : Route::kClosed;
    r.n_evals = 1;
  } else {
    r = evaluate(a.m, a.x, route, cfg);
  }
  std::cout << format_real(r.value) << '\t' << format_real(r.abs_err_est) << '\t' << route_name(r.route) << '\t'
            << r.n_evals << '\n';
  if (!r.converged) std::cerr << "warning: quadrature did not reach the requested tolerance\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::optional<double> tol;
  std::string json;
};

int run_verify(const VerifyArgs& a) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), a.suite) == names.end()) throw UsageError("unknown suite: " + a.suite);
  return emit_report(run_suite(a.suite, a.tol), a.json);
}

struct TableArgs {
  std::string fn = "deriv";
  int m = 1;
  double start = 0.0;
  double stop = 0.0;
  int count = 1;
  bool log = false;
  std::vector<std::string> routes{"AUTO"};
  std::string out = "-";
};

int run_table(const TableArgs& a) {
  if (a.fn != "deriv") throw UsageError("table supports --fn deriv only");
  DerivOrder order(a.m);
  const std::vector<double> grid = make_grid(a.start, a.stop, a.count, a.log);
  std::vector<std::optional<Route>> routes;
  for (const auto& name : a.routes) routes.push_back(route_from_flag(name));
  for (const auto& r : routes) {
    if (r == Route::kLaplace && grid.front() < 0.0) throw DomainError("LAPLACE route requires x >= 0");
    if (r == Route::kSeries && (std::fabs(grid.front()) > kSeriesRadius || std::fabs(grid.back()) > kSeriesRadius)) {
      throw DomainError("SERIES route requires |x| <= 0.5");
    }
    if (r == Route::kAsymptotic && grid.front() <= 0.0) throw DomainError("ASYMPTOTIC route requires x > 0");
  }
  const QuadConfig cfg;
  std::ostringstream csv;
  csv << "x,route,value,abs_err_est\n";
  for (double x : grid) {
    for (const auto& route : routes) {
      EvalResult r;
      // CLOSED and RECURRENCE are undefined at 0 itself; use the limit value there.
      if (x == 0.0 && route && (*route == Route::kClosed || *route == Route::kRecurrence)) {
        r = delta_deriv_auto(order, x, cfg);
        r.route = *route;
      } else {
        r = evaluate(order.value(), x, route, cfg);
      }
      csv << format_real(x) << ',' << route_name(r.route) << ',' << format_real(r.value) << ','
          << format_real(r.abs_err_est) << '\n';
    }
  }
  write_text(a.out, csv.str());
  return kExitOk;
}

struct ScanArgs {
  int m_max = 8;
  double start = -0.9;
  double stop = 100.0;
  int count = 40;
  std::string json;
};

int run_scan(const ScanArgs& a) {
  if (a.m_max < 1 || a.m_max > DerivOrder::kMax) throw UsageError("--m-max must be in 1..12");
  const std::vector<double> grid = make_grid(a.start, a.stop, a.count, false);
  VerificationReport report = check_complete_monotonicity(a.m_max, grid);
  report.suite = "scan";
  return emit_report(report, a.json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta(x) = ln Gamma(x+1)/x: evaluation and identity verification"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate Delta or one of its derivatives at a point");
  eval->add_option("--fn", eval_args.fn, "delta or deriv")->check(CLI::IsMember({"delta", "deriv"}));
  eval->add_option("--m", eval_args.m, "derivative order (1..12)");
  eval->add_option("--x", eval_args.x, "argument, x > -1")->required();
  eval->add_option("--route", eval_args.route, "AUTO, CLOSED, HURWITZ, LAPLACE, HYP, RECURRENCE, SERIES, ASYMPTOTIC");
  eval->add_option("--rel-tol", eval_args.rel_tol, "relative quadrature tolerance");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a named identity suite");
  verify->add_option("--suite", verify_args.suite, "suite name")->required();
  verify->add_option("--tol", verify_args.tol, "override every tolerance in the suite");
  verify->add_option("--json", verify_args.json, "write the JSON report to this path ('-' for stdout)");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Tabulate a derivative on a grid as CSV");
  table->add_option("--fn", table_args.fn, "deriv")->check(CLI::IsMember({"deriv"}));
  table->add_option("--m", table_args.m, "derivative order (1..12)")->required();
  table->add_option("--start", table_args.start, "first grid point")->required();
  table->add_option("--stop", table_args.stop, "last grid point")->required();
  table->add_option("--count", table_args.count, "number of grid points")->required();
  table->add_flag("--log", table_args.log, "logarithmic spacing (start > 0)");
  table->add_option("--routes", table_args.routes, "comma-separated routes")->delimiter(',');
  table->add_option("--out", table_args.out, "output path ('-' for stdout)");

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Check the derivative sign pattern on a linear grid");
  scan->add_option("--m-max", scan_args.m_max, "highest derivative order (1..12)");
  scan->add_option("--start", scan_args.start, "first grid point");
  scan->add_option("--stop", scan_args.stop, "last grid point");
  scan->add_option("--count", scan_args.count, "number of grid points");
  scan->add_option("--json", scan_args.json, "write the JSON report to this path ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return run_eval(eval_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (table->parsed()) return run_table(table_args);
    return run_scan(scan_args);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
